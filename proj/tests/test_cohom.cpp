#include "doctest.h"

#include "mcg/abgrp.hpp"
#include "mcg/cohom.hpp"
#include "mcg/intmath.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace mcg;

namespace {

// Right-action matrices on the row lattice for the three torsion orders.
IntMat sigma2() { return {{-1, 0}, {0, -1}}; }
IntMat sigma4() { return {{0, -1}, {1, 0}}; }
IntMat sigma6() { return {{0, -1}, {1, 1}}; }

} // namespace

TEST_CASE("cyclic cohomology with twisted lattice coefficients") {
    CyclicCohomology c2 = cyclic_cohomology(2, sigma2());
    CHECK(is_trivial(c2.h0));
    CHECK(is_trivial(c2.heven));
    CHECK(c2.hodd == make_group({2, 2}, 0));

    CyclicCohomology c4 = cyclic_cohomology(4, sigma4());
    CHECK(is_trivial(c4.h0));
    CHECK(is_trivial(c4.heven));
    CHECK(c4.hodd == make_group({2}, 0));

    CyclicCohomology c6 = cyclic_cohomology(6, sigma6());
    CHECK(is_trivial(c6.h0));
    CHECK(is_trivial(c6.heven));
    CHECK(is_trivial(c6.hodd));
}

TEST_CASE("cyclic cohomology with trivial coefficients") {
    for (long m : {2L, 4L, 6L, 12L}) {
        CyclicCohomology c = cyclic_cohomology(m, {{1}});
        CHECK(c.h0 == make_group({}, 1));
        CHECK(c.heven == make_group({m}, 0));
        CHECK(is_trivial(c.hodd));
    }
}

TEST_CASE("an action whose order does not divide m is rejected") {
    CHECK_THROWS_AS(cyclic_cohomology(4, sigma6()), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_cohomology(2, sigma4()), std::invalid_argument);
}

TEST_CASE("bar-resolution oracle on hand-checked cases") {
    BarCohomology b = bar_cohomology(2, sigma2());
    CHECK(b.h1 == make_group({2, 2}, 0));
    CHECK(is_trivial(b.h2));
    BarCohomology t = bar_cohomology(2, {{1}});
    CHECK(is_trivial(t.h1));
    CHECK(t.h2 == make_group({2}, 0));
    BarCohomology one = bar_cohomology(1, {{1}});
    CHECK(is_trivial(one.h1));
    CHECK(is_trivial(one.h2));
}

TEST_CASE("bar oracle agrees with the algebraic formulas in all six coefficient systems") {
    struct Case {
        long m;
        IntMat sigma;
    };
    std::vector<Case> cases = {{2, sigma2()}, {4, sigma4()}, {6, sigma6()},
                               {2, {{1}}},    {4, {{1}}},    {6, {{1}}}};
    for (const auto& c : cases) {
        CyclicCohomology cc = cyclic_cohomology(c.m, c.sigma);
        BarCohomology bc = bar_cohomology(c.m, c.sigma);
        INFO("m = " << c.m);
        CHECK(bc.h1 == cc.hodd);
        CHECK(bc.h2 == cc.heven);
    }
}

TEST_CASE("degree-two cohomology of the matrix group from the amalgam") {
    MvSl2Result r = mv_h2_sl2();
    CHECK(r.h2 == make_group({12}, 0));
    CHECK(is_trivial(r.h3));
    // The generator lies in the kernel and has order 12.
    long n = r.kernel_generator[0];
    long m = r.kernel_generator[1];
    CHECK(n == 1);
    CHECK(m == 1);
    CHECK((n + m) % 2 == 0);
    long on = 4 / std::gcd(n, 4L);
    long om = 6 / std::gcd(m, 6L);
    CHECK(std::lcm(on, om) == 12);
    // The multiples of the generator exhaust 12 distinct kernel elements.
    std::vector<std::pair<long, long>> seen;
    for (long k = 0; k < 12; ++k) {
        std::pair<long, long> p{(k * n) % 4, (k * m) % 6};
        for (const auto& q : seen) CHECK(q != p);
        seen.push_back(p);
    }
}

TEST_CASE("degree-two cohomology of the three finite-index subgroups") {
    CHECK(lhs_h2_gm(2) == make_group({2, 2, 2}, 1));
    CHECK(lhs_h2_gm(4) == make_group({2, 4}, 1));
    CHECK(lhs_h2_gm(6) == make_group({6}, 1));
    CHECK_THROWS_AS(lhs_h2_gm(3), std::invalid_argument);
}

TEST_CASE("cohomology of the full group from the amalgam of the subgroups") {
    MvGammaResult r = mv_gamma();
    CHECK(r.h2 == make_group({12}, 1));
    CHECK(r.h3 == make_group({2}, 0));
}

TEST_CASE("coefficient change to the cyclic group of order 28") {
    CHECK(h2_z28() == make_group({2, 4, 28}, 0));
}

TEST_CASE("universal-coefficients consistency") {
    UctResult u = uct_homology(make_group({12}, 1), make_group({2}, 0), make_group({12}, 0));
    CHECK(u.h2_homology == make_group({2}, 1));
    CHECK(u.consistent);
    UctResult bad = uct_homology(make_group({12}, 1), make_group({2}, 0), make_group({6}, 0));
    CHECK(!bad.consistent);
}
