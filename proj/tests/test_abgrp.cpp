#include "doctest.h"

#include "mcg/abgrp.hpp"
#include "mcg/intmath.hpp"

#include <cstddef>
#include <vector>

using namespace mcg;

namespace {

// gcd of all k x k minors of a (0 when there are none / all vanish).
Int minors_gcd(const IntMat& a, std::size_t k) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (k == 0 || k > rows || k > cols) return 0;
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    Int g = 0;
    auto next_combo = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k2 = idx.size();
        std::size_t i = k2;
        while (i > 0) {
            --i;
            if (idx[i] + (k2 - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k2; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (std::size_t i = 0; i < k; ++i) ci[i] = i;
        do {
            IntMat sub(k, std::vector<Int>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[ri[i]][ci[j]];
            g = boost::multiprecision::gcd(g, det_bareiss(sub));
        } while (next_combo(ci, cols));
    } while (next_combo(ri, rows));
    return g < 0 ? Int(-g) : g;
}

IntMat random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    IntMat a(rows, std::vector<Int>(cols));
    for (auto& row : a)
        for (auto& x : row) x = rng.uniform(-9, 9);
    return a;
}

} // namespace

TEST_CASE("smith normal form satisfies the defining properties on random matrices") {
    Rng rng(1);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
        IntMat a = random_matrix(rng, rows, cols);
        SmithResult s = smith_normal_form(a);

        // U * A * V == D
        CHECK(mat_equal(mat_mul(mat_mul(s.u, a), s.v), s.d));
        // U, V unimodular
        Int du = det_bareiss(s.u);
        Int dv = det_bareiss(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        // D diagonal, nonnegative, with a divisibility chain
        std::size_t nmin = rows < cols ? rows : cols;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
        for (std::size_t i = 0; i < nmin; ++i) CHECK(s.d[i][i] >= 0);
        for (std::size_t i = 0; i + 1 < nmin; ++i) {
            if (s.d[i + 1][i + 1] != 0) {
                REQUIRE(s.d[i][i] != 0);
                CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
            }
        }
        // Invariant factors match the minor-gcd characterization:
        // d1 * ... * dk == gcd of all k x k minors.
        Int prod = 1;
        for (std::size_t k = 1; k <= nmin; ++k) {
            prod *= s.d[k - 1][k - 1];
            Int want = minors_gcd(a, k);
            CHECK(((prod < 0 ? Int(-prod) : prod)) == want);
        }
    }
}

TEST_CASE("smith normal form on a fixed matrix") {
    IntMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithResult s = smith_normal_form(a);
    CHECK(s.d[0][0] == 2);
    CHECK(s.d[1][1] == 2);
    CHECK(s.d[2][2] == 156);
    CHECK(mat_equal(mat_mul(mat_mul(s.u, a), s.v), s.d));
}

TEST_CASE("cokernel of relation rows") {
    // Z^2 / <(2,0),(0,4)> = Z2 + Z4
    FgAbelianGroup g = cokernel_of_relations({{2, 0}, {0, 4}}, 2);
    CHECK(g == make_group({2, 4}, 0));
    // Z^2 / <(4,0),(0,6)> = Z2 + Z12 in canonical form
    CHECK(cokernel_of_relations({{4, 0}, {0, 6}}, 2) == make_group({2, 12}, 0));
    // No relations: free
    CHECK(cokernel_of_relations({}, 3) == make_group({}, 3));
    // (1,-1),(1,1): quotient is Z2
    CHECK(cokernel_of_relations({{1, -1}, {1, 1}}, 2) == make_group({2}, 0));
    CHECK(group_order(make_group({2, 4}, 0)) == 8);
    CHECK(group_order(make_group({}, 1)) == 0);
    CHECK(group_order(make_group({}, 0)) == 1);
    CHECK(group_to_string(make_group({2, 12}, 1)) == "Z + Z/2 + Z/12");
    CHECK(group_to_string(make_group({}, 0)) == "0");
}

TEST_CASE("left kernel rows annihilate the matrix and have the right count") {
    Rng rng(2);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 4));
        IntMat a = random_matrix(rng, rows, cols);
        IntMat ker = left_kernel_basis(a);
        for (const auto& row : ker) {
            std::vector<Int> prod = vec_mat_mul(row, a);
            for (const Int& x : prod) CHECK(x == 0);
        }
        // rank + kernel dimension == number of rows
        SmithResult s = smith_normal_form(a);
        std::size_t rank = 0;
        std::size_t nmin = rows < cols ? rows : cols;
        for (std::size_t i = 0; i < nmin; ++i)
            if (s.d[i][i] != 0) ++rank;
        CHECK(ker.size() == rows - rank);
    }
}

TEST_CASE("solve_left finds exact solutions when they exist") {
    // x * A = v over Z
    IntMat a = {{2, 0}, {0, 3}};
    auto sol = solve_left(a, {4, 9});
    REQUIRE(sol.has_value());
    CHECK(vec_mat_mul(*sol, a) == std::vector<Int>{4, 9});
    CHECK(!solve_left(a, {1, 0}).has_value());
    CHECK(!solve_left(a, {0, 1}).has_value());

    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 3));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 3));
        IntMat m = random_matrix(rng, rows, cols);
        std::vector<Int> x(rows);
        for (auto& xi : x) xi = rng.uniform(-5, 5);
        std::vector<Int> v = vec_mat_mul(x, m);
        auto found = solve_left(m, v);
        REQUIRE(found.has_value());
        CHECK(vec_mat_mul(*found, m) == v);
    }
}

TEST_CASE("quotient of a lattice by a sublattice") {
    // <(2,0),(0,2)> / <(4,0),(0,4)> = Z2 + Z2
    FgAbelianGroup q = quotient_of_lattices({{2, 0}, {0, 2}}, {{4, 0}, {0, 4}}, 2);
    CHECK(q == make_group({2, 2}, 0));
    // <(1,1)> / <(3,3)> = Z3
    CHECK(quotient_of_lattices({{1, 1}}, {{3, 3}}, 2) == make_group({3}, 0));
    // full lattice over nothing
    CHECK(quotient_of_lattices({{1, 0}, {0, 1}}, {}, 2) == make_group({}, 2));
}

TEST_CASE("row lattice basis spans the same lattice") {
    IntMat basis = row_lattice_basis({{2, 4}, {4, 8}, {0, 2}}, 2);
    // Every original row solves over the basis and vice versa count = rank.
    REQUIRE(basis.size() == 2);
    for (const auto& row : IntMat{{2, 4}, {4, 8}, {0, 2}}) {
        CHECK(solve_left(basis, row).has_value());
    }
}

TEST_CASE("kernel and cokernel of a homomorphism between presented groups") {
    // Z4 + Z6 --(sum)--> Z2: kernel Z12, cokernel 0
    IntMat dom_rels = {{4, 0}, {0, 6}};
    IntMat cod_rels = {{2}};
    IntMat f = {{1}, {1}};
    auto [ker, coker] = presented_hom_kernel_cokernel(dom_rels, 2, cod_rels, 1, f);
    CHECK(ker == make_group({12}, 0));
    CHECK(is_trivial(coker));
}

TEST_CASE("multiplication by an integer on a finitely generated group") {
    // 28 on Z12: kernel Z4, cokernel Z4
    auto [k1, c1] = mul_by_n(make_group({12}, 0), 28);
    CHECK(k1 == make_group({4}, 0));
    CHECK(c1 == make_group({4}, 0));
    // 28 on Z + Z12: kernel Z4, cokernel Z28 + Z4 -> canonical (4, 28)
    auto [k2, c2] = mul_by_n(make_group({12}, 1), 28);
    CHECK(k2 == make_group({4}, 0));
    CHECK(c2 == make_group({4, 28}, 0));
    // 28 on Z2: iso
    auto [k3, c3] = mul_by_n(make_group({2}, 0), 28);
    CHECK(k3 == make_group({2}, 0));
    CHECK(c3 == make_group({2}, 0));
}

TEST_CASE("hom well-definedness check rejects maps that do not kill relations") {
    // Z4 -> Z sending the generator to 1 is not well defined
    FgAbHom bad{make_group({4}, 0), make_group({}, 1), {{1}}};
    CHECK_THROWS_AS(hom_kernel_cokernel(bad), std::invalid_argument);
    CHECK_THROWS_AS(check_hom_well_defined(bad), std::invalid_argument);
    // Z4 -> Z2 sending generator to generator is fine
    FgAbHom good{make_group({4}, 0), make_group({2}, 0), {{1}}};
    auto [ker, coker] = hom_kernel_cokernel(good);
    CHECK(ker == make_group({2}, 0));
    CHECK(coker == make_group({}, 0));
}

TEST_CASE("direct sums and canonical forms") {
    FgAbelianGroup a = make_group({2}, 1);
    FgAbelianGroup b = make_group({4, 3}, 0);
    FgAbelianGroup s = direct_sum(a, b);
    CHECK(s.free_rank == 1);
    CHECK(s == direct_sum(b, a));
    // (4,3) and (12) name the same group
    CHECK(make_group({4, 3}, 0) == make_group({12}, 0));
    // (2,4,28) stays put
    FgAbelianGroup g = make_group({2, 4, 28}, 0);
    REQUIRE(g.torsion.size() == 3);
    CHECK(g.torsion[0] == 2);
    CHECK(g.torsion[1] == 4);
    CHECK(g.torsion[2] == 28);
}
