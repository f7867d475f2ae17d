#include "doctest.h"

#include "mcg/intmath.hpp"
#include "mcg/mapping_class.hpp"
#include "mcg/words.hpp"

#include <cstddef>
#include <string>
#include <vector>

using namespace mcg;

namespace {

McgEl random_mcg(Rng& rng) {
    static const std::vector<std::string> names = {"Y", "U", "A", "B", "S"};
    McgEl x = mcg_id();
    int len = static_cast<int>(rng.uniform(0, 8));
    for (int i = 0; i < len; ++i) {
        McgEl g = mcg_generator(names[static_cast<std::size_t>(rng.uniform(0, 4))]);
        if (rng.uniform(0, 1)) g = mcg_inv(g);
        x = mcg_mul(x, g);
    }
    return x;
}

} // namespace

TEST_CASE("extension group law: associativity, inverses, powers") {
    Rng rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        McgEl x = random_mcg(rng);
        McgEl y = random_mcg(rng);
        McgEl z = random_mcg(rng);
        CHECK(mcg_mul(mcg_mul(x, y), z) == mcg_mul(x, mcg_mul(y, z)));
        CHECK(mcg_mul(x, mcg_inv(x)) == mcg_id());
        CHECK(mcg_mul(mcg_inv(x), x) == mcg_id());
        CHECK(mcg_pow(x, 5) == mcg_mul(x, mcg_mul(x, mcg_mul(x, mcg_mul(x, x)))));
        CHECK(mcg_pow(x, -2) == mcg_inv(mcg_mul(x, x)));
    }
}

TEST_CASE("central charge normalization") {
    CHECK(mcg_make(jacobi_id(), 30).k == 2);
    CHECK(mcg_make(jacobi_id(), -1).k == 27);
    CHECK(mcg_generator("S").k == 1);
    CHECK(mcg_generator("Sigma") == mcg_generator("S"));
    CHECK_THROWS_AS(mcg_generator("Q"), UsageError);
}

TEST_CASE("element orders") {
    auto s = element_order(mcg_generator("S"), 100);
    REQUIRE(s.has_value());
    CHECK(*s == 28);
    auto t = element_order(eval_mcg_word(parse_word_tokens("Y U Y")), 200);
    REQUIRE(t.has_value());
    CHECK(*t == 112);
    // A has infinite order: no power up to the bound is trivial.
    CHECK(!element_order(mcg_generator("A"), 500).has_value());
}

TEST_CASE("defining relations of the extension presentation") {
    CheckReport r = verify_theorem3();
    for (const auto& c : r.checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.ok);
    }
    CHECK(r.ok());
}

TEST_CASE("commutator statements across the models") {
    CHECK(verify_claim1().ok());
    CHECK(verify_claim3().ok());
    // Direct spot checks.
    CHECK(eval_mcg_word(parse_word_tokens("A B")) ==
          eval_mcg_word(parse_word_tokens("B A S")));
    CHECK(eval_mcg_word(parse_word_tokens("A B A^-1 B^-1")) == mcg_generator("S"));
}

TEST_CASE("translation subgroup at the identity matrix") {
    CHECK(verify_eq7().ok());
    CHECK(verify_sdiff_h28().ok());
}

TEST_CASE("braid lift and central charge") {
    // (YUY)^4 = S^-1 and (YUY)^8 = S^-2
    McgEl t = eval_mcg_word(parse_word_tokens("Y U Y"));
    CHECK(mcg_pow(t, 4) == eval_mcg_word(parse_word_tokens("S^-1")));
    CHECK(mcg_pow(t, 8) == eval_mcg_word(parse_word_tokens("S^-2")));
    // (YUY)^4 has matrix part I and vector part 0.
    McgEl t4 = mcg_pow(t, 4);
    CHECK(t4.g == jacobi_id());
    CHECK(t4.k == 27);
}

TEST_CASE("signature arithmetic of the boundary invariant") {
    MuArithmetic m = mu_arithmetic();
    CHECK(m.mu_plus == Rat(1, 28));
    CHECK(m.mu_minus == Rat(-1, 28));
    CHECK(m.mu_generator == Rat(-1, 28));
    CHECK(m.charge_mod_28 == 1);
    CHECK(verify_mu().ok());
}
