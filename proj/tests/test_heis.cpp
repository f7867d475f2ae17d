#include "doctest.h"

#include "mcg/heis.hpp"
#include "mcg/intmath.hpp"
#include "mcg/sl2.hpp"
#include "mcg/words.hpp"

#include <cstddef>
#include <string>
#include <vector>

using namespace mcg;

namespace {

HeisEl random_heis(Rng& rng) {
    return HeisEl{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
}

std::vector<WordToken> random_yu_word(Rng& rng, int max_len) {
    std::vector<WordToken> w;
    int len = static_cast<int>(rng.uniform(0, max_len));
    for (int i = 0; i < len; ++i) {
        long long e = rng.uniform(-3, 3);
        if (e == 0) continue;
        w.push_back({rng.uniform(0, 1) ? "y" : "u", e});
    }
    return w;
}

} // namespace

TEST_CASE("normal-form law, inverses, powers") {
    HeisEl a{1, 0, 0}, b{0, 1, 0};
    // [A, B] = Sigma
    HeisEl comm = hmul(hmul(a, b), hmul(hinv(a), hinv(b)));
    CHECK(comm == HeisEl{0, 0, 1});
    // Sigma is central
    HeisEl sigma{0, 0, 1};
    Rng rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        HeisEl x = random_heis(rng);
        HeisEl y = random_heis(rng);
        HeisEl z = random_heis(rng);
        CHECK(hmul(hmul(x, y), z) == hmul(x, hmul(y, z)));
        CHECK(hmul(x, hinv(x)) == heis_id());
        CHECK(hmul(hinv(x), x) == heis_id());
        CHECK(hmul(x, sigma) == hmul(sigma, x));
        // hpow matches iterated multiplication for positive and negative n.
        HeisEl p = heis_id();
        for (int n = 0; n <= 5; ++n) {
            CHECK(hpow(x, n) == p);
            p = hmul(p, x);
        }
        CHECK(hpow(x, -3) == hinv(hpow(x, 3)));
    }
    // The normal form itself: A^a B^b Sigma^k reassembles to (a, b, k).
    HeisEl g{3, -2, 5};
    CHECK(hmul(hmul(hpow(a, 3), hpow(b, -2)), hpow(sigma, 5)) == g);
}

TEST_CASE("the textbook-coordinate model embeds the normal-form model") {
    // theta(a, b, k) = (a, b, 2k + ab) is an injective homomorphism.
    auto theta = [](const HeisEl& g) { return HzEl{g.a, g.b, 2 * g.k + g.a * g.b}; };
    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        HeisEl x = random_heis(rng);
        HeisEl y = random_heis(rng);
        CHECK(theta(hmul(x, y)) == hz_mul(theta(x), theta(y)));
    }
}

TEST_CASE("unitriangular quotients") {
    HmEl a = hm_make(28, 1, 0, 0);
    HmEl b = hm_make(28, 0, 1, 0);
    // [A, B] has corner entry 1
    HmEl comm = hm_mul(hm_mul(a, b), hm_mul(hm_inv(a), hm_inv(b)));
    CHECK(comm == hm_make(28, 0, 0, 1));
    // corner entry reduced mod m
    CHECK(hm_make(28, 0, 0, 30) == hm_make(28, 0, 0, 2));
    CHECK(hm_make(28, 0, 0, -1) == hm_make(28, 0, 0, 27));
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        HmEl x = hm_make(28, rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9));
        HmEl y = hm_make(28, rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9));
        HmEl z = hm_make(28, rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9));
        CHECK(hm_mul(hm_mul(x, y), z) == hm_mul(x, hm_mul(y, z)));
        CHECK(hm_mul(x, hm_inv(x)) == hm_id(28));
        CHECK(hm_pow(x, 4) == hm_mul(hm_mul(x, x), hm_mul(x, x)));
        CHECK(hm_pow(x, -1) == hm_inv(x));
    }
}

TEST_CASE("reduction map to the unitriangular quotient is a homomorphism") {
    Rng rng(54);
    for (long m : {2L, 12L, 28L}) {
        for (int trial = 0; trial < 60; ++trial) {
            HeisEl x = random_heis(rng);
            HeisEl y = random_heis(rng);
            CHECK(heis_to_hm(hmul(x, y), m) == hm_mul(heis_to_hm(x, m), heis_to_hm(y, m)));
        }
        // Kernel: powers of Sigma^m map to the identity.
        CHECK(heis_to_hm(HeisEl{0, 0, m}, m) == hm_id(m));
        CHECK(heis_to_hm(HeisEl{0, 0, -3 * m}, m) == hm_id(m));
        CHECK(heis_to_hm(HeisEl{0, 0, 1}, m) != hm_id(m));
    }
}

TEST_CASE("per-letter conjugation images") {
    // y: A |-> A B (vector part (1,1)), B fixed; Sigma fixed.
    HeisEl a{1, 0, 0}, b{0, 1, 0}, sigma{0, 0, 1};
    CHECK(conj_by_sl2_word(a, parse_word_tokens("y")) == HeisEl{1, 1, 0});
    CHECK(conj_by_sl2_word(b, parse_word_tokens("y")) == b);
    // u: B |-> B A^-1 with a central correction, A fixed.
    CHECK(conj_by_sl2_word(b, parse_word_tokens("u")) == HeisEl{-1, 1, 1});
    CHECK(conj_by_sl2_word(a, parse_word_tokens("u")) == a);
    CHECK(conj_by_sl2_word(sigma, parse_word_tokens("y u^2 y^-1")) == sigma);
}

TEST_CASE("conjugation acts on the vector part through the matrix") {
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<WordToken> w = random_yu_word(rng, 8);
        Mat2 m = eval_matrix_word(w);
        Vec2 x{rng.uniform(-9, 9), rng.uniform(-9, 9)};
        HeisEl g{x[0], x[1], 0};
        HeisEl img = conj_by_sl2_word(g, w);
        Vec2 xm = vec2_mat(x, m);
        CHECK(img.a == xm[0]);
        CHECK(img.b == xm[1]);
    }
}

TEST_CASE("conjugation is an automorphism for each word") {
    Rng rng(56);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<WordToken> w = random_yu_word(rng, 6);
        HeisEl x = random_heis(rng);
        HeisEl y = random_heis(rng);
        CHECK(conj_by_sl2_word(hmul(x, y), w) ==
              hmul(conj_by_sl2_word(x, w), conj_by_sl2_word(y, w)));
    }
}

TEST_CASE("the central charge of conjugation is word independent") {
    Rng rng(57);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<WordToken> w = random_yu_word(rng, 8);
        Mat2 m = eval_matrix_word(w);
        std::vector<WordToken> canonical = sl2_decompose(m);
        HeisEl g = random_heis(rng);
        CHECK(conj_by_sl2_word(g, w) == conj_by_sl2_word(g, canonical));
    }
}

TEST_CASE("base values of the charge cocycle") {
    CHECK(eta(Vec2{0, 1}, sl2_u()) == 1);
    CHECK(eta(Vec2{1, 0}, sl2_y()) == 0);
    CHECK(eta(Vec2{0, 0}, sl2_beta()) == 0);
    // eta(X, I) = 0
    Rng rng(58);
    for (int trial = 0; trial < 20; ++trial) {
        Vec2 x{rng.uniform(-9, 9), rng.uniform(-9, 9)};
        CHECK(eta(x, mat2_id()) == 0);
    }
}
