#include "doctest.h"

#include "mcg/quat.hpp"
#include "mcg/words.hpp"

using namespace mcg;

namespace {

Quat qi() { return Quat{0, 1, 0, 0}; }
Quat qj() { return Quat{0, 0, 1, 0}; }
Quat qk() { return Quat{0, 0, 0, 1}; }

} // namespace

TEST_CASE("multiplication follows the Hamilton table") {
    CHECK(qmul(qi(), qi()) == Quat{-1, 0, 0, 0});
    CHECK(qmul(qj(), qj()) == Quat{-1, 0, 0, 0});
    CHECK(qmul(qk(), qk()) == Quat{-1, 0, 0, 0});
    CHECK(qmul(qi(), qj()) == qk());
    CHECK(qmul(qj(), qi()) == Quat{0, 0, 0, -1});
    CHECK(qmul(qj(), qk()) == qi());
    CHECK(qmul(qk(), qj()) == Quat{0, -1, 0, 0});
    CHECK(qmul(qk(), qi()) == qj());
    CHECK(qmul(qi(), qk()) == Quat{0, 0, -1, 0});
    // Noncommutative, associative.
    Quat x{1, 2, Rat(-1, 2), 0};
    Quat y{0, 1, 1, Rat(3, 4)};
    Quat z{2, 0, 0, -1};
    CHECK(qmul(qmul(x, y), z) == qmul(x, qmul(y, z)));
}

TEST_CASE("inverses multiply back to one") {
    Rng rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        Quat q = random_quat(rng);
        CHECK(qmul(q, qinv(q)) == quat_one());
        CHECK(qmul(qinv(q), q) == quat_one());
    }
    CHECK_THROWS_AS(qinv(quat_zero()), std::invalid_argument);
}

TEST_CASE("word evaluation substitutes and multiplies left to right") {
    FreeWord w = free_word_from_string("s t");
    CHECK(eval_word(w, qi(), qj()) == qk());
    FreeWord winv = free_word_from_string("t^-1 s^-1");
    CHECK(qmul(eval_word(w, qi(), qj()), eval_word(winv, qi(), qj())) == quat_one());
    CHECK(eval_word(free_word_from_string("1"), qi(), qj()) == quat_one());
}

TEST_CASE("numeric cross-check agrees with word-level equality on the identity suite") {
    for (const auto& id : diffeo_identity_suite()) {
        DiffeoPair lhs = eval_group_word(parse_word_tokens(id.lhs));
        DiffeoPair rhs = eval_group_word(parse_word_tokens(id.rhs));
        CrossCheckResult r = cross_check(lhs, rhs, 16, 0);
        CHECK(r.equal == id.holds_in_word_model);
        if (!id.holds_in_word_model) {
            REQUIRE(r.witness.has_value());
            // The witness values really differ.
            CHECK(!(r.witness->lhs_value == r.witness->rhs_value));
        }
    }
}

TEST_CASE("an explicit unit-quaternion witness separates the failing identity") {
    // s = i, t = 1 + j distinguish the first words of the two composites.
    Quat s = qi();
    Quat t{1, 0, 1, 0};
    DiffeoPair ab = eval_group_word(parse_word_tokens("A B"));
    DiffeoPair ba = eval_group_word(parse_word_tokens("B A"));
    Quat lhs = eval_word(ab.w1, s, t);
    Quat rhs = eval_word(ba.w1, s, t);
    CHECK(lhs == Quat{0, 0, 0, 1});
    CHECK(rhs == Quat{0, 0, 0, -1});
}

TEST_CASE("equal words always evaluate equal") {
    // Soundness on a reducible pair: different spellings of the same element.
    FreeWord w1 = free_word_from_string("s t t^-1 s");
    FreeWord w2 = free_word_from_string("s s");
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        Quat s = random_quat(rng);
        Quat t = random_quat(rng);
        CHECK(eval_word(w1, s, t) == eval_word(w2, s, t));
    }
}
