// Exact quaternion arithmetic over the rationals: the numeric oracle for the
// free-word model (words evaluated at random invertible quaternions).
#pragma once

#include "mcg/intmath.hpp"
#include "mcg/words.hpp"

#include <optional>
#include <string>

namespace mcg {

struct Quat {
  Rat a, b, c, d;  // a + b*i + c*j + d*k

  bool operator==(const Quat&) const = default;
};

Quat quat_zero();
Quat quat_one();
Quat qadd(const Quat& x, const Quat& y);
Quat qmul(const Quat& x, const Quat& y);
Rat qnorm2(const Quat& x);          // squared norm (sum of squares)
Quat qinv(const Quat& x);           // throws std::invalid_argument on zero
bool qis_zero(const Quat& x);
std::string quat_to_string(const Quat& x);

// Evaluate a reduced free word at s, t (both nonzero).
Quat eval_word(const FreeWord& w, const Quat& s, const Quat& t);

// Sample a quaternion with numerators in [-5, 5], denominators in [1, 5],
// resampling while the result is zero.
Quat random_quat(Rng& rng);

struct CrossCheckWitness {
  Quat s, t;
  int component;      // 1 or 2: which word of the pair differed
  Quat lhs_value, rhs_value;
};

struct CrossCheckResult {
  bool equal;
  long trials;
  std::optional<CrossCheckWitness> witness;
};

// Numeric comparison of two word-model elements on `trials` random (s, t)
// pairs; reports the first mismatch as a witness.
CrossCheckResult cross_check(const DiffeoPair& lhs, const DiffeoPair& rhs,
                             long trials, std::uint64_t seed);

}  // namespace mcg
