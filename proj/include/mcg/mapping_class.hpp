// The mapping-class model: central extension of the Jacobi group by Z/28
// with cocycle omega1 - omega2, its presentation checks, the unitriangular
// realization of the translation subgroup, and the signature/Bernoulli
// arithmetic pinning the central charge.
#pragma once

#include "mcg/cocyc.hpp"
#include "mcg/heis.hpp"
#include "mcg/jacobi.hpp"
#include "mcg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcg {

// Element (M, X, k) with k in Z/28; multiplication twists by
// (omega1 - omega2)(g, h).
struct McgEl {
  JacobiEl g;
  Int k;  // normalized to [0, 28)

  bool operator==(const McgEl&) const = default;
};

McgEl mcg_id();
McgEl mcg_make(const JacobiEl& g, const Int& k);
McgEl mcg_mul(const McgEl& x, const McgEl& y);
McgEl mcg_inv(const McgEl& x);
McgEl mcg_pow(const McgEl& x, const Int& n);
std::string mcg_to_string(const McgEl& x);

// Standard lifts of Y, U, A, B (charge 0) and the central S (= Sigma).
McgEl mcg_generator(const std::string& name);
// Written group order over {Y, U, A, B, S / Sigma}.
McgEl eval_mcg_word(const std::vector<WordToken>& tokens);

// Least n in [1, bound] with x^n == id; nullopt when none found.
std::optional<long> element_order(const McgEl& x, long bound);

// Defining relations of the extension presentation in the model:
// YUY = UYU, (YUY)^4 = S^-1, AB = BA S, BU = UB A^-1, AY = YAB, AU = UA,
// BY = YB, S central of order 28.
CheckReport verify_theorem3();

// The commutativity statement across the three models: AB != BA in the word
// model (with a numeric quaternion witness), ab = ba in the Jacobi quotient,
// and [A, B] = S in the extension.
CheckReport verify_claim1();

// The commutativity statement and its failure mode in the extension:
// ab = ba in the Jacobi model, AB != BA as words, ABA^-1B^-1 = S here.
CheckReport verify_claim3();

// Presentation relations of the translation subgroup {M = I}: matches the
// Heisenberg normal-form law with Sigma^28 = 1.
CheckReport verify_eq7();

// Isomorphism of the translation subgroup with the mod-28 unitriangular
// group: relator images, homomorphism samples, coordinate round-trips.
CheckReport verify_sdiff_h28();

// Bernoulli/Pontryagin arithmetic for the boundary invariant: the rational
// value mu = (B1 / (8 (2!)^2)) (1 + 2/(2^3-1)) (+-2 p1^2-term) = +-1/28, the
// generator's invariant -1/28, and the resulting charge congruence k = 1
// mod 28.
struct MuArithmetic {
  Rat mu_plus, mu_minus;  // +-1/28
  Rat mu_generator;       // -(8/224) = -1/28
  Int charge_mod_28;      // 1
};
MuArithmetic mu_arithmetic();
CheckReport verify_mu();

}  // namespace mcg
