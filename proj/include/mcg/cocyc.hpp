// 2-cocycles and central extensions: the cyclic "carry" cocycle, the
// translation-lattice cocycles, the two cocycles on the Jacobi group whose
// difference classifies the mapping-class extension, and the normal-form
// calculus for extension presentations.
#pragma once

#include "mcg/heis.hpp"
#include "mcg/jacobi.hpp"
#include "mcg/report.hpp"
#include "mcg/sl2.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mcg {

// Carry cocycle on Z/m: 1 when the mod-m representatives overflow.
Int f_m(long m, const Int& p, const Int& q);

// Pullback of f_12 along the abelianization SL2(Z) -> Z/12.
Int f_sl2(const Mat2& m, const Mat2& n);

// Cocycles on the translation lattice Z^2.
Int g_z2(const Vec2& v, const Vec2& w);    // v1 * w2   (first coord of v, second of w)
Int phi_z2(const Vec2& v, const Vec2& w);  // v1*w2 - v2*w1
Int kappa_z2(const Vec2& v, const Vec2& w);  // -v2 * w1

using JacobiCocycle = std::function<Int(const JacobiEl&, const JacobiEl&)>;
using Vec2Cocycle = std::function<Int(const Vec2&, const Vec2&)>;

// omega1((M,X),(M',X')) = eta(X, M') + kappa(X M', X'): the Heisenberg-lift
// cocycle. omega2 = f_sl2 of the matrix parts. omega3_mod2 is the order-two
// crossed-homomorphism cocycle (values 0/1); over Z/28 use 14 * omega3_mod2.
Int omega1(const JacobiEl& g, const JacobiEl& h);
Int omega2(const JacobiEl& g, const JacobiEl& h);
Int omega3_mod2(const JacobiEl& g, const JacobiEl& h);

JacobiCocycle cocycle_by_name(const std::string& name);  // omega1|omega2|omega3

struct CocycleFailure {
  std::string g, h, k;  // printed triple violating the identity
  Int lhs, rhs;
};

struct CocycleCheckResult {
  bool ok;
  long cases;
  std::optional<CocycleFailure> failure;
};

// Cocycle identity w(g,h) + w(gh,k) == w(h,k) + w(g,hk), optionally in Z/mod.
CocycleCheckResult check_cocycle_zm(long m, const std::function<Int(const Int&, const Int&)>& w);
CocycleCheckResult check_cocycle_vec2_box(const Vec2Cocycle& w, long bound);
CocycleCheckResult check_cocycle_jacobi_sampled(const JacobiCocycle& w, long samples,
                                                std::uint64_t seed, long modulus = 0);

// w(e1, e2) - w(e2, e1) on the standard basis of the translation lattice;
// invariant of the restricted cohomology class.
Int commutator_invariant(const Vec2Cocycle& w);
// Restriction of a Jacobi cocycle to the translation subgroup.
Vec2Cocycle restrict_to_translations(const JacobiCocycle& w);

// Central extension E = Jacobi x_w Z (or Z/modulus when modulus > 0):
// (g, k)(h, l) = (gh, k + l + w(g, h)).
struct ExtEl {
  JacobiEl g;
  Int k;

  bool operator==(const ExtEl&) const = default;
};

ExtEl ext_id();
ExtEl ext_mul(const ExtEl& x, const ExtEl& y, const JacobiCocycle& w, long modulus = 0);
ExtEl ext_inv(const ExtEl& x, const JacobiCocycle& w, long modulus = 0);
// Standard lift of a Jacobi generator name, charge 0; "sigma" = (id, 1).
ExtEl ext_lift(const std::string& name);
// Written group order; inverse letters use the extension inverse of the lift.
ExtEl eval_ext_word(const std::vector<WordToken>& tokens, const JacobiCocycle& w,
                    long modulus = 0);

// Exponents (k0..k6) in the extension presentation normal form:
//   YUY = UYU S^k0, (YUY)^4 = S^k1, AB = BA S^k2, BU = UBA^-1 S^k3,
//   AY = YAB S^k4, AU = UA S^k5, BY = YB S^k6.
struct ExtensionReport {
  std::array<Int, 7> k;

  bool operator==(const ExtensionReport&) const = default;
};
ExtensionReport extension_report(const JacobiCocycle& w, long modulus = 0);
std::string extension_report_to_string(const ExtensionReport& r);

// Normal form of a report under re-lifting moves: k3, k4 are absorbable;
// the braid exponents merge into n = k1 + 4*k0; m = k2 is exact; k5, k6
// survive only through the residual constraint k5 == k6, 2*k5 == 0.
struct NormalizedExtension {
  bool consistent;      // false when the k5/k6 constraints are violated
  Int m, n;             // exact exponent on [A,B]; merged braid exponent
  Int residual;         // 0, or modulus/2 for the order-two residual class
  std::string message;  // explanation when inconsistent
};
NormalizedExtension normalize_exponents(const ExtensionReport& r, long modulus = 0);

// Class-level triviality: m == 0, n == 0 mod 12 (mod gcd(12, modulus) when
// modulus > 0), residual == 0.
bool class_is_trivial(const ExtensionReport& r, long modulus);
// Least n in [1, bound] with n*w of trivial class; 0 when none.
long cocycle_class_order(const JacobiCocycle& w, long modulus, long bound);

// Full cocycle verification suite (acceptance criterion: identities,
// commutator invariants, extension reports, normal forms).
CheckReport verify_cocycles();

}  // namespace mcg
