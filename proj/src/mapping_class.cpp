#include "mcg/mapping_class.hpp"

#include "mcg/quat.hpp"
#include "mcg/words.hpp"

#include <sstream>

namespace mcg {

namespace {

Int twist(const JacobiEl& g, const JacobiEl& h) { return omega1(g, h) - omega2(g, h); }

}  // namespace

McgEl mcg_id() { return {jacobi_id(), 0}; }

McgEl mcg_make(const JacobiEl& g, const Int& k) { return {g, floor_mod(k, 28)}; }

McgEl mcg_mul(const McgEl& x, const McgEl& y) {
  return mcg_make(jmul(x.g, y.g), x.k + y.k + twist(x.g, y.g));
}

McgEl mcg_inv(const McgEl& x) {
  JacobiEl gi = jinv(x.g);
  return mcg_make(gi, -x.k - twist(x.g, gi));
}

McgEl mcg_pow(const McgEl& x, const Int& n) {
  McgEl base = n < 0 ? mcg_inv(x) : x;
  Int e = abs(n);
  McgEl r = mcg_id();
  while (e > 0) {
    if ((e & 1) != 0) r = mcg_mul(r, base);
    base = mcg_mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string mcg_to_string(const McgEl& x) {
  std::ostringstream os;
  os << "(" << mat2_to_string(x.g.m) << ", " << vec2_to_string(x.g.x) << ", S^" << x.k << ")";
  return os.str();
}

McgEl mcg_generator(const std::string& name) {
  if (name == "S" || name == "Sigma" || name == "sigma") return {jacobi_id(), 1};
  if (name == "Y") return {jacobi_generator("y"), 0};
  if (name == "U") return {jacobi_generator("u"), 0};
  if (name == "A") return {jacobi_generator("a"), 0};
  if (name == "B") return {jacobi_generator("b"), 0};
  throw UsageError("unknown mapping-class generator '" + name + "'");
}

McgEl eval_mcg_word(const std::vector<WordToken>& tokens) {
  McgEl acc = mcg_id();
  for (const auto& tok : tokens) acc = mcg_mul(acc, mcg_pow(mcg_generator(tok.gen), tok.exp));
  return acc;
}

std::optional<long> element_order(const McgEl& x, long bound) {
  McgEl acc = x;
  for (long n = 1; n <= bound; ++n) {
    if (acc == mcg_id()) return n;
    acc = mcg_mul(acc, x);
  }
  return std::nullopt;
}

namespace {

void check_mcg_relation(CheckReport& r, const std::string& lhs, const std::string& rhs) {
  McgEl l = eval_mcg_word(parse_word_tokens(lhs));
  McgEl rr = eval_mcg_word(parse_word_tokens(rhs));
  r.add(lhs + " = " + rhs, l == rr, l == rr ? "" : mcg_to_string(l) + " vs " + mcg_to_string(rr));
}

}  // namespace

CheckReport verify_theorem3() {
  CheckReport r{"theorem3", {}};
  check_mcg_relation(r, "Y U Y", "U Y U");
  check_mcg_relation(r, "Y U Y Y U Y Y U Y Y U Y", "S^-1");
  check_mcg_relation(r, "A B", "B A S");
  check_mcg_relation(r, "B U", "U B A^-1");
  check_mcg_relation(r, "A Y", "Y A B");
  check_mcg_relation(r, "A U", "U A");
  check_mcg_relation(r, "B Y", "Y B");
  check_mcg_relation(r, "S^28", "1");
  for (const char* g : {"Y", "U", "A", "B"})
    check_mcg_relation(r, std::string("S ") + g, std::string(g) + " S");
  auto s_ord = element_order(mcg_generator("S"), 100);
  r.add("S has order 28", s_ord && *s_ord == 28);
  auto t_ord = element_order(eval_mcg_word(parse_word_tokens("Y U Y")), 200);
  r.add("YUY has order 112", t_ord && *t_ord == 112);
  return r;
}

CheckReport verify_claim1() {
  CheckReport r{"claim1", {}};
  DiffeoPair ab = eval_group_word(parse_word_tokens("A B"));
  DiffeoPair ba = eval_group_word(parse_word_tokens("B A"));
  r.add("A B != B A in the word model", !diffeo_equal(ab, ba),
        free_word_to_string(ab.w1) + " | " + free_word_to_string(ab.w2) + "  vs  " +
            free_word_to_string(ba.w1) + " | " + free_word_to_string(ba.w2));
  CrossCheckResult cc = cross_check(ab, ba, 16, 0);
  std::string witness;
  if (cc.witness) {
    witness = "s = " + quat_to_string(cc.witness->s) + ", t = " + quat_to_string(cc.witness->t) +
              ": " + quat_to_string(cc.witness->lhs_value) + " vs " +
              quat_to_string(cc.witness->rhs_value);
  }
  r.add("a separating quaternion witness exists", !cc.equal && cc.witness.has_value(), witness);
  JacobiEl jab = eval_jacobi_word(parse_word_tokens("a b"));
  JacobiEl jba = eval_jacobi_word(parse_word_tokens("b a"));
  r.add("a b = b a in the quotient model", jab == jba);
  check_mcg_relation(r, "A B A^-1 B^-1", "S");
  return r;
}

CheckReport verify_claim3() {
  CheckReport r{"claim3", {}};
  check_mcg_relation(r, "A B A^-1 B^-1", "S");
  check_mcg_relation(r, "A S", "S A");
  check_mcg_relation(r, "B S", "S B");
  auto s_ord = element_order(mcg_generator("S"), 100);
  r.add("S has order 28", s_ord && *s_ord == 28);
  return r;
}

CheckReport verify_eq7() {
  CheckReport r{"eq7", {}};
  // Presentation relations of the translation subgroup.
  check_mcg_relation(r, "A B A^-1 B^-1", "S");
  check_mcg_relation(r, "A S A^-1", "S");
  check_mcg_relation(r, "B S B^-1", "S");
  check_mcg_relation(r, "S^28", "1");
  // The subgroup law is exactly the Heisenberg normal-form law with the
  // charge taken mod 28.
  Rng rng(0);
  bool law_ok = true;
  std::string detail;
  for (int i = 0; i < 200 && law_ok; ++i) {
    HeisEl x{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 27)};
    HeisEl y{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 27)};
    McgEl mx = mcg_make({mat2_id(), {x.a, x.b}}, x.k);
    McgEl my = mcg_make({mat2_id(), {y.a, y.b}}, y.k);
    McgEl prod = mcg_mul(mx, my);
    HeisEl hz = hmul(x, y);
    McgEl expect = mcg_make({mat2_id(), {hz.a, hz.b}}, hz.k);
    if (!(prod == expect)) {
      law_ok = false;
      detail = mcg_to_string(prod) + " vs " + mcg_to_string(expect);
    }
  }
  r.add("translation subgroup law matches the Heisenberg normal form (200 samples)", law_ok,
        detail);
  return r;
}

CheckReport verify_sdiff_h28() {
  CheckReport r{"sdiff-h28", {}};
  auto psi = [](const HeisEl& g) { return heis_to_hm(g, 28); };
  auto psi_inv = [](const HmEl& g) { return HeisEl{g.a, g.b, floor_mod(g.l - g.a * g.b, 28)}; };

  HeisEl A{1, 0, 0}, B{0, 1, 0}, S{0, 0, 1};
  HmEl comm = hm_mul(hm_mul(psi(A), psi(B)), hm_mul(hm_inv(psi(A)), hm_inv(psi(B))));
  r.add("psi[A,B] = psi(S)", comm == psi(S));
  r.add("psi(S) has order 28",
        hm_pow(psi(S), 28) == hm_id(28) && !(hm_pow(psi(S), 14) == hm_id(28)));
  r.add("psi(S) is central (against psi(A), psi(B))",
        hm_mul(psi(S), psi(A)) == hm_mul(psi(A), psi(S)) &&
            hm_mul(psi(S), psi(B)) == hm_mul(psi(B), psi(S)));

  Rng rng(0);
  bool hom_ok = true, round_ok = true;
  for (int i = 0; i < 100; ++i) {
    HeisEl x{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 27)};
    HeisEl y{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 27)};
    // Multiply in the translation model (charge mod 28), then compare.
    HeisEl xy = hmul(x, y);
    xy.k = floor_mod(xy.k, 28);
    if (!(psi(xy) == hm_mul(psi(x), psi(y)))) hom_ok = false;
    if (!(psi_inv(psi(x)) == x)) round_ok = false;
    HmEl h = hm_make(28, rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(0, 27));
    if (!(psi(psi_inv(h)) == h)) round_ok = false;
  }
  r.add("psi is a homomorphism (100 samples)", hom_ok);
  r.add("psi and its inverse are mutual round-trips (100 samples)", round_ok);
  return r;
}

MuArithmetic mu_arithmetic() {
  MuArithmetic out;
  Rat b1(1, 6);                                  // first Bernoulli number B_1
  Rat factor1 = b1 * b1 / (8 * Rat(2 * 1) * Rat(2 * 1));  // B_1^2 / (8 (2!)^2) = 1/1152
  Rat factor2 = 1 + Rat(2, 7);                   // 1 + 2/(2^3 - 1) = 9/7
  Rat p1 = 4;                                    // first Pontryagin class coefficient
  out.mu_plus = factor1 * factor2 * (2 * p1 * p1);
  out.mu_minus = factor1 * factor2 * (-2 * p1 * p1);
  out.mu_generator = -Rat(8, 224);
  out.charge_mod_28 = floor_mod(Int(-28) * boost::multiprecision::numerator(out.mu_generator) /
                                    boost::multiprecision::denominator(out.mu_generator),
                                28);
  return out;
}

CheckReport verify_mu() {
  CheckReport r{"mu", {}};
  MuArithmetic m = mu_arithmetic();
  r.add("mu(+) = 1/28", m.mu_plus == Rat(1, 28));
  r.add("mu(-) = -1/28", m.mu_minus == Rat(-1, 28));
  r.add("generator invariant -8/224 = -1/28", m.mu_generator == Rat(-1, 28));
  r.add("generator invariant matches mu(-)", m.mu_generator == m.mu_minus);
  r.add("central charge is 1 mod 28", m.charge_mod_28 == 1);
  // The invariant separates all 28 powers of the central element: no smaller
  // multiple of -1/28 is an integer.
  bool non_integral = true;
  for (int k = 1; k < 28; ++k)
    if (boost::multiprecision::denominator(Rat(k) * m.mu_generator) == 1) non_integral = false;
  r.add("k * mu(generator) is non-integral for 0 < k < 28", non_integral);
  r.add("28 * mu(generator) is integral",
        boost::multiprecision::denominator(Rat(28) * m.mu_generator) == 1);
  return r;
}

}  // namespace mcg
