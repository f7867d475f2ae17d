#include "mcg/jacobi.hpp"

#include "mcg/presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

Vec2 vec2_add(const Vec2& x, const Vec2& y) { return {x[0] + y[0], x[1] + y[1]}; }
Vec2 vec2_neg(const Vec2& x) { return {-x[0], -x[1]}; }

Vec2 vec2_mat(const Vec2& x, const Mat2& m) {
  return {x[0] * m.a + x[1] * m.c, x[0] * m.b + x[1] * m.d};
}

std::string vec2_to_string(const Vec2& x) {
  std::ostringstream os;
  os << "(" << x[0] << "," << x[1] << ")";
  return os.str();
}

JacobiEl jacobi_id() { return {mat2_id(), {0, 0}}; }

JacobiEl jmul(const JacobiEl& g, const JacobiEl& h) {
  return {mat2_mul(g.m, h.m), vec2_add(vec2_mat(g.x, h.m), h.x)};
}

JacobiEl jinv(const JacobiEl& g) {
  Mat2 mi = mat2_inv(g.m);
  return {mi, vec2_neg(vec2_mat(g.x, mi))};
}

JacobiEl jpow(const JacobiEl& g, const Int& e) {
  JacobiEl base = e < 0 ? jinv(g) : g;
  Int n = abs(e);
  JacobiEl r = jacobi_id();
  while (n > 0) {
    if ((n & 1) != 0) r = jmul(r, base);
    base = jmul(base, base);
    n >>= 1;
  }
  return r;
}

std::string jacobi_to_string(const JacobiEl& g) {
  return "(" + mat2_to_string(g.m) + ", " + vec2_to_string(g.x) + ")";
}

JacobiEl jacobi_generator(const std::string& name) {
  if (name == "y") return {sl2_y(), {0, 0}};
  if (name == "u") return {sl2_u(), {0, 0}};
  if (name == "a") return {mat2_id(), {1, 0}};
  if (name == "b") return {mat2_id(), {0, 1}};
  if (name == "alpha") return {sl2_alpha(), {0, 0}};
  if (name == "beta") return {sl2_beta(), {0, 0}};
  if (name == "gamma") return {sl2_gamma(), {0, 0}};
  throw UsageError("unknown Jacobi generator '" + name + "'");
}

JacobiEl eval_jacobi_word(const std::vector<WordToken>& tokens) {
  JacobiEl acc = jacobi_id();
  for (const auto& tok : tokens) acc = jmul(acc, jpow(jacobi_generator(tok.gen), tok.exp));
  return acc;
}

namespace {

// Checks that a relation W1 = W2 holds in the Jacobi model.
void check_relation(CheckReport& r, const std::string& lhs, const std::string& rhs) {
  JacobiEl l = eval_jacobi_word(parse_word_tokens(lhs));
  JacobiEl rr = eval_jacobi_word(parse_word_tokens(rhs));
  r.add(lhs + " = " + rhs, l == rr,
        l == rr ? "" : jacobi_to_string(l) + " vs " + jacobi_to_string(rr));
}

void check_presentation_relations(CheckReport& r, const Presentation& p) {
  for (const auto& [lhs, rhs] : p.rels) check_relation(r, tokens_to_string(lhs), tokens_to_string(rhs));
}

}  // namespace

CheckReport verify_lemma1() {
  CheckReport r{"lemma1", {}};
  check_presentation_relations(r, builtin_presentation("gammaJ"));
  // The semidirect structure behind the presentation: the defining actions.
  JacobiEl a = jacobi_generator("a"), b = jacobi_generator("b");
  JacobiEl y = jacobi_generator("y"), u = jacobi_generator("u");
  r.add("y^-1 a y = a b (action of y on the lattice)",
        jmul(jmul(jinv(y), a), y) == eval_jacobi_word(parse_word_tokens("a b")));
  r.add("u^-1 b u = b a^-1 (action of u on the lattice)",
        jmul(jmul(jinv(u), b), u) == eval_jacobi_word(parse_word_tokens("b a^-1")));
  r.add("a b a^-1 b^-1 = 1 (lattice is abelian)",
        jmul(jmul(a, b), jmul(jinv(a), jinv(b))) == jacobi_id());
  return r;
}

GmGenerators gm_elements(int m) {
  JacobiEl a = jacobi_generator("a"), b = jacobi_generator("b");
  if (m == 2) return {jacobi_generator("alpha"), a, b};
  if (m == 4) return {jacobi_generator("beta"), a, b};
  if (m == 6) return {jacobi_generator("gamma"), a, b};
  throw std::invalid_argument("gm_elements: m must be 2, 4 or 6");
}

CheckReport verify_gm_relations(int m) {
  CheckReport r{"G" + std::to_string(m), {}};
  check_presentation_relations(r, builtin_presentation("G" + std::to_string(m)));
  GmGenerators g = gm_elements(m);
  r.add("torsion generator has order " + std::to_string(m),
        jpow(g.torsion, m) == jacobi_id() && jpow(g.torsion, m / 2) != jacobi_id());
  return r;
}

CheckReport verify_lemma6() {
  CheckReport r{"lemma6", {}};
  for (int m : {2, 4, 6}) r.merge(verify_gm_relations(m));
  return r;
}

CheckReport verify_amalgam() {
  CheckReport r{"amalgam", {}};
  Mat2 alpha = sl2_alpha(), beta = sl2_beta(), gamma = sl2_gamma();
  r.add("beta = u y u", beta == eval_matrix_word(parse_word_tokens("u y u")));
  r.add("gamma = y u", gamma == eval_matrix_word(parse_word_tokens("y u")));
  r.add("beta^2 = alpha", mat2_pow(beta, 2) == alpha);
  r.add("gamma^3 = alpha", mat2_pow(gamma, 3) == alpha);
  r.add("alpha has order 2", mat2_pow(alpha, 2) == mat2_id() && alpha != mat2_id());
  r.add("beta has order 4", mat2_pow(beta, 4) == mat2_id() && mat2_pow(beta, 2) != mat2_id());
  r.add("gamma has order 6", mat2_pow(gamma, 6) == mat2_id() && mat2_pow(gamma, 3) != mat2_id()
                                 && mat2_pow(gamma, 2) != mat2_id());
  r.add("u = beta gamma^-1", sl2_u() == mat2_mul(beta, mat2_inv(gamma)));
  r.add("y = gamma^2 beta^-1", sl2_y() == mat2_mul(mat2_pow(gamma, 2), mat2_inv(beta)));
  // Orientation note: u y u is the inverse of [[0,-1],[1,0]]; both have order 4.
  Mat2 other{0, -1, 1, 0};
  r.add("u y u = [[0,-1],[1,0]]^-1", beta == mat2_inv(other));
  r.add("[[0,-1],[1,0]] has order 4", mat2_pow(other, 4) == mat2_id() && mat2_pow(other, 2) != mat2_id());
  // The generators recovered from beta, gamma generate y and u back, so the
  // torsion pair generates SL2(Z); the amalgamated intersection is <alpha>.
  r.add("alpha is central in <beta>", mat2_mul(alpha, beta) == mat2_mul(beta, alpha));
  r.add("alpha is central in <gamma>", mat2_mul(alpha, gamma) == mat2_mul(gamma, alpha));
  return r;
}

FgAbelianGroup abelianization_of(const std::string& name) {
  return abelianize_presentation(builtin_presentation(name));
}

}  // namespace mcg
