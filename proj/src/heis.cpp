#include "mcg/heis.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

HeisEl heis_id() { return {0, 0, 0}; }

HeisEl hmul(const HeisEl& g, const HeisEl& h) {
  return {g.a + h.a, g.b + h.b, g.k + h.k - g.b * h.a};
}

HeisEl hinv(const HeisEl& g) { return {-g.a, -g.b, -g.k - g.a * g.b}; }

HeisEl hpow(const HeisEl& g, const Int& n) {
  // Closed form, valid for every integer n.
  return {n * g.a, n * g.b, n * g.k - g.a * g.b * (n * (n - 1)) / 2};
}

std::string heis_to_string(const HeisEl& g) {
  std::ostringstream os;
  os << "A^" << g.a << " B^" << g.b << " S^" << g.k;
  return os.str();
}

HzEl hz_mul(const HzEl& g, const HzEl& h) {
  return {g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b - g.b * h.a};
}

HmEl hm_make(long m, const Int& a, const Int& b, const Int& l) {
  if (m <= 0) throw std::invalid_argument("hm_make: modulus must be positive");
  return {a, b, floor_mod(l, m), m};
}

HmEl hm_id(long m) { return hm_make(m, 0, 0, 0); }

HmEl hm_mul(const HmEl& g, const HmEl& h) {
  if (g.m != h.m) throw std::invalid_argument("hm_mul: modulus mismatch");
  return hm_make(g.m, g.a + h.a, g.b + h.b, g.l + h.l + g.a * h.b);
}

HmEl hm_inv(const HmEl& g) { return hm_make(g.m, -g.a, -g.b, -g.l + g.a * g.b); }

HmEl hm_pow(const HmEl& g, const Int& n) {
  return hm_make(g.m, n * g.a, n * g.b, n * g.l + g.a * g.b * (n * (n - 1)) / 2);
}

std::string hm_to_string(const HmEl& g) {
  std::ostringstream os;
  os << "[[1," << g.a << "," << g.l << "],[0,1," << g.b << "],[0,0,1]] mod " << g.m;
  return os.str();
}

HmEl heis_to_hm(const HeisEl& g, long m) { return hm_make(m, g.a, g.b, g.a * g.b + g.k); }

HeisEl conj_by_sl2_word(const HeisEl& g, const std::vector<WordToken>& yu_word) {
  HeisEl h = g;
  for (const auto& tok : yu_word) {
    Int e = tok.exp;
    HeisEl img_a, img_b;
    if (tok.gen == "y") {
      img_a = {1, e, 0};  // A |-> A B^e
      img_b = {0, 1, 0};
    } else if (tok.gen == "u") {
      img_a = {1, 0, 0};
      img_b = {-e, 1, e};  // B |-> B A^-e
    } else {
      throw UsageError("conj_by_sl2_word: word must use generators y, u");
    }
    h = hmul(hmul(hpow(img_a, h.a), hpow(img_b, h.b)), HeisEl{0, 0, h.k});
  }
  return h;
}

Int eta(const Vec2& x, const Mat2& m) {
  HeisEl h = conj_by_sl2_word({x[0], x[1], 0}, sl2_decompose(m));
  return h.k;
}

}  // namespace mcg
