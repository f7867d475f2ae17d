// Integer Heisenberg group in the central-extension normal form
// A^a B^b Sigma^k, its mod-m unitriangular quotients, and the conjugation
// action of SL2(Z) words (whose charge defaults to the eta cocycle).
#pragma once

#include "mcg/intmath.hpp"
#include "mcg/jacobi.hpp"
#include "mcg/sl2.hpp"
#include "mcg/words.hpp"

#include <string>
#include <vector>

namespace mcg {

// Normal form A^a B^b Sigma^k with central Sigma = [A, B].
struct HeisEl {
  Int a, b, k;

  bool operator==(const HeisEl&) const = default;
};

HeisEl heis_id();
// (a,b,k)(a',b',k') = (a+a', b+b', k+k' - b*a')
HeisEl hmul(const HeisEl& g, const HeisEl& h);
HeisEl hinv(const HeisEl& g);
HeisEl hpow(const HeisEl& g, const Int& n);
std::string heis_to_string(const HeisEl& g);

// Textbook coordinates (a, b, c) with law (a,b,c)(a',b',c') =
// (a+a', b+b', c+c' + a*b' - b*a'); used as an independent model.
struct HzEl {
  Int a, b, c;

  bool operator==(const HzEl&) const = default;
};
HzEl hz_mul(const HzEl& g, const HzEl& h);

// Upper unitriangular integer matrices [[1,a,l],[0,1,b],[0,0,1]] with the
// corner entry l taken mod m.
struct HmEl {
  Int a, b, l;  // l normalized to [0, m)
  long m;

  bool operator==(const HmEl&) const = default;
};
HmEl hm_make(long m, const Int& a, const Int& b, const Int& l);
HmEl hm_mul(const HmEl& g, const HmEl& h);
HmEl hm_inv(const HmEl& g);
HmEl hm_id(long m);
HmEl hm_pow(const HmEl& g, const Int& n);
std::string hm_to_string(const HmEl& g);

// Surjection HeisEl -> HmEl, (a, b, k) |-> (a, b, a*b + k mod m); kernel is
// generated by Sigma^m.
HmEl heis_to_hm(const HeisEl& g, long m);

// Conjugation action of an SL2(Z) word over {y, u} on the Heisenberg group:
// per-letter automorphisms  y: A |-> A B, B |-> B;  u: B |-> B A^-1, A |-> A;
// Sigma is fixed. Letters act left to right.
HeisEl conj_by_sl2_word(const HeisEl& g, const std::vector<WordToken>& yu_word);

// eta(X, M): central charge acquired by (X1, X2, 0) under conjugation by the
// Euclidean decomposition of M. Well defined on SL2(Z) (word-independent).
Int eta(const Vec2& x, const Mat2& m);

}  // namespace mcg
