// SL2(Z): exact 2x2 matrices, generator decomposition by the Euclidean
// algorithm, abelianization, and the finite-order generators.
#pragma once

#include "mcg/intmath.hpp"
#include "mcg/words.hpp"

#include <string>
#include <vector>

namespace mcg {

struct Mat2 {
  Int a, b, c, d;  // [[a, b], [c, d]]

  bool operator==(const Mat2&) const = default;
};

Mat2 mat2_id();
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_inv(const Mat2& x);  // requires det +1
Mat2 mat2_neg(const Mat2& x);
Mat2 mat2_pow(const Mat2& x, const Int& e);  // any integer exponent
Int mat2_det(const Mat2& x);
bool is_sl2(const Mat2& x);
std::string mat2_to_string(const Mat2& x);

// Generators: y = [[1,1],[0,1]], u = [[1,0],[-1,1]].
Mat2 sl2_y();
Mat2 sl2_u();

// Finite-order generators: alpha = -I (order 2), beta = u*y*u (order 4),
// gamma = y*u (order 6); beta^2 == gamma^3 == alpha.
Mat2 sl2_alpha();
Mat2 sl2_beta();
Mat2 sl2_gamma();

// Evaluate a word over generators named y, u (and alpha/beta/gamma) in
// written order. Throws UsageError on unknown generators.
Mat2 eval_matrix_word(const std::vector<WordToken>& tokens);

// Write m as a word in y, u (tokens with exponents). Euclidean algorithm on
// the bottom row; round-trips through eval_matrix_word.
std::vector<WordToken> sl2_decompose(const Mat2& m);

// Image in the abelianization Z/12 (exponent sum of any y,u word), in [0,12).
Int sl2_abelianize(const Mat2& m);

}  // namespace mcg
