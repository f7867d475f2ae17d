#include "mcg/sl2.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace mcg {

Mat2 mat2_id() { return {1, 0, 0, 1}; }

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Int mat2_det(const Mat2& x) { return x.a * x.d - x.b * x.c; }

bool is_sl2(const Mat2& x) { return mat2_det(x) == 1; }

Mat2 mat2_inv(const Mat2& x) {
  if (!is_sl2(x)) throw std::invalid_argument("mat2_inv: determinant is not 1");
  return {x.d, -x.b, -x.c, x.a};
}

Mat2 mat2_neg(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Mat2 mat2_pow(const Mat2& x, const Int& e) {
  Mat2 base = e < 0 ? mat2_inv(x) : x;
  Int n = abs(e);
  Mat2 r = mat2_id();
  while (n > 0) {
    if ((n & 1) != 0) r = mat2_mul(r, base);
    base = mat2_mul(base, base);
    n >>= 1;
  }
  return r;
}

std::string mat2_to_string(const Mat2& x) {
  std::ostringstream os;
  os << "[[" << x.a << "," << x.b << "],[" << x.c << "," << x.d << "]]";
  return os.str();
}

Mat2 sl2_y() { return {1, 1, 0, 1}; }
Mat2 sl2_u() { return {1, 0, -1, 1}; }
Mat2 sl2_alpha() { return {-1, 0, 0, -1}; }
Mat2 sl2_beta() { return mat2_mul(mat2_mul(sl2_u(), sl2_y()), sl2_u()); }  // [[0,1],[-1,0]]
Mat2 sl2_gamma() { return mat2_mul(sl2_y(), sl2_u()); }                    // [[0,1],[-1,1]]

Mat2 eval_matrix_word(const std::vector<WordToken>& tokens) {
  Mat2 acc = mat2_id();
  for (const auto& tok : tokens) {
    Mat2 g;
    if (tok.gen == "y")
      g = sl2_y();
    else if (tok.gen == "u")
      g = sl2_u();
    else if (tok.gen == "alpha")
      g = sl2_alpha();
    else if (tok.gen == "beta")
      g = sl2_beta();
    else if (tok.gen == "gamma")
      g = sl2_gamma();
    else
      throw UsageError("unknown matrix generator '" + tok.gen + "'");
    acc = mat2_mul(acc, mat2_pow(g, tok.exp));
  }
  return acc;
}

namespace {

long long exp_to_ll(const Int& k) {
  if (k > std::numeric_limits<long long>::max() || k < std::numeric_limits<long long>::min())
    throw std::overflow_error("sl2_decompose: exponent does not fit a word token");
  return static_cast<long long>(k);
}

}  // namespace

std::vector<WordToken> sl2_decompose(const Mat2& m_in) {
  if (!is_sl2(m_in)) throw std::invalid_argument("sl2_decompose: determinant is not 1");
  Mat2 m = m_in;
  // Reduce m to I by left-multiplication:
  //   y^k * m  adds k times row 2 to row 1,
  //   u^k * m  subtracts k times row 1 from row 2,
  // running the Euclidean algorithm on the first column (whose gcd is 1).
  std::vector<WordToken> left;
  auto apply_y = [&](const Int& k) {
    if (k == 0) return;
    m.a += k * m.c;
    m.b += k * m.d;
    left.push_back({"y", exp_to_ll(k)});
  };
  auto apply_u = [&](const Int& k) {
    if (k == 0) return;
    m.c -= k * m.a;
    m.d -= k * m.b;
    left.push_back({"u", exp_to_ll(k)});
  };

  while (m.c != 0) {
    if (m.a == 0) {
      apply_y(1);
      continue;
    }
    apply_u(floor_div(m.c, m.a));  // bottom-left becomes its residue mod |a|
    if (m.c == 0) break;
    apply_y(-floor_div(m.a, m.c));  // top-left becomes its residue mod c
  }
  // Upper triangular with det 1: diagonal is (1,1) or (-1,-1).
  if (m.a < 0) {
    // (y u y)^2 == -I, so prepend it to flip the sign.
    m = mat2_neg(m);
    for (const char* gname : {"y", "u", "y", "y", "u", "y"}) left.push_back({gname, 1});
  }
  if (m.b != 0) apply_y(-m.b);  // m == y^b; clear it

  // The recorded product L (leftmost applied last) satisfies L * m_in == I,
  // i.e. reading `left` back to front multiplies to L. Hence m_in == L^-1.
  std::vector<WordToken> word;
  for (auto it = left.begin(); it != left.end(); ++it) word.push_back({it->gen, -it->exp});
  return word;
}

Int sl2_abelianize(const Mat2& m) {
  Int sum = 0;
  for (const auto& tok : sl2_decompose(m)) sum += tok.exp;
  return floor_mod(sum, 12);
}

}  // namespace mcg
