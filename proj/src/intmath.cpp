#include "mcg/intmath.hpp"

#include <sstream>
#include <stdexcept>

namespace mcg {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b;              // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) {
  Int r = a - floor_div(a, b) * b;
  if (r < 0) r += abs(b);
  return r;
}

IntMat mat_identity(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_zero(std::size_t rows, std::size_t cols) { return IntMat(rows, IntVec(cols, 0)); }

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size();
  std::size_t k = b.size();
  if (n == 0) return {};
  if (a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
  std::size_t m = k == 0 ? 0 : b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IntMat mat_transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat mat_sub(const IntMat& a, const IntMat& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_sub: shape mismatch");
  IntMat c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw std::invalid_argument("mat_sub: shape mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
  }
  return c;
}

IntMat mat_stack_rows(const IntMat& top, const IntMat& bottom) {
  IntMat out = top;
  out.insert(out.end(), bottom.begin(), bottom.end());
  return out;
}

IntVec vec_mat_mul(const IntVec& x, const IntMat& a) {
  if (x.size() != a.size()) throw std::invalid_argument("vec_mat_mul: shape mismatch");
  std::size_t m = a.empty() ? 0 : a[0].size();
  IntVec out(m, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += x[i] * a[i][j];
  }
  return out;
}

bool mat_equal(const IntMat& a, const IntMat& b) { return a == b; }

IntMat mat_pow(const IntMat& a, long e) {
  if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
  IntMat r = mat_identity(a.size());
  IntMat base = a;
  while (e > 0) {
    if (e & 1) r = mat_mul(r, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string mat_to_string(const IntMat& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Int det_bareiss(IntMat a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("det_bareiss: not square");
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;  // exact division
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<long long>(eng_());  // full 64-bit span
  std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % range);
  std::uint64_t r;
  do {
    r = eng_();
  } while (r >= limit);
  return lo + static_cast<long long>(r % range);
}

}  // namespace mcg
