// Exact integer/rational scalars, dense integer matrices, and a deterministic RNG.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mcg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Row-major dense matrix over Z. Empty matrices (0 rows) are legal and carry
// their column count implicitly through the call site.
using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

// Floor division/remainder (C++ / and % truncate toward zero).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);  // result in [0, |b|)

IntMat mat_identity(std::size_t n);
IntMat mat_zero(std::size_t rows, std::size_t cols);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat mat_transpose(const IntMat& a);
IntMat mat_sub(const IntMat& a, const IntMat& b);
IntMat mat_stack_rows(const IntMat& top, const IntMat& bottom);
IntVec vec_mat_mul(const IntVec& x, const IntMat& a);  // row vector times matrix
bool mat_equal(const IntMat& a, const IntMat& b);
IntMat mat_pow(const IntMat& a, long e);  // e >= 0
std::string mat_to_string(const IntMat& a);

// Exact determinant via fraction-free Bareiss elimination (square input).
Int det_bareiss(IntMat a);

// Deterministic RNG: all sampling goes through rejection sampling on raw
// mt19937_64 output so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform integer in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi);

 private:
  std::mt19937_64 eng_;
};

}  // namespace mcg
