#include "mcg/cohom.hpp"

#include "mcg/sl2.hpp"

#include <numeric>
#include <stdexcept>

namespace mcg {

namespace {

void require_action(long m, const IntMat& sigma) {
  if (m < 1) throw std::invalid_argument("cyclic action: m must be positive");
  std::size_t r = sigma.size();
  for (const auto& row : sigma)
    if (row.size() != r) throw std::invalid_argument("cyclic action: sigma must be square");
  if (!mat_equal(mat_pow(sigma, m), mat_identity(r)))
    throw std::invalid_argument("cyclic action: sigma^m != identity");
}

}  // namespace

CyclicCohomology cyclic_cohomology(long m, const IntMat& sigma) {
  require_action(m, sigma);
  const std::size_t r = sigma.size();
  IntMat sigma_minus_1 = mat_sub(sigma, mat_identity(r));
  IntMat invariants = left_kernel_basis(sigma_minus_1);  // basis of M^G

  IntMat norm = mat_zero(r, r);
  {
    IntMat pow = mat_identity(r);
    for (long i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) norm[a][b] += pow[a][b];
      pow = mat_mul(pow, sigma);
    }
  }

  CyclicCohomology out;
  out.h0 = FgAbelianGroup{{}, static_cast<long>(invariants.size())};

  // H^even = M^G / im(N): express the rows of N in the invariant basis.
  IntMat coeffs;
  for (std::size_t i = 0; i < r; ++i) {
    auto c = solve_left(invariants, norm[i]);
    if (!c) throw std::logic_error("cyclic_cohomology: norm image not invariant");
    coeffs.push_back(*c);
  }
  out.heven = cokernel_of_relations(coeffs, invariants.size());

  // H^odd = ker(N) / im(sigma - 1).
  out.hodd = quotient_of_lattices(left_kernel_basis(norm), sigma_minus_1, r);
  return out;
}

BarCohomology bar_cohomology(long m, const IntMat& sigma) {
  require_action(m, sigma);
  const std::size_t r = sigma.size();
  if (m == 1) return {FgAbelianGroup{}, FgAbelianGroup{}};
  const std::size_t q = static_cast<std::size_t>(m - 1);  // nontrivial group elements
  const std::size_t c1 = q * r, c2 = q * q * r, c3 = q * q * q * r;

  std::vector<IntMat> pows(static_cast<std::size_t>(m));
  pows[0] = mat_identity(r);
  for (long i = 1; i < m; ++i) pows[static_cast<std::size_t>(i)] = mat_mul(pows[i - 1], sigma);

  auto id1 = [&](long g, std::size_t comp) {
    return static_cast<std::size_t>(g - 1) * r + comp;
  };
  auto id2 = [&](long g, long h, std::size_t comp) {
    return (static_cast<std::size_t>(g - 1) * q + static_cast<std::size_t>(h - 1)) * r + comp;
  };
  auto id3 = [&](long g, long h, long k, std::size_t comp) {
    return ((static_cast<std::size_t>(g - 1) * q + static_cast<std::size_t>(h - 1)) * q +
            static_cast<std::size_t>(k - 1)) *
               r +
           comp;
  };

  // d0 : C^0 = Z^r -> C^1,  (d0 x)(g) = x sigma^g - x.
  IntMat d0 = mat_zero(r, c1);
  for (std::size_t comp = 0; comp < r; ++comp)
    for (long g = 1; g < m; ++g)
      for (std::size_t j = 0; j < r; ++j)
        d0[comp][id1(g, j)] = pows[static_cast<std::size_t>(g)][comp][j] - Int(comp == j ? 1 : 0);

  // d1 : C^1 -> C^2,  (d1 c)(g,h) = c(g) sigma^h - c(g+h) + c(h), normalized.
  IntMat d1 = mat_zero(c1, c2);
  for (long g0 = 1; g0 < m; ++g0)
    for (std::size_t comp = 0; comp < r; ++comp) {
      std::size_t row = id1(g0, comp);
      for (long g = 1; g < m; ++g)
        for (long h = 1; h < m; ++h) {
          if (g == g0)
            for (std::size_t j = 0; j < r; ++j)
              d1[row][id2(g, h, j)] += pows[static_cast<std::size_t>(h)][comp][j];
          long gh = (g + h) % m;
          if (gh != 0 && gh == g0) d1[row][id2(g, h, comp)] -= 1;
          if (h == g0) d1[row][id2(g, h, comp)] += 1;
        }
    }

  // d2 : C^2 -> C^3,
  // (d2 w)(g,h,k) = w(h,k) - w(g+h,k) + w(g,h+k) - w(g,h) sigma^k, normalized.
  IntMat d2 = mat_zero(c2, c3);
  for (long g0 = 1; g0 < m; ++g0)
    for (long h0 = 1; h0 < m; ++h0)
      for (std::size_t comp = 0; comp < r; ++comp) {
        std::size_t row = id2(g0, h0, comp);
        for (long g = 1; g < m; ++g)
          for (long h = 1; h < m; ++h)
            for (long k = 1; k < m; ++k) {
              if (g == g0 && h == h0)
                for (std::size_t j = 0; j < r; ++j)
                  d2[row][id3(g, h, k, j)] -= pows[static_cast<std::size_t>(k)][comp][j];
              long gh = (g + h) % m;
              if (gh != 0 && gh == g0 && k == h0) d2[row][id3(g, h, k, comp)] -= 1;
              long hk = (h + k) % m;
              if (hk != 0 && g == g0 && hk == h0) d2[row][id3(g, h, k, comp)] += 1;
              if (h == g0 && k == h0) d2[row][id3(g, h, k, comp)] += 1;
            }
      }

  BarCohomology out;
  out.h1 = quotient_of_lattices(left_kernel_basis(d1), d0, c1);
  out.h2 = quotient_of_lattices(left_kernel_basis(d2), d1, c2);
  return out;
}

namespace {

IntMat mat2_transpose_to_intmat(const Mat2& m) { return {{m.a, m.c}, {m.b, m.d}}; }

long order_in_z(long n, long modulus) { return modulus / std::gcd(n, modulus); }

}  // namespace

MvSl2Result mv_h2_sl2() {
  // Restriction map H^2(Z/4) + H^2(Z/6) -> H^2(Z/2), (n, m) |-> n + m.
  IntMat dom_rels = {{4, 0}, {0, 6}};
  IntMat cod_rels = {{2}};
  IntMat f = {{1}, {1}};
  KernelCokernel kc = presented_hom_kernel_cokernel(dom_rels, 2, cod_rels, 1, f);

  MvSl2Result out;
  out.h2 = kc.kernel;
  out.h3 = kc.cokernel;
  out.kernel_generator = {0, 0};
  for (long n = 0; n < 4 && out.kernel_generator == std::array<long, 2>{0, 0}; ++n)
    for (long mm = 0; mm < 6; ++mm)
      if ((n + mm) % 2 == 0 && std::lcm(order_in_z(n, 4), order_in_z(mm, 6)) == 12) {
        out.kernel_generator = {n, mm};
        break;
      }
  return out;
}

FgAbelianGroup lhs_h2_gm(int m) {
  Mat2 torsion;
  if (m == 2)
    torsion = sl2_alpha();
  else if (m == 4)
    torsion = sl2_beta();
  else if (m == 6)
    torsion = sl2_gamma();
  else
    throw std::invalid_argument("lhs_h2_gm: m must be 2, 4 or 6");
  CyclicCohomology cc = cyclic_cohomology(m, mat2_transpose_to_intmat(torsion));
  // Z (invariant volume class) + twisted H^1 + H^2(Z/m, Z) = Z/m.
  return direct_sum(direct_sum(FgAbelianGroup{{}, 1}, cc.hodd), make_group({Int(m)}));
}

namespace {

MvGammaResult mv_gamma_with_signs(int sign_g6) {
  // Domain H^2(G4) + H^2(G6) = (Z + Z/2 + Z/4) + (Z + Z/6), generators
  // x, y, z, s, t; codomain H^2(G2) = Z + (Z/2)^3.
  IntMat dom_rels = {{0, 2, 0, 0, 0}, {0, 0, 4, 0, 0}, {0, 0, 0, 0, 6}};
  IntMat cod_rels = {{0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
  Int e = sign_g6;
  IntMat f = {{1, 0, 0, 0},      // volume class of G4 restricts to the volume class
              {0, 1, 0, 0},      // twisted Z/2 of G4 hits one odd coordinate
              {0, 0, 0, 1},      // Z/4 (cyclic part) restricts onto Z/2
              {e, 0, 0, 0},      // volume class of G6
              {Int(0), 0, 0, e}};  // Z/6 (cyclic part) restricts onto Z/2
  KernelCokernel kc = presented_hom_kernel_cokernel(dom_rels, 5, cod_rels, 4, f);
  return {kc.kernel, kc.cokernel};
}

}  // namespace

MvGammaResult mv_gamma() {
  MvGammaResult plus = mv_gamma_with_signs(+1);
  MvGammaResult minus = mv_gamma_with_signs(-1);
  if (!(plus.h2 == minus.h2) || !(plus.h3 == minus.h3))
    throw std::logic_error("mv_gamma: sign convention changed the answer");
  return plus;
}

FgAbelianGroup h2_z28() {
  MvGammaResult g = mv_gamma();
  KernelCokernel on_h2 = mul_by_n(g.h2, 28);
  KernelCokernel on_h3 = mul_by_n(g.h3, 28);
  return direct_sum(on_h2.cokernel, on_h3.kernel);
}

UctResult uct_homology(const FgAbelianGroup& h2_cohom, const FgAbelianGroup& h3_cohom,
                       const FgAbelianGroup& h1_homology) {
  UctResult out;
  out.consistent = h2_cohom.torsion == h1_homology.torsion;
  out.h2_homology = FgAbelianGroup{h3_cohom.torsion, h2_cohom.free_rank};
  return out;
}

}  // namespace mcg
