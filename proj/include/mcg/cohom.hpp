// Group cohomology of finite cyclic groups with lattice coefficients (exact,
// via Smith normal form), a normalized bar-resolution oracle, and the
// Mayer-Vietoris / Lyndon-Hochschild-Serre assembly of the cohomology of the
// Jacobi group and its coefficient change to Z/28.
#pragma once

#include "mcg/abgrp.hpp"
#include "mcg/intmath.hpp"

#include <array>
#include <string>
#include <vector>

namespace mcg {

struct CyclicCohomology {
  FgAbelianGroup h0;     // invariants M^G
  FgAbelianGroup heven;  // H^{2i}, i >= 1:  M^G / im(N)
  FgAbelianGroup hodd;   // H^{2i+1}:        ker(N) / im(sigma - 1)
};

// Cohomology of Z/m acting on the row lattice Z^r through sigma (right
// action, sigma^m == I required).
CyclicCohomology cyclic_cohomology(long m, const IntMat& sigma);

struct BarCohomology {
  FgAbelianGroup h1, h2;
};

// Independent oracle: H^1, H^2 of Z/m on Z^r from the normalized bar complex
// (coboundary matrices of the actual cochain spaces, then Smith reduction).
BarCohomology bar_cohomology(long m, const IntMat& sigma);

// H^2(SL2(Z)) from the amalgam Mayer-Vietoris: kernel of
// Z/4 + Z/6 -> Z/2, (n, m) |-> n + m, plus H^3 = cokernel (= 0).
struct MvSl2Result {
  FgAbelianGroup h2;          // Z/12
  FgAbelianGroup h3;          // 0
  std::array<long, 2> kernel_generator;  // order-12 generator of the kernel
};
MvSl2Result mv_h2_sl2();

// H^2(G_m) for m in {2,4,6} assembled from the extension 1 -> Z^2 -> G_m ->
// Z/m -> 1: Z (invariant volume class) + H^1(Z/m, Z^2 twisted) + Z/m.
FgAbelianGroup lhs_h2_gm(int m);

// H^2 and H^3 of the Jacobi group from the amalgam of G4 and G6 over G2.
struct MvGammaResult {
  FgAbelianGroup h2;  // Z + Z/12
  FgAbelianGroup h3;  // Z/2
};
MvGammaResult mv_gamma();

// H^2 with Z/28 coefficients via the coefficient sequence
// 0 -> Z --28--> Z -> Z/28 -> 0:  coker(28 on H^2) + ker(28 on H^3).
FgAbelianGroup h2_z28();

// Universal coefficients: H_2 = Z^{rank H^2} + torsion(H^3), with the
// consistency requirement torsion(H^2) == torsion(H_1).
struct UctResult {
  FgAbelianGroup h2_homology;
  bool consistent;
};
UctResult uct_homology(const FgAbelianGroup& h2_cohom, const FgAbelianGroup& h3_cohom,
                       const FgAbelianGroup& h1_homology);

}  // namespace mcg
