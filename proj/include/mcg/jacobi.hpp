// The Jacobi group SL2(Z) x| Z^2 (row vectors, right action): group law,
// generators, and the relation/amalgam verification suites.
#pragma once

#include "mcg/abgrp.hpp"
#include "mcg/report.hpp"
#include "mcg/sl2.hpp"
#include "mcg/words.hpp"

#include <array>
#include <string>
#include <vector>

namespace mcg {

using Vec2 = std::array<Int, 2>;

Vec2 vec2_add(const Vec2& x, const Vec2& y);
Vec2 vec2_neg(const Vec2& x);
Vec2 vec2_mat(const Vec2& x, const Mat2& m);  // row vector times matrix
std::string vec2_to_string(const Vec2& x);

struct JacobiEl {
  Mat2 m;
  Vec2 x;

  bool operator==(const JacobiEl&) const = default;
};

JacobiEl jacobi_id();
// (M, X)(M', X') = (M M', X M' + X')
JacobiEl jmul(const JacobiEl& g, const JacobiEl& h);
JacobiEl jinv(const JacobiEl& g);
JacobiEl jpow(const JacobiEl& g, const Int& e);
std::string jacobi_to_string(const JacobiEl& g);

// Generators y, u (matrix part) and a = (I,(1,0)), b = (I,(0,1)); torsion
// elements alpha, beta, gamma embed with zero vector part.
JacobiEl jacobi_generator(const std::string& name);

// Evaluate a word over {y,u,a,b,alpha,beta,gamma} in written group order.
JacobiEl eval_jacobi_word(const std::vector<WordToken>& tokens);

// Defining relations of the presentation on y,u,a,b.
CheckReport verify_lemma1();

// The three finite-index subgroups G_m = <torsion element of order m, a, b>
// (m in {2,4,6}): generators and their defining relations.
struct GmGenerators {
  JacobiEl torsion;  // alpha, beta or gamma with zero vector part
  JacobiEl a, b;
};
GmGenerators gm_elements(int m);  // m in {2, 4, 6}
CheckReport verify_gm_relations(int m);
CheckReport verify_lemma6();  // all three m plus the order/power facts

// Amalgam structure over the intersection G2: beta^2 == gamma^3 == alpha,
// u == beta * gamma^-1, y == gamma^2 * beta^-1, and the generator orders.
CheckReport verify_amalgam();

// Abelianization of a built-in presentation by name (see presentation.hpp).
FgAbelianGroup abelianization_of(const std::string& name);

}  // namespace mcg
