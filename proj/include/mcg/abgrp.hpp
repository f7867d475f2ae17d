// Finitely generated abelian groups as Smith-normal-form data: invariant
// factors plus free rank, with kernel/cokernel machinery for homomorphisms
// between presented groups.
#pragma once

#include "mcg/intmath.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mcg {

// u * a * v == d with u, v unimodular and d diagonal, nonnegative, each
// diagonal entry dividing the next.
struct SmithResult {
  IntMat u, d, v;
};

SmithResult smith_normal_form(const IntMat& a);

// Canonical form of a f.g. abelian group: invariant factors (each > 1,
// d1 | d2 | ... ) plus the rank of the free part.
struct FgAbelianGroup {
  std::vector<Int> torsion;
  long free_rank = 0;

  bool operator==(const FgAbelianGroup&) const = default;
};

// Canonicalize an arbitrary list of cyclic orders (0 meaning an infinite
// cyclic summand) plus extra free rank.
FgAbelianGroup make_group(const std::vector<Int>& cyclic_orders, long free_rank = 0);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
bool is_trivial(const FgAbelianGroup& g);
Int group_order(const FgAbelianGroup& g);  // 0 when infinite
std::string group_to_string(const FgAbelianGroup& g);

// Z^n_gens / (row lattice of `relations`). `relations` rows must have
// n_gens entries; an empty relation list yields Z^n_gens.
FgAbelianGroup cokernel_of_relations(const IntMat& relations, std::size_t n_gens);

// Basis (as rows) of { x in Z^rows(a) : x * a == 0 }.
IntMat left_kernel_basis(const IntMat& a);

// Solve x * a == v exactly over Z; nullopt when no integral solution exists.
std::optional<IntVec> solve_left(const IntMat& a, const IntVec& v);

// Basis (as rows) of the lattice spanned by the rows of `a` (row Hermite form,
// zero rows dropped).
IntMat row_lattice_basis(const IntMat& a, std::size_t cols);

// Quotient of the lattice spanned by `gen_rows` by the sublattice spanned by
// `rel_rows`; every rel row must lie in the generated lattice.
FgAbelianGroup quotient_of_lattices(const IntMat& gen_rows, const IntMat& rel_rows,
                                    std::size_t cols);

struct KernelCokernel {
  FgAbelianGroup kernel;
  FgAbelianGroup cokernel;
};

// Kernel and cokernel of the map between presented abelian groups
//   Z^n_dom / rows(dom_rels)  -->  Z^n_cod / rows(cod_rels)
// sending domain generator i to the class of row i of `matrix`.
KernelCokernel presented_hom_kernel_cokernel(const IntMat& dom_rels, std::size_t n_dom,
                                             const IntMat& cod_rels, std::size_t n_cod,
                                             const IntMat& matrix);

// Homomorphism between groups in canonical form; generator order: the torsion
// generators (in invariant-factor order) followed by the free generators.
// matrix[i][j] = coefficient of codomain generator j in the image of domain
// generator i.
struct FgAbHom {
  FgAbelianGroup domain;
  FgAbelianGroup codomain;
  IntMat matrix;
};

// Throws std::invalid_argument when the matrix does not define a
// homomorphism (torsion incompatibility).
void check_hom_well_defined(const FgAbHom& h);
KernelCokernel hom_kernel_cokernel(const FgAbHom& h);

// Kernel and cokernel of multiplication by n on g.
KernelCokernel mul_by_n(const FgAbelianGroup& g, const Int& n);

// Diagonal relation rows for a canonical group (orders of torsion generators;
// free generators contribute no rows). Columns: torsion then free generators.
IntMat canonical_relation_rows(const FgAbelianGroup& g);

}  // namespace mcg
