#include "mcg/abgrp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

void require_rectangular(const IntMat& a, const char* who) {
  if (a.empty()) return;
  std::size_t cols = a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument(std::string(who) + ": ragged matrix");
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  require_rectangular(a, "smith_normal_form");
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult s{mat_identity(rows), a, mat_identity(cols)};
  IntMat& d = s.d;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols; ++j) d[dst][j] += c * d[src][j];
    for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] += c * s.u[src][j];
  };
  auto row_negate = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(d[r][i], d[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t r = 0; r < rows; ++r) d[r][dst] += c * d[r][src];
    for (std::size_t r = 0; r < cols; ++r) s.v[r][dst] += c * s.v[r][src];
  };

  const std::size_t nmin = std::min(rows, cols);
  for (std::size_t p = 0; p < nmin; ++p) {
    for (;;) {
      // Smallest nonzero entry of the trailing submatrix becomes the pivot.
      bool found = false;
      std::size_t pi = p, pj = p;
      for (std::size_t i = p; i < rows; ++i)
        for (std::size_t j = p; j < cols; ++j) {
          if (d[i][j] == 0) continue;
          if (!found || abs(d[i][j]) < abs(d[pi][pj])) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        p = nmin;  // trailing block is zero; done
        break;
      }
      if (pi != p) row_swap(p, pi);
      if (pj != p) col_swap(p, pj);
      if (d[p][p] < 0) row_negate(p);

      // Euclid steps against the pivot; leftover remainders force a re-pick.
      bool clean = true;
      for (std::size_t i = p + 1; i < rows; ++i) {
        if (d[i][p] == 0) continue;
        row_add(i, p, -floor_div(d[i][p], d[p][p]));
        if (d[i][p] != 0) clean = false;
      }
      for (std::size_t j = p + 1; j < cols; ++j) {
        if (d[p][j] == 0) continue;
        col_add(j, p, -floor_div(d[p][j], d[p][p]));
        if (d[p][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Lone pivot: enforce that it divides the trailing submatrix, pulling
      // an offending row up so the next pass finds a smaller pivot.
      bool divides = true;
      for (std::size_t i = p + 1; i < rows && divides; ++i)
        for (std::size_t j = p + 1; j < cols && divides; ++j)
          if (d[i][j] % d[p][p] != 0) {
            row_add(p, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (p == nmin) break;
  }
  return s;
}

FgAbelianGroup make_group(const std::vector<Int>& cyclic_orders, long free_rank) {
  IntMat rels;
  std::size_t n = cyclic_orders.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cyclic_orders[i] == 0) continue;
    IntVec row(n, 0);
    row[i] = abs(cyclic_orders[i]);
    rels.push_back(std::move(row));
  }
  FgAbelianGroup g = cokernel_of_relations(rels, n);
  g.free_rank += free_rank;
  return g;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return make_group(orders, a.free_rank + b.free_rank);
}

bool is_trivial(const FgAbelianGroup& g) { return g.free_rank == 0 && g.torsion.empty(); }

Int group_order(const FgAbelianGroup& g) {
  if (g.free_rank > 0) return 0;
  Int n = 1;
  for (const auto& t : g.torsion) n *= t;
  return n;
}

std::string group_to_string(const FgAbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.free_rank == 1) {
    os << "Z";
    first = false;
  } else if (g.free_rank > 1) {
    os << "Z^" << g.free_rank;
    first = false;
  }
  for (const auto& t : g.torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FgAbelianGroup cokernel_of_relations(const IntMat& relations, std::size_t n_gens) {
  require_rectangular(relations, "cokernel_of_relations");
  if (!relations.empty() && relations[0].size() != n_gens)
    throw std::invalid_argument("cokernel_of_relations: relation width != generator count");
  if (n_gens == 0) return FgAbelianGroup{};
  if (relations.empty()) return FgAbelianGroup{{}, static_cast<long>(n_gens)};
  SmithResult s = smith_normal_form(relations);
  std::size_t nmin = std::min(relations.size(), n_gens);
  FgAbelianGroup g;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < nmin; ++i) {
    const Int& di = s.d[i][i];
    if (di == 0) continue;
    ++rank;
    if (di > 1) g.torsion.push_back(di);
  }
  g.free_rank = static_cast<long>(n_gens - rank);
  return g;
}

IntMat left_kernel_basis(const IntMat& a) {
  require_rectangular(a, "left_kernel_basis");
  const std::size_t rows = a.size();
  if (rows == 0) return {};
  const std::size_t cols = a[0].size();
  SmithResult s = smith_normal_form(a);
  const std::size_t nmin = std::min(rows, cols);
  IntMat basis;
  for (std::size_t i = 0; i < rows; ++i)
    if (i >= nmin || s.d[i][i] == 0) basis.push_back(s.u[i]);
  return basis;
}

std::optional<IntVec> solve_left(const IntMat& a, const IntVec& v) {
  require_rectangular(a, "solve_left");
  const std::size_t rows = a.size();
  if (rows == 0) {
    // No rows to combine: solvable (with the empty solution) exactly when v
    // is zero. An empty matrix carries no column count, so any width is fine.
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  const std::size_t cols = a[0].size();
  if (v.size() != cols) throw std::invalid_argument("solve_left: vector width mismatch");
  SmithResult s = smith_normal_form(a);
  IntVec w = vec_mat_mul(v, s.v);
  const std::size_t nmin = std::min(rows, cols);
  IntVec y(rows, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    if (j < nmin && s.d[j][j] != 0) {
      if (w[j] % s.d[j][j] != 0) return std::nullopt;
      y[j] = w[j] / s.d[j][j];
    } else if (w[j] != 0) {
      return std::nullopt;
    }
  }
  return vec_mat_mul(y, s.u);
}

IntMat row_lattice_basis(const IntMat& a, std::size_t cols) {
  require_rectangular(a, "row_lattice_basis");
  if (!a.empty() && a[0].size() != cols)
    throw std::invalid_argument("row_lattice_basis: width mismatch");
  IntMat m = a;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < m.size(); ++col) {
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = pivot_row; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        if (best == m.size() || abs(m[i][col]) < abs(m[best][col])) best = i;
      }
      if (best == m.size()) break;  // column clear below pivot_row
      std::swap(m[pivot_row], m[best]);
      if (m[pivot_row][col] < 0)
        for (auto& x : m[pivot_row]) x = -x;
      bool clear = true;
      for (std::size_t i = pivot_row + 1; i < m.size(); ++i) {
        if (m[i][col] == 0) continue;
        Int q = floor_div(m[i][col], m[pivot_row][col]);
        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[pivot_row][j];
        if (m[i][col] != 0) clear = false;
      }
      if (clear) {
        ++pivot_row;
        break;
      }
    }
  }
  m.resize(pivot_row);
  return m;
}

FgAbelianGroup quotient_of_lattices(const IntMat& gen_rows, const IntMat& rel_rows,
                                    std::size_t cols) {
  IntMat basis = row_lattice_basis(gen_rows, cols);
  IntMat coeffs;
  for (const auto& r : rel_rows) {
    if (r.size() != cols) throw std::invalid_argument("quotient_of_lattices: width mismatch");
    auto c = solve_left(basis, r);
    if (!c) throw std::invalid_argument("quotient_of_lattices: relation outside lattice");
    coeffs.push_back(*c);
  }
  return cokernel_of_relations(coeffs, basis.size());
}

KernelCokernel presented_hom_kernel_cokernel(const IntMat& dom_rels, std::size_t n_dom,
                                             const IntMat& cod_rels, std::size_t n_cod,
                                             const IntMat& matrix) {
  require_rectangular(matrix, "presented_hom_kernel_cokernel");
  if (matrix.size() != n_dom)
    throw std::invalid_argument("presented_hom_kernel_cokernel: matrix row count");
  if (n_dom > 0 && !matrix.empty() && matrix[0].size() != n_cod)
    throw std::invalid_argument("presented_hom_kernel_cokernel: matrix column count");

  KernelCokernel out;
  out.cokernel = cokernel_of_relations(mat_stack_rows(cod_rels, matrix), n_cod);

  // x is in the kernel iff x*matrix lies in the codomain relation lattice,
  // i.e. (x | y) kills the stacked matrix for some y.
  IntMat stacked = mat_stack_rows(matrix, cod_rels);
  IntMat k = left_kernel_basis(stacked);
  IntMat preimage;
  for (const auto& row : k) preimage.push_back(IntVec(row.begin(), row.begin() + n_dom));
  out.kernel = quotient_of_lattices(preimage, dom_rels, n_dom);
  return out;
}

IntMat canonical_relation_rows(const FgAbelianGroup& g) {
  std::size_t n = g.torsion.size() + static_cast<std::size_t>(g.free_rank);
  IntMat rels;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    IntVec row(n, 0);
    row[i] = g.torsion[i];
    rels.push_back(std::move(row));
  }
  return rels;
}

void check_hom_well_defined(const FgAbHom& h) {
  std::size_t n_dom = h.domain.torsion.size() + static_cast<std::size_t>(h.domain.free_rank);
  std::size_t n_cod = h.codomain.torsion.size() + static_cast<std::size_t>(h.codomain.free_rank);
  if (h.matrix.size() != n_dom)
    throw std::invalid_argument("hom matrix has wrong number of rows");
  for (const auto& row : h.matrix)
    if (row.size() != n_cod) throw std::invalid_argument("hom matrix has wrong number of columns");
  for (std::size_t i = 0; i < h.domain.torsion.size(); ++i) {
    const Int& oi = h.domain.torsion[i];
    for (std::size_t j = 0; j < n_cod; ++j) {
      Int v = oi * h.matrix[i][j];
      if (j < h.codomain.torsion.size()) {
        if (v % h.codomain.torsion[j] != 0)
          throw std::invalid_argument("matrix does not define a homomorphism");
      } else if (v != 0) {
        throw std::invalid_argument("matrix does not define a homomorphism");
      }
    }
  }
}

KernelCokernel hom_kernel_cokernel(const FgAbHom& h) {
  check_hom_well_defined(h);
  std::size_t n_dom = h.domain.torsion.size() + static_cast<std::size_t>(h.domain.free_rank);
  std::size_t n_cod = h.codomain.torsion.size() + static_cast<std::size_t>(h.codomain.free_rank);
  return presented_hom_kernel_cokernel(canonical_relation_rows(h.domain), n_dom,
                                       canonical_relation_rows(h.codomain), n_cod, h.matrix);
}

KernelCokernel mul_by_n(const FgAbelianGroup& g, const Int& n) {
  std::size_t size = g.torsion.size() + static_cast<std::size_t>(g.free_rank);
  IntMat m = mat_zero(size, size);
  for (std::size_t i = 0; i < size; ++i) m[i][i] = n;
  return hom_kernel_cokernel(FgAbHom{g, g, m});
}

}  // namespace mcg
