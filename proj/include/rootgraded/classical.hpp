#pragma once

#include <rootgraded/sparse.hpp>
#include <rootgraded/supermatrix.hpp>

#include <string>
#include <vector>

namespace rootgraded {

enum class ClassicalKind { gl, sl, psl };

std::string kind_name(ClassicalKind k);

// gl(p|q), sl(p,q) or psl(p,p) on a fixed ordered basis with precomputed
// structure tables.
//
// Basis order: matrix units E_{ij}, i != j, lexicographic by (i,j); then the
// diagonal elements h_1..h_{p+q-1} where h_k = E_{kk} - E_{k+1,k+1} except
// h_p = E_{pp} + E_{p+1,p+1} (so that every h_k has supertrace zero); gl
// appends the identity.  psl drops the last diagonal element and stores the
// coset representatives whose bottom-right entry is zero.
class ClassicalAlgebra {
public:
  ClassicalKind kind = ClassicalKind::sl;
  BlockShape shape;
  int dim = 0;

  std::vector<SuperMatrix> basis;
  std::vector<int> parity;
  std::vector<std::string> labels;

  std::vector<std::vector<SVec>> bracket_table;  // [x_i, x_j]
  std::vector<std::vector<SVec>> star_table;     // x_i * x_j; empty when p == q
  Mat form;                                      // str(x_i x_j)

  int unit_index(int i, int j) const;  // 0-based, i != j
  int cartan_start() const;
  int cartan_count() const;
  // Indices of the h_k family used for weight computations (excludes the gl
  // identity).
  std::vector<int> cartan_h_indices() const;
  int e_index(int k) const;  // E_{k,k+1} for the k-th simple root, 0-based
  int f_index(int k) const;  // E_{k+1,k}

  // Identity for gl/sl; for psl subtracts the multiple of I clearing the
  // bottom-right entry.
  Mat canonical_rep(const Mat& x) const;

  // Coordinates of x in the basis.  Throws invalid_parameter_error when the
  // (canonical representative of) x is not in the span.
  ScalarVec expand(const Mat& x) const;

  SVec bracket_coords(const SVec& x, const SVec& y) const;
  SVec star_coords(const SVec& x, const SVec& y) const;
  Scalar form_value(const SVec& x, const SVec& y) const;

  SuperMatrix realize(const SVec& coords) const;

private:
  friend ClassicalAlgebra make_classical(ClassicalKind, BlockShape);
  Mat diag_basis_;  // rows: diagonals of the diagonal basis elements
};

ClassicalAlgebra make_classical(ClassicalKind kind, BlockShape shape);

}  // namespace rootgraded
