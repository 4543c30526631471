#pragma once

#include <rootgraded/mat.hpp>

namespace rootgraded {

// Block shape (p|q): row/column indices 0..p-1 are even, p..p+q-1 are odd.
struct BlockShape {
  int p = 0;
  int q = 0;

  int dim() const { return p + q; }
  bool operator==(const BlockShape& o) const { return p == o.p && q == o.q; }
  bool operator!=(const BlockShape& o) const { return !(*this == o); }
};

// Square matrix carrying a block parity structure.
struct SuperMatrix {
  BlockShape shape;
  Mat mat;

  SuperMatrix() = default;
  SuperMatrix(BlockShape sh, Mat m);

  bool operator==(const SuperMatrix& o) const {
    return shape == o.shape && mat == o.mat;
  }
};

int index_parity(const BlockShape& sh, int i);

// Parity of the matrix unit E_{ij} (0-based): even iff i, j lie in the same block.
int unit_parity(const BlockShape& sh, int i, int j);

SuperMatrix matrix_unit(const BlockShape& sh, int i, int j);
SuperMatrix super_identity(const BlockShape& sh);
SuperMatrix super_zero(const BlockShape& sh);

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y);
SuperMatrix scaled(const SuperMatrix& x, const Scalar& c);

// Sum of even-block diagonal entries minus sum of odd-block diagonal entries.
Scalar supertrace(const SuperMatrix& x);

// Projection onto the entries of the given parity.
SuperMatrix parity_component(const SuperMatrix& x, int par);

// True when all nonzero entries sit at positions of a single parity; the
// parity is reported through par_out (0 for the zero matrix).
bool is_homogeneous(const SuperMatrix& x, int* par_out = nullptr);

// Super commutator xy - (-1)^{|x||y|} yx, extended bilinearly over the parity
// components of both arguments.
SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y);

// Supertrace-corrected symmetrized product for shape (m+1|n+1), m != n: on
// homogeneous pieces x*y = xy + (-1)^{|x||y|} yx - (2/(m-n)) str(xy) I.  The
// result always has supertrace zero.
SuperMatrix star_product(const SuperMatrix& x, const SuperMatrix& y, int m, int n);

// Invariant bilinear form str(xy).
Scalar trace_form(const SuperMatrix& x, const SuperMatrix& y);

}  // namespace rootgraded
