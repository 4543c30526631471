#include <rootgraded/supermatrix.hpp>

#include <rootgraded/errors.hpp>

namespace rootgraded {

namespace {

void require_same_shape(const SuperMatrix& x, const SuperMatrix& y) {
  if (x.shape != y.shape)
    throw dimension_mismatch_error("supermatrix shapes differ");
}

}  // namespace

SuperMatrix::SuperMatrix(BlockShape sh, Mat m) : shape(sh), mat(std::move(m)) {
  if (shape.p < 0 || shape.q < 0 || shape.dim() <= 0)
    throw invalid_parameter_error("block shape must have p, q >= 0 and p + q > 0");
  if (mat.rows() != shape.dim() || mat.cols() != shape.dim())
    throw dimension_mismatch_error("matrix size does not match block shape");
}

int index_parity(const BlockShape& sh, int i) { return i < sh.p ? 0 : 1; }

int unit_parity(const BlockShape& sh, int i, int j) {
  return index_parity(sh, i) ^ index_parity(sh, j);
}

SuperMatrix matrix_unit(const BlockShape& sh, int i, int j) {
  Mat m(sh.dim(), sh.dim());
  m.at(i, j) = 1;
  return SuperMatrix(sh, std::move(m));
}

SuperMatrix super_identity(const BlockShape& sh) {
  return SuperMatrix(sh, Mat::identity(sh.dim()));
}

SuperMatrix super_zero(const BlockShape& sh) {
  return SuperMatrix(sh, Mat(sh.dim(), sh.dim()));
}

SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return SuperMatrix(x.shape, x.mat + y.mat);
}

SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return SuperMatrix(x.shape, x.mat - y.mat);
}

SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return SuperMatrix(x.shape, x.mat * y.mat);
}

SuperMatrix scaled(const SuperMatrix& x, const Scalar& c) {
  return SuperMatrix(x.shape, x.mat.scaled(c));
}

Scalar supertrace(const SuperMatrix& x) {
  Scalar s = 0;
  for (int i = 0; i < x.shape.dim(); ++i) {
    if (index_parity(x.shape, i) == 0)
      s += x.mat.at(i, i);
    else
      s -= x.mat.at(i, i);
  }
  return s;
}

SuperMatrix parity_component(const SuperMatrix& x, int par) {
  Mat m(x.mat.rows(), x.mat.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (unit_parity(x.shape, i, j) == par) m.at(i, j) = x.mat.at(i, j);
  return SuperMatrix(x.shape, std::move(m));
}

bool is_homogeneous(const SuperMatrix& x, int* par_out) {
  bool seen[2] = {false, false};
  for (int i = 0; i < x.mat.rows(); ++i)
    for (int j = 0; j < x.mat.cols(); ++j)
      if (x.mat.at(i, j) != 0) seen[unit_parity(x.shape, i, j)] = true;
  if (seen[0] && seen[1]) return false;
  if (par_out) *par_out = seen[1] ? 1 : 0;
  return true;
}

// Both bilinear extensions reduce to plain matrix algebra plus a correction
// from the odd-odd component pair:
//   sum_{a,b} (-1)^{ab} y_b x_a = yx - 2 y_1 x_1.
SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  Mat x1 = parity_component(x, 1).mat;
  Mat y1 = parity_component(y, 1).mat;
  Mat m = x.mat * y.mat - y.mat * x.mat + (y1 * x1).scaled(2);
  return SuperMatrix(x.shape, std::move(m));
}

SuperMatrix star_product(const SuperMatrix& x, const SuperMatrix& y, int m, int n) {
  require_same_shape(x, y);
  if (m == n)
    throw invalid_parameter_error("star_product requires m != n");
  if (x.shape.p != m + 1 || x.shape.q != n + 1)
    throw dimension_mismatch_error("star_product shape must be (m+1|n+1)");
  Mat x1 = parity_component(x, 1).mat;
  Mat y1 = parity_component(y, 1).mat;
  Mat xy = x.mat * y.mat;
  Mat sym = xy + y.mat * x.mat - (y1 * x1).scaled(2);
  Scalar corr = supertrace(SuperMatrix(x.shape, xy)) * Scalar(2) / Scalar(m - n);
  Mat res = sym - Mat::identity(x.shape.dim()).scaled(corr);
  return SuperMatrix(x.shape, std::move(res));
}

Scalar trace_form(const SuperMatrix& x, const SuperMatrix& y) {
  require_same_shape(x, y);
  return supertrace(SuperMatrix(x.shape, x.mat * y.mat));
}

}  // namespace rootgraded
