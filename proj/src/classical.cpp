#include <rootgraded/classical.hpp>

#include <rootgraded/errors.hpp>

namespace rootgraded {

std::string kind_name(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::gl: return "gl";
    case ClassicalKind::sl: return "sl";
    case ClassicalKind::psl: return "psl";
  }
  return "?";
}

// ===== Indexing =====

int ClassicalAlgebra::unit_index(int i, int j) const {
  const int N = shape.dim();
  if (i == j || i < 0 || j < 0 || i >= N || j >= N)
    throw invalid_parameter_error("unit_index requires distinct indices in range");
  return i * (N - 1) + (j < i ? j : j - 1);
}

int ClassicalAlgebra::cartan_start() const {
  const int N = shape.dim();
  return N * (N - 1);
}

int ClassicalAlgebra::cartan_count() const {
  const int N = shape.dim();
  switch (kind) {
    case ClassicalKind::gl: return N;
    case ClassicalKind::sl: return N - 1;
    case ClassicalKind::psl: return N - 2;
  }
  return 0;
}

std::vector<int> ClassicalAlgebra::cartan_h_indices() const {
  const int N = shape.dim();
  int count = kind == ClassicalKind::psl ? N - 2 : N - 1;
  std::vector<int> out(count);
  for (int k = 0; k < count; ++k) out[k] = cartan_start() + k;
  return out;
}

int ClassicalAlgebra::e_index(int k) const { return unit_index(k, k + 1); }

int ClassicalAlgebra::f_index(int k) const { return unit_index(k + 1, k); }

// ===== Expansion =====

Mat ClassicalAlgebra::canonical_rep(const Mat& x) const {
  if (kind != ClassicalKind::psl) return x;
  const int N = shape.dim();
  const Scalar& lam = x.at(N - 1, N - 1);
  if (lam == 0) return x;
  return x - Mat::identity(N).scaled(lam);
}

ScalarVec ClassicalAlgebra::expand(const Mat& x) const {
  const int N = shape.dim();
  if (x.rows() != N || x.cols() != N)
    throw dimension_mismatch_error("expand: wrong matrix size");
  Mat y = canonical_rep(x);
  ScalarVec out(dim, Scalar(0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) out[unit_index(i, j)] = y.at(i, j);
  Mat d(1, N);
  for (int i = 0; i < N; ++i) d.at(0, i) = y.at(i, i);
  auto coeff = express_in_rows(diag_basis_, d);
  if (!coeff)
    throw invalid_parameter_error("expand: matrix is not in the algebra");
  for (int k = 0; k < cartan_count(); ++k) out[cartan_start() + k] = coeff->at(0, k);
  return out;
}

SVec ClassicalAlgebra::bracket_coords(const SVec& x, const SVec& y) const {
  SVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      out = svec_add(out, svec_scaled(bracket_table[i][j], a * b));
  return out;
}

SVec ClassicalAlgebra::star_coords(const SVec& x, const SVec& y) const {
  if (star_table.empty())
    throw invalid_parameter_error("star product undefined for p == q");
  SVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      out = svec_add(out, svec_scaled(star_table[i][j], a * b));
  return out;
}

Scalar ClassicalAlgebra::form_value(const SVec& x, const SVec& y) const {
  Scalar s = 0;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) s += a * b * form.at(i, j);
  return s;
}

SuperMatrix ClassicalAlgebra::realize(const SVec& coords) const {
  SuperMatrix out = super_zero(shape);
  for (const auto& [i, c] : coords) out = out + scaled(basis[i], c);
  return out;
}

// ===== Construction =====

ClassicalAlgebra make_classical(ClassicalKind kind, BlockShape shape) {
  if (shape.p < 1 || shape.q < 1)
    throw invalid_parameter_error("block shape requires p >= 1 and q >= 1");
  if (kind == ClassicalKind::psl && shape.p != shape.q)
    throw invalid_parameter_error("psl requires p == q");

  const int N = shape.dim();
  ClassicalAlgebra g;
  g.kind = kind;
  g.shape = shape;

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      g.basis.push_back(matrix_unit(shape, i, j));
      g.parity.push_back(unit_parity(shape, i, j));
      g.labels.push_back("E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }

  int hcount = kind == ClassicalKind::psl ? N - 2 : N - 1;
  for (int k = 1; k <= hcount; ++k) {
    Mat h(N, N);
    h.at(k - 1, k - 1) = 1;
    h.at(k, k) = (k == shape.p) ? 1 : -1;
    g.basis.emplace_back(shape, std::move(h));
    g.parity.push_back(0);
    g.labels.push_back("h(" + std::to_string(k) + ")");
  }
  if (kind == ClassicalKind::gl) {
    g.basis.push_back(super_identity(shape));
    g.parity.push_back(0);
    g.labels.push_back("I");
  }
  g.dim = static_cast<int>(g.basis.size());

  g.diag_basis_ = Mat(g.cartan_count(), N);
  for (int k = 0; k < g.cartan_count(); ++k) {
    const Mat& b = g.basis[g.cartan_start() + k].mat;
    for (int i = 0; i < N; ++i) g.diag_basis_.at(k, i) = b.at(i, i);
  }

  bool with_star = shape.p != shape.q;
  g.bracket_table.assign(g.dim, std::vector<SVec>(g.dim));
  if (with_star) g.star_table.assign(g.dim, std::vector<SVec>(g.dim));
  g.form = Mat(g.dim, g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      g.bracket_table[i][j] = svec_from_dense(g.expand(bracket(g.basis[i], g.basis[j]).mat));
      if (with_star)
        g.star_table[i][j] =
            svec_from_dense(g.expand(star_product(g.basis[i], g.basis[j], shape.p - 1, shape.q - 1).mat));
      g.form.at(i, j) = trace_form(g.basis[i], g.basis[j]);
    }
  return g;
}

}  // namespace rootgraded
