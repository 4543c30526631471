#include "rootgraded/mat.hpp"

#include "rootgraded/errors.hpp"

namespace rootgraded {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw invalid_parameter_error("negative matrix dimension");
  }
  a_.assign(static_cast<std::size_t>(rows) * cols, Scalar(0));
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<ScalarVec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) {
      throw dimension_mismatch_error("ragged row list");
    }
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ScalarVec Mat::row(int i) const {
  ScalarVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

ScalarVec Mat::col(int j) const {
  ScalarVec c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void Mat::append_row(const ScalarVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) {
    throw dimension_mismatch_error("appended row has wrong length");
  }
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

bool Mat::is_zero() const {
  for (const auto& x : a_) {
    if (x != 0) return false;
  }
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw dimension_mismatch_error("matrix sum shape mismatch");
  }
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw dimension_mismatch_error("matrix difference shape mismatch");
  }
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) {
    throw dimension_mismatch_error("matrix product shape mismatch");
  }
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  }
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ScalarVec Mat::apply(const ScalarVec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw dimension_mismatch_error("matrix-vector shape mismatch");
  }
  ScalarVec r(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      const Scalar& x = at(i, j);
      if (x != 0 && v[j] != 0) r[i] += x * v[j];
    }
  }
  return r;
}

RrefResult rref(const Mat& m) {
  Mat w = m;
  const int rows = w.rows(), cols = w.cols();

  // Clear denominators row by row so the Bareiss divisions stay exact.
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) {
      if (w.at(i, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), w.at(i, j).get_den_mpz_t());
    }
    if (l != 1) {
      Scalar f(l);
      for (int j = 0; j < cols; ++j) {
        if (w.at(i, j) != 0) w.at(i, j) *= f;
      }
    }
  }

  std::vector<int> pivots;
  Scalar prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (w.at(i, c) != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < cols; ++j) std::swap(w.at(pr, j), w.at(r, j));
    }
    const Scalar piv = w.at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const Scalar f = w.at(i, c);
      for (int j = c; j < cols; ++j) {
        w.at(i, j) = (piv * w.at(i, j) - f * w.at(r, j)) / prev;
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }

  // Backward pass: unit pivots, zeros above them.
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    const int pc = pivots[k];
    const Scalar piv = w.at(k, pc);
    if (piv != 1) {
      for (int j = pc; j < cols; ++j) {
        if (w.at(k, j) != 0) w.at(k, j) /= piv;
      }
    }
    for (int i = 0; i < k; ++i) {
      const Scalar f = w.at(i, pc);
      if (f == 0) continue;
      for (int j = pc; j < cols; ++j) {
        if (w.at(k, j) != 0) w.at(i, j) -= f * w.at(k, j);
      }
    }
  }
  return {std::move(w), std::move(pivots)};
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<ScalarVec> kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : r.pivots) is_pivot[c] = true;
  std::vector<ScalarVec> out;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    ScalarVec v(cols, Scalar(0));
    v[fc] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      v[r.pivots[k]] = -r.reduced.at(static_cast<int>(k), fc);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<ScalarVec> solve(const Mat& m, const ScalarVec& b) {
  if (static_cast<int>(b.size()) != m.rows()) {
    throw dimension_mismatch_error("solve: rhs length != row count");
  }
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (int c : r.pivots) {
    if (c == m.cols()) return std::nullopt;
  }
  ScalarVec x(m.cols(), Scalar(0));
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    x[r.pivots[k]] = r.reduced.at(static_cast<int>(k), m.cols());
  }
  return x;
}

std::optional<Mat> express_in_rows(const Mat& basis, const Mat& targets) {
  if (basis.cols() != targets.cols()) {
    throw dimension_mismatch_error("express_in_rows: column mismatch");
  }
  // One elimination for all targets: rref [basis^T | targets^T].  A pivot in
  // the right block means some target row leaves the span (a row with zero
  // basis part but a nonzero target part); otherwise no such rows exist and
  // every solution reads off the pivot rows undisturbed.
  const int bn = basis.rows();
  Mat aug(basis.cols(), bn + targets.rows());
  for (int i = 0; i < basis.cols(); ++i) {
    for (int j = 0; j < bn; ++j) aug.at(i, j) = basis.at(j, i);
    for (int t = 0; t < targets.rows(); ++t) aug.at(i, bn + t) = targets.at(t, i);
  }
  RrefResult r = rref(aug);
  for (int c : r.pivots) {
    if (c >= bn) return std::nullopt;
  }
  Mat out(targets.rows(), bn);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    for (int t = 0; t < targets.rows(); ++t) {
      out.at(t, r.pivots[k]) = r.reduced.at(static_cast<int>(k), bn + t);
    }
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw dimension_mismatch_error("inverse: matrix not square");
  }
  const int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (static_cast<int>(r.pivots.size()) != n || (n > 0 && r.pivots.back() != n - 1)) {
    return std::nullopt;
  }
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = r.reduced.at(i, n + j);
  return out;
}

Mat row_basis(const Mat& m) {
  RrefResult r = rref(m);
  Mat out(static_cast<int>(r.pivots.size()), m.cols());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = r.reduced.at(i, j);
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) {
    throw dimension_mismatch_error("vstack: column mismatch");
  }
  Mat out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

}  // namespace rootgraded
