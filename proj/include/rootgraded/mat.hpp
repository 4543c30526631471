#pragma once

#include <optional>
#include <vector>

#include "rootgraded/scalar.hpp"

namespace rootgraded {

// Dense row-major matrix over exact rationals.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols);
  static Mat identity(int n);
  static Mat from_rows(const std::vector<ScalarVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  ScalarVec row(int i) const;
  ScalarVec col(int j) const;
  void append_row(const ScalarVec& r);

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // zero-skipping product
  Mat scaled(const Scalar& s) const;
  Mat transposed() const;
  ScalarVec apply(const ScalarVec& v) const;  // matrix * column vector

 private:
  int rows_, cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Mat reduced;
  std::vector<int> pivots;  // pivot column indices, one per nonzero row
};

/*
 * Reduced row echelon form over Q.
 *
 * Rows are first cleared of denominators, then brought to echelon form by
 * fraction-free (Bareiss) forward elimination, which keeps every intermediate
 * entry an integer minor of the scaled matrix and avoids gcd churn on large
 * systems. A final backward pass normalizes pivots to 1 and clears the
 * entries above them. Pivoting is deterministic: first nonzero entry in row
 * order, so identical inputs give identical outputs.
 */
RrefResult rref(const Mat& m);

int rank(const Mat& m);

// Basis of the right null space { v : m v = 0 }, one vector per free column,
// in free-column order.
std::vector<ScalarVec> kernel_basis(const Mat& m);

// A particular solution of m x = b, or nullopt when inconsistent.
// Throws dimension_mismatch_error if rows(m) != len(b).
std::optional<ScalarVec> solve(const Mat& m, const ScalarVec& b);

// Expresses each row of `targets` in the row space of `basis` (which must
// have independent rows). Returns the coefficient matrix C with
// C * basis == targets, or nullopt if some target row is outside the span.
std::optional<Mat> express_in_rows(const Mat& basis, const Mat& targets);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// Independent spanning rows: the nonzero rows of rref(m).
Mat row_basis(const Mat& m);

// Stacks the rows of b under the rows of a (column counts must agree; an
// empty matrix is treated as having no rows).
Mat vstack(const Mat& a, const Mat& b);

}  // namespace rootgraded
