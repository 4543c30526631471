#pragma once

#include <rootgraded/mat.hpp>
#include <rootgraded/sparse.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rootgraded {

// Lie superalgebra given by structure constants on a homogeneous basis; the
// bracket table is stored sparsely, one coordinate vector per basis pair.
// Construction validates parity compatibility and super-anticommutativity of
// the table; the Jacobi identity is checked separately by jacobi_check.
class LieSuperalgebraSC {
 public:
  int dim = 0;
  std::vector<int> parity;
  std::vector<std::vector<SVec>> table;  // [e_i, e_j] = table[i][j]
  std::vector<std::string> labels;

  LieSuperalgebraSC(std::vector<int> parity_bits,
                    std::vector<std::vector<SVec>> structure,
                    std::vector<std::string> basis_labels = {});

  static LieSuperalgebraSC from_dense_table(
      std::vector<int> parity_bits, const std::vector<std::vector<ScalarVec>>& structure,
      std::vector<std::string> basis_labels = {});

  ScalarVec bracket(const ScalarVec& x, const ScalarVec& y) const;
  ScalarVec table_dense(int i, int j) const;
  ScalarVec basis_vec(int i) const;
  Mat ad(int i) const;  // column j holds [e_i, e_j]
};

// Abelian algebra of the given dimension (parity defaults to all even).
LieSuperalgebraSC abelian_lie(int dim, std::vector<int> parity = {});

struct JacobiOptions {
  int max_exhaustive_dim = 64;
  std::uint64_t seed = 0;
  long samples = 1000000;
  // Basis indices whose triples are always checked in sampled mode.
  std::vector<int> focus;
};

struct JacobiReport {
  bool ok = true;
  bool exhaustive = true;
  long checked = 0;
  int i = -1, j = -1, k = -1;  // first violating triple when !ok
};

// Cyclic super Jacobi sum on basis triples: exhaustive over unordered triples
// up to max_exhaustive_dim, otherwise seeded uniform sampling plus all
// triples meeting the focus set.
JacobiReport jacobi_check(const LieSuperalgebraSC& L, const JacobiOptions& opts = {});

// Rows spanning the center (joint kernel of all ad maps).
Mat center(const LieSuperalgebraSC& L);

// Whether [L, L] = L.
bool is_perfect(const LieSuperalgebraSC& L);

struct QuotientResult {
  LieSuperalgebraSC quotient;
  // Quotient coordinates of the original basis vectors, applied to columns:
  // pi(x) = projection * x.
  Mat projection;
};

// Quotient by the center on the coordinate complement of its row echelon
// pivots.
QuotientResult central_quotient(const LieSuperalgebraSC& L);

}  // namespace rootgraded
