#pragma once

#include <rootgraded/mat.hpp>

#include <string>
#include <vector>

namespace rootgraded {

// Unital associative superalgebra on a fixed basis, products stored as a
// dense structure-constant tensor.  Construction validates the parity
// pattern of the table, that the unit is even, and that it is a two-sided
// identity, so every instance satisfies the unit axiom by type.
class AssocSuperalgebra {
public:
  int dim = 0;
  std::vector<int> parity;
  std::vector<std::vector<ScalarVec>> table;  // e_i e_j = sum_k table[i][j][k] e_k
  ScalarVec unit;
  std::vector<std::string> labels;

  AssocSuperalgebra(std::vector<int> parity_bits,
                    std::vector<std::vector<ScalarVec>> structure, ScalarVec unit_coords,
                    std::vector<std::string> basis_labels = {});

  ScalarVec mul(const ScalarVec& a, const ScalarVec& b) const;
  // a o b = ab + (-1)^{|a||b|} ba, extended bilinearly over parity components
  ScalarVec sym(const ScalarVec& a, const ScalarVec& b) const;
  // [a, b] = ab - (-1)^{|a||b|} ba
  ScalarVec comm(const ScalarVec& a, const ScalarVec& b) const;

  ScalarVec basis_vec(int i) const;
  ScalarVec parity_component(const ScalarVec& a, int par) const;
};

// ===== builders =====

AssocSuperalgebra ground_field();
AssocSuperalgebra dual_numbers();
AssocSuperalgebra group_algebra(int k);       // group algebra of Z/k, all even
AssocSuperalgebra grassmann(int k);           // exterior algebra on k odd generators
AssocSuperalgebra matrix_super(int r, int s); // full (r|s) matrix superalgebra
AssocSuperalgebra truncated_poly(int k);      // F[t]/(t^k)

// Builder dispatch by name: "ground_field", "dual_numbers", "group_algebra(4)",
// "grassmann(2)", "matrix_super(1,1)", "truncated_poly(3)".
AssocSuperalgebra build_named(const std::string& name);

// ===== checks =====

struct AssociativityReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;  // witness triple when ok is false
};
AssociativityReport check_associative(const AssocSuperalgebra& A);

struct CommutativityReport {
  bool ok = true;
  int i = -1, j = -1;  // witness pair when ok is false
};
CommutativityReport check_supercommutative(const AssocSuperalgebra& A);

// Basis of span{[a,a']} together with the adjoint maps ad_u = [u, .] of the
// basis elements.
struct CommutatorSubspace {
  Mat basis;            // rows are coordinate vectors in A
  std::vector<Mat> ad;  // one map per basis row
};
CommutatorSubspace commutator_subspace(const AssocSuperalgebra& A);

// d(ab) = d(a)b + (-1)^{|d||a|} a d(b) on all basis pairs; d must be
// parity-homogeneous (throws invalid_parameter_error otherwise).
bool check_superderivation(const AssocSuperalgebra& A, const Mat& d);

// Parity of a linear map given by a matrix in the basis of A: 0, 1, or -1
// for the zero map; throws invalid_parameter_error when entries mix parities.
int map_parity(const std::vector<int>& parity, const Mat& d);

}  // namespace rootgraded
