#pragma once

#include <rootgraded/supermatrix.hpp>

#include <string>
#include <vector>

namespace rootgraded {

// Integer functional sum_i c_i eps_i + sum_r d_r del_r on diagonal matrices
// of shape (p|q): eps_i reads the i-th even diagonal entry, del_r the r-th
// odd one.
struct Weight {
  std::vector<int> eps;
  std::vector<int> del;

  bool is_zero() const;
  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const;
};

Weight weight_zero(const BlockShape& sh);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
std::string weight_to_string(const Weight& w);

// Standard pairing: (eps_i, eps_j) = delta_ij, (del_r, del_s) = -delta_rs,
// (eps, del) = 0.
Scalar weight_pair(const Weight& a, const Weight& b);

struct RootSystem {
  BlockShape shape;
  std::vector<Weight> even_roots;
  std::vector<Weight> odd_roots;
  std::vector<Weight> simple_roots;
};

RootSystem root_system(const BlockShape& shape);

// Gram matrix of the simple roots under the standard pairing.
Mat cartan_matrix(const RootSystem& rs);

// Canonical coset representative modulo phi = sum(eps) - sum(del), the
// functional that vanishes on supertraceless diagonals.  For p == q the last
// del coordinate is gauged to zero; for p != q the representative with
// vanishing coefficient sum is picked when the coset contains one (roots and
// their sums always do), falling back to the del gauge otherwise.
Weight weight_normal_form(const BlockShape& sh, const Weight& w);

// Reconstructs a weight from its values on the h_k family (all p+q-1 values,
// or p+q-2 when psl_mode), using the gauge d_q = 0; psl_mode adds the
// vanishing-on-identity constraint.  Throws non_semisimple_action_error when
// the values are inconsistent or non-integral.
Weight weight_from_h_values(const BlockShape& sh, const ScalarVec& values, bool psl_mode);

// Whether every weight of the Kac module with highest weight lam lies in the
// root system or is zero.  lam must be dominant for the even part; ranks are
// capped at p + q <= 6.
bool kac_weight_closure(const BlockShape& shape, const Weight& lam);

}  // namespace rootgraded
