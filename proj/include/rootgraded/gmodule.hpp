#pragma once

#include <rootgraded/classical.hpp>
#include <rootgraded/weights.hpp>

namespace rootgraded {

// Module over a ClassicalAlgebra, one action matrix per algebra basis
// element; matrices act on column coordinate vectors.
struct GModule {
  const ClassicalAlgebra* g = nullptr;
  int dim = 0;
  std::vector<int> parity;
  std::vector<Mat> actions;
  std::vector<std::string> labels;
};

// Validates parity compatibility of every action matrix and the
// representation law rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|}rho(y)rho(x)
// on all pairs from the generating family (Chevalley e_k, f_k, the h family,
// plus I for gl).
GModule make_gmodule(const ClassicalAlgebra& g, std::vector<int> parity,
                     std::vector<Mat> actions, std::vector<std::string> labels = {},
                     bool validate = true);

GModule adjoint_module(const ClassicalAlgebra& g);
GModule trivial_module(const ClassicalAlgebra& g, int dim = 1);

// Tensor product with the super sign rule x(v@w) = xv@w + (-1)^{|x||v|}v@xw;
// basis order v_i@w_j -> i*dim(W)+j.  Skips generator revalidation.
GModule tensor_module(const GModule& V, const GModule& W);

// Action matrix of the element with the given coordinates.
Mat module_action(const GModule& V, const SVec& x);

// Generating family used for validation and for the Hom solver: all e_k and
// f_k, the h family, and I for gl.
std::vector<int> generator_indices(const ClassicalAlgebra& g);

// Joint eigenspace decomposition under the commuting h-family, labeled by the
// reconstructed weights and sorted by weight.  Bases are rows.  Throws
// non_semisimple_action_error when integer joint eigenspaces do not fill V.
std::vector<std::pair<Weight, Mat>> weight_decompose(const GModule& V);

// Weight decomposition refined by coordinate parity.
struct WeightBlock {
  Weight weight;
  int parity;
  Mat basis;  // rows
};

std::vector<WeightBlock> weight_parity_decompose(const GModule& V);

// Restriction of the module structure to the row space of `basis_rows`; the
// rows must be parity-homogeneous and the span action-invariant.
GModule induced_module(const GModule& V, const Mat& basis_rows);

}  // namespace rootgraded
