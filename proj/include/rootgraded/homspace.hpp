#pragma once

#include <rootgraded/gmodule.hpp>

#include <optional>

namespace rootgraded {

// Equivariant maps V -> X of fixed parity, as dense matrices sending column
// coordinate vectors of V to column coordinate vectors of X.  A map of parity
// f satisfies phi(x.v) = (-1)^{|x| f} x.phi(v).
struct HomBasis {
  std::vector<Mat> even;
  std::vector<Mat> odd;

  int total() const { return static_cast<int>(even.size() + odd.size()); }
  std::vector<Mat> all() const;
};

// Solves the equivariance equations blockwise over matching weight/parity
// spaces, imposing them for the Chevalley generators (plus the identity for
// gl), then verifies the candidates against every basis action.
HomBasis hom_basis(const GModule& V, const GModule& X);

// Coordinates of `target` in the span of `maps` (each dim X x dim V), or
// nullopt when it is outside the span.
std::optional<ScalarVec> express_map(const std::vector<Mat>& maps, const Mat& target);

// Casimir operator on V from the supertrace-form dual pairs:
// C = 1/2 sum_i rho(x_i) rho(x^i) with str(x^i x_j) = delta_ij.  Throws
// degenerate_form_error when the Gram matrix of the form is singular.
Mat casimir_matrix(const ClassicalAlgebra& g, const GModule& V);

struct CasimirSplit {
  Mat kernel_basis;  // rows spanning ker C
  Mat image_basis;   // rows spanning im C
  GModule kernel_module;
  GModule image_module;
};

// V = ker C (+) im C with the induced module structures; throws
// decomposition_failure_error when the two parts do not split V.
CasimirSplit casimir_split(const GModule& V);

// Basis rows of a g-invariant complement of the invariant subspace spanned by
// u_rows (parity-homogeneous, independent), computed from an equivariant
// even projection onto it; nullopt when no such projection exists.
std::optional<Mat> invariant_complement(const GModule& V, const Mat& u_rows);

}  // namespace rootgraded
