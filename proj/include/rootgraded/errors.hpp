#pragma once

#include <stdexcept>
#include <string>

namespace rootgraded {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes are incompatible (e.g. solve() with rows(A) != len(b)).
struct dimension_mismatch_error : error {
  using error::error;
};

// The invariant bilinear form has a nontrivial radical, so no dual basis.
struct degenerate_form_error : error {
  using error::error;
};

// A requested module decomposition does not exist (kernel and image of the
// Casimir fail to be complementary, or an isotypic projection is inconsistent).
struct decomposition_failure_error : error {
  using error::error;
};

// The Cartan action on a module has no joint eigenbasis over the rationals.
struct non_semisimple_action_error : error {
  using error::error;
};

// Enumerative routine invoked beyond its supported rank.
struct rank_too_large_error : error {
  using error::error;
};

// Bad construction parameter (negative dimension, psl with p != q, ...).
struct invalid_parameter_error : error {
  using error::error;
};

// Structure-constant document failed to parse or violates a type invariant.
struct document_error : error {
  using error::error;
};

}  // namespace rootgraded
