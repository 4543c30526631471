#pragma once

#include <rootgraded/gmodule.hpp>
#include <rootgraded/liesuper.hpp>

namespace rootgraded {

// L viewed as a g-module through the embedding: rho(x_i) = ad of the i-th
// embedding row.  Rows of g_embedding are L-coordinates of the classical
// basis.
GModule embedded_module(const ClassicalAlgebra& g, const LieSuperalgebraSC& L,
                        const Mat& g_embedding, bool validate = true);

struct GradedReport {
  // The embedding rows are independent, parity-homogeneous, and carry the
  // classical bracket to the bracket of L.
  bool embedding_ok = false;
  // Every nonzero weight of L under the embedded Cartan is a root.
  bool weights_in_roots = false;
  // The zero weight space equals the span of [L_mu, L_{-mu}] over the roots.
  bool zero_generated = false;
  std::vector<Weight> offending;  // nonzero weights outside the root system

  bool ok() const { return embedding_ok && weights_in_roots && zero_generated; }
};

// The three gradedness conditions of L over the embedded copy of g.  A failed
// embedding short-circuits the weight checks.  Propagates
// non_semisimple_action_error from the weight decomposition.
GradedReport check_root_graded(const ClassicalAlgebra& g, const LieSuperalgebraSC& L,
                               const Mat& g_embedding);

}  // namespace rootgraded
