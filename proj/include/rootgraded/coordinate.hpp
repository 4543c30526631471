#pragma once

#include <rootgraded/classical.hpp>
#include <rootgraded/coordalg.hpp>
#include <rootgraded/liesuper.hpp>

#include <optional>
#include <string>
#include <vector>

namespace rootgraded {

// Coordinate data (A, D, action, form) for the graded assembly over
// sl(m+1,n+1).  Construction validates the shape of every component, that
// each action matrix is parity-homogeneous of its D-element's parity and
// kills the unit, and that the form is even and super skew symmetric.
class CoordinateData {
 public:
  int m = 0, n = 0;
  AssocSuperalgebra A;
  LieSuperalgebraSC D;
  std::vector<Mat> action;                   // action[u]: a -> d_u a
  std::vector<std::vector<ScalarVec>> form;  // form[i][j]: D-coords of <a_i|a_j>

  CoordinateData(int m_, int n_, AssocSuperalgebra A_, LieSuperalgebraSC D_,
                 std::vector<Mat> action_, std::vector<std::vector<ScalarVec>> form_);

  ScalarVec form_value(const ScalarVec& a, const ScalarVec& b) const;
  Mat action_of(const ScalarVec& d) const;
};

struct AssembledAlgebra {
  LieSuperalgebraSC L;
  // Rows: coordinates in L of the grading copy of the classical algebra
  // (basis element x_i embedded as x_i tensor 1).
  Mat g_embedding;
  // One map per A-basis element: x -> x tensor a_u in L coordinates, columns
  // indexed by the classical basis.
  std::vector<Mat> block_maps;
};

// L = (sl(m+1,n+1) tensor A) (+) D with
//   [f@a, g@a'] = (-1)^{|a||g|}([f,g] @ (a o a')/2 + f*g @ [a,a']/2 + str(fg)<a|a'>)
//   [d, f@a] = (-1)^{|d||f|} f @ da,
// on the basis x_i @ a_u -> u*dim(g)+i with the D basis appended.
// Requires m > n >= 0.
AssembledAlgebra assemble_mn(const CoordinateData& cd);

// L = (psl(n+1,n+1) tensor A) (+) D with central D and
//   [f@a, g@a'] = (-1)^{|a||g|}([f,g] @ aa' + str(fg)<a|a'>),
// where str is the form induced on psl and cocycle[i][j] gives the D-coords
// of <a_i|a_j> (empty means zero).  The cocycle must be even and super skew.
AssembledAlgebra assemble_nn(int n, const AssocSuperalgebra& A, int d_dim,
                             const std::vector<std::vector<ScalarVec>>& cocycle = {});

// Coordinate data of the model algebra: D = ad restricted to [A,A] and
// <a|a'> = ad_{[a,a']}/(m-n).
CoordinateData model_coordinate_data(const AssocSuperalgebra& A, int m, int n);

// assemble_mn of the model coordinate data.
AssembledAlgebra build_model_LA(const AssocSuperalgebra& A, int m, int n);

// Derived subalgebra of gl(p,q) tensor A under the super-commutator of the
// associative product, with the embedding x -> x tensor 1.
AssembledAlgebra matrix_sl_A(int p, int q, const AssocSuperalgebra& A);

struct ConditionReport {
  bool ok = true;
  std::vector<int> witness;  // basis indices of the first violating tuple
};

// The five structure conditions equivalent to the Jacobi identity of
// assemble_mn, plus the surjectivity flag D = <A|A>.
struct StructureConditionsReport {
  ConditionReport associative;     // A associative
  ConditionReport derivation_rep;  // D Lie + superderivation action + rep law
  ConditionReport form_invariant;  // [d,<a|a'>] = <da|a'> +- <a|da'>
  ConditionReport cocycle;         // cyclic sum of <a1|a2 a3> vanishes
  ConditionReport pairing_action;  // <a1|a2> a3 = [[a1,a2],a3]/(m-n)
  bool d_spanned_by_form = true;

  bool all_five() const {
    return associative.ok && derivation_rep.ok && form_invariant.ok && cocycle.ok &&
           pairing_action.ok;
  }
};

StructureConditionsReport structure_conditions_check(const CoordinateData& cd);

struct CoordinatizeResult {
  CoordinateData cd;
  std::vector<Mat> psi;  // equivariant maps g -> L realizing the A-basis copies
  Mat d_basis;           // rows: D basis in L coordinates
};

// Recovers coordinate data from an algebra graded by an embedded copy of
// sl(m+1,n+1): the Casimir operator splits L into D and the adjoint isotype,
// the Hom-space basis gives A, and the products are read off the test pair
// (E12, E21).  Throws decomposition_failure_error when L does not split or
// the products do not land in the expected components.
CoordinatizeResult coordinatize(const LieSuperalgebraSC& L, const Mat& g_embedding,
                                int m, int n);

// Rebases A by the invertible matrix whose rows are the new basis in old
// coordinates (rows must be parity-homogeneous); transports table, unit,
// action, and form.
CoordinateData change_A_basis(const CoordinateData& cd, const Mat& rows);

// Rebases D likewise; transports the D table, the action list, and the
// D-coordinates of the form values.
CoordinateData change_D_basis(const CoordinateData& cd, const Mat& rows);

// Rebases D to the row echelon basis of the span of the form values.
// Requires D = <A|A>.
CoordinateData canonicalize_D_from_form(const CoordinateData& cd);

// Structural equality: same shape parameters, parities, unit, and all four
// structure tables (labels ignored).
bool coordinate_data_equal(const CoordinateData& x, const CoordinateData& y);

// Coefficients of the map g -> L in the psi family, retrying with the
// parity-twisted target (columns scaled by the sign of the classical basis
// parity) when the plain expression fails.
std::optional<ScalarVec> express_in_psi(const std::vector<Mat>& psi, const Mat& target,
                                        const std::vector<int>& g_parity);

}  // namespace rootgraded
