#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rootgraded/coordinate.hpp>
#include <rootgraded/errors.hpp>
#include <rootgraded/graded.hpp>

using namespace rootgraded;

namespace {

// (-1)^{|i||k|}[[e_i,e_j],e_k] + cyclic, as a dense vector.
ScalarVec jacobiator(const LieSuperalgebraSC& L, int i, int j, int k) {
  auto term = [&](int a, int b, int c) {
    ScalarVec v = L.bracket(L.bracket(L.basis_vec(a), L.basis_vec(b)), L.basis_vec(c));
    if (L.parity[a] && L.parity[c])
      for (auto& x : v) x = -x;
    return v;
  };
  ScalarVec out = term(i, j, k);
  ScalarVec t2 = term(j, k, i);
  ScalarVec t3 = term(k, i, j);
  for (int t = 0; t < L.dim; ++t) out[t] += t2[t] + t3[t];
  return out;
}

bool all_zero(const ScalarVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

LieSuperalgebraSC lie_of(const ClassicalAlgebra& g) {
  return LieSuperalgebraSC(g.parity, g.bracket_table, g.labels);
}

CoordinateData trivial_centralizer_data(int m, int n, const AssocSuperalgebra& A) {
  LieSuperalgebraSC D = abelian_lie(0);
  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(A.dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(A.dim), ScalarVec{}));
  return CoordinateData(m, n, A, D, {}, form);
}

}  // namespace

// ===== sparse tables =====

TEST_CASE("structure constant tables are validated on construction") {
  std::vector<std::vector<SVec>> t(2, std::vector<SVec>(2));
  t[0][1] = {{0, Scalar(1)}};
  t[1][0] = {{0, Scalar(1)}};  // should be the negative
  CHECK_THROWS_AS(LieSuperalgebraSC({0, 0}, t), invalid_parameter_error);

  t[1][0] = {{0, Scalar(-1)}};
  LieSuperalgebraSC ok({0, 0}, t);
  CHECK(ok.dim == 2);
  CHECK(ok.table_dense(0, 1)[0] == 1);

  CHECK_THROWS_AS(LieSuperalgebraSC({0, 1}, t), invalid_parameter_error);

  std::vector<std::vector<SVec>> bad(2, std::vector<SVec>(1));
  CHECK_THROWS_AS(LieSuperalgebraSC({0, 0}, bad), dimension_mismatch_error);

  LieSuperalgebraSC ab = abelian_lie(3, {0, 0, 1});
  CHECK(ab.dim == 3);
  CHECK(jacobi_check(ab).ok);
  CHECK(center(ab).rows() == 3);
  CHECK_FALSE(is_perfect(ab));
}

TEST_CASE("jacobi check is exhaustive at small dimension and sampled above") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{3, 2});
  JacobiReport jr = jacobi_check(lie_of(g));
  CHECK(jr.ok);
  CHECK(jr.exhaustive);

  LieSuperalgebraSC big = abelian_lie(70);
  JacobiOptions opts;
  opts.samples = 2000;
  JacobiReport br = jacobi_check(big, opts);
  CHECK(br.ok);
  CHECK_FALSE(br.exhaustive);

  // dim 70, [e0,e1] = e0 and [e0,e2] = e1 violate the identity at (0,1,2)
  std::vector<std::vector<SVec>> t(70, std::vector<SVec>(70));
  t[0][1] = {{0, Scalar(1)}};
  t[1][0] = {{0, Scalar(-1)}};
  t[0][2] = {{1, Scalar(1)}};
  t[2][0] = {{1, Scalar(-1)}};
  LieSuperalgebraSC broken(std::vector<int>(70, 0), t);
  JacobiOptions fopts;
  fopts.samples = 10;
  fopts.focus = {0, 1, 2};
  JacobiReport fr = jacobi_check(broken, fopts);
  CHECK_FALSE(fr.ok);
  CHECK_FALSE(all_zero(jacobiator(broken, fr.i, fr.j, fr.k)));
}

TEST_CASE("centers and central quotients") {
  ClassicalAlgebra gl21 = make_classical(ClassicalKind::gl, BlockShape{2, 1});
  LieSuperalgebraSC L = lie_of(gl21);
  Mat c = center(L);
  REQUIRE(c.rows() == 1);
  // the identity is the last basis element
  for (int i = 0; i < L.dim - 1; ++i) CHECK(c.at(0, i) == 0);
  CHECK(c.at(0, L.dim - 1) != 0);
  CHECK_FALSE(is_perfect(L));

  QuotientResult q = central_quotient(L);
  CHECK(q.quotient.dim == 8);
  CHECK(jacobi_check(q.quotient).ok);
  CHECK(is_perfect(q.quotient));
  CHECK(center(q.quotient).rows() == 0);

  ClassicalAlgebra sl22 = make_classical(ClassicalKind::sl, BlockShape{2, 2});
  LieSuperalgebraSC L22 = lie_of(sl22);
  CHECK(center(L22).rows() == 1);
  QuotientResult q22 = central_quotient(L22);
  CHECK(q22.quotient.dim == 14);
  CHECK(jacobi_check(q22.quotient).ok);
  CHECK(is_perfect(q22.quotient));
  CHECK(center(q22.quotient).rows() == 0);
  // the projection intertwines the brackets
  ScalarVec x = L22.basis_vec(0), y = L22.basis_vec(3);
  CHECK(q22.projection.apply(L22.bracket(x, y)) ==
        q22.quotient.bracket(q22.projection.apply(x), q22.projection.apply(y)));
}

// ===== assembly over a coordinate algebra =====

TEST_CASE("assembling over the ground field reproduces the matrix algebra") {
  CoordinateData cd = model_coordinate_data(ground_field(), 1, 0);
  CHECK(cd.D.dim == 0);
  AssembledAlgebra X = assemble_mn(cd);
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  CHECK(X.L.dim == g.dim);
  CHECK(X.L.parity == g.parity);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) CHECK(X.L.table[i][j] == g.bracket_table[i][j]);
  CHECK(X.g_embedding == Mat::identity(g.dim));
}

TEST_CASE("assembling over the dual numbers doubles the matrix block") {
  AssembledAlgebra X = build_model_LA(dual_numbers(), 1, 0);
  CHECK(X.L.dim == 16);
  CHECK(jacobi_check(X.L).ok);
  CHECK(is_perfect(X.L));
  CHECK(center(X.L).rows() == 0);
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  GradedReport rep = check_root_graded(g, X.L, X.g_embedding);
  CHECK(rep.ok());
}

TEST_CASE("assembly flags a nonassociative coordinate algebra") {
  // span{1, u, v} with uu = v, vu = u and all other products zero
  std::vector<std::vector<ScalarVec>> t(3, std::vector<ScalarVec>(3, ScalarVec(3, Scalar(0))));
  for (int j = 0; j < 3; ++j) {
    t[0][j][j] = 1;
    t[j][0][j] = 1;
  }
  t[1][1] = {Scalar(0), Scalar(0), Scalar(1)};
  t[2][1] = {Scalar(0), Scalar(1), Scalar(0)};
  AssocSuperalgebra A({0, 0, 0}, t, {Scalar(1), Scalar(0), Scalar(0)});
  REQUIRE_FALSE(check_associative(A).ok);

  CoordinateData cd = trivial_centralizer_data(1, 0, A);
  AssembledAlgebra X = assemble_mn(cd);
  CHECK(X.L.dim == 24);
  JacobiReport jr = jacobi_check(X.L);
  REQUIRE_FALSE(jr.ok);
  CHECK_FALSE(all_zero(jacobiator(X.L, jr.i, jr.j, jr.k)));

  StructureConditionsReport rep = structure_conditions_check(cd);
  CHECK_FALSE(rep.associative.ok);
  CHECK_FALSE(rep.all_five());
}

TEST_CASE("matrix coordinates assemble with a two dimensional centralizer") {
  CoordinateData cd = model_coordinate_data(matrix_super(1, 1), 1, 0);
  CHECK(cd.D.dim == 2);
  CHECK(cd.D.parity == std::vector<int>{1, 1});
  StructureConditionsReport rep = structure_conditions_check(cd);
  CHECK(rep.all_five());
  CHECK(rep.d_spanned_by_form);

  AssembledAlgebra X = assemble_mn(cd);
  CHECK(X.L.dim == 34);
  CHECK(jacobi_check(X.L).ok);
  CHECK(center(X.L).rows() == 0);
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  CHECK(check_root_graded(g, X.L, X.g_embedding).ok());
}

TEST_CASE("models over supercommutative algebras have no centralizer part") {
  for (const auto& name : {"dual_numbers", "grassmann(2)", "truncated_poly(3)"}) {
    CoordinateData cd = model_coordinate_data(build_named(name), 1, 0);
    CHECK(cd.D.dim == 0);
    CHECK(structure_conditions_check(cd).all_five());
  }
  CoordinateData g2 = model_coordinate_data(grassmann(2), 2, 1);
  CHECK(g2.D.dim == 0);
  AssembledAlgebra X = assemble_mn(g2);
  CHECK(X.L.dim == ((3 + 2) * (3 + 2) - 1) * 4);
  CHECK(jacobi_check(X.L).ok);
}

// ===== equal block sizes =====

TEST_CASE("equal block assembly over the ground field gives the quotient algebra") {
  AssembledAlgebra X = assemble_nn(1, ground_field(), 0);
  ClassicalAlgebra g = make_classical(ClassicalKind::psl, BlockShape{2, 2});
  CHECK(X.L.dim == g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) CHECK(X.L.table[i][j] == g.bracket_table[i][j]);
}

TEST_CASE("equal block assembly over a group algebra") {
  AssembledAlgebra X = assemble_nn(1, group_algebra(2), 0);
  CHECK(X.L.dim == 28);
  CHECK(jacobi_check(X.L).ok);
  CHECK(is_perfect(X.L));
}

TEST_CASE("equal block assembly rejects a bad central extension") {
  // pairing <1|g> = d on the group algebra of Z/2, completed skew-symmetrically
  std::vector<std::vector<ScalarVec>> co(2, std::vector<ScalarVec>(2, ScalarVec(1, Scalar(0))));
  co[0][1][0] = 1;
  co[1][0][0] = -1;
  AssembledAlgebra X = assemble_nn(1, group_algebra(2), 1, co);
  CHECK(X.L.dim == 29);
  JacobiReport jr = jacobi_check(X.L);
  REQUIRE_FALSE(jr.ok);
  CHECK_FALSE(all_zero(jacobiator(X.L, jr.i, jr.j, jr.k)));

  // over grassmann(1) an odd-odd pairing is even and admissible, while an
  // even-odd pairing is rejected
  std::vector<std::vector<ScalarVec>> oo(2, std::vector<ScalarVec>(2, ScalarVec(1, Scalar(0))));
  oo[1][1][0] = 1;
  AssembledAlgebra Y = assemble_nn(1, grassmann(1), 1, oo);
  CHECK(Y.L.dim == 29);
  std::vector<std::vector<ScalarVec>> bad(2, std::vector<ScalarVec>(2, ScalarVec(1, Scalar(0))));
  bad[0][1][0] = 1;
  CHECK_THROWS_AS(assemble_nn(1, grassmann(1), 1, bad), invalid_parameter_error);
}

// ===== matrix models =====

TEST_CASE("derived matrix models over coordinate algebras") {
  AssembledAlgebra X = matrix_sl_A(2, 1, ground_field());
  CHECK(X.L.dim == 8);
  CHECK(is_perfect(X.L));
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  CHECK(check_root_graded(g, X.L, X.g_embedding).ok());

  AssembledAlgebra Xd = matrix_sl_A(2, 1, dual_numbers());
  CHECK(Xd.L.dim == 16);
  CHECK(jacobi_check(Xd.L).ok);
  CHECK(is_perfect(Xd.L));
  CHECK(check_root_graded(g, Xd.L, Xd.g_embedding).ok());

  AssembledAlgebra Xm = matrix_sl_A(2, 1, matrix_super(1, 1));
  CHECK(Xm.L.dim == 35);
  CHECK(jacobi_check(Xm.L).ok);
  Mat c = center(Xm.L);
  CHECK(c.rows() == 1);
  QuotientResult q = central_quotient(Xm.L);
  CHECK(q.quotient.dim == 34);
  CHECK(jacobi_check(q.quotient).ok);
}

// ===== structure conditions =====

TEST_CASE("structure condition report catches scaled pairings") {
  CoordinateData cd = model_coordinate_data(matrix_super(1, 1), 1, 0);
  std::vector<std::vector<ScalarVec>> doubled = cd.form;
  for (auto& row : doubled)
    for (auto& v : row)
      for (auto& x : v) x *= 2;
  CoordinateData mutated(cd.m, cd.n, cd.A, cd.D, cd.action, doubled);
  StructureConditionsReport rep = structure_conditions_check(mutated);
  CHECK(rep.associative.ok);
  CHECK(rep.derivation_rep.ok);
  CHECK_FALSE(rep.pairing_action.ok);
  CHECK(rep.pairing_action.witness.size() == 3);
  CHECK_FALSE(rep.all_five());
}

TEST_CASE("structure conditions mirror the super jacobi identity") {
  // mutated grassmann(2): theta1 theta2 also produces a unit component,
  // which destroys associativity and the assembled bracket alike
  AssocSuperalgebra G = grassmann(2);
  auto t = G.table;
  t[1][2][0] += 1;
  AssocSuperalgebra bad(G.parity, t, G.unit);
  CHECK_FALSE(check_associative(bad).ok);
  CoordinateData cd = model_coordinate_data(bad, 1, 0);
  CHECK_FALSE(structure_conditions_check(cd).all_five());
  AssembledAlgebra X = assemble_mn(cd);
  JacobiReport jr = jacobi_check(X.L);
  REQUIRE_FALSE(jr.ok);
  CHECK_FALSE(all_zero(jacobiator(X.L, jr.i, jr.j, jr.k)));

  // mutated dual numbers: eps^2 = 1 stays associative and the assembly
  // still satisfies the identity
  AssocSuperalgebra D = dual_numbers();
  auto td = D.table;
  td[1][1][0] += 1;
  AssocSuperalgebra good(D.parity, td, D.unit);
  CHECK(check_associative(good).ok);
  CoordinateData cdg = model_coordinate_data(good, 1, 0);
  CHECK(structure_conditions_check(cdg).all_five());
  CHECK(jacobi_check(assemble_mn(cdg).L).ok);
}

// ===== recovering coordinates =====

TEST_CASE("coordinatizing the plain matrix algebra recovers the ground field") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  LieSuperalgebraSC L = lie_of(g);
  CoordinatizeResult res = coordinatize(L, Mat::identity(g.dim), 1, 0);
  CHECK(res.cd.A.dim == 1);
  CHECK(res.cd.D.dim == 0);
  CHECK(structure_conditions_check(res.cd).all_five());
  // unit times unit is the unit
  CHECK(res.cd.A.mul(res.cd.A.unit, res.cd.A.unit) == res.cd.A.unit);
}

TEST_CASE("assembled algebras coordinatize back to their input data") {
  for (const auto& name : {"dual_numbers", "matrix_super(1,1)"}) {
    CoordinateData cd = model_coordinate_data(build_named(name), 1, 0);
    AssembledAlgebra X = assemble_mn(cd);
    CoordinatizeResult res = coordinatize(X.L, X.g_embedding, 1, 0);
    REQUIRE(res.cd.A.dim == cd.A.dim);
    REQUIRE(res.cd.D.dim == cd.D.dim);

    ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
    Mat T(0, cd.A.dim);
    for (int u = 0; u < cd.A.dim; ++u) {
      auto coords = express_in_psi(res.psi, X.block_maps[u], g.parity);
      REQUIRE(coords.has_value());
      T.append_row(*coords);
    }
    CoordinateData back = change_A_basis(res.cd, T);

    Mat drows(0, X.L.dim);
    for (int t = 0; t < cd.D.dim; ++t) {
      ScalarVec row(static_cast<std::size_t>(X.L.dim), Scalar(0));
      row[g.dim * cd.A.dim + t] = 1;
      drows.append_row(row);
    }
    auto S = express_in_rows(res.d_basis, drows);
    REQUIRE(S.has_value());
    back = change_D_basis(back, *S);

    CHECK(coordinate_data_equal(back, cd));
  }
}

TEST_CASE("matrix models coordinatize to their coordinate algebra") {
  AssembledAlgebra X = matrix_sl_A(2, 1, dual_numbers());
  CoordinatizeResult res = coordinatize(X.L, X.g_embedding, 1, 0);
  REQUIRE(res.cd.A.dim == 2);
  CHECK(res.cd.D.dim == 0);

  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  Mat T(0, 2);
  for (int u = 0; u < 2; ++u) {
    auto coords = express_in_psi(res.psi, X.block_maps[u], g.parity);
    REQUIRE(coords.has_value());
    T.append_row(*coords);
  }
  CoordinateData back = change_A_basis(res.cd, T);
  CHECK(coordinate_data_equal(back, model_coordinate_data(dual_numbers(), 1, 0)));
}

TEST_CASE("coordinatization rejects algebras without the expected layering") {
  // semidirect sum with the column module: the extra summand is neither a
  // copy of the matrix algebra nor part of the centralizer
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  const int d = g.dim, N = 3;
  std::vector<std::vector<SVec>> t(d + N, std::vector<SVec>(d + N));
  std::vector<int> par(d + N);
  for (int i = 0; i < d; ++i) par[i] = g.parity[i];
  for (int j = 0; j < N; ++j) par[d + j] = j < 2 ? 0 : 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) t[i][j] = g.bracket_table[i][j];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < N; ++j) {
      SVec act;
      for (int k = 0; k < N; ++k)
        if (g.basis[i].mat.at(k, j) != 0) act.emplace_back(d + k, g.basis[i].mat.at(k, j));
      t[i][d + j] = act;
      const Scalar sg = (par[i] && par[d + j]) ? Scalar(1) : Scalar(-1);
      t[d + j][i] = svec_scaled(act, sg);
    }
  LieSuperalgebraSC L(par, t);
  REQUIRE(jacobi_check(L).ok);
  Mat emb(d, d + N);
  for (int i = 0; i < d; ++i) emb.at(i, i) = 1;
  CHECK_THROWS_AS(coordinatize(L, emb, 1, 0), decomposition_failure_error);
}

// ===== graded structure reports =====

TEST_CASE("graded reports flag foreign weights and ungenerated zero spaces") {
  ClassicalAlgebra small = make_classical(ClassicalKind::sl, BlockShape{2, 1});

  // corner copy inside sl(3,1): row/column 2 of the small algebra maps to 3
  ClassicalAlgebra big = make_classical(ClassicalKind::sl, BlockShape{3, 1});
  auto place = [](int i) { return i < 2 ? i : 3; };
  Mat emb(0, big.dim);
  for (int i = 0; i < small.dim; ++i) {
    Mat im(4, 4);
    const Mat& x = small.basis[i].mat;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (x.at(r, c) != 0) im.at(place(r), place(c)) = x.at(r, c);
    emb.append_row(big.expand(im));
  }
  GradedReport rep = check_root_graded(small, lie_of(big), emb);
  CHECK(rep.embedding_ok);
  CHECK_FALSE(rep.weights_in_roots);
  CHECK_FALSE(rep.offending.empty());
  CHECK_FALSE(rep.ok());

  // adjoint plus an extra commuting line: the zero weight space outgrows
  // the span of the paired products
  const int d = small.dim;
  std::vector<std::vector<SVec>> t(d + 1, std::vector<SVec>(d + 1));
  std::vector<int> par(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    par[i] = small.parity[i];
    for (int j = 0; j < d; ++j) t[i][j] = small.bracket_table[i][j];
  }
  LieSuperalgebraSC padded(par, t);
  Mat pemb(d, d + 1);
  for (int i = 0; i < d; ++i) pemb.at(i, i) = 1;
  GradedReport prep = check_root_graded(small, padded, pemb);
  CHECK(prep.embedding_ok);
  CHECK(prep.weights_in_roots);
  CHECK_FALSE(prep.zero_generated);
  CHECK_FALSE(prep.ok());

  // an embedding that does not intertwine the brackets is rejected outright
  Mat wrong = Mat::identity(d);
  wrong.at(0, 0) = 2;
  GradedReport wrep = check_root_graded(small, lie_of(small), wrong);
  CHECK_FALSE(wrep.embedding_ok);
  CHECK_FALSE(wrep.ok());

  GradedReport good = check_root_graded(small, lie_of(small), Mat::identity(d));
  CHECK(good.ok());
}
