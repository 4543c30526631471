#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rootgraded/coordalg.hpp>
#include <rootgraded/errors.hpp>

using namespace rootgraded;

namespace {

ScalarVec zero_vec(int n) { return ScalarVec(static_cast<std::size_t>(n), Scalar(0)); }

// span{1, u, v} with uu = v, uv = 0, vu = u, vv = 0: unital but not associative,
// since (uu)u = vu = u while u(uu) = uv = 0.
AssocSuperalgebra nonassociative_example() {
  std::vector<std::vector<ScalarVec>> t(3, std::vector<ScalarVec>(3, zero_vec(3)));
  for (int i = 0; i < 3; ++i) {
    t[0][i][i] = 1;
    t[i][0][i] = 1;
  }
  t[1][1][2] = 1;
  t[2][1][1] = 1;
  ScalarVec u = zero_vec(3);
  u[0] = 1;
  return AssocSuperalgebra({0, 0, 0}, t, u);
}

}  // namespace

// ===== builders =====

TEST_CASE("ground field and dual numbers") {
  AssocSuperalgebra F = ground_field();
  CHECK(F.dim == 1);
  CHECK(F.parity == std::vector<int>{0});
  CHECK(check_associative(F).ok);
  CHECK(check_supercommutative(F).ok);

  AssocSuperalgebra D = dual_numbers();
  CHECK(D.dim == 2);
  CHECK(D.parity == std::vector<int>({0, 0}));
  // eps^2 = 0
  CHECK(D.mul(D.basis_vec(1), D.basis_vec(1)) == zero_vec(2));
  CHECK(check_associative(D).ok);
  CHECK(check_supercommutative(D).ok);
  CHECK(D.labels[1] == "eps");
}

TEST_CASE("group algebra of a cyclic group") {
  AssocSuperalgebra A = group_algebra(3);
  CHECK(A.dim == 3);
  // g * g^2 = 1
  CHECK(A.mul(A.basis_vec(1), A.basis_vec(2)) == A.unit);
  CHECK(check_associative(A).ok);
  CHECK(check_supercommutative(A).ok);
  CHECK_THROWS_AS(group_algebra(0), invalid_parameter_error);
}

TEST_CASE("grassmann algebras") {
  AssocSuperalgebra G = grassmann(2);
  CHECK(G.dim == 4);
  CHECK(G.parity == std::vector<int>({0, 1, 1, 0}));
  // th1 * th1 = 0
  CHECK(G.mul(G.basis_vec(1), G.basis_vec(1)) == zero_vec(4));
  // th1 * th2 = th1*th2, th2 * th1 = -th1*th2
  ScalarVec p12 = G.mul(G.basis_vec(1), G.basis_vec(2));
  ScalarVec p21 = G.mul(G.basis_vec(2), G.basis_vec(1));
  CHECK(p12[3] == 1);
  CHECK(p21[3] == -1);
  CHECK(check_associative(G).ok);
  CHECK(check_supercommutative(G).ok);
  CHECK(G.labels[3] == "th1*th2");

  AssocSuperalgebra G3 = grassmann(3);
  CHECK(G3.dim == 8);
  CHECK(check_associative(G3).ok);
  CHECK(check_supercommutative(G3).ok);
}

TEST_CASE("matrix superalgebra M(1|1)") {
  AssocSuperalgebra M = matrix_super(1, 1);
  CHECK(M.dim == 4);
  // basis order E(1,1), E(1,2), E(2,1), E(2,2)
  CHECK(M.parity == std::vector<int>({0, 1, 1, 0}));
  CHECK(M.labels[1] == "E(1,2)");
  // E(1,2) E(2,1) = E(1,1)
  CHECK(M.mul(M.basis_vec(1), M.basis_vec(2)) == M.basis_vec(0));
  CHECK(check_associative(M).ok);
  CommutativityReport rep = check_supercommutative(M);
  CHECK_FALSE(rep.ok);
  CHECK(rep.i == 0);
  CHECK(rep.j == 1);
}

TEST_CASE("truncated polynomial algebra") {
  AssocSuperalgebra T = truncated_poly(3);
  CHECK(T.dim == 3);
  // t * t = t^2, t * t^2 = 0
  CHECK(T.mul(T.basis_vec(1), T.basis_vec(1)) == T.basis_vec(2));
  CHECK(T.mul(T.basis_vec(1), T.basis_vec(2)) == zero_vec(3));
  CHECK(check_associative(T).ok);
  CHECK(check_supercommutative(T).ok);
}

TEST_CASE("named algebra lookup") {
  CHECK(build_named("ground_field").dim == 1);
  CHECK(build_named("dual_numbers").dim == 2);
  CHECK(build_named("group_algebra(4)").dim == 4);
  CHECK(build_named("grassmann(2)").dim == 4);
  CHECK(build_named("matrix_super(1,1)").dim == 4);
  CHECK(build_named("truncated_poly(5)").dim == 5);
  CHECK_THROWS_AS(build_named("octonions"), invalid_parameter_error);
  CHECK_THROWS_AS(build_named("grassmann(x)"), invalid_parameter_error);
  CHECK_THROWS_AS(build_named("grassmann(1,2)"), invalid_parameter_error);
  CHECK_THROWS_AS(build_named("matrix_super(1"), invalid_parameter_error);
}

// ===== checks =====

TEST_CASE("associativity failure is witnessed") {
  AssocSuperalgebra A = nonassociative_example();
  AssociativityReport rep = check_associative(A);
  CHECK_FALSE(rep.ok);
  CHECK(rep.i == 1);
  CHECK(rep.j == 1);
  CHECK(rep.k == 1);
}

TEST_CASE("symmetrized and commutator products") {
  AssocSuperalgebra G = grassmann(2);
  ScalarVec th1 = G.basis_vec(1), th2 = G.basis_vec(2);
  // both odd: th1 o th2 = th1 th2 - th2 th1 = 2 th1*th2
  ScalarVec s = G.sym(th1, th2);
  CHECK(s[3] == 2);
  // [th1, th2] = th1 th2 + th2 th1 = 0
  CHECK(G.comm(th1, th2) == zero_vec(4));
  // supercommutative algebra has vanishing commutators throughout
  for (int i = 0; i < G.dim; ++i)
    for (int j = 0; j < G.dim; ++j)
      CHECK(G.comm(G.basis_vec(i), G.basis_vec(j)) == zero_vec(4));

  AssocSuperalgebra M = matrix_super(1, 1);
  // ab = (a o b)/2 + [a,b]/2 for all basis pairs
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j) {
      ScalarVec prod = M.mul(M.basis_vec(i), M.basis_vec(j));
      ScalarVec half = M.sym(M.basis_vec(i), M.basis_vec(j));
      ScalarVec c = M.comm(M.basis_vec(i), M.basis_vec(j));
      for (int k = 0; k < M.dim; ++k) {
        CHECK(prod[k] == (half[k] + c[k]) / 2);
      }
    }
  // unit acts as twice itself under o
  for (int i = 0; i < M.dim; ++i) {
    ScalarVec twice = M.sym(M.unit, M.basis_vec(i));
    for (int k = 0; k < M.dim; ++k) CHECK(twice[k] == 2 * M.basis_vec(i)[k]);
  }
}

TEST_CASE("commutator subspace") {
  CHECK(commutator_subspace(ground_field()).basis.rows() == 0);
  CHECK(commutator_subspace(grassmann(2)).basis.rows() == 0);

  AssocSuperalgebra M = matrix_super(1, 1);
  CommutatorSubspace cs = commutator_subspace(M);
  // [E12, E21] = E11 + E22 (odd pair), [E11, E12] = E12, [E21, E11] = E21
  CHECK(cs.basis.rows() == 3);
  CHECK(cs.ad.size() == 3);
  Mat flat(0, M.dim * M.dim);
  for (const Mat& ad : cs.ad) {
    ScalarVec r;
    for (int i = 0; i < ad.rows(); ++i)
      for (int j = 0; j < ad.cols(); ++j) r.push_back(ad.at(i, j));
    flat.append_row(r);
  }
  // E11 + E22 is central, so only two independent ad maps remain
  CHECK(rank(flat) == 2);
}

TEST_CASE("superderivation check") {
  AssocSuperalgebra M = matrix_super(1, 1);
  // inner derivations ad_x are superderivations
  for (int i = 0; i < M.dim; ++i) {
    Mat ad(M.dim, M.dim);
    for (int j = 0; j < M.dim; ++j) {
      ScalarVec col = M.comm(M.basis_vec(i), M.basis_vec(j));
      for (int k = 0; k < M.dim; ++k) ad.at(k, j) = col[k];
    }
    CHECK(check_superderivation(M, ad));
  }

  // the identity map is not a derivation of the dual numbers (fails on the unit)
  AssocSuperalgebra D = dual_numbers();
  CHECK_FALSE(check_superderivation(D, Mat::identity(2)));

  // d/dth1 on grassmann(2): odd derivation sending th1 -> 1, th1*th2 -> th2
  AssocSuperalgebra G = grassmann(2);
  Mat dth(4, 4);
  dth.at(0, 1) = 1;
  dth.at(2, 3) = 1;
  CHECK(map_parity(G.parity, dth) == 1);
  CHECK(check_superderivation(G, dth));

  // same matrix entries with an even-looking extra entry mixes parity
  Mat bad = dth;
  bad.at(0, 0) = 1;
  CHECK_THROWS_AS(map_parity(G.parity, bad), invalid_parameter_error);
  CHECK(map_parity(G.parity, Mat(4, 4)) == -1);
  CHECK(check_superderivation(G, Mat(4, 4)));
  CHECK_THROWS_AS(check_superderivation(G, Mat(3, 3)), dimension_mismatch_error);
}

// ===== constructor validation =====

TEST_CASE("constructor rejects malformed data") {
  // parity-violating table: odd*odd landing on an odd basis vector
  {
    std::vector<std::vector<ScalarVec>> t(2, std::vector<ScalarVec>(2, zero_vec(2)));
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    t[1][1][1] = 1;
    ScalarVec u = zero_vec(2);
    u[0] = 1;
    CHECK_THROWS_AS(AssocSuperalgebra({0, 1}, t, u), invalid_parameter_error);
  }
  // odd unit
  {
    std::vector<std::vector<ScalarVec>> t(2, std::vector<ScalarVec>(2, zero_vec(2)));
    t[0][0][0] = 1;
    t[0][1][1] = 1;
    t[1][0][1] = 1;
    ScalarVec u = zero_vec(2);
    u[1] = 1;
    CHECK_THROWS_AS(AssocSuperalgebra({0, 1}, t, u), invalid_parameter_error);
  }
  // declared unit is not an identity
  {
    std::vector<std::vector<ScalarVec>> t(2, std::vector<ScalarVec>(2, zero_vec(2)));
    t[0][0][0] = 1;
    ScalarVec u = zero_vec(2);
    u[0] = 1;
    CHECK_THROWS_AS(AssocSuperalgebra({0, 0}, t, u), invalid_parameter_error);
  }
  // table size mismatch
  {
    std::vector<std::vector<ScalarVec>> t(1, std::vector<ScalarVec>(1, zero_vec(1)));
    t[0][0][0] = 1;
    ScalarVec u = zero_vec(2);
    u[0] = 1;
    CHECK_THROWS_AS(AssocSuperalgebra({0, 0}, t, u), dimension_mismatch_error);
  }
}
