#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rootgraded/errors.hpp>
#include <rootgraded/homspace.hpp>

using namespace rootgraded;

namespace {

// [.,.] as a linear map g(x)g -> g
Mat bracket_map(const ClassicalAlgebra& g) {
  Mat m(g.dim, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, c] : g.bracket_table[i][j]) m.at(k, i * g.dim + j) = c;
  return m;
}

Mat star_map(const ClassicalAlgebra& g) {
  Mat m(g.dim, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, c] : g.star_table[i][j]) m.at(k, i * g.dim + j) = c;
  return m;
}

// str(xy) as a linear map g(x)g -> F
Mat form_map(const ClassicalAlgebra& g) {
  Mat m(1, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) m.at(0, i * g.dim + j) = g.form.at(i, j);
  return m;
}

// Column index of the only nonzero entry in the given row, or -1.
int single_nonzero_col(const Mat& m, int r) {
  int idx = -1;
  for (int j = 0; j < m.cols(); ++j) {
    if (m.at(r, j) == 0) continue;
    if (idx != -1) return -1;
    idx = j;
  }
  return idx;
}

Mat combine(const std::vector<Mat>& maps, const ScalarVec& coords) {
  Mat out(maps[0].rows(), maps[0].cols());
  for (std::size_t k = 0; k < maps.size(); ++k) out = out + maps[k].scaled(coords[k]);
  return out;
}

GModule direct_sum_with_trivial(const ClassicalAlgebra& g, const GModule& V) {
  std::vector<int> parity = V.parity;
  parity.push_back(0);
  std::vector<Mat> actions;
  for (const Mat& a : V.actions) {
    Mat b(V.dim + 1, V.dim + 1);
    for (int r = 0; r < V.dim; ++r)
      for (int c = 0; c < V.dim; ++c) b.at(r, c) = a.at(r, c);
    actions.push_back(std::move(b));
  }
  return make_gmodule(g, std::move(parity), std::move(actions));
}

// sl(2,2) with psl(2,2) acting through the coset representatives
GModule sl22_over_psl22(const ClassicalAlgebra& psl, const ClassicalAlgebra& sl) {
  std::vector<Mat> actions;
  for (int i = 0; i < psl.dim; ++i) {
    Mat a(sl.dim, sl.dim);
    for (int j = 0; j < sl.dim; ++j) {
      ScalarVec co = sl.expand(bracket(psl.basis[i], sl.basis[j]).mat);
      for (int k = 0; k < sl.dim; ++k) a.at(k, j) = co[k];
    }
    actions.push_back(std::move(a));
  }
  return make_gmodule(psl, sl.parity, std::move(actions));
}

}  // namespace

TEST_CASE("maps g(x)g -> g for sl(2|1): bracket and star span a 2-dim space") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule ad = adjoint_module(g);
  GModule V = tensor_module(ad, ad);
  HomBasis hb = hom_basis(V, ad);
  CHECK(hb.even.size() == 2);
  CHECK(hb.odd.size() == 0);

  Mat br = bracket_map(g);
  Mat st = star_map(g);
  auto cbr = express_map(hb.even, br);
  auto cst = express_map(hb.even, st);
  REQUIRE(cbr.has_value());
  REQUIRE(cst.has_value());
  CHECK(combine(hb.even, *cbr) == br);
  CHECK(combine(hb.even, *cst) == st);
  // bracket and star are independent, so they also span the space
  auto flat = [](const Mat& m) {
    ScalarVec v;
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  };
  CHECK(rank(Mat::from_rows({flat(br), flat(st)})) == 2);
}

TEST_CASE("maps g(x)g -> F are multiples of the supertrace form") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule ad = adjoint_module(g);
  GModule V = tensor_module(ad, ad);
  GModule F = trivial_module(g);
  HomBasis hb = hom_basis(V, F);
  CHECK(hb.even.size() == 1);
  CHECK(hb.odd.size() == 0);
  auto c = express_map(hb.even, form_map(g));
  REQUIRE(c.has_value());
  CHECK((*c)[0] != 0);
}

TEST_CASE("odd maps appear against a parity-shifted target") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule ad = adjoint_module(g);
  GModule V = tensor_module(ad, ad);
  GModule piF = make_gmodule(g, {1}, std::vector<Mat>(g.dim, Mat(1, 1)));
  HomBasis hb = hom_basis(V, piF);
  CHECK(hb.even.size() == 0);
  REQUIRE(hb.odd.size() == 1);
  // as a raw matrix the odd map is still a multiple of the supertrace form
  auto c = express_map(hb.odd, form_map(g));
  REQUIRE(c.has_value());
  CHECK((*c)[0] != 0);
}

TEST_CASE("Casimir scalars on small adjoints") {
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
    Mat C = casimir_matrix(g, adjoint_module(g));
    CHECK(C == Mat::identity(g.dim));  // m - n = 1
  }
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, {3, 1});
    Mat C = casimir_matrix(g, adjoint_module(g));
    CHECK(C == Mat::identity(g.dim).scaled(Scalar(2)));  // m - n = 2
  }
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
    Mat C = casimir_matrix(g, trivial_module(g));
    CHECK(C.is_zero());
  }
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::psl, {2, 2});
    Mat C = casimir_matrix(g, adjoint_module(g));
    CHECK(C.is_zero());
  }
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::gl, {1, 1});
    CHECK_THROWS_AS(casimir_matrix(g, adjoint_module(g)), degenerate_form_error);
  }
}

TEST_CASE("Casimir commutes with the action on a tensor square") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule V = tensor_module(adjoint_module(g), adjoint_module(g));
  Mat C = casimir_matrix(g, V);
  for (int i = 0; i < g.dim; ++i) CHECK(C * V.actions[i] == V.actions[i] * C);
}

TEST_CASE("Casimir kernel of the tensor square of sl(2|1)") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule V = tensor_module(adjoint_module(g), adjoint_module(g));
  Mat C = casimir_matrix(g, V);
  auto ker = kernel_basis(C);
  CHECK(ker.size() == 7);
  CHECK(rank(C) == 57);
  int odd = 0;
  for (const ScalarVec& v : ker)
    for (int j = 0; j < V.dim; ++j)
      if (v[j] != 0) {
        odd += V.parity[j];
        break;
      }
  CHECK(odd == 4);
  // C has a nilpotent block here (ker C^2 is strictly larger), so kernel and
  // image overlap and the direct-sum split must be refused
  CHECK(kernel_basis(C * C).size() == 8);
  CHECK_THROWS_AS(casimir_split(V), decomposition_failure_error);
}

TEST_CASE("Casimir split on a sum of adjoint and trivial") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule V = direct_sum_with_trivial(g, adjoint_module(g));
  CasimirSplit sp = casimir_split(V);
  REQUIRE(sp.kernel_basis.rows() == 1);
  REQUIRE(sp.image_basis.rows() == g.dim);
  CHECK(single_nonzero_col(sp.kernel_basis, 0) == g.dim);
  for (int r = 0; r < sp.image_basis.rows(); ++r)
    CHECK(sp.image_basis.at(r, g.dim) == 0);
  CHECK(sp.kernel_module.dim == 1);
  CHECK(sp.image_module.dim == g.dim);
  for (const Mat& a : sp.kernel_module.actions) CHECK(a.is_zero());
}

TEST_CASE("Casimir split degenerate directions") {
  {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, {3, 2});
    CasimirSplit a = casimir_split(adjoint_module(g));
    CHECK(a.kernel_basis.rows() == 0);
    CHECK(a.image_basis.rows() == g.dim);
    CHECK(a.kernel_module.dim == 0);
  }
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  CasimirSplit t = casimir_split(trivial_module(g));
  CHECK(t.kernel_basis.rows() == 1);
  CHECK(t.image_basis.rows() == 0);
}

TEST_CASE("invariant complement of the center of gl(2,1)") {
  ClassicalAlgebra g = make_classical(ClassicalKind::gl, {2, 1});
  GModule ad = adjoint_module(g);
  Mat u(1, g.dim);
  u.at(0, g.dim - 1) = 1;  // identity matrix coordinate
  auto comp = invariant_complement(ad, u);
  REQUIRE(comp.has_value());
  CHECK(comp->rows() == g.dim - 1);
  // the complement is the supertraceless part
  for (int r = 0; r < comp->rows(); ++r) {
    Scalar str_val(0);
    for (int j = 0; j < g.dim; ++j)
      str_val += comp->at(r, j) * supertrace(g.basis[j]);
    CHECK(str_val == 0);
  }
}

TEST_CASE("invariant complement of the trivial summand in ad(+)F") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule V = direct_sum_with_trivial(g, adjoint_module(g));
  Mat u(1, V.dim);
  u.at(0, V.dim - 1) = 1;
  auto comp = invariant_complement(V, u);
  REQUIRE(comp.has_value());
  CHECK(comp->rows() == V.dim - 1);
  for (int r = 0; r < comp->rows(); ++r) CHECK(comp->at(r, V.dim - 1) == 0);
}

TEST_CASE("no invariant complement of the center inside sl(2,2)") {
  ClassicalAlgebra psl = make_classical(ClassicalKind::psl, {2, 2});
  ClassicalAlgebra sl = make_classical(ClassicalKind::sl, {2, 2});
  GModule V = sl22_over_psl22(psl, sl);
  Mat id4 = super_identity({2, 2}).mat;
  Mat u = Mat::from_rows({sl.expand(id4)});
  auto comp = invariant_complement(V, u);
  CHECK_FALSE(comp.has_value());
}

TEST_CASE("invariant complement rejects bad subspaces") {
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, {2, 1});
  GModule ad = adjoint_module(g);
  Mat not_invariant(1, g.dim);
  not_invariant.at(0, g.e_index(0)) = 1;
  CHECK_THROWS_AS(invariant_complement(ad, not_invariant), invalid_parameter_error);

  ClassicalAlgebra ggl = make_classical(ClassicalKind::gl, {2, 1});
  GModule adgl = adjoint_module(ggl);
  Mat dependent(2, ggl.dim);
  dependent.at(0, ggl.dim - 1) = 1;
  dependent.at(1, ggl.dim - 1) = 2;
  CHECK_THROWS_AS(invariant_complement(adgl, dependent), invalid_parameter_error);

  Mat mixed(1, ggl.dim);
  mixed.at(0, ggl.dim - 1) = 1;
  mixed.at(0, ggl.unit_index(0, 2)) = 1;  // odd matrix unit
  CHECK_THROWS_AS(invariant_complement(adgl, mixed), invalid_parameter_error);
}
