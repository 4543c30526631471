#include <rootgraded/graded.hpp>

#include <rootgraded/errors.hpp>

#include <algorithm>
#include <set>

namespace rootgraded {

GModule embedded_module(const ClassicalAlgebra& g, const LieSuperalgebraSC& L,
                        const Mat& g_embedding, bool validate) {
  if (g_embedding.rows() != g.dim || g_embedding.cols() != L.dim)
    throw dimension_mismatch_error("embedding has wrong shape");
  std::vector<Mat> actions;
  actions.reserve(static_cast<std::size_t>(g.dim));
  for (int i = 0; i < g.dim; ++i) {
    Mat a(L.dim, L.dim);
    for (int l = 0; l < L.dim; ++l) {
      const Scalar& c = g_embedding.at(i, l);
      if (c == 0) continue;
      for (int j = 0; j < L.dim; ++j)
        for (const auto& [k, v] : L.table[l][j]) a.at(k, j) += c * v;
    }
    actions.push_back(std::move(a));
  }
  return make_gmodule(g, L.parity, std::move(actions), L.labels, validate);
}

namespace {

bool embedding_valid(const ClassicalAlgebra& g, const LieSuperalgebraSC& L,
                     const Mat& emb) {
  if (emb.rows() != g.dim || emb.cols() != L.dim) return false;
  if (rank(emb) != g.dim) return false;
  for (int i = 0; i < g.dim; ++i)
    for (int l = 0; l < L.dim; ++l)
      if (emb.at(i, l) != 0 && L.parity[l] != g.parity[i]) return false;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) {
      ScalarVec lhs = L.bracket(emb.row(i), emb.row(j));
      for (const auto& [k, c] : g.bracket_table[i][j])
        for (int l = 0; l < L.dim; ++l) lhs[l] -= c * emb.at(k, l);
      for (const auto& s : lhs)
        if (s != 0) return false;
    }
  return true;
}

}  // namespace

GradedReport check_root_graded(const ClassicalAlgebra& g, const LieSuperalgebraSC& L,
                               const Mat& g_embedding) {
  GradedReport rep;
  rep.embedding_ok = embedding_valid(g, L, g_embedding);
  if (!rep.embedding_ok) return rep;

  GModule V = embedded_module(g, L, g_embedding, false);
  auto decomp = weight_decompose(V);

  RootSystem rs = root_system(g.shape);
  std::set<Weight> roots;
  for (const auto& w : rs.even_roots) roots.insert(weight_normal_form(g.shape, w));
  for (const auto& w : rs.odd_roots) roots.insert(weight_normal_form(g.shape, w));

  rep.weights_in_roots = true;
  for (const auto& [w, basis] : decomp) {
    if (w.is_zero() || roots.count(w)) continue;
    rep.weights_in_roots = false;
    rep.offending.push_back(w);
  }

  Mat zero_space(0, L.dim);
  Mat gen(0, L.dim);
  for (const auto& [w, basis] : decomp) {
    if (w.is_zero()) {
      zero_space = basis;
      continue;
    }
    Weight neg = w;
    for (auto& c : neg.eps) c = -c;
    for (auto& c : neg.del) c = -c;
    neg = weight_normal_form(g.shape, neg);
    for (const auto& [w2, basis2] : decomp) {
      if (!(w2 == neg)) continue;
      for (int a = 0; a < basis.rows(); ++a)
        for (int b = 0; b < basis2.rows(); ++b) {
          ScalarVec br = L.bracket(basis.row(a), basis2.row(b));
          bool nz = false;
          for (const auto& s : br)
            if (s != 0) {
              nz = true;
              break;
            }
          if (nz) gen.append_row(br);
        }
    }
  }
  Mat gb = row_basis(gen);
  rep.zero_generated = gb.rows() == zero_space.rows() &&
                       (gb.rows() == 0 || express_in_rows(zero_space, gb).has_value());
  return rep;
}

}  // namespace rootgraded
