#include <rootgraded/gmodule.hpp>

#include <rootgraded/errors.hpp>

#include <algorithm>
#include <map>

namespace rootgraded {

// ===== Construction =====

std::vector<int> generator_indices(const ClassicalAlgebra& g) {
  std::vector<int> out;
  const int N = g.shape.dim();
  for (int k = 0; k + 1 < N; ++k) {
    out.push_back(g.e_index(k));
    out.push_back(g.f_index(k));
  }
  for (int c = 0; c < g.cartan_count(); ++c) out.push_back(g.cartan_start() + c);
  return out;
}

static void check_action_parity(const GModule& V, int gi) {
  const Mat& a = V.actions[gi];
  int gp = V.g->parity[gi];
  for (int r = 0; r < V.dim; ++r)
    for (int c = 0; c < V.dim; ++c)
      if (a.at(r, c) != 0 && ((V.parity[r] ^ V.parity[c]) != gp))
        throw invalid_parameter_error("action of " + V.g->labels[gi] +
                                      " violates parity at (" + std::to_string(r) +
                                      "," + std::to_string(c) + ")");
}

GModule make_gmodule(const ClassicalAlgebra& g, std::vector<int> parity,
                     std::vector<Mat> actions, std::vector<std::string> labels,
                     bool validate) {
  GModule V;
  V.g = &g;
  V.dim = static_cast<int>(parity.size());
  V.parity = std::move(parity);
  V.actions = std::move(actions);
  V.labels = std::move(labels);
  if (static_cast<int>(V.actions.size()) != g.dim)
    throw dimension_mismatch_error("one action matrix per algebra basis element required");
  for (const Mat& a : V.actions)
    if (a.rows() != V.dim || a.cols() != V.dim)
      throw dimension_mismatch_error("action matrix size mismatch");

  if (validate) {
    for (int i = 0; i < g.dim; ++i) check_action_parity(V, i);
    auto gens = generator_indices(g);
    for (int x : gens)
      for (int y : gens) {
        Mat lhs = module_action(V, g.bracket_table[x][y]);
        Mat prod = V.actions[x] * V.actions[y];
        Mat swapped = V.actions[y] * V.actions[x];
        Scalar sg = (g.parity[x] & g.parity[y]) ? Scalar(1) : Scalar(-1);
        if (!(lhs == prod + swapped.scaled(sg)))
          throw invalid_parameter_error("representation law fails on generators " +
                                        g.labels[x] + ", " + g.labels[y]);
      }
  }
  return V;
}

GModule adjoint_module(const ClassicalAlgebra& g) {
  std::vector<Mat> actions(g.dim, Mat(g.dim, g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, c] : g.bracket_table[i][j]) actions[i].at(k, j) = c;
  return make_gmodule(g, g.parity, std::move(actions), g.labels);
}

GModule trivial_module(const ClassicalAlgebra& g, int dim) {
  if (dim < 0) throw invalid_parameter_error("trivial module dimension must be >= 0");
  std::vector<Mat> actions(g.dim, Mat(dim, dim));
  return make_gmodule(g, std::vector<int>(dim, 0), std::move(actions));
}

GModule tensor_module(const GModule& V, const GModule& W) {
  if (V.g != W.g)
    throw invalid_parameter_error("tensor factors live over different algebras");
  GModule T;
  T.g = V.g;
  T.dim = V.dim * W.dim;
  T.parity.resize(T.dim);
  for (int i = 0; i < V.dim; ++i)
    for (int j = 0; j < W.dim; ++j) T.parity[i * W.dim + j] = V.parity[i] ^ W.parity[j];
  T.actions.reserve(V.g->dim);
  for (int x = 0; x < V.g->dim; ++x) {
    Mat a(T.dim, T.dim);
    const Mat& av = V.actions[x];
    const Mat& aw = W.actions[x];
    for (int i = 0; i < V.dim; ++i)
      for (int j = 0; j < W.dim; ++j) {
        const int col = i * W.dim + j;
        for (int r = 0; r < V.dim; ++r)
          if (av.at(r, i) != 0) a.at(r * W.dim + j, col) += av.at(r, i);
        Scalar sg = (V.g->parity[x] & V.parity[i]) ? Scalar(-1) : Scalar(1);
        for (int s = 0; s < W.dim; ++s)
          if (aw.at(s, j) != 0) a.at(i * W.dim + s, col) += sg * aw.at(s, j);
      }
    T.actions.push_back(std::move(a));
  }
  if (!V.labels.empty() && !W.labels.empty()) {
    T.labels.resize(T.dim);
    for (int i = 0; i < V.dim; ++i)
      for (int j = 0; j < W.dim; ++j)
        T.labels[i * W.dim + j] = V.labels[i] + "(x)" + W.labels[j];
  }
  return T;
}

Mat module_action(const GModule& V, const SVec& x) {
  Mat out(V.dim, V.dim);
  for (const auto& [i, c] : x) out = out + V.actions[i].scaled(c);
  return out;
}

// ===== Weight decomposition =====

namespace {

// Integer eigenvalue candidates for R from the Gershgorin disks.
std::vector<long> integer_candidates(const Mat& R) {
  std::vector<long> out;
  for (int i = 0; i < R.rows(); ++i) {
    Scalar rad = 0;
    for (int j = 0; j < R.cols(); ++j)
      if (j != i) rad += abs(R.at(i, j));
    long lo = scalar_ceil_long(R.at(i, i) - rad);
    long hi = scalar_floor_long(R.at(i, i) + rad);
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Leaf {
  Mat basis;
  ScalarVec values;
};

// Column of the only nonzero entry of row r, or -1 if the row is not a
// (scaled) standard vector.
int row_support(const Mat& B, int r) {
  int idx = -1;
  for (int j = 0; j < B.cols(); ++j) {
    if (B.at(r, j) == 0) continue;
    if (idx != -1) return -1;
    idx = j;
  }
  return idx;
}

bool is_diagonal(const Mat& H) {
  for (int i = 0; i < H.rows(); ++i)
    for (int j = 0; j < H.cols(); ++j)
      if (i != j && H.at(i, j) != 0) return false;
  return true;
}

std::vector<Leaf> joint_eigenspaces(const std::vector<Mat>& family, Mat init) {
  std::vector<Leaf> leaves{{std::move(init), {}}};
  for (const Mat& H : family) {
    const bool diag = is_diagonal(H);
    std::vector<Leaf> next;
    for (Leaf& leaf : leaves) {
      const Mat& B = leaf.basis;
      if (diag) {
        // Read eigenvalues straight off the diagonal when the current basis
        // consists of standard vectors (the common case for tensor bases).
        std::vector<int> supports;
        bool standard = true;
        for (int r = 0; r < B.rows(); ++r) {
          int s = row_support(B, r);
          if (s < 0) {
            standard = false;
            break;
          }
          supports.push_back(s);
        }
        if (standard) {
          std::map<long, std::vector<int>> groups;
          for (int r = 0; r < B.rows(); ++r) {
            const Scalar& v = H.at(supports[r], supports[r]);
            if (!scalar_is_integer(v))
              throw non_semisimple_action_error(
                  "no rational joint eigenbasis with integer eigenvalues");
            groups[scalar_to_long(v)].push_back(r);
          }
          for (auto& [lam, rows] : groups) {
            Leaf child;
            std::vector<ScalarVec> picked;
            for (int r : rows) picked.push_back(B.row(r));
            child.basis = Mat::from_rows(picked);
            child.values = leaf.values;
            child.values.push_back(Scalar(lam));
            next.push_back(std::move(child));
          }
          continue;
        }
      }
      auto R = express_in_rows(B, B * H.transposed());
      if (!R)
        throw non_semisimple_action_error("h-family does not preserve a joint eigenspace");
      int found = 0;
      for (long lam : integer_candidates(*R)) {
        Mat shifted = *R - Mat::identity(R->rows()).scaled(Scalar(lam));
        auto ker = kernel_basis(shifted.transposed());
        if (ker.empty()) continue;
        Mat K = Mat::from_rows(ker);
        Leaf child;
        child.basis = K * B;
        child.values = leaf.values;
        child.values.push_back(Scalar(lam));
        found += K.rows();
        next.push_back(std::move(child));
      }
      if (found != B.rows())
        throw non_semisimple_action_error(
            "no rational joint eigenbasis with integer eigenvalues");
    }
    leaves = std::move(next);
  }
  return leaves;
}

}  // namespace

std::vector<std::pair<Weight, Mat>> weight_decompose(const GModule& V) {
  auto h_idx = V.g->cartan_h_indices();
  std::vector<Mat> family;
  for (int h : h_idx) family.push_back(V.actions[h]);
  auto leaves = joint_eigenspaces(family, Mat::identity(V.dim));
  std::vector<std::pair<Weight, Mat>> out;
  bool psl_mode = V.g->kind == ClassicalKind::psl;
  for (auto& leaf : leaves)
    out.emplace_back(weight_from_h_values(V.g->shape, leaf.values, psl_mode),
                     std::move(leaf.basis));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<WeightBlock> weight_parity_decompose(const GModule& V) {
  auto h_idx = V.g->cartan_h_indices();
  std::vector<Mat> family;
  for (int h : h_idx) family.push_back(V.actions[h]);
  bool psl_mode = V.g->kind == ClassicalKind::psl;
  std::vector<WeightBlock> out;
  for (int par = 0; par <= 1; ++par) {
    std::vector<ScalarVec> rows;
    for (int i = 0; i < V.dim; ++i) {
      if (V.parity[i] != par) continue;
      ScalarVec e(V.dim, Scalar(0));
      e[i] = 1;
      rows.push_back(std::move(e));
    }
    if (rows.empty()) continue;
    for (auto& leaf : joint_eigenspaces(family, Mat::from_rows(rows)))
      out.push_back(WeightBlock{
          weight_from_h_values(V.g->shape, leaf.values, psl_mode), par,
          std::move(leaf.basis)});
  }
  std::sort(out.begin(), out.end(), [](const WeightBlock& a, const WeightBlock& b) {
    if (!(a.weight == b.weight)) return a.weight < b.weight;
    return a.parity < b.parity;
  });
  return out;
}

GModule induced_module(const GModule& V, const Mat& basis_rows) {
  GModule S;
  S.g = V.g;
  S.dim = basis_rows.rows();
  S.parity.resize(S.dim);
  for (int i = 0; i < S.dim; ++i) {
    int par = -1;
    for (int j = 0; j < basis_rows.cols(); ++j) {
      if (basis_rows.at(i, j) == 0) continue;
      if (par == -1) par = V.parity[j];
      else if (par != V.parity[j])
        throw invalid_parameter_error("submodule basis row is not parity-homogeneous");
    }
    S.parity[i] = par == -1 ? 0 : par;
  }
  for (const Mat& a : V.actions) {
    auto R = express_in_rows(basis_rows, basis_rows * a.transposed());
    if (!R)
      throw invalid_parameter_error("span is not invariant under the algebra action");
    S.actions.push_back(R->transposed());
  }
  return S;
}

}  // namespace rootgraded
