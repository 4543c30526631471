#include <rootgraded/liesuper.hpp>

#include <rootgraded/errors.hpp>

#include <map>
#include <random>

namespace rootgraded {

// ===== construction =====

LieSuperalgebraSC::LieSuperalgebraSC(std::vector<int> parity_bits,
                                     std::vector<std::vector<SVec>> structure,
                                     std::vector<std::string> basis_labels)
    : dim(static_cast<int>(parity_bits.size())),
      parity(std::move(parity_bits)),
      table(std::move(structure)),
      labels(std::move(basis_labels)) {
  if (static_cast<int>(table.size()) != dim)
    throw dimension_mismatch_error("bracket table has wrong size");
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != dim)
      throw dimension_mismatch_error("bracket table has wrong size");
  if (!labels.empty() && static_cast<int>(labels.size()) != dim)
    throw dimension_mismatch_error("label list has wrong size");

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      for (const auto& [k, c] : table[i][j]) {
        if (k < 0 || k >= dim)
          throw dimension_mismatch_error("bracket table index out of range");
        if (c != 0 && ((parity[i] ^ parity[j]) != parity[k]))
          throw invalid_parameter_error("bracket table violates parity at (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
      }
      if (j < i) continue;
      const Scalar sg = (parity[i] && parity[j]) ? Scalar(1) : Scalar(-1);
      if (table[i][j] != svec_scaled(table[j][i], sg))
        throw invalid_parameter_error("bracket table is not super-anticommutative at (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

LieSuperalgebraSC LieSuperalgebraSC::from_dense_table(
    std::vector<int> parity_bits, const std::vector<std::vector<ScalarVec>>& structure,
    std::vector<std::string> basis_labels) {
  std::vector<std::vector<SVec>> t(structure.size());
  for (std::size_t i = 0; i < structure.size(); ++i)
    for (const auto& v : structure[i]) t[i].push_back(svec_from_dense(v));
  return LieSuperalgebraSC(std::move(parity_bits), std::move(t),
                           std::move(basis_labels));
}

ScalarVec LieSuperalgebraSC::bracket(const ScalarVec& x, const ScalarVec& y) const {
  ScalarVec out(static_cast<std::size_t>(dim), Scalar(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Scalar c = x[i] * y[j];
      for (const auto& [k, v] : table[i][j]) out[k] += c * v;
    }
  }
  return out;
}

ScalarVec LieSuperalgebraSC::table_dense(int i, int j) const {
  return svec_to_dense(table[i][j], dim);
}

ScalarVec LieSuperalgebraSC::basis_vec(int i) const {
  ScalarVec e(static_cast<std::size_t>(dim), Scalar(0));
  e[i] = 1;
  return e;
}

Mat LieSuperalgebraSC::ad(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (const auto& [k, v] : table[i][j]) m.at(k, j) = v;
  return m;
}

LieSuperalgebraSC abelian_lie(int dim, std::vector<int> parity) {
  if (parity.empty()) parity.assign(static_cast<std::size_t>(dim), 0);
  std::vector<std::vector<SVec>> t(static_cast<std::size_t>(dim),
                                   std::vector<SVec>(static_cast<std::size_t>(dim)));
  return LieSuperalgebraSC(std::move(parity), std::move(t));
}

// ===== Jacobi identity =====

namespace {

// Shared scratch for fast triple evaluation over the sparse table.
struct JacobiEval {
  const LieSuperalgebraSC& L;
  ScalarVec acc;
  std::vector<int> touched;

  explicit JacobiEval(const LieSuperalgebraSC& l)
      : L(l), acc(static_cast<std::size_t>(l.dim), Scalar(0)) {}

  void add_term(int a, int b, int c, bool negate) {
    // (+-) [[e_a, e_b], e_c]
    for (const auto& [l, coef] : L.table[a][b])
      for (const auto& [k, v] : L.table[l][c]) {
        if (acc[k] == 0) touched.push_back(k);
        if (negate)
          acc[k] -= coef * v;
        else
          acc[k] += coef * v;
      }
  }

  bool zero(int i, int j, int k) {
    const auto& p = L.parity;
    add_term(i, j, k, p[i] && p[k]);
    add_term(j, k, i, p[j] && p[i]);
    add_term(k, i, j, p[k] && p[j]);
    bool ok = true;
    for (int t : touched) {
      if (acc[t] != 0) ok = false;
      acc[t] = 0;
    }
    touched.clear();
    return ok;
  }
};

}  // namespace

JacobiReport jacobi_check(const LieSuperalgebraSC& L, const JacobiOptions& opts) {
  JacobiReport rep;
  if (L.dim == 0) return rep;
  JacobiEval ev(L);

  // Super-anticommutativity (a construction invariant) makes the cyclic sum
  // change only by a sign under permutations, so unordered triples suffice.
  if (L.dim <= opts.max_exhaustive_dim) {
    for (int i = 0; i < L.dim; ++i)
      for (int j = i; j < L.dim; ++j)
        for (int k = j; k < L.dim; ++k) {
          ++rep.checked;
          if (!ev.zero(i, j, k)) return {false, true, rep.checked, i, j, k};
        }
    return rep;
  }

  rep.exhaustive = false;
  if (!opts.focus.empty()) {
    std::vector<char> in_focus(static_cast<std::size_t>(L.dim), 0);
    for (int t : opts.focus)
      if (0 <= t && t < L.dim) in_focus[t] = 1;
    for (int i = 0; i < L.dim; ++i)
      for (int j = i; j < L.dim; ++j)
        for (int k = j; k < L.dim; ++k) {
          if (!in_focus[i] && !in_focus[j] && !in_focus[k]) continue;
          ++rep.checked;
          if (!ev.zero(i, j, k)) return {false, false, rep.checked, i, j, k};
        }
  }
  std::mt19937_64 rng(opts.seed);
  for (long s = 0; s < opts.samples; ++s) {
    int i = static_cast<int>(rng() % static_cast<std::uint64_t>(L.dim));
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(L.dim));
    int k = static_cast<int>(rng() % static_cast<std::uint64_t>(L.dim));
    ++rep.checked;
    if (!ev.zero(i, j, k)) return {false, false, rep.checked, i, j, k};
  }
  return rep;
}

// ===== center, perfectness, quotient =====

Mat center(const LieSuperalgebraSC& L) {
  Mat sys(0, L.dim);
  for (int i = 0; i < L.dim; ++i) {
    // rows of the system [e_i, x] = 0, one per output coordinate k
    std::map<int, ScalarVec> rows;
    for (int j = 0; j < L.dim; ++j)
      for (const auto& [k, c] : L.table[i][j]) {
        auto it = rows.find(k);
        if (it == rows.end())
          it = rows.emplace(k, ScalarVec(static_cast<std::size_t>(L.dim), Scalar(0)))
                   .first;
        it->second[j] = c;
      }
    for (auto& [k, row] : rows) sys.append_row(row);
  }
  Mat out(0, L.dim);
  for (const auto& v : kernel_basis(sys)) out.append_row(v);
  return out;
}

bool is_perfect(const LieSuperalgebraSC& L) {
  Mat span(0, L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = i; j < L.dim; ++j)
      if (!L.table[i][j].empty()) span.append_row(L.table_dense(i, j));
  return rank(span) == L.dim;
}

QuotientResult central_quotient(const LieSuperalgebraSC& L) {
  RrefResult z = rref(center(L));
  const int zdim = static_cast<int>(z.pivots.size());
  std::vector<char> is_pivot(static_cast<std::size_t>(L.dim), 0);
  for (int p : z.pivots) is_pivot[p] = 1;
  std::vector<int> comp;
  for (int j = 0; j < L.dim; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  const int q = static_cast<int>(comp.size());

  // pi: clear the pivot coordinates with the echelon rows, keep the rest.
  auto project = [&](ScalarVec x) {
    for (int r = 0; r < zdim; ++r) {
      const Scalar c = x[z.pivots[r]];
      if (c == 0) continue;
      for (int j = 0; j < L.dim; ++j) x[j] -= c * z.reduced.at(r, j);
    }
    ScalarVec out(static_cast<std::size_t>(q), Scalar(0));
    for (int u = 0; u < q; ++u) out[u] = x[comp[u]];
    return out;
  };

  std::vector<int> qpar;
  std::vector<std::string> qlabels;
  for (int u = 0; u < q; ++u) {
    qpar.push_back(L.parity[comp[u]]);
    if (!L.labels.empty()) qlabels.push_back(L.labels[comp[u]]);
  }
  std::vector<std::vector<SVec>> qt(static_cast<std::size_t>(q),
                                    std::vector<SVec>(static_cast<std::size_t>(q)));
  for (int u = 0; u < q; ++u)
    for (int v = 0; v < q; ++v)
      qt[u][v] = svec_from_dense(project(L.table_dense(comp[u], comp[v])));

  Mat proj(q, L.dim);
  for (int j = 0; j < L.dim; ++j) {
    ScalarVec col = project(L.basis_vec(j));
    for (int u = 0; u < q; ++u) proj.at(u, j) = col[u];
  }
  return {LieSuperalgebraSC(std::move(qpar), std::move(qt), std::move(qlabels)),
          std::move(proj)};
}

}  // namespace rootgraded
