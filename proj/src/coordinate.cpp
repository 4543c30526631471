#include <rootgraded/coordinate.hpp>

#include <rootgraded/errors.hpp>
#include <rootgraded/graded.hpp>
#include <rootgraded/homspace.hpp>

#include <map>
#include <utility>

namespace rootgraded {

namespace {

SVec collect(const std::map<int, Scalar>& acc) {
  SVec out;
  for (const auto& [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

int row_parity(const std::vector<int>& coord_parity, const ScalarVec& row) {
  int p = -1;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    int q = coord_parity[i];
    if (p == -1)
      p = q;
    else if (p != q)
      throw invalid_parameter_error("vector is not parity-homogeneous");
  }
  return p;
}

}  // namespace

// ===== coordinate data =====

CoordinateData::CoordinateData(int m_, int n_, AssocSuperalgebra A_,
                               LieSuperalgebraSC D_, std::vector<Mat> action_,
                               std::vector<std::vector<ScalarVec>> form_)
    : m(m_), n(n_), A(std::move(A_)), D(std::move(D_)), action(std::move(action_)),
      form(std::move(form_)) {
  if (m < 0 || n < 0) throw invalid_parameter_error("shape parameters must be >= 0");
  if (static_cast<int>(action.size()) != D.dim)
    throw dimension_mismatch_error("one action matrix per D basis element required");
  for (int u = 0; u < D.dim; ++u) {
    if (action[u].rows() != A.dim || action[u].cols() != A.dim)
      throw dimension_mismatch_error("action matrix has wrong shape");
    int p = map_parity(A.parity, action[u]);
    if (p != -1 && p != D.parity[u])
      throw invalid_parameter_error("action of D element " + std::to_string(u) +
                                    " does not match its parity");
    for (const Scalar& c : action[u].apply(A.unit))
      if (c != 0)
        throw invalid_parameter_error("action of D element " + std::to_string(u) +
                                      " does not kill the unit");
  }
  if (static_cast<int>(form.size()) != A.dim)
    throw dimension_mismatch_error("form must cover all A basis pairs");
  for (const auto& row : form) {
    if (static_cast<int>(row.size()) != A.dim)
      throw dimension_mismatch_error("form must cover all A basis pairs");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != D.dim)
        throw dimension_mismatch_error("form value has wrong size");
  }
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      for (int t = 0; t < D.dim; ++t)
        if (form[i][j][t] != 0 && D.parity[t] != (A.parity[i] ^ A.parity[j]))
          throw invalid_parameter_error("form is not even at (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
      const Scalar sg = (A.parity[i] && A.parity[j]) ? Scalar(1) : Scalar(-1);
      for (int t = 0; t < D.dim; ++t)
        if (form[i][j][t] != sg * form[j][i][t])
          throw invalid_parameter_error("form is not super skew symmetric at (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        ")");
    }
}

ScalarVec CoordinateData::form_value(const ScalarVec& a, const ScalarVec& b) const {
  ScalarVec out(static_cast<std::size_t>(D.dim), Scalar(0));
  for (int i = 0; i < A.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < A.dim; ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      for (int t = 0; t < D.dim; ++t)
        if (form[i][j][t] != 0) out[t] += c * form[i][j][t];
    }
  }
  return out;
}

Mat CoordinateData::action_of(const ScalarVec& d) const {
  Mat out(A.dim, A.dim);
  for (int u = 0; u < D.dim; ++u) {
    if (d[u] == 0) continue;
    for (int r = 0; r < A.dim; ++r)
      for (int c = 0; c < A.dim; ++c)
        if (action[u].at(r, c) != 0) out.at(r, c) += d[u] * action[u].at(r, c);
  }
  return out;
}

// ===== assembly =====

AssembledAlgebra assemble_mn(const CoordinateData& cd) {
  if (cd.m <= cd.n) throw invalid_parameter_error("assembly requires m > n");
  ClassicalAlgebra g =
      make_classical(ClassicalKind::sl, BlockShape{cd.m + 1, cd.n + 1});
  const int dg = g.dim, dA = cd.A.dim, dD = cd.D.dim;
  const int dstart = dg * dA;
  const int dim = dstart + dD;
  auto gi = [dg](int u, int i) { return u * dg + i; };

  std::vector<int> parity(static_cast<std::size_t>(dim));
  std::vector<std::string> labels(static_cast<std::size_t>(dim));
  for (int u = 0; u < dA; ++u) {
    const std::string la =
        cd.A.labels.empty() ? "a" + std::to_string(u) : cd.A.labels[u];
    for (int i = 0; i < dg; ++i) {
      parity[gi(u, i)] = g.parity[i] ^ cd.A.parity[u];
      labels[gi(u, i)] = g.labels[i] + "@" + la;
    }
  }
  for (int t = 0; t < dD; ++t) {
    parity[dstart + t] = cd.D.parity[t];
    labels[dstart + t] = cd.D.labels.empty() ? "d" + std::to_string(t) : cd.D.labels[t];
  }

  std::vector<std::vector<SVec>> table(static_cast<std::size_t>(dim),
                                       std::vector<SVec>(static_cast<std::size_t>(dim)));
  const Scalar half(1, 2);
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v) {
      ScalarVec sym = cd.A.sym(cd.A.basis_vec(u), cd.A.basis_vec(v));
      ScalarVec comm = cd.A.comm(cd.A.basis_vec(u), cd.A.basis_vec(v));
      const ScalarVec& fo = cd.form[u][v];
      for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j) {
          const Scalar s0 = (cd.A.parity[u] && g.parity[j]) ? Scalar(-1) : Scalar(1);
          std::map<int, Scalar> acc;
          for (const auto& [k, c] : g.bracket_table[i][j])
            for (int w = 0; w < dA; ++w)
              if (sym[w] != 0) acc[gi(w, k)] += s0 * half * c * sym[w];
          for (const auto& [k, c] : g.star_table[i][j])
            for (int w = 0; w < dA; ++w)
              if (comm[w] != 0) acc[gi(w, k)] += s0 * half * c * comm[w];
          const Scalar& str = g.form.at(i, j);
          if (str != 0)
            for (int t = 0; t < dD; ++t)
              if (fo[t] != 0) acc[dstart + t] += s0 * str * fo[t];
          table[gi(u, i)][gi(v, j)] = collect(acc);
        }
    }
  for (int t = 0; t < dD; ++t)
    for (int v = 0; v < dA; ++v) {
      ScalarVec dav = cd.action[t].col(v);
      for (int j = 0; j < dg; ++j) {
        const Scalar s0 = (cd.D.parity[t] && g.parity[j]) ? Scalar(-1) : Scalar(1);
        std::map<int, Scalar> acc;
        for (int w = 0; w < dA; ++w)
          if (dav[w] != 0) acc[gi(w, j)] += s0 * dav[w];
        SVec val = collect(acc);
        table[dstart + t][gi(v, j)] = val;
        const Scalar s1 =
            (parity[dstart + t] && parity[gi(v, j)]) ? Scalar(1) : Scalar(-1);
        table[gi(v, j)][dstart + t] = svec_scaled(val, s1);
      }
    }
  for (int s = 0; s < dD; ++s)
    for (int t = 0; t < dD; ++t) {
      SVec shifted;
      for (const auto& [k, c] : cd.D.table[s][t]) shifted.emplace_back(dstart + k, c);
      table[dstart + s][dstart + t] = shifted;
    }

  Mat emb(dg, dim);
  for (int i = 0; i < dg; ++i)
    for (int u = 0; u < dA; ++u)
      if (cd.A.unit[u] != 0) emb.at(i, gi(u, i)) = cd.A.unit[u];
  std::vector<Mat> blocks;
  for (int u = 0; u < dA; ++u) {
    Mat b(dim, dg);
    for (int i = 0; i < dg; ++i) b.at(gi(u, i), i) = 1;
    blocks.push_back(std::move(b));
  }
  return {LieSuperalgebraSC(std::move(parity), std::move(table), std::move(labels)),
          std::move(emb), std::move(blocks)};
}

AssembledAlgebra assemble_nn(int n, const AssocSuperalgebra& A, int d_dim,
                             const std::vector<std::vector<ScalarVec>>& cocycle) {
  if (n < 1) throw invalid_parameter_error("assemble_nn requires n >= 1");
  if (d_dim < 0) throw invalid_parameter_error("central dimension must be >= 0");
  ClassicalAlgebra g = make_classical(ClassicalKind::psl, BlockShape{n + 1, n + 1});
  const int dg = g.dim, dA = A.dim;
  const int dstart = dg * dA;
  const int dim = dstart + d_dim;
  auto gi = [dg](int u, int i) { return u * dg + i; };

  if (!cocycle.empty()) {
    if (static_cast<int>(cocycle.size()) != dA)
      throw dimension_mismatch_error("cocycle must cover all A basis pairs");
    for (const auto& row : cocycle) {
      if (static_cast<int>(row.size()) != dA)
        throw dimension_mismatch_error("cocycle must cover all A basis pairs");
      for (const auto& v : row)
        if (static_cast<int>(v.size()) != d_dim)
          throw dimension_mismatch_error("cocycle value has wrong size");
    }
    for (int u = 0; u < dA; ++u)
      for (int v = 0; v < dA; ++v)
        for (int t = 0; t < d_dim; ++t)
          if (cocycle[u][v][t] != 0 && (A.parity[u] ^ A.parity[v]) != 0)
            throw invalid_parameter_error("cocycle is not even at (" +
                                          std::to_string(u) + "," + std::to_string(v) +
                                          ")");
  }

  std::vector<int> parity(static_cast<std::size_t>(dim));
  std::vector<std::string> labels(static_cast<std::size_t>(dim));
  for (int u = 0; u < dA; ++u) {
    const std::string la = A.labels.empty() ? "a" + std::to_string(u) : A.labels[u];
    for (int i = 0; i < dg; ++i) {
      parity[gi(u, i)] = g.parity[i] ^ A.parity[u];
      labels[gi(u, i)] = g.labels[i] + "@" + la;
    }
  }
  for (int t = 0; t < d_dim; ++t) labels[dstart + t] = "d" + std::to_string(t);

  std::vector<std::vector<SVec>> table(static_cast<std::size_t>(dim),
                                       std::vector<SVec>(static_cast<std::size_t>(dim)));
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v) {
      const ScalarVec& prod = A.table[u][v];
      for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j) {
          const Scalar s0 = (A.parity[u] && g.parity[j]) ? Scalar(-1) : Scalar(1);
          std::map<int, Scalar> acc;
          for (const auto& [k, c] : g.bracket_table[i][j])
            for (int w = 0; w < dA; ++w)
              if (prod[w] != 0) acc[gi(w, k)] += s0 * c * prod[w];
          const Scalar& str = g.form.at(i, j);
          if (str != 0 && !cocycle.empty())
            for (int t = 0; t < d_dim; ++t)
              if (cocycle[u][v][t] != 0) acc[dstart + t] += s0 * str * cocycle[u][v][t];
          table[gi(u, i)][gi(v, j)] = collect(acc);
        }
    }

  Mat emb(dg, dim);
  for (int i = 0; i < dg; ++i)
    for (int u = 0; u < dA; ++u)
      if (A.unit[u] != 0) emb.at(i, gi(u, i)) = A.unit[u];
  std::vector<Mat> blocks;
  for (int u = 0; u < dA; ++u) {
    Mat b(dim, dg);
    for (int i = 0; i < dg; ++i) b.at(gi(u, i), i) = 1;
    blocks.push_back(std::move(b));
  }
  return {LieSuperalgebraSC(std::move(parity), std::move(table), std::move(labels)),
          std::move(emb), std::move(blocks)};
}

// ===== model algebra =====

CoordinateData model_coordinate_data(const AssocSuperalgebra& A, int m, int n) {
  if (m <= n || n < 0) throw invalid_parameter_error("model requires m > n >= 0");
  const int dA = A.dim;
  CommutatorSubspace cs = commutator_subspace(A);

  auto flatten = [dA](const Mat& mat) {
    ScalarVec out;
    out.reserve(static_cast<std::size_t>(dA) * dA);
    for (int r = 0; r < dA; ++r)
      for (int c = 0; c < dA; ++c) out.push_back(mat.at(r, c));
    return out;
  };
  auto unflatten = [dA](const ScalarVec& v) {
    Mat mat(dA, dA);
    for (int r = 0; r < dA; ++r)
      for (int c = 0; c < dA; ++c) mat.at(r, c) = v[static_cast<std::size_t>(r) * dA + c];
    return mat;
  };
  std::vector<int> entry_parity(static_cast<std::size_t>(dA) * dA);
  for (int r = 0; r < dA; ++r)
    for (int c = 0; c < dA; ++c)
      entry_parity[static_cast<std::size_t>(r) * dA + c] = A.parity[r] ^ A.parity[c];

  Mat flat(0, dA * dA);
  for (const Mat& ad : cs.ad) flat.append_row(flatten(ad));
  Mat dbasis = row_basis(flat);
  const int dD = dbasis.rows();

  std::vector<Mat> dmats;
  std::vector<int> dpar;
  for (int t = 0; t < dD; ++t) {
    dmats.push_back(unflatten(dbasis.row(t)));
    int p = row_parity(entry_parity, dbasis.row(t));
    dpar.push_back(p == -1 ? 0 : p);
  }

  auto dcoords = [&](const Mat& mat) {
    auto c = express_in_rows(dbasis, Mat::from_rows({flatten(mat)}));
    if (!c) throw decomposition_failure_error("derivation outside ad of [A,A]");
    return c->row(0);
  };

  std::vector<std::vector<SVec>> dtable(static_cast<std::size_t>(dD),
                                        std::vector<SVec>(static_cast<std::size_t>(dD)));
  for (int s = 0; s < dD; ++s)
    for (int t = 0; t < dD; ++t) {
      const Scalar sg = (dpar[s] && dpar[t]) ? Scalar(1) : Scalar(-1);
      Mat br = dmats[s] * dmats[t] + (dmats[t] * dmats[s]).scaled(sg);
      dtable[s][t] = svec_from_dense(dcoords(br));
    }
  LieSuperalgebraSC D(dpar, std::move(dtable));

  const Scalar c(1, m - n);
  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(dA), std::vector<ScalarVec>(static_cast<std::size_t>(dA)));
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j) {
      ScalarVec u = A.comm(A.basis_vec(i), A.basis_vec(j));
      Mat ad(dA, dA);
      for (int k = 0; k < dA; ++k) {
        ScalarVec col = A.comm(u, A.basis_vec(k));
        for (int r = 0; r < dA; ++r) ad.at(r, k) = col[r];
      }
      ScalarVec coords = dcoords(ad.scaled(c));
      form[i][j] = coords;
    }
  return CoordinateData(m, n, A, std::move(D), std::move(dmats), std::move(form));
}

AssembledAlgebra build_model_LA(const AssocSuperalgebra& A, int m, int n) {
  return assemble_mn(model_coordinate_data(A, m, n));
}

// ===== matrix model =====

AssembledAlgebra matrix_sl_A(int p, int q, const AssocSuperalgebra& A) {
  if (p < 1 || q < 1) throw invalid_parameter_error("matrix_sl_A requires p, q >= 1");
  const AssocSuperalgebra M = matrix_super(p, q);
  const int dM = M.dim, dA = A.dim, dF = dM * dA;
  auto fi = [dM](int u, int e) { return u * dM + e; };

  std::vector<int> parityF(static_cast<std::size_t>(dF));
  for (int u = 0; u < dA; ++u)
    for (int e = 0; e < dM; ++e) parityF[fi(u, e)] = M.parity[e] ^ A.parity[u];

  // super-commutator of (x@a)(y@b) = (-1)^{|a||y|} xy @ ab
  auto mul_into = [&](int u, int a, int v, int b, const Scalar& scale,
                      std::map<int, Scalar>& acc) {
    const Scalar s0 = (A.parity[u] && M.parity[b]) ? -scale : scale;
    const ScalarVec& me = M.table[a][b];
    const ScalarVec& ae = A.table[u][v];
    for (int e = 0; e < dM; ++e) {
      if (me[e] == 0) continue;
      for (int w = 0; w < dA; ++w)
        if (ae[w] != 0) acc[fi(w, e)] += s0 * me[e] * ae[w];
    }
  };

  std::vector<std::vector<SVec>> tableF(static_cast<std::size_t>(dF),
                                        std::vector<SVec>(static_cast<std::size_t>(dF)));
  for (int u = 0; u < dA; ++u)
    for (int a = 0; a < dM; ++a)
      for (int v = 0; v < dA; ++v)
        for (int b = 0; b < dM; ++b) {
          std::map<int, Scalar> acc;
          mul_into(u, a, v, b, Scalar(1), acc);
          const Scalar sg =
              (parityF[fi(u, a)] && parityF[fi(v, b)]) ? Scalar(1) : Scalar(-1);
          mul_into(v, b, u, a, sg, acc);
          tableF[fi(u, a)][fi(v, b)] = collect(acc);
        }
  LieSuperalgebraSC F(parityF, std::move(tableF));

  Mat span(0, dF);
  for (int i = 0; i < dF; ++i)
    for (int j = i; j < dF; ++j)
      if (!F.table[i][j].empty()) span.append_row(F.table_dense(i, j));
  Mat B = row_basis(span);
  const int dL = B.rows();

  Mat targets(0, dF);
  for (int r = 0; r < dL; ++r)
    for (int s = 0; s < dL; ++s) targets.append_row(F.bracket(B.row(r), B.row(s)));
  auto C = express_in_rows(B, targets);
  if (!C) throw decomposition_failure_error("derived subalgebra is not closed");

  std::vector<int> parityL;
  for (int r = 0; r < dL; ++r) {
    int pb = row_parity(parityF, B.row(r));
    parityL.push_back(pb == -1 ? 0 : pb);
  }
  std::vector<std::vector<SVec>> tableL(static_cast<std::size_t>(dL),
                                        std::vector<SVec>(static_cast<std::size_t>(dL)));
  for (int r = 0; r < dL; ++r)
    for (int s = 0; s < dL; ++s) tableL[r][s] = svec_from_dense(C->row(r * dL + s));
  LieSuperalgebraSC L(std::move(parityL), std::move(tableL));

  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{p, q});
  const int N = p + q;
  auto f_coords = [&](const Mat& x, int u) {
    ScalarVec out(static_cast<std::size_t>(dF), Scalar(0));
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c)
        if (x.at(r, c) != 0) out[fi(u, r * N + c)] = x.at(r, c);
    return out;
  };
  Mat emb_rows(0, dF);
  for (int i = 0; i < g.dim; ++i) {
    ScalarVec row(static_cast<std::size_t>(dF), Scalar(0));
    for (int u = 0; u < dA; ++u) {
      if (A.unit[u] == 0) continue;
      ScalarVec part = f_coords(g.basis[i].mat, u);
      for (int l = 0; l < dF; ++l) row[l] += A.unit[u] * part[l];
    }
    emb_rows.append_row(row);
  }
  auto emb = express_in_rows(B, emb_rows);
  if (!emb)
    throw decomposition_failure_error("grading copy outside the derived subalgebra");

  std::vector<Mat> blocks;
  for (int u = 0; u < dA; ++u) {
    Mat rows(0, dF);
    for (int i = 0; i < g.dim; ++i) rows.append_row(f_coords(g.basis[i].mat, u));
    auto bc = express_in_rows(B, rows);
    if (!bc)
      throw decomposition_failure_error("coordinate block outside the derived subalgebra");
    blocks.push_back(bc->transposed());
  }
  return {std::move(L), std::move(*emb), std::move(blocks)};
}

// ===== structure condition checks =====

StructureConditionsReport structure_conditions_check(const CoordinateData& cd) {
  if (cd.m <= cd.n) throw invalid_parameter_error("check requires m > n");
  StructureConditionsReport rep;
  const int dA = cd.A.dim, dD = cd.D.dim;

  AssociativityReport ar = check_associative(cd.A);
  if (!ar.ok) rep.associative = {false, {ar.i, ar.j, ar.k}};

  JacobiReport jr = jacobi_check(cd.D);
  if (!jr.ok) {
    rep.derivation_rep = {false, {jr.i, jr.j, jr.k}};
  } else {
    for (int u = 0; u < dD && rep.derivation_rep.ok; ++u)
      if (!check_superderivation(cd.A, cd.action[u])) rep.derivation_rep = {false, {u}};
    for (int u = 0; u < dD && rep.derivation_rep.ok; ++u)
      for (int v = 0; v < dD; ++v) {
        Mat lhs = cd.action_of(cd.D.table_dense(u, v));
        const Scalar sg = (cd.D.parity[u] && cd.D.parity[v]) ? Scalar(1) : Scalar(-1);
        Mat rhs = cd.action[u] * cd.action[v] + (cd.action[v] * cd.action[u]).scaled(sg);
        if (!(lhs == rhs)) {
          rep.derivation_rep = {false, {u, v}};
          break;
        }
      }
  }

  for (int u = 0; u < dD && rep.form_invariant.ok; ++u)
    for (int i = 0; i < dA && rep.form_invariant.ok; ++i)
      for (int j = 0; j < dA; ++j) {
        ScalarVec lhs = cd.D.bracket(cd.D.basis_vec(u), cd.form[i][j]);
        ScalarVec rhs = cd.form_value(cd.action[u].col(i), cd.A.basis_vec(j));
        const Scalar sg =
            (cd.D.parity[u] && cd.A.parity[i]) ? Scalar(-1) : Scalar(1);
        ScalarVec r2 = cd.form_value(cd.A.basis_vec(i), cd.action[u].col(j));
        bool ok = true;
        for (int t = 0; t < dD; ++t)
          if (lhs[t] != rhs[t] + sg * r2[t]) {
            ok = false;
            break;
          }
        if (!ok) {
          rep.form_invariant = {false, {u, i, j}};
          break;
        }
      }

  for (int i = 0; i < dA && rep.cocycle.ok; ++i)
    for (int j = 0; j < dA && rep.cocycle.ok; ++j)
      for (int k = 0; k < dA; ++k) {
        ScalarVec total(static_cast<std::size_t>(dD), Scalar(0));
        auto add = [&](int a1, int a2, int a3) {
          const Scalar sg =
              (cd.A.parity[a1] && cd.A.parity[a3]) ? Scalar(-1) : Scalar(1);
          ScalarVec v = cd.form_value(cd.A.basis_vec(a1),
                                      cd.A.mul(cd.A.basis_vec(a2), cd.A.basis_vec(a3)));
          for (int t = 0; t < dD; ++t) total[t] += sg * v[t];
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        bool ok = true;
        for (int t = 0; t < dD; ++t)
          if (total[t] != 0) {
            ok = false;
            break;
          }
        if (!ok) {
          rep.cocycle = {false, {i, j, k}};
          break;
        }
      }

  const Scalar c(1, cd.m - cd.n);
  for (int i = 0; i < dA && rep.pairing_action.ok; ++i)
    for (int j = 0; j < dA && rep.pairing_action.ok; ++j) {
      Mat act = cd.action_of(cd.form[i][j]);
      ScalarVec uij = cd.A.comm(cd.A.basis_vec(i), cd.A.basis_vec(j));
      for (int k = 0; k < dA; ++k) {
        ScalarVec lhs = act.col(k);
        ScalarVec rhs = cd.A.comm(uij, cd.A.basis_vec(k));
        bool ok = true;
        for (int w = 0; w < dA; ++w)
          if (lhs[w] != c * rhs[w]) {
            ok = false;
            break;
          }
        if (!ok) {
          rep.pairing_action = {false, {i, j, k}};
          break;
        }
      }
    }

  Mat fr(0, dD);
  for (int i = 0; i < dA; ++i)
    for (int j = 0; j < dA; ++j) fr.append_row(cd.form[i][j]);
  rep.d_spanned_by_form = rank(fr) == dD;
  return rep;
}

// ===== coordinatization =====

CoordinatizeResult coordinatize(const LieSuperalgebraSC& L, const Mat& g_embedding,
                                int m, int n) {
  if (m <= n || n < 0)
    throw invalid_parameter_error("coordinatize requires m > n >= 0");
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{m + 1, n + 1});
  GModule V;
  try {
    V = embedded_module(g, L, g_embedding, true);
  } catch (const invalid_parameter_error& e) {
    throw decomposition_failure_error(std::string("invalid grading embedding: ") +
                                      e.what());
  }

  CasimirSplit split = casimir_split(V);
  for (const Mat& a : split.kernel_module.actions)
    if (!a.is_zero())
      throw decomposition_failure_error("Casimir kernel carries a nontrivial action");
  const Mat& dB = split.kernel_basis;
  const int dD = dB.rows();

  std::vector<int> dpar;
  for (int t = 0; t < dD; ++t) {
    int p = row_parity(L.parity, dB.row(t));
    dpar.push_back(p == -1 ? 0 : p);
  }
  Mat dtargets(0, L.dim);
  for (int s = 0; s < dD; ++s)
    for (int t = 0; t < dD; ++t) dtargets.append_row(L.bracket(dB.row(s), dB.row(t)));
  auto dc = express_in_rows(dB, dtargets);
  if (!dc) throw decomposition_failure_error("centralizer part is not closed");
  std::vector<std::vector<SVec>> dtable(static_cast<std::size_t>(dD),
                                        std::vector<SVec>(static_cast<std::size_t>(dD)));
  for (int s = 0; s < dD; ++s)
    for (int t = 0; t < dD; ++t) dtable[s][t] = svec_from_dense(dc->row(s * dD + t));
  LieSuperalgebraSC D(dpar, std::move(dtable));

  GModule adj = adjoint_module(g);
  HomBasis hb = hom_basis(adj, split.image_module);
  const int dA = hb.total();
  if (dA == 0) throw decomposition_failure_error("no adjoint component found");
  if (dA * g.dim + dD != L.dim)
    throw decomposition_failure_error(
        "adjoint isotypic part and centralizer do not fill the algebra");
  std::vector<int> apar;
  for (std::size_t k = 0; k < hb.even.size(); ++k) apar.push_back(0);
  for (std::size_t k = 0; k < hb.odd.size(); ++k) apar.push_back(1);

  Mat ibT = split.image_basis.transposed();
  std::vector<Mat> psi;
  for (const Mat& ph : hb.all()) psi.push_back(ibT * ph);

  Mat iota = g_embedding.transposed();
  auto unit = express_map(psi, iota);
  if (!unit)
    throw decomposition_failure_error("grading copy is not an adjoint multiplicity");

  const int f = g.unit_index(0, 1);
  const int gp = g.unit_index(1, 0);
  ScalarVec br = svec_to_dense(g.bracket_table[f][gp], g.dim);
  ScalarVec st = svec_to_dense(g.star_table[f][gp], g.dim);

  Mat rows(0, L.dim);
  for (const Mat& ps : psi) rows.append_row(ps.apply(br));
  for (const Mat& ps : psi) rows.append_row(ps.apply(st));
  for (int t = 0; t < dD; ++t) rows.append_row(dB.row(t));
  if (rank(rows) != rows.rows())
    throw decomposition_failure_error("product components are not independent");

  Mat targets(0, L.dim);
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v)
      targets.append_row(L.bracket(psi[u].col(f), psi[v].col(gp)));
  auto C = express_in_rows(rows, targets);
  if (!C)
    throw decomposition_failure_error("products leave the expected components");

  std::vector<std::vector<ScalarVec>> atable(
      static_cast<std::size_t>(dA), std::vector<ScalarVec>(static_cast<std::size_t>(dA)));
  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(dA), std::vector<ScalarVec>(static_cast<std::size_t>(dA)));
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v) {
      ScalarVec prod(static_cast<std::size_t>(dA), Scalar(0));
      ScalarVec fo(static_cast<std::size_t>(dD), Scalar(0));
      const int r = u * dA + v;
      for (int w = 0; w < dA; ++w) prod[w] = C->at(r, w) + C->at(r, dA + w);
      for (int t = 0; t < dD; ++t) fo[t] = C->at(r, 2 * dA + t);
      atable[u][v] = std::move(prod);
      form[u][v] = std::move(fo);
    }

  Mat frows(0, L.dim);
  for (const Mat& ps : psi) frows.append_row(ps.col(f));
  std::vector<Mat> action;
  for (int t = 0; t < dD; ++t) {
    Mat atargets(0, L.dim);
    for (int v = 0; v < dA; ++v)
      atargets.append_row(L.bracket(dB.row(t), psi[v].col(f)));
    auto ac = express_in_rows(frows, atargets);
    if (!ac)
      throw decomposition_failure_error("centralizer action leaves the coordinates");
    action.push_back(ac->transposed());
  }

  std::vector<std::string> alabels;
  for (int u = 0; u < dA; ++u) alabels.push_back("a" + std::to_string(u));
  try {
    AssocSuperalgebra A(apar, std::move(atable), *unit, std::move(alabels));
    CoordinateData cd(m, n, std::move(A), std::move(D), std::move(action),
                      std::move(form));
    return {std::move(cd), std::move(psi), dB};
  } catch (const invalid_parameter_error& e) {
    throw decomposition_failure_error(
        std::string("recovered data violates coordinate axioms: ") + e.what());
  }
}

// ===== basis transports =====

CoordinateData change_A_basis(const CoordinateData& cd, const Mat& rows) {
  const int dA = cd.A.dim;
  if (rows.rows() != dA || rows.cols() != dA)
    throw dimension_mismatch_error("basis change must be square of A's dimension");
  Mat RT = rows.transposed();
  auto RTi = inverse(RT);
  if (!RTi) throw invalid_parameter_error("basis change is singular");

  std::vector<int> par;
  for (int u = 0; u < dA; ++u) {
    int p = row_parity(cd.A.parity, rows.row(u));
    par.push_back(p == -1 ? 0 : p);
  }
  auto newc = [&](const ScalarVec& v) { return RTi->apply(v); };

  std::vector<std::vector<ScalarVec>> table(
      static_cast<std::size_t>(dA), std::vector<ScalarVec>(static_cast<std::size_t>(dA)));
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v)
      table[u][v] = newc(cd.A.mul(rows.row(u), rows.row(v)));
  AssocSuperalgebra A(par, std::move(table), newc(cd.A.unit));

  std::vector<Mat> action;
  for (const Mat& M : cd.action) action.push_back((*RTi * M) * RT);
  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(dA), std::vector<ScalarVec>(static_cast<std::size_t>(dA)));
  for (int u = 0; u < dA; ++u)
    for (int v = 0; v < dA; ++v) form[u][v] = cd.form_value(rows.row(u), rows.row(v));
  return CoordinateData(cd.m, cd.n, std::move(A), cd.D, std::move(action),
                        std::move(form));
}

CoordinateData change_D_basis(const CoordinateData& cd, const Mat& rows) {
  const int dD = cd.D.dim;
  if (rows.rows() != dD || rows.cols() != dD)
    throw dimension_mismatch_error("basis change must be square of D's dimension");
  Mat RT = rows.transposed();
  auto RTi = inverse(RT);
  if (!RTi) throw invalid_parameter_error("basis change is singular");

  std::vector<int> par;
  for (int t = 0; t < dD; ++t) {
    int p = row_parity(cd.D.parity, rows.row(t));
    par.push_back(p == -1 ? 0 : p);
  }
  std::vector<std::vector<SVec>> table(static_cast<std::size_t>(dD),
                                       std::vector<SVec>(static_cast<std::size_t>(dD)));
  for (int s = 0; s < dD; ++s)
    for (int t = 0; t < dD; ++t)
      table[s][t] = svec_from_dense(RTi->apply(cd.D.bracket(rows.row(s), rows.row(t))));
  LieSuperalgebraSC D(par, std::move(table));

  std::vector<Mat> action;
  for (int t = 0; t < dD; ++t) {
    Mat M(cd.A.dim, cd.A.dim);
    for (int u = 0; u < dD; ++u) {
      const Scalar& c = rows.at(t, u);
      if (c == 0) continue;
      for (int r = 0; r < cd.A.dim; ++r)
        for (int cc = 0; cc < cd.A.dim; ++cc)
          if (cd.action[u].at(r, cc) != 0) M.at(r, cc) += c * cd.action[u].at(r, cc);
    }
    action.push_back(std::move(M));
  }
  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(cd.A.dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(cd.A.dim)));
  for (int i = 0; i < cd.A.dim; ++i)
    for (int j = 0; j < cd.A.dim; ++j) form[i][j] = RTi->apply(cd.form[i][j]);
  return CoordinateData(cd.m, cd.n, cd.A, std::move(D), std::move(action),
                        std::move(form));
}

CoordinateData canonicalize_D_from_form(const CoordinateData& cd) {
  // Greedy selection in lexicographic pair order keeps the chosen basis
  // independent of the ambient D frame: whether a value enlarges the span
  // only depends on linear relations among the pairing values themselves.
  Mat sel(0, cd.D.dim);
  for (int i = 0; i < cd.A.dim && sel.rows() < cd.D.dim; ++i)
    for (int j = 0; j < cd.A.dim && sel.rows() < cd.D.dim; ++j) {
      Mat trial = sel;
      trial.append_row(cd.form[i][j]);
      if (rank(trial) > sel.rows()) sel = std::move(trial);
    }
  if (sel.rows() != cd.D.dim)
    throw invalid_parameter_error("form values do not span D");
  return change_D_basis(cd, sel);
}

bool coordinate_data_equal(const CoordinateData& x, const CoordinateData& y) {
  if (x.m != y.m || x.n != y.n) return false;
  if (x.A.dim != y.A.dim || x.A.parity != y.A.parity || x.A.unit != y.A.unit ||
      x.A.table != y.A.table)
    return false;
  if (x.D.dim != y.D.dim || x.D.parity != y.D.parity || x.D.table != y.D.table)
    return false;
  for (int u = 0; u < x.D.dim; ++u)
    if (!(x.action[u] == y.action[u])) return false;
  return x.form == y.form;
}

std::optional<ScalarVec> express_in_psi(const std::vector<Mat>& psi, const Mat& target,
                                        const std::vector<int>& g_parity) {
  if (auto c = express_map(psi, target)) return c;
  Mat tw = target;
  for (int i = 0; i < tw.cols(); ++i) {
    if (!g_parity[i]) continue;
    for (int r = 0; r < tw.rows(); ++r) tw.at(r, i) = -tw.at(r, i);
  }
  return express_map(psi, tw);
}

}  // namespace rootgraded
