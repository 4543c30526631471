#include <rootgraded/suite.hpp>

#include <rootgraded/coordinate.hpp>
#include <rootgraded/errors.hpp>
#include <rootgraded/graded.hpp>
#include <rootgraded/homspace.hpp>
#include <rootgraded/weights.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

namespace rootgraded {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

CheckResult timed(const std::string& name, const std::function<Outcome()>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = Clock::now();
  try {
    Outcome o = body();
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

// dense matrix of the bracket as a map g (x) g -> g
Mat bracket_as_map(const ClassicalAlgebra& g) {
  Mat out(g.dim, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, c] : g.bracket_table[i][j]) out.at(k, i * g.dim + j) = c;
  return out;
}

Mat star_as_map(const ClassicalAlgebra& g) {
  Mat out(g.dim, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j)
      for (const auto& [k, c] : g.star_table[i][j]) out.at(k, i * g.dim + j) = c;
  return out;
}

Mat form_as_map(const ClassicalAlgebra& g) {
  Mat out(1, g.dim * g.dim);
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) out.at(0, i * g.dim + j) = g.form.at(i, j);
  return out;
}

// ===== check 1/2/3: hom spaces of the product and the trace form =====

Outcome check_product_homs_mn() {
  Outcome o;
  std::ostringstream ss;
  for (auto [m, n] : {std::pair{1, 0}, std::pair{2, 0}}) {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{m + 1, n + 1});
    GModule adj = adjoint_module(g);
    GModule tens = tensor_module(adj, adj);
    HomBasis hb = hom_basis(tens, adj);
    const bool dim_ok = hb.total() == 2;
    const bool br_ok = express_map(hb.all(), bracket_as_map(g)).has_value();
    const bool st_ok = express_map(hb.all(), star_as_map(g)).has_value();
    if (!(dim_ok && br_ok && st_ok)) o.pass = false;
    ss << "(" << m << "," << n << "): dim " << hb.total()
       << (br_ok ? ", bracket inside" : ", bracket OUTSIDE")
       << (st_ok ? ", star inside; " : ", star OUTSIDE; ");
  }
  o.detail = ss.str();
  return o;
}

Outcome check_product_homs_nn() {
  Outcome o;
  ClassicalAlgebra g = make_classical(ClassicalKind::psl, BlockShape{2, 2});
  GModule adj = adjoint_module(g);
  HomBasis hb = hom_basis(tensor_module(adj, adj), adj);
  const bool br_ok = express_map(hb.all(), bracket_as_map(g)).has_value();
  o.pass = hb.total() == 1 && br_ok;
  std::ostringstream ss;
  ss << "psl(2,2): dim " << hb.total() << (br_ok ? ", bracket inside" : ", bracket OUTSIDE");
  o.detail = ss.str();
  return o;
}

Outcome check_trace_form_homs() {
  Outcome o;
  std::ostringstream ss;
  for (auto [m, n] : {std::pair{1, 0}, std::pair{2, 1}}) {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{m + 1, n + 1});
    GModule adj = adjoint_module(g);
    HomBasis hb = hom_basis(tensor_module(adj, adj), trivial_module(g));
    const bool pr_ok = express_map(hb.all(), form_as_map(g)).has_value();
    if (hb.total() != 1 || !pr_ok) o.pass = false;
    ss << "(" << m << "," << n << "): dim " << hb.total()
       << (pr_ok ? ", supertrace form inside; " : ", supertrace form OUTSIDE; ");
  }
  o.detail = ss.str();
  return o;
}

// ===== check 4: casimir eigenvalues =====

Outcome check_casimir() {
  Outcome o;
  std::ostringstream ss;
  for (auto [m, n] :
       {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 1}}) {
    ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{m + 1, n + 1});
    Mat c = casimir_matrix(g, adjoint_module(g));
    const bool adj_ok = c == Mat::identity(g.dim).scaled(Scalar(m - n));
    Mat ct = casimir_matrix(g, trivial_module(g));
    const bool triv_ok = ct.is_zero();
    if (!(adj_ok && triv_ok)) o.pass = false;
    ss << "(" << m << "," << n << "): adjoint " << (adj_ok ? "=" : "!=") << " "
       << (m - n) << "*id, trivial " << (triv_ok ? "= 0; " : "!= 0; ");
  }
  ClassicalAlgebra p22 = make_classical(ClassicalKind::psl, BlockShape{2, 2});
  Mat cp = casimir_matrix(p22, adjoint_module(p22));
  const bool psl_ok = cp.is_zero();
  if (!psl_ok) o.pass = false;
  ss << "psl(2,2): adjoint " << (psl_ok ? "= 0" : "!= 0");
  o.detail = ss.str();
  return o;
}

// ===== check 5: structure conditions vs the jacobi identity =====

struct Mutation {
  int base = 0;
  std::string kind;
  int a = 0, b = 0, c = 0;
};

std::optional<CoordinateData> apply_mutation(const CoordinateData& cd, const Mutation& mu) {
  try {
    auto atable = cd.A.table;
    auto dtable =
        std::vector<std::vector<ScalarVec>>(static_cast<std::size_t>(cd.D.dim));
    for (int u = 0; u < cd.D.dim; ++u)
      for (int v = 0; v < cd.D.dim; ++v) dtable[u].push_back(cd.D.table_dense(u, v));
    auto action = cd.action;
    auto form = cd.form;
    if (mu.kind == "A.table") {
      atable[mu.a][mu.b][mu.c] += 1;
    } else if (mu.kind == "action") {
      action[mu.a].at(mu.b, mu.c) += 1;
    } else if (mu.kind == "form") {
      form[mu.a][mu.b][mu.c] += 1;
      if (mu.a != mu.b) {
        const Scalar sg =
            (cd.A.parity[mu.a] && cd.A.parity[mu.b]) ? Scalar(1) : Scalar(-1);
        for (int t = 0; t < cd.D.dim; ++t) form[mu.b][mu.a][t] = sg * form[mu.a][mu.b][t];
      }
    } else {
      dtable[mu.a][mu.b][mu.c] += 1;
      if (mu.a != mu.b) {
        const Scalar sg =
            (cd.D.parity[mu.a] && cd.D.parity[mu.b]) ? Scalar(1) : Scalar(-1);
        for (int k = 0; k < cd.D.dim; ++k) dtable[mu.b][mu.a][k] = sg * dtable[mu.a][mu.b][k];
      }
    }
    AssocSuperalgebra A(cd.A.parity, atable, cd.A.unit, cd.A.labels);
    LieSuperalgebraSC D = LieSuperalgebraSC::from_dense_table(cd.D.parity, dtable);
    return CoordinateData(cd.m, cd.n, std::move(A), std::move(D), action, form);
  } catch (const error&) {
    return std::nullopt;
  }
}

Outcome check_structure_conditions(std::uint64_t seed) {
  Outcome o;
  std::ostringstream ss;
  std::vector<CoordinateData> bases;
  for (const auto& name :
       {"ground_field", "dual_numbers", "grassmann(2)", "matrix_super(1,1)"})
    bases.push_back(model_coordinate_data(build_named(name), 1, 0));

  int clean = 0;
  for (const auto& cd : bases) {
    const bool jac = jacobi_check(assemble_mn(cd).L).ok;
    const bool cond = structure_conditions_check(cd).all_five();
    if (jac && cond) ++clean;
  }
  if (clean != 4) o.pass = false;
  ss << clean << "/4 plain models pass both sides";

  std::vector<Mutation> pool;
  for (int b = 0; b < 4; ++b) {
    const CoordinateData& cd = bases[static_cast<std::size_t>(b)];
    const int dA = cd.A.dim, dD = cd.D.dim;
    auto consider = [&](const Mutation& mu) {
      if (apply_mutation(cd, mu).has_value()) pool.push_back(mu);
    };
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int k = 0; k < dA; ++k) consider({b, "A.table", i, j, k});
    for (int u = 0; u < dD; ++u)
      for (int r = 0; r < dA; ++r)
        for (int c = 0; c < dA; ++c) consider({b, "action", u, r, c});
    for (int i = 0; i < dA; ++i)
      for (int j = 0; j < dA; ++j)
        for (int t = 0; t < dD; ++t) consider({b, "form", i, j, t});
    for (int u = 0; u < dD; ++u)
      for (int v = 0; v < dD; ++v)
        for (int k = 0; k < dD; ++k) consider({b, "D.table", u, v, k});
  }

  std::mt19937_64 rng(seed);
  int agreements = 0, breaks = 0;
  const int draws = 20;
  for (int d = 0; d < draws; ++d) {
    const Mutation& mu = pool[static_cast<std::size_t>(rng() % pool.size())];
    auto cd = apply_mutation(bases[static_cast<std::size_t>(mu.base)], mu);
    const bool jac = jacobi_check(assemble_mn(*cd).L).ok;
    const bool cond = structure_conditions_check(*cd).all_five();
    if (jac == cond) ++agreements;
    if (!jac) ++breaks;
  }
  if (agreements != draws) o.pass = false;
  ss << "; " << agreements << "/" << draws << " mutation draws agree (" << breaks
     << " break the identity, pool " << pool.size() << ")";
  o.detail = ss.str();
  return o;
}

// ===== check 6: equal block assembly and the cocycle obstruction =====

Outcome check_equal_block_assembly() {
  Outcome o;
  std::ostringstream ss;
  AssembledAlgebra X = assemble_nn(1, group_algebra(2), 0);
  JacobiReport jr = jacobi_check(X.L);
  const bool plain_ok = X.L.dim == 28 && jr.ok;
  if (!plain_ok) o.pass = false;
  ss << "group algebra of Z/2: dim " << X.L.dim << (jr.ok ? ", identity holds" : ", identity FAILS");

  std::vector<std::vector<ScalarVec>> co(2, std::vector<ScalarVec>(2, ScalarVec(1, Scalar(0))));
  co[0][1][0] = 1;
  co[1][0][0] = -1;
  AssembledAlgebra Y = assemble_nn(1, group_algebra(2), 1, co);
  JacobiReport mr = jacobi_check(Y.L);
  if (mr.ok) o.pass = false;
  ss << "; pairing the unit nontrivially: "
     << (mr.ok ? "identity unexpectedly holds"
               : "witness (" + std::to_string(mr.i) + "," + std::to_string(mr.j) + "," +
                     std::to_string(mr.k) + ")");
  o.detail = ss.str();
  return o;
}

// ===== check 7: central isogeny =====

Outcome check_central_isogeny() {
  Outcome o;
  std::ostringstream ss;
  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});

  auto transported = [&](const AssembledAlgebra& X) -> std::optional<CoordinateData> {
    QuotientResult Q = central_quotient(X.L);
    Mat emb_q = X.g_embedding * Q.projection.transposed();
    CoordinatizeResult res = coordinatize(Q.quotient, emb_q, 1, 0);
    Mat T(0, res.cd.A.dim);
    for (const Mat& block : X.block_maps) {
      auto coords = express_in_psi(res.psi, Q.projection * block, g.parity);
      if (!coords) return std::nullopt;
      T.append_row(*coords);
    }
    if (T.rows() != res.cd.A.dim) return std::nullopt;
    return canonicalize_D_from_form(change_A_basis(res.cd, T));
  };

  for (const auto& name : {"dual_numbers", "matrix_super(1,1)"}) {
    AssocSuperalgebra A = build_named(name);
    AssembledAlgebra Xm = matrix_sl_A(2, 1, A);
    AssembledAlgebra Xl = build_model_LA(A, 1, 0);
    QuotientResult Qm = central_quotient(Xm.L);
    QuotientResult Ql = central_quotient(Xl.L);
    const bool dims = Qm.quotient.dim == Ql.quotient.dim;
    auto cm = transported(Xm);
    auto cl = transported(Xl);
    const bool match = cm && cl && coordinate_data_equal(*cm, *cl);
    if (!(dims && match)) o.pass = false;
    ss << name << ": quotients " << Qm.quotient.dim << "/" << Ql.quotient.dim
       << (match ? ", same coordinates; " : ", coordinates DIFFER; ");
  }
  o.detail = ss.str();
  return o;
}

// ===== check 8: invariant complements =====

Outcome check_invariant_complements() {
  Outcome o;
  std::ostringstream ss;

  ClassicalAlgebra psl = make_classical(ClassicalKind::psl, BlockShape{2, 2});
  ClassicalAlgebra sl = make_classical(ClassicalKind::sl, BlockShape{2, 2});
  std::vector<Mat> actions;
  for (int i = 0; i < psl.dim; ++i) {
    SVec rep = svec_from_dense(sl.expand(psl.basis[i].mat));
    Mat a(sl.dim, sl.dim);
    for (int j = 0; j < sl.dim; ++j) {
      SVec col = sl.bracket_coords(rep, {{j, Scalar(1)}});
      for (const auto& [k, c] : col) a.at(k, j) = c;
    }
    actions.push_back(std::move(a));
  }
  GModule big = make_gmodule(psl, sl.parity, actions, sl.labels);
  Mat center_line = Mat::from_rows({sl.expand(Mat::identity(4))});
  auto none = invariant_complement(big, center_line);
  const bool absent = !none.has_value();
  if (!absent) o.pass = false;
  ss << "center of sl(2,2) over psl(2,2): "
     << (absent ? "no invariant complement" : "unexpected complement");

  ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{2, 1});
  GModule adj = adjoint_module(g);
  std::vector<Mat> acts;
  for (int i = 0; i < g.dim; ++i) {
    Mat a(g.dim + 1, g.dim + 1);
    for (int r = 0; r < g.dim; ++r)
      for (int c = 0; c < g.dim; ++c) a.at(r, c) = adj.actions[i].at(r, c);
    acts.push_back(std::move(a));
  }
  std::vector<int> par = g.parity;
  par.push_back(0);
  GModule sum = make_gmodule(g, par, acts);
  ScalarVec line(static_cast<std::size_t>(g.dim + 1), Scalar(0));
  line[g.dim] = 1;
  auto comp = invariant_complement(sum, Mat::from_rows({line}));
  bool present = comp.has_value() && comp->rows() == g.dim;
  if (present) {
    Mat stack = vstack(*comp, Mat::from_rows({line}));
    present = rank(stack) == g.dim + 1;
  }
  if (!present) o.pass = false;
  ss << "; adjoint (+) trivial over sl(2,1): "
     << (present ? "complement found" : "complement MISSING");
  o.detail = ss.str();
  return o;
}

// ===== check 9: root data and the graded structure =====

Outcome check_root_data() {
  Outcome o;
  std::ostringstream ss;
  for (auto [p, q] : {std::pair{2, 1}, std::pair{3, 2}}) {
    RootSystem rs = root_system(BlockShape{p, q});
    const int want_even = p * (p - 1) + q * (q - 1);
    const int want_odd = 2 * p * q;
    bool ok = static_cast<int>(rs.even_roots.size()) == want_even &&
              static_cast<int>(rs.odd_roots.size()) == want_odd;

    ClassicalAlgebra g = make_classical(ClassicalKind::sl, BlockShape{p, q});
    auto blocks = weight_decompose(adjoint_module(g));
    int root_spaces = 0, zero_dim = 0;
    bool one_dim = true;
    for (const auto& [w, basis] : blocks) {
      if (w.is_zero()) {
        zero_dim = basis.rows();
      } else {
        ++root_spaces;
        if (basis.rows() != 1) one_dim = false;
      }
    }
    ok = ok && one_dim && root_spaces == want_even + want_odd && zero_dim == p + q - 1;
    if (!ok) o.pass = false;
    ss << "(" << p << "," << q << "): " << rs.even_roots.size() << " even, "
       << rs.odd_roots.size() << " odd, zero space " << zero_dim << "; ";
  }

  ClassicalAlgebra g32 = make_classical(ClassicalKind::sl, BlockShape{3, 2});
  AssembledAlgebra X = matrix_sl_A(3, 2, dual_numbers());
  GradedReport rep = check_root_graded(g32, X.L, X.g_embedding);
  if (!rep.ok()) o.pass = false;
  ss << "matrix model over the dual numbers: "
     << (rep.ok() ? "graded structure verified" : "graded structure FAILS");
  o.detail = ss.str();
  return o;
}

// ===== check 10: dominant weight closure =====

Outcome check_weight_closure() {
  Outcome o;
  BlockShape sh{2, 1};
  Weight odd{{1, 0}, {-1}};
  Weight twice{{2, -2}, {0}};
  const bool first = kac_weight_closure(sh, odd);
  const bool second = kac_weight_closure(sh, twice);
  o.pass = first && !second;
  std::ostringstream ss;
  ss << "eps1-del1: " << (first ? "closes" : "DOES NOT close") << "; 2(eps1-eps2): "
     << (second ? "unexpectedly closes" : "does not close");
  o.detail = ss.str();
  return o;
}

}  // namespace

std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(timed("product hom spaces, distinct blocks", check_product_homs_mn));
  out.push_back(timed("product hom space, equal blocks", check_product_homs_nn));
  out.push_back(timed("trace form hom spaces", check_trace_form_homs));
  out.push_back(timed("casimir eigenvalues", check_casimir));
  out.push_back(timed("structure conditions match the jacobi identity",
                      [seed] { return check_structure_conditions(seed); }));
  out.push_back(timed("equal block assembly and cocycle obstruction",
                      check_equal_block_assembly));
  out.push_back(timed("central isogeny transport", check_central_isogeny));
  out.push_back(timed("invariant complements", check_invariant_complements));
  out.push_back(timed("root data and graded structure", check_root_data));
  out.push_back(timed("dominant weight closure", check_weight_closure));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace rootgraded
