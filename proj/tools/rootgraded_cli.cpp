#include <rootgraded/coordinate.hpp>
#include <rootgraded/errors.hpp>
#include <rootgraded/graded.hpp>
#include <rootgraded/homspace.hpp>
#include <rootgraded/serialize.hpp>
#include <rootgraded/suite.hpp>
#include <rootgraded/weights.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

namespace rg = rootgraded;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBadInput = 3;

struct Shape {
  int m = -1, n = -1;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--m", m, "even block size minus one");
    cmd->add_option("--n", n, "odd block size minus one");
    cmd->add_option("--p", p_, "even block size (alternative to --m)");
    cmd->add_option("--q", q_, "odd block size (alternative to --n)");
  }

  void resolve() {
    merge();
    if (m < 0 || n < 0)
      throw CLI::ValidationError("a shape is required: --m/--n or --p/--q");
  }

  // Commands on psl(n+1,n+1) only consume the odd size.
  void resolve_n_only() {
    merge();
    if (n < 0) throw CLI::ValidationError("--n or --q is required");
  }

 private:
  int p_ = -1, q_ = -1;

  void merge() {
    if (p_ >= 0) {
      if (m >= 0) throw CLI::ValidationError("--m and --p are mutually exclusive");
      m = p_ - 1;
    }
    if (q_ >= 0) {
      if (n >= 0) throw CLI::ValidationError("--n and --q are mutually exclusive");
      n = q_ - 1;
    }
  }
};

bool looks_like_file(const std::string& spec) {
  return std::filesystem::exists(spec);
}

// "name:p1,p2" -> "name(p1,p2)" for the builtin catalogue.
std::string builtin_spec_to_name(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return spec;
  return spec.substr(0, colon) + "(" + spec.substr(colon + 1) + ")";
}

// --coord accepts either a builtin spec ("matrix_super:1,1", "dual_numbers")
// or a path to a JSON document.  Errors raised while reading a file map to
// exit 3, unknown builtin names to exit 2.
rg::AssocSuperalgebra load_assoc(const std::string& spec) {
  if (spec.empty()) throw CLI::ValidationError("--coord is required");
  if (looks_like_file(spec)) {
    try {
      return rg::assoc_from_document(rg::read_text_file(spec));
    } catch (const rg::document_error&) {
      throw;
    } catch (const rg::error& e) {
      throw rg::document_error(e.what());
    }
  }
  try {
    return rg::build_named(builtin_spec_to_name(spec));
  } catch (const rg::invalid_parameter_error& e) {
    throw CLI::ValidationError(std::string("bad --coord: ") + e.what());
  }
}

rg::CoordinateData load_coordinate(const std::string& spec, const Shape& sh) {
  if (!spec.empty() && looks_like_file(spec)) {
    std::string text = rg::read_text_file(spec);
    if (rg::document_kind(text) == "coordinate") {
      try {
        return rg::coordinate_from_document(text);
      } catch (const rg::document_error&) {
        throw;
      } catch (const rg::error& e) {
        throw rg::document_error(e.what());
      }
    }
  }
  return rg::model_coordinate_data(load_assoc(spec), sh.m, sh.n);
}

void write_report(const std::string& out, const json& report) {
  if (!out.empty()) rg::write_text_file(out, report.dump(2) + "\n");
}

json check_json(const std::string& name, bool pass, const std::string& detail) {
  json j;
  j["name"] = name;
  j["pass"] = pass;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

json weight_json(const rg::Weight& w) {
  json j;
  j["eps"] = w.eps;
  j["del"] = w.del;
  return j;
}

rg::ClassicalAlgebra shape_algebra(const Shape& sh) {
  const auto kind = sh.m == sh.n ? rg::ClassicalKind::psl : rg::ClassicalKind::sl;
  return rg::make_classical(kind, rg::BlockShape{sh.m + 1, sh.n + 1});
}

// ===== subcommand bodies =====

int run_roots(const Shape& sh, const std::string& out) {
  rg::RootSystem rs = rg::root_system(rg::BlockShape{sh.m + 1, sh.n + 1});
  std::printf("root system of A(%d,%d), shape (%d|%d)\n", sh.m, sh.n, sh.m + 1, sh.n + 1);
  std::printf("even roots: %zu\n", rs.even_roots.size());
  for (const auto& w : rs.even_roots) std::printf("  %s\n", rg::weight_to_string(w).c_str());
  std::printf("odd roots: %zu\n", rs.odd_roots.size());
  for (const auto& w : rs.odd_roots) std::printf("  %s\n", rg::weight_to_string(w).c_str());
  std::printf("simple roots: %zu\n", rs.simple_roots.size());
  for (const auto& w : rs.simple_roots) std::printf("  %s\n", rg::weight_to_string(w).c_str());

  json rep;
  rep["command"] = "roots";
  rep["shape"] = {sh.m + 1, sh.n + 1};
  const std::pair<const char*, const std::vector<rg::Weight>*> groups[] = {
      {"even_roots", &rs.even_roots},
      {"odd_roots", &rs.odd_roots},
      {"simple_roots", &rs.simple_roots}};
  for (auto [key, roots] : groups) {
    rep[key] = json::array();
    for (const auto& w : *roots) rep[key].push_back(weight_json(w));
  }
  write_report(out, rep);
  return kExitPass;
}

int run_cartan(const Shape& sh, const std::string& out) {
  rg::RootSystem rs = rg::root_system(rg::BlockShape{sh.m + 1, sh.n + 1});
  rg::Mat cm = rg::cartan_matrix(rs);
  std::printf("cartan matrix of A(%d,%d):\n", sh.m, sh.n);
  for (int i = 0; i < cm.rows(); ++i) {
    for (int j = 0; j < cm.cols(); ++j)
      std::printf("%4s", rg::scalar_to_string(cm.at(i, j)).c_str());
    std::printf("\n");
  }

  json rep;
  rep["command"] = "cartan";
  rep["shape"] = {sh.m + 1, sh.n + 1};
  json rows = json::array();
  for (int i = 0; i < cm.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < cm.cols(); ++j) row.push_back(rg::scalar_to_string(cm.at(i, j)));
    rows.push_back(row);
  }
  rep["matrix"] = rows;
  write_report(out, rep);
  return kExitPass;
}

int run_homdim(const Shape& sh, const std::string& out) {
  rg::ClassicalAlgebra g = shape_algebra(sh);
  rg::GModule adj = rg::adjoint_module(g);
  rg::GModule tens = rg::tensor_module(adj, adj);
  const int to_g = rg::hom_basis(tens, adj).total();
  const int to_f = rg::hom_basis(tens, rg::trivial_module(g)).total();
  std::printf("g = %s of shape (%d|%d)\n", rg::kind_name(g.kind).c_str(), sh.m + 1,
              sh.n + 1);
  std::printf("dim Hom_g(g⊗g,g) = %d\n", to_g);
  std::printf("dim Hom_g(g⊗g,F) = %d\n", to_f);

  json rep;
  rep["command"] = "homdim";
  rep["shape"] = {sh.m + 1, sh.n + 1};
  rep["hom_to_adjoint"] = to_g;
  rep["hom_to_trivial"] = to_f;
  write_report(out, rep);
  return kExitPass;
}

int run_casimir(const Shape& sh, const std::string& out) {
  rg::ClassicalAlgebra g = shape_algebra(sh);
  const rg::Scalar expect(sh.m - sh.n);
  const bool adj_ok = rg::casimir_matrix(g, rg::adjoint_module(g)) ==
                      rg::Mat::identity(g.dim).scaled(expect);
  const bool triv_ok = rg::casimir_matrix(g, rg::trivial_module(g)).is_zero();
  std::printf("casimir on the adjoint module: %s %s*id\n",
              adj_ok ? "equals" : "differs from", rg::scalar_to_string(expect).c_str());
  std::printf("casimir on the trivial module: %s\n", triv_ok ? "zero" : "nonzero");

  json rep;
  rep["command"] = "casimir";
  rep["shape"] = {sh.m + 1, sh.n + 1};
  rep["checks"] = json::array({
      check_json("adjoint eigenvalue", adj_ok, rg::scalar_to_string(expect) + "*id"),
      check_json("trivial module", triv_ok, "zero"),
  });
  write_report(out, rep);
  return adj_ok && triv_ok ? kExitPass : kExitFailedCheck;
}

struct BuiltModel {
  rg::AssembledAlgebra X;
  rg::ClassicalAlgebra g;
};

BuiltModel build_model(const std::string& model, const std::string& coord, const Shape& sh) {
  if (model == "LA")
    return {rg::build_model_LA(load_assoc(coord), sh.m, sh.n),
            rg::make_classical(rg::ClassicalKind::sl, rg::BlockShape{sh.m + 1, sh.n + 1})};
  if (model == "matrix")
    return {rg::matrix_sl_A(sh.m + 1, sh.n + 1, load_assoc(coord)),
            rg::make_classical(rg::ClassicalKind::sl, rg::BlockShape{sh.m + 1, sh.n + 1})};
  if (model == "nn")
    return {rg::assemble_nn(sh.n, load_assoc(coord), 0),
            rg::make_classical(rg::ClassicalKind::psl, rg::BlockShape{sh.n + 1, sh.n + 1})};
  throw CLI::ValidationError("unknown --model: " + model);
}

int run_verify_jacobi(const std::string& model, const std::string& coord, const Shape& sh,
                      int max_dim, std::uint64_t seed, const std::string& out) {
  rg::LieSuperalgebraSC L = [&]() -> rg::LieSuperalgebraSC {
    if (model == "file") {
      if (coord.empty() || !looks_like_file(coord))
        throw CLI::ValidationError("--model file needs --coord pointing at a document");
      try {
        return rg::lie_from_document(rg::read_text_file(coord));
      } catch (const rg::document_error&) {
        throw;
      } catch (const rg::error& e) {
        throw rg::document_error(e.what());
      }
    }
    return build_model(model, coord, sh).X.L;
  }();

  rg::JacobiOptions opts;
  opts.max_exhaustive_dim = max_dim;
  opts.seed = seed;
  rg::JacobiReport jr = rg::jacobi_check(L, opts);
  std::printf("dim %d, %s evaluation (max-dim %d), %ld triples\n", L.dim,
              jr.exhaustive ? "exhaustive" : "sampled", max_dim, jr.checked);
  if (jr.ok)
    std::printf("jacobi identity: pass\n");
  else
    std::printf("jacobi identity: FAIL at (%d,%d,%d)\n", jr.i, jr.j, jr.k);

  json rep;
  rep["command"] = "verify-jacobi";
  rep["dim"] = L.dim;
  rep["max_dim"] = max_dim;
  rep["exhaustive"] = jr.exhaustive;
  rep["checked"] = jr.checked;
  json chk = check_json("jacobi identity", jr.ok, "");
  if (!jr.ok) chk["witness"] = {jr.i, jr.j, jr.k};
  rep["checks"] = json::array({chk});
  write_report(out, rep);
  return jr.ok ? kExitPass : kExitFailedCheck;
}

int run_check_310(const std::string& coord, const Shape& sh, const std::string& out) {
  rg::CoordinateData cd = load_coordinate(coord, sh);
  rg::StructureConditionsReport rep = rg::structure_conditions_check(cd);
  auto line = [](const char* name, const rg::ConditionReport& c) {
    if (c.ok) {
      std::printf("%-28s pass\n", name);
      return;
    }
    std::printf("%-28s FAIL at (", name);
    for (std::size_t i = 0; i < c.witness.size(); ++i)
      std::printf("%s%d", i ? "," : "", c.witness[i]);
    std::printf(")\n");
  };
  line("associativity", rep.associative);
  line("derivation representation", rep.derivation_rep);
  line("pairing invariance", rep.form_invariant);
  line("cyclic pairing sum", rep.cocycle);
  line("pairing action identity", rep.pairing_action);
  std::printf("%-28s %s\n", "pairing spans centralizer",
              rep.d_spanned_by_form ? "yes" : "no");

  json jr;
  jr["command"] = "check-310";
  auto cj = [](const char* name, const rg::ConditionReport& c) {
    json j = check_json(name, c.ok, "");
    if (!c.ok) j["witness"] = c.witness;
    return j;
  };
  jr["checks"] = json::array({
      cj("associativity", rep.associative),
      cj("derivation representation", rep.derivation_rep),
      cj("pairing invariance", rep.form_invariant),
      cj("cyclic pairing sum", rep.cocycle),
      cj("pairing action identity", rep.pairing_action),
  });
  jr["pairing_spans_centralizer"] = rep.d_spanned_by_form;
  write_report(out, jr);
  return rep.all_five() ? kExitPass : kExitFailedCheck;
}

int run_check_graded(const std::string& model, const std::string& coord, const Shape& sh,
                     const std::string& out) {
  BuiltModel bm = build_model(model, coord, sh);
  rg::GradedReport rep = rg::check_root_graded(bm.g, bm.X.L, bm.X.g_embedding);
  std::printf("embedding intertwines brackets: %s\n", rep.embedding_ok ? "pass" : "FAIL");
  std::printf("weights lie in the root system: %s\n",
              rep.weights_in_roots ? "pass" : "FAIL");
  std::printf("zero space generated by paired root spaces: %s\n",
              rep.zero_generated ? "pass" : "FAIL");
  for (const auto& w : rep.offending)
    std::printf("  offending weight: %s\n", rg::weight_to_string(w).c_str());

  json jr;
  jr["command"] = "check-graded";
  jr["checks"] = json::array({
      check_json("embedding", rep.embedding_ok, ""),
      check_json("weights in roots", rep.weights_in_roots, ""),
      check_json("zero space generated", rep.zero_generated, ""),
  });
  if (!rep.offending.empty()) {
    jr["offending"] = json::array();
    for (const auto& w : rep.offending) jr["offending"].push_back(weight_json(w));
  }
  write_report(out, jr);
  return rep.ok() ? kExitPass : kExitFailedCheck;
}

int run_coordinatize(const std::string& model, const std::string& coord, const Shape& sh,
                     const std::string& out) {
  BuiltModel bm = build_model(model, coord, sh);
  rg::CoordinatizeResult res = rg::coordinatize(bm.X.L, bm.X.g_embedding, sh.m, sh.n);
  int odd = 0;
  for (int p : res.cd.A.parity) odd += p;
  std::printf("recovered coordinate algebra: dim %d (%d even, %d odd)\n", res.cd.A.dim,
              res.cd.A.dim - odd, odd);
  std::printf("recovered centralizer: dim %d\n", res.cd.D.dim);
  if (!out.empty()) rg::write_text_file(out, rg::to_document(res.cd) + "\n");
  return kExitPass;
}

int run_assemble(const std::string& coord, const Shape& sh, const std::string& out) {
  rg::CoordinateData cd = load_coordinate(coord, sh);
  rg::AssembledAlgebra X = rg::assemble_mn(cd);
  int odd = 0;
  for (int p : X.L.parity) odd += p;
  std::printf("assembled algebra: dim %d (%d even, %d odd)\n", X.L.dim, X.L.dim - odd, odd);
  std::printf("matrix block dim %d, coordinate dim %d, centralizer dim %d\n",
              X.g_embedding.rows(), cd.A.dim, cd.D.dim);
  if (!out.empty()) rg::write_text_file(out, rg::to_document(X.L) + "\n");
  return kExitPass;
}

int run_suite(std::uint64_t seed, const std::string& out) {
  auto results = rg::run_acceptance_suite(seed);
  for (const auto& r : results)
    std::printf("[%s] %-45s %6.2fs  %s\n", r.pass ? "pass" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
  const bool ok = rg::all_passed(results);
  std::printf("%s: %zu checks\n", ok ? "PASS" : "FAIL", results.size());

  json rep;
  rep["command"] = "suite";
  rep["seed"] = seed;
  rep["checks"] = json::array();
  for (const auto& r : results) {
    json j = check_json(r.name, r.pass, r.detail);
    j["seconds"] = r.seconds;
    rep["checks"].push_back(j);
  }
  rep["status"] = ok ? "pass" : "fail";
  write_report(out, rep);
  return ok ? kExitPass : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact structure computations for matrix Lie superalgebras over coordinate algebras"};
  app.require_subcommand(1);

  Shape shape;
  std::string coord, model = "LA", out, level = "desk";
  std::uint64_t seed = 0;
  int max_dim = 64;

  auto add_common = [&](CLI::App* cmd, bool needs_coord) {
    shape.add_options(cmd);
    if (needs_coord)
      cmd->add_option("--coord", coord, "builtin spec (name:params) or document path");
    cmd->add_option("--out", out, "write a structured JSON report to this path");
    return cmd;
  };

  auto* roots = add_common(app.add_subcommand("roots", "list the root system"), false);
  auto* cartan = add_common(app.add_subcommand("cartan", "print the cartan matrix"), false);
  auto* homdim = add_common(
      app.add_subcommand("homdim", "dimensions of equivariant hom spaces"), false);
  auto* casimir =
      add_common(app.add_subcommand("casimir", "casimir eigenvalue checks"), false);
  auto* vj = add_common(
      app.add_subcommand("verify-jacobi", "evaluate the super jacobi identity"), true);
  vj->add_option("--model", model, "LA | matrix | nn | file");
  vj->add_option("--seed", seed, "sampling seed above the exhaustive threshold");
  vj->add_option("--max-dim", max_dim, "largest dimension checked exhaustively");
  auto* c310 = add_common(
      app.add_subcommand("check-310", "verify the coordinate structure conditions"), true);
  auto* cgr =
      add_common(app.add_subcommand("check-graded", "verify the graded decomposition"), true);
  cgr->add_option("--model", model, "LA | matrix | nn");
  auto* coo = add_common(
      app.add_subcommand("coordinatize", "recover coordinates from a model"), true);
  coo->add_option("--model", model, "LA | matrix");
  auto* asm_ = add_common(app.add_subcommand("assemble", "assemble a model algebra"), true);
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  suite->add_option("--seed", seed, "seed for the mutation draws");
  suite->add_option("--level", level, "suite level (desk)");
  suite->add_option("--out", out, "write a structured JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(roots)) {
      shape.resolve();
      return run_roots(shape, out);
    }
    if (app.got_subcommand(cartan)) {
      shape.resolve();
      return run_cartan(shape, out);
    }
    if (app.got_subcommand(homdim)) {
      shape.resolve();
      return run_homdim(shape, out);
    }
    if (app.got_subcommand(casimir)) {
      shape.resolve();
      return run_casimir(shape, out);
    }
    if (app.got_subcommand(vj)) {
      if (model == "nn")
        shape.resolve_n_only();
      else if (model != "file")
        shape.resolve();
      return run_verify_jacobi(model, coord, shape, max_dim, seed, out);
    }
    if (app.got_subcommand(c310)) {
      shape.resolve();
      return run_check_310(coord, shape, out);
    }
    if (app.got_subcommand(cgr)) {
      if (model == "nn")
        shape.resolve_n_only();
      else
        shape.resolve();
      return run_check_graded(model, coord, shape, out);
    }
    if (app.got_subcommand(coo)) {
      shape.resolve();
      return run_coordinatize(model, coord, shape, out);
    }
    if (app.got_subcommand(asm_)) {
      shape.resolve();
      return run_assemble(coord, shape, out);
    }
    if (app.got_subcommand(suite)) {
      if (level != "desk") {
        std::fprintf(stderr, "unknown suite level: %s\n", level.c_str());
        return kExitUsage;
      }
      return run_suite(seed, out);
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const rg::document_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitBadInput;
  } catch (const rg::invalid_parameter_error& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const rg::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailedCheck;
  }
  return kExitUsage;
}
