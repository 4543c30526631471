#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <rootgraded/coordinate.hpp>
#include <rootgraded/errors.hpp>
#include <rootgraded/graded.hpp>
#include <rootgraded/homspace.hpp>
#include <rootgraded/serialize.hpp>
#include <rootgraded/suite.hpp>
#include <rootgraded/weights.hpp>

#include <string>

namespace py = pybind11;
namespace rg = rootgraded;

namespace {

rg::ClassicalAlgebra shape_algebra(int m, int n) {
  const auto kind = m == n ? rg::ClassicalKind::psl : rg::ClassicalKind::sl;
  return rg::make_classical(kind, rg::BlockShape{m + 1, n + 1});
}

rg::AssembledAlgebra model_from_doc(const std::string& model, const std::string& assoc_doc,
                                    int m, int n) {
  rg::AssocSuperalgebra A = rg::assoc_from_document(assoc_doc);
  if (model == "LA") return rg::build_model_LA(A, m, n);
  if (model == "matrix") return rg::matrix_sl_A(m + 1, n + 1, A);
  if (model == "nn") return rg::assemble_nn(n, A, 0);
  throw rg::invalid_parameter_error("unknown model: " + model);
}

py::dict jacobi_dict(const rg::JacobiReport& jr) {
  py::dict d;
  d["ok"] = jr.ok;
  d["exhaustive"] = jr.exhaustive;
  d["checked"] = jr.checked;
  if (!jr.ok) d["witness"] = py::make_tuple(jr.i, jr.j, jr.k);
  return d;
}

py::dict condition_dict(const rg::ConditionReport& c) {
  py::dict d;
  d["ok"] = c.ok;
  if (!c.ok) d["witness"] = c.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact structure computations for matrix Lie superalgebras over "
      "coordinate superalgebras; structures travel as JSON documents";

  auto base = py::register_exception<rg::error>(m, "Error");
  py::register_exception<rg::document_error>(m, "DocumentError", base);
  py::register_exception<rg::invalid_parameter_error>(m, "InvalidParameterError", base);
  py::register_exception<rg::decomposition_failure_error>(m, "DecompositionFailureError",
                                                          base);

  m.def(
      "builtin_algebra",
      [](const std::string& name) { return rg::to_document(rg::build_named(name)); },
      py::arg("name"),
      "JSON document for a builtin coordinate algebra, e.g. 'dual_numbers', "
      "'grassmann(2)', 'matrix_super(1,1)'");

  m.def(
      "document_kind", [](const std::string& text) { return rg::document_kind(text); },
      py::arg("text"), "kind field of a JSON document: 'assoc', 'lie' or 'coordinate'");

  m.def(
      "root_counts",
      [](int p, int q) {
        rg::RootSystem rs = rg::root_system(rg::BlockShape{p, q});
        return py::make_tuple(rs.even_roots.size(), rs.odd_roots.size());
      },
      py::arg("p"), py::arg("q"), "(even, odd) root counts for shape (p|q)");

  m.def(
      "hom_dimensions",
      [](int m_, int n_) {
        rg::ClassicalAlgebra g = shape_algebra(m_, n_);
        rg::GModule adj = rg::adjoint_module(g);
        rg::GModule tens = rg::tensor_module(adj, adj);
        return py::make_tuple(rg::hom_basis(tens, adj).total(),
                              rg::hom_basis(tens, rg::trivial_module(g)).total());
      },
      py::arg("m"), py::arg("n"),
      "(dim Hom_g(g(x)g, g), dim Hom_g(g(x)g, F)) for the shape-(m+1|n+1) algebra");

  m.def(
      "casimir_adjoint_is_scalar",
      [](int m_, int n_) {
        rg::ClassicalAlgebra g = shape_algebra(m_, n_);
        const rg::Scalar expect(m_ - n_);
        const bool ok = rg::casimir_matrix(g, rg::adjoint_module(g)) ==
                        rg::Mat::identity(g.dim).scaled(expect);
        return py::make_tuple(ok, rg::scalar_to_string(expect));
      },
      py::arg("m"), py::arg("n"),
      "whether the casimir acts as (m-n)*id on the adjoint module, with the eigenvalue");

  m.def(
      "build_model",
      [](const std::string& assoc_doc, int m_, int n_, const std::string& model) {
        return rg::to_document(model_from_doc(model, assoc_doc, m_, n_).L);
      },
      py::arg("assoc_doc"), py::arg("m"), py::arg("n"), py::arg("model") = "LA",
      "lie document of the model algebra over the given coordinate document");

  m.def(
      "model_coordinates",
      [](const std::string& assoc_doc, int m_, int n_) {
        return rg::to_document(
            rg::model_coordinate_data(rg::assoc_from_document(assoc_doc), m_, n_));
      },
      py::arg("assoc_doc"), py::arg("m"), py::arg("n"),
      "coordinate document of the model data (inner derivations, normalized pairing)");

  m.def(
      "assemble",
      [](const std::string& coord_doc) {
        return rg::to_document(rg::assemble_mn(rg::coordinate_from_document(coord_doc)).L);
      },
      py::arg("coord_doc"), "lie document assembled from a coordinate document");

  m.def(
      "verify_jacobi",
      [](const std::string& lie_doc, int max_dim, std::uint64_t seed) {
        rg::JacobiOptions opts;
        opts.max_exhaustive_dim = max_dim;
        opts.seed = seed;
        return jacobi_dict(rg::jacobi_check(rg::lie_from_document(lie_doc), opts));
      },
      py::arg("lie_doc"), py::arg("max_dim") = 64, py::arg("seed") = 0,
      "super jacobi evaluation report for a lie document");

  m.def(
      "check_structure_conditions",
      [](const std::string& coord_doc) {
        rg::StructureConditionsReport rep =
            rg::structure_conditions_check(rg::coordinate_from_document(coord_doc));
        py::dict d;
        d["associative"] = condition_dict(rep.associative);
        d["derivation_rep"] = condition_dict(rep.derivation_rep);
        d["form_invariant"] = condition_dict(rep.form_invariant);
        d["cocycle"] = condition_dict(rep.cocycle);
        d["pairing_action"] = condition_dict(rep.pairing_action);
        d["all_five"] = rep.all_five();
        d["d_spanned_by_form"] = rep.d_spanned_by_form;
        return d;
      },
      py::arg("coord_doc"), "the five structure conditions on a coordinate document");

  m.def(
      "check_root_graded",
      [](const std::string& assoc_doc, int m_, int n_, const std::string& model) {
        rg::AssembledAlgebra X = model_from_doc(model, assoc_doc, m_, n_);
        rg::ClassicalAlgebra g = model == "nn"
                                     ? rg::make_classical(rg::ClassicalKind::psl,
                                                          rg::BlockShape{n_ + 1, n_ + 1})
                                     : rg::make_classical(rg::ClassicalKind::sl,
                                                          rg::BlockShape{m_ + 1, n_ + 1});
        rg::GradedReport rep = rg::check_root_graded(g, X.L, X.g_embedding);
        py::dict d;
        d["embedding_ok"] = rep.embedding_ok;
        d["weights_in_roots"] = rep.weights_in_roots;
        d["zero_generated"] = rep.zero_generated;
        d["ok"] = rep.ok();
        return d;
      },
      py::arg("assoc_doc"), py::arg("m"), py::arg("n"), py::arg("model") = "LA",
      "graded-decomposition report for a model over the coordinate document");

  m.def(
      "coordinatize_model",
      [](const std::string& assoc_doc, int m_, int n_, const std::string& model) {
        rg::AssembledAlgebra X = model_from_doc(model, assoc_doc, m_, n_);
        return rg::to_document(rg::coordinatize(X.L, X.g_embedding, m_, n_).cd);
      },
      py::arg("assoc_doc"), py::arg("m"), py::arg("n"), py::arg("model") = "LA",
      "coordinate document recovered from the model by the casimir splitting");

  m.def(
      "run_suite",
      [](std::uint64_t seed) {
        py::list out;
        for (const auto& r : rg::run_acceptance_suite(seed)) {
          py::dict d;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0, "the full verification suite as a list of check reports");
}
