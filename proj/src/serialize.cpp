#include <rootgraded/serialize.hpp>

#include <rootgraded/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace rootgraded {

namespace {

using json = nlohmann::ordered_json;

json scalar_json(const Scalar& x) { return scalar_to_string(x); }

json table_json(const std::vector<std::vector<ScalarVec>>& table) {
  json out = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      for (std::size_t k = 0; k < table[i][j].size(); ++k)
        if (table[i][j][k] != 0)
          out.push_back(json::array({i, j, k, scalar_json(table[i][j][k])}));
  return out;
}

json sparse_table_json(const std::vector<std::vector<SVec>>& table) {
  json out = json::array();
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table[i].size(); ++j)
      for (const auto& [k, c] : table[i][j])
        out.push_back(json::array({i, j, k, scalar_json(c)}));
  return out;
}

json assoc_json(const AssocSuperalgebra& A) {
  json doc;
  doc["kind"] = "assoc";
  doc["dim"] = A.dim;
  doc["parity"] = A.parity;
  json unit = json::array();
  for (const Scalar& x : A.unit) unit.push_back(scalar_json(x));
  doc["unit"] = unit;
  doc["table"] = table_json(A.table);
  if (!A.labels.empty()) doc["labels"] = A.labels;
  return doc;
}

json lie_json(const LieSuperalgebraSC& L) {
  json doc;
  doc["kind"] = "lie";
  doc["dim"] = L.dim;
  doc["parity"] = L.parity;
  doc["table"] = sparse_table_json(L.table);
  if (!L.labels.empty()) doc["labels"] = L.labels;
  return doc;
}

json coordinate_json(const CoordinateData& cd) {
  json doc;
  doc["kind"] = "coordinate";
  doc["m"] = cd.m;
  doc["n"] = cd.n;
  doc["A"] = assoc_json(cd.A);
  doc["D"] = lie_json(cd.D);
  json action = json::array();
  for (const Mat& M : cd.action) {
    json rows = json::array();
    for (int r = 0; r < M.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < M.cols(); ++c) row.push_back(scalar_json(M.at(r, c)));
      rows.push_back(row);
    }
    action.push_back(rows);
  }
  doc["action"] = action;
  json form = json::array();
  for (std::size_t i = 0; i < cd.form.size(); ++i)
    for (std::size_t j = 0; j < cd.form[i].size(); ++j)
      for (std::size_t t = 0; t < cd.form[i][j].size(); ++t)
        if (cd.form[i][j][t] != 0)
          form.push_back(json::array({i, j, t, scalar_json(cd.form[i][j][t])}));
  doc["form"] = form;
  return doc;
}

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw document_error("document is not valid JSON");
  if (!doc.is_object()) throw document_error("document root must be an object");
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw document_error(std::string("missing field: ") + name);
  return *it;
}

int int_field(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_integer())
    throw document_error(std::string("field must be an integer: ") + name);
  return v.get<int>();
}

std::vector<int> parity_field(const json& doc, int dim) {
  const json& v = field(doc, "parity");
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw document_error("parity must be an array of length dim");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
      throw document_error("parity entries must be 0 or 1");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::string> labels_field(const json& doc, int dim) {
  auto it = doc.find("labels");
  if (it == doc.end()) return {};
  if (!it->is_array() || static_cast<int>(it->size()) != dim)
    throw document_error("labels must be an array of length dim");
  std::vector<std::string> out;
  for (const auto& x : *it) {
    if (!x.is_string()) throw document_error("labels entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Scalar scalar_field(const json& v, const char* where) {
  if (!v.is_string())
    throw document_error(std::string("expected a Scalar string in ") + where);
  return scalar_from_string(v.get<std::string>());
}

// quadruples [i, j, k, "num/den"] with indices below the given bounds
void read_quadruples(const json& v, const char* name, int bi, int bj, int bk,
                     const std::function<void(int, int, int, Scalar)>& sink) {
  if (!v.is_array())
    throw document_error(std::string(name) + " must be an array of quadruples");
  for (const auto& q : v) {
    if (!q.is_array() || q.size() != 4)
      throw document_error(std::string(name) + " entries must be [i, j, k, value]");
    for (int t = 0; t < 3; ++t)
      if (!q[t].is_number_integer())
        throw document_error(std::string(name) + " indices must be integers");
    const int i = q[0].get<int>(), j = q[1].get<int>(), k = q[2].get<int>();
    if (i < 0 || i >= bi || j < 0 || j >= bj || k < 0 || k >= bk)
      throw document_error(std::string(name) + " index out of range");
    sink(i, j, k, scalar_field(q[3], name));
  }
}

AssocSuperalgebra assoc_from_json(const json& doc) {
  const int dim = int_field(doc, "dim");
  if (dim < 1) throw document_error("dim must be >= 1");
  std::vector<int> parity = parity_field(doc, dim);
  const json& uv = field(doc, "unit");
  if (!uv.is_array() || static_cast<int>(uv.size()) != dim)
    throw document_error("unit must be an array of length dim");
  ScalarVec unit;
  for (const auto& x : uv) unit.push_back(scalar_field(x, "unit"));
  std::vector<std::vector<ScalarVec>> table(
      static_cast<std::size_t>(dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(dim),
                             ScalarVec(static_cast<std::size_t>(dim), Scalar(0))));
  read_quadruples(field(doc, "table"), "table", dim, dim, dim,
                  [&](int i, int j, int k, Scalar c) { table[i][j][k] = std::move(c); });
  return AssocSuperalgebra(std::move(parity), std::move(table), std::move(unit),
                           labels_field(doc, dim));
}

LieSuperalgebraSC lie_from_json(const json& doc) {
  const int dim = int_field(doc, "dim");
  if (dim < 0) throw document_error("dim must be >= 0");
  std::vector<int> parity = parity_field(doc, dim);
  std::vector<std::vector<ScalarVec>> dense(
      static_cast<std::size_t>(dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(dim),
                             ScalarVec(static_cast<std::size_t>(dim), Scalar(0))));
  read_quadruples(field(doc, "table"), "table", dim, dim, dim,
                  [&](int i, int j, int k, Scalar c) { dense[i][j][k] += c; });
  return LieSuperalgebraSC::from_dense_table(std::move(parity), dense,
                                             labels_field(doc, dim));
}

void expect_kind(const json& doc, const char* kind) {
  const json& k = field(doc, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw document_error(std::string("document kind is not \"") + kind + "\"");
}

}  // namespace

std::string to_document(const AssocSuperalgebra& A) { return assoc_json(A).dump(2); }

std::string to_document(const LieSuperalgebraSC& L) { return lie_json(L).dump(2); }

std::string to_document(const CoordinateData& cd) { return coordinate_json(cd).dump(2); }

std::string document_kind(const std::string& text) {
  json doc = parse(text);
  const json& k = field(doc, "kind");
  if (!k.is_string()) throw document_error("kind must be a string");
  const std::string kind = k.get<std::string>();
  if (kind != "assoc" && kind != "lie" && kind != "coordinate")
    throw document_error("unknown document kind: " + kind);
  return kind;
}

AssocSuperalgebra assoc_from_document(const std::string& text) {
  json doc = parse(text);
  expect_kind(doc, "assoc");
  return assoc_from_json(doc);
}

LieSuperalgebraSC lie_from_document(const std::string& text) {
  json doc = parse(text);
  expect_kind(doc, "lie");
  return lie_from_json(doc);
}

CoordinateData coordinate_from_document(const std::string& text) {
  json doc = parse(text);
  expect_kind(doc, "coordinate");
  const int m = int_field(doc, "m");
  const int n = int_field(doc, "n");
  const json& aj = field(doc, "A");
  if (!aj.is_object()) throw document_error("A must be an embedded document");
  expect_kind(aj, "assoc");
  AssocSuperalgebra A = assoc_from_json(aj);
  const json& dj = field(doc, "D");
  if (!dj.is_object()) throw document_error("D must be an embedded document");
  expect_kind(dj, "lie");
  LieSuperalgebraSC D = lie_from_json(dj);

  const json& av = field(doc, "action");
  if (!av.is_array() || static_cast<int>(av.size()) != D.dim)
    throw document_error("action must hold one matrix per D basis element");
  std::vector<Mat> action;
  for (const auto& mj : av) {
    if (!mj.is_array() || static_cast<int>(mj.size()) != A.dim)
      throw document_error("action matrices must be dim(A) x dim(A)");
    Mat M(A.dim, A.dim);
    for (int r = 0; r < A.dim; ++r) {
      const auto& rowj = mj[static_cast<std::size_t>(r)];
      if (!rowj.is_array() || static_cast<int>(rowj.size()) != A.dim)
        throw document_error("action matrices must be dim(A) x dim(A)");
      for (int c = 0; c < A.dim; ++c)
        M.at(r, c) = scalar_field(rowj[static_cast<std::size_t>(c)], "action");
    }
    action.push_back(std::move(M));
  }

  std::vector<std::vector<ScalarVec>> form(
      static_cast<std::size_t>(A.dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(A.dim),
                             ScalarVec(static_cast<std::size_t>(D.dim), Scalar(0))));
  read_quadruples(field(doc, "form"), "form", A.dim, A.dim, D.dim,
                  [&](int i, int j, int t, Scalar c) { form[i][j][t] = std::move(c); });
  return CoordinateData(m, n, std::move(A), std::move(D), std::move(action),
                        std::move(form));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw document_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw document_error("cannot write file: " + path);
  out << text;
  if (!out) throw document_error("write failed: " + path);
}

}  // namespace rootgraded
