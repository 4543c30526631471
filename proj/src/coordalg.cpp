#include <rootgraded/coordalg.hpp>

#include <rootgraded/errors.hpp>

#include <cstddef>

namespace rootgraded {

// ===== construction =====

AssocSuperalgebra::AssocSuperalgebra(std::vector<int> parity_bits,
                                     std::vector<std::vector<ScalarVec>> structure,
                                     ScalarVec unit_coords,
                                     std::vector<std::string> basis_labels)
    : dim(static_cast<int>(parity_bits.size())),
      parity(std::move(parity_bits)),
      table(std::move(structure)),
      unit(std::move(unit_coords)),
      labels(std::move(basis_labels)) {
  if (dim <= 0) throw invalid_parameter_error("algebra dimension must be positive");
  if (static_cast<int>(table.size()) != dim)
    throw dimension_mismatch_error("structure table has wrong size");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != dim)
      throw dimension_mismatch_error("structure table has wrong size");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != dim)
        throw dimension_mismatch_error("structure table has wrong size");
  }
  if (static_cast<int>(unit.size()) != dim)
    throw dimension_mismatch_error("unit vector has wrong size");
  if (!labels.empty() && static_cast<int>(labels.size()) != dim)
    throw dimension_mismatch_error("label list has wrong size");

  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (table[i][j][k] != 0 && ((parity[i] ^ parity[j]) != parity[k]))
          throw invalid_parameter_error("product table violates parity at (" +
                                        std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");
  for (int i = 0; i < dim; ++i)
    if (unit[i] != 0 && parity[i] != 0)
      throw invalid_parameter_error("unit must be even");
  for (int i = 0; i < dim; ++i) {
    ScalarVec e = basis_vec(i);
    if (mul(unit, e) != e || mul(e, unit) != e)
      throw invalid_parameter_error("unit is not a two-sided identity on basis element " +
                                    std::to_string(i));
  }
}

ScalarVec AssocSuperalgebra::mul(const ScalarVec& a, const ScalarVec& b) const {
  ScalarVec out(static_cast<std::size_t>(dim), Scalar(0));
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      const ScalarVec& prod = table[i][j];
      for (int k = 0; k < dim; ++k)
        if (prod[k] != 0) out[k] += c * prod[k];
    }
  }
  return out;
}

ScalarVec AssocSuperalgebra::basis_vec(int i) const {
  ScalarVec e(static_cast<std::size_t>(dim), Scalar(0));
  e[i] = 1;
  return e;
}

ScalarVec AssocSuperalgebra::parity_component(const ScalarVec& a, int par) const {
  ScalarVec out(static_cast<std::size_t>(dim), Scalar(0));
  for (int i = 0; i < dim; ++i)
    if (parity[i] == par) out[i] = a[i];
  return out;
}

namespace {

ScalarVec vec_add(const ScalarVec& a, const ScalarVec& b, const Scalar& s) {
  ScalarVec out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

}  // namespace

// On homogeneous pieces a o b = ab + (-1)^{|a||b|} ba; summing the signed
// swaps over parity components gives ba - 2 b_1 a_1.
ScalarVec AssocSuperalgebra::sym(const ScalarVec& a, const ScalarVec& b) const {
  ScalarVec out = vec_add(mul(a, b), mul(b, a), Scalar(1));
  return vec_add(out, mul(parity_component(b, 1), parity_component(a, 1)), Scalar(-2));
}

ScalarVec AssocSuperalgebra::comm(const ScalarVec& a, const ScalarVec& b) const {
  ScalarVec out = vec_add(mul(a, b), mul(b, a), Scalar(-1));
  return vec_add(out, mul(parity_component(b, 1), parity_component(a, 1)), Scalar(2));
}

// ===== builders =====

namespace {

std::vector<std::vector<ScalarVec>> empty_table(int dim) {
  return std::vector<std::vector<ScalarVec>>(
      static_cast<std::size_t>(dim),
      std::vector<ScalarVec>(static_cast<std::size_t>(dim),
                             ScalarVec(static_cast<std::size_t>(dim), Scalar(0))));
}

ScalarVec unit_first(int dim) {
  ScalarVec u(static_cast<std::size_t>(dim), Scalar(0));
  u[0] = 1;
  return u;
}

}  // namespace

AssocSuperalgebra ground_field() {
  auto t = empty_table(1);
  t[0][0][0] = 1;
  return AssocSuperalgebra({0}, std::move(t), unit_first(1), {"1"});
}

AssocSuperalgebra dual_numbers() {
  auto t = empty_table(2);
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][0][1] = 1;
  // eps * eps = 0
  return AssocSuperalgebra({0, 0}, std::move(t), unit_first(2), {"1", "eps"});
}

AssocSuperalgebra group_algebra(int k) {
  if (k < 1) throw invalid_parameter_error("group_algebra requires k >= 1");
  auto t = empty_table(k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back("g^" + std::to_string(i));
    for (int j = 0; j < k; ++j) t[i][j][(i + j) % k] = 1;
  }
  return AssocSuperalgebra(std::vector<int>(k, 0), std::move(t), unit_first(k),
                           std::move(labels));
}

AssocSuperalgebra grassmann(int k) {
  if (k < 0 || k > 10)
    throw invalid_parameter_error("grassmann supports 0 <= k <= 10 generators");
  const int dim = 1 << k;
  auto t = empty_table(dim);
  std::vector<int> par(dim);
  std::vector<std::string> labels(dim);
  for (int a = 0; a < dim; ++a) {
    par[a] = __builtin_popcount(static_cast<unsigned>(a)) & 1;
    std::string lab;
    for (int b = 0; b < k; ++b)
      if (a & (1 << b)) lab += (lab.empty() ? "" : "*") + ("th" + std::to_string(b + 1));
    labels[a] = lab.empty() ? "1" : lab;
  }
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      if (a & b) continue;  // repeated generator
      // sign: count generator pairs (x in a, y in b) with x > y
      int inv = 0;
      for (int x = 0; x < k; ++x)
        if (a & (1 << x))
          for (int y = 0; y < x; ++y)
            if (b & (1 << y)) ++inv;
      t[a][b][a | b] = (inv & 1) ? -1 : 1;
    }
  return AssocSuperalgebra(std::move(par), std::move(t), unit_first(dim),
                           std::move(labels));
}

AssocSuperalgebra matrix_super(int r, int s) {
  if (r < 0 || s < 0 || r + s < 1)
    throw invalid_parameter_error("matrix_super requires r + s >= 1");
  const int N = r + s;
  const int dim = N * N;
  auto idx = [N](int i, int j) { return i * N + j; };
  auto t = empty_table(dim);
  std::vector<int> par(dim);
  std::vector<std::string> labels(dim);
  ScalarVec u(static_cast<std::size_t>(dim), Scalar(0));
  for (int i = 0; i < N; ++i) {
    u[idx(i, i)] = 1;
    for (int j = 0; j < N; ++j) {
      par[idx(i, j)] = (i < r) == (j < r) ? 0 : 1;
      labels[idx(i, j)] = "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      for (int l = 0; l < N; ++l) t[idx(i, j)][idx(j, l)][idx(i, l)] = 1;
    }
  }
  return AssocSuperalgebra(std::move(par), std::move(t), std::move(u), std::move(labels));
}

AssocSuperalgebra truncated_poly(int k) {
  if (k < 1) throw invalid_parameter_error("truncated_poly requires k >= 1");
  auto t = empty_table(k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
    for (int j = 0; j < k; ++j)
      if (i + j < k) t[i][j][i + j] = 1;
  }
  return AssocSuperalgebra(std::vector<int>(k, 0), std::move(t), unit_first(k),
                           std::move(labels));
}

AssocSuperalgebra build_named(const std::string& name) {
  auto open = name.find('(');
  std::string kind = name.substr(0, open);
  std::vector<int> params;
  if (open != std::string::npos) {
    if (name.back() != ')')
      throw invalid_parameter_error("malformed algebra name: " + name);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      std::size_t comma = inner.find(',', pos);
      std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                                     : comma - pos);
      try {
        params.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw invalid_parameter_error("malformed algebra parameter in: " + name);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw invalid_parameter_error("wrong parameter count for " + kind);
  };
  if (kind == "ground_field") {
    want(0);
    return ground_field();
  }
  if (kind == "dual_numbers") {
    want(0);
    return dual_numbers();
  }
  if (kind == "group_algebra") {
    want(1);
    return group_algebra(params[0]);
  }
  if (kind == "grassmann") {
    want(1);
    return grassmann(params[0]);
  }
  if (kind == "matrix_super") {
    want(2);
    return matrix_super(params[0], params[1]);
  }
  if (kind == "truncated_poly") {
    want(1);
    return truncated_poly(params[0]);
  }
  throw invalid_parameter_error("unknown coordinate algebra: " + name);
}

// ===== checks =====

AssociativityReport check_associative(const AssocSuperalgebra& A) {
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) {
        ScalarVec lhs = A.mul(A.table[i][j], A.basis_vec(k));
        ScalarVec rhs = A.mul(A.basis_vec(i), A.table[j][k]);
        if (lhs != rhs) return {false, i, j, k};
      }
  return {};
}

CommutativityReport check_supercommutative(const AssocSuperalgebra& A) {
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      const Scalar sg = (A.parity[i] && A.parity[j]) ? Scalar(-1) : Scalar(1);
      ScalarVec rhs = A.table[j][i];
      for (auto& c : rhs) c *= sg;
      if (A.table[i][j] != rhs) return {false, i, j};
    }
  return {};
}

CommutatorSubspace commutator_subspace(const AssocSuperalgebra& A) {
  Mat all(0, A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      all.append_row(A.comm(A.basis_vec(i), A.basis_vec(j)));
  CommutatorSubspace out;
  out.basis = row_basis(all);
  for (int r = 0; r < out.basis.rows(); ++r) {
    Mat ad(A.dim, A.dim);
    ScalarVec u = out.basis.row(r);
    for (int j = 0; j < A.dim; ++j) {
      ScalarVec col = A.comm(u, A.basis_vec(j));
      for (int k = 0; k < A.dim; ++k) ad.at(k, j) = col[k];
    }
    out.ad.push_back(std::move(ad));
  }
  return out;
}

int map_parity(const std::vector<int>& parity, const Mat& d) {
  int mp = -1;
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c) {
      if (d.at(r, c) == 0) continue;
      int p = parity[r] ^ parity[c];
      if (mp == -1)
        mp = p;
      else if (mp != p)
        throw invalid_parameter_error("map is not parity-homogeneous");
    }
  return mp;
}

bool check_superderivation(const AssocSuperalgebra& A, const Mat& d) {
  if (d.rows() != A.dim || d.cols() != A.dim)
    throw dimension_mismatch_error("derivation matrix has wrong size");
  const int dp = map_parity(A.parity, d);
  if (dp < 0) return true;  // zero map
  for (int i = 0; i < A.dim; ++i) {
    ScalarVec di = d.col(i);
    for (int j = 0; j < A.dim; ++j) {
      ScalarVec lhs = d.apply(A.table[i][j]);
      ScalarVec rhs = A.mul(di, A.basis_vec(j));
      const Scalar sg = (dp && A.parity[i]) ? Scalar(-1) : Scalar(1);
      ScalarVec right = A.mul(A.basis_vec(i), d.col(j));
      for (int k = 0; k < A.dim; ++k) rhs[k] += sg * right[k];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace rootgraded
