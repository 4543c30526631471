#include <rootgraded/homspace.hpp>

#include <rootgraded/errors.hpp>

#include <utility>

namespace rootgraded {

std::vector<Mat> HomBasis::all() const {
  std::vector<Mat> out = even;
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

// ===== weight coordinates =====

namespace {

struct WeightCoords {
  std::vector<WeightBlock> blocks;
  std::vector<int> start;    // first coordinate of each block
  std::vector<int> block_of; // block index per coordinate
  Mat S;                     // stacked block rows
  Mat ST;                    // S^T: weight coords -> standard coords
  Mat SinvT;                 // (S^-1)^T: standard coords -> weight coords
};

WeightCoords weight_coords(const GModule& V) {
  WeightCoords w;
  w.blocks = weight_parity_decompose(V);
  std::vector<ScalarVec> rows;
  for (std::size_t b = 0; b < w.blocks.size(); ++b) {
    w.start.push_back(static_cast<int>(rows.size()));
    for (int i = 0; i < w.blocks[b].basis.rows(); ++i) {
      rows.push_back(w.blocks[b].basis.row(i));
      w.block_of.push_back(static_cast<int>(b));
    }
  }
  w.S = Mat::from_rows(rows);
  w.ST = w.S.transposed();
  // Tensor bases are usually h-eigenbases, making S a scaled permutation;
  // invert entrywise then instead of running a generic elimination.
  const int n = w.S.rows();
  bool perm = true;
  std::vector<int> row_hits(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n && perm; ++r) {
    int cnt = 0;
    for (int c = 0; c < n; ++c) {
      if (w.S.at(r, c) == 0) continue;
      ++cnt;
      if (++row_hits[static_cast<std::size_t>(c)] > 1) perm = false;
    }
    if (cnt != 1) perm = false;
  }
  if (perm) {
    Mat sinvt(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (w.S.at(r, c) != 0) sinvt.at(r, c) = 1 / w.S.at(r, c);
    w.SinvT = std::move(sinvt);
  } else {
    auto inv = inverse(w.S);
    if (!inv) throw decomposition_failure_error("weight basis does not span the module");
    w.SinvT = inv->transposed();
  }
  return w;
}

// Generators whose equivariance is imposed during the solve.  The h family is
// redundant there: matched blocks share their h eigenvalues.  The identity is
// not diagonalized away for gl, so it is kept.
std::vector<int> solver_generators(const ClassicalAlgebra& g) {
  std::vector<int> out;
  const int n = g.shape.dim();
  for (int k = 0; k + 1 < n; ++k) {
    out.push_back(g.e_index(k));
    out.push_back(g.f_index(k));
  }
  if (g.kind == ClassicalKind::gl) out.push_back(g.cartan_start() + g.cartan_count() - 1);
  return out;
}

// phi * rho_V(x) == sign * rho_X(x) * phi, checked column by column to
// exploit the sparsity of the action matrices.
bool equivariant_for(const Mat& P, const Mat& av, const Mat& ax, int sign) {
  const int dv = av.cols();
  const int dx = ax.rows();
  Mat axp = ax * P;
  for (int j = 0; j < dv; ++j) {
    ScalarVec lhs(dx, Scalar(0));
    for (int kcol = 0; kcol < dv; ++kcol) {
      const Scalar& c = av.at(kcol, j);
      if (c == 0) continue;
      for (int r = 0; r < dx; ++r) {
        if (P.at(r, kcol) != 0) lhs[r] += P.at(r, kcol) * c;
      }
    }
    for (int r = 0; r < dx; ++r) {
      Scalar rhs = axp.at(r, j);
      if (sign < 0) rhs = -rhs;
      if (lhs[r] != rhs) return false;
    }
  }
  return true;
}

}  // namespace

// ===== hom_basis =====

HomBasis hom_basis(const GModule& V, const GModule& X) {
  if (V.g == nullptr || V.g != X.g)
    throw invalid_parameter_error("hom_basis: modules are not over the same algebra");
  const ClassicalAlgebra& g = *V.g;
  const int dv = V.dim;
  const int dx = X.dim;

  WeightCoords wv = weight_coords(V);
  WeightCoords wx = weight_coords(X);
  const std::vector<int> gens = solver_generators(g);

  HomBasis out;
  for (int fp = 0; fp <= 1; ++fp) {
    // Match each source block to the target block of equal weight and
    // shifted parity; unmatched source blocks are annihilated.
    std::vector<int> partner(wv.blocks.size(), -1);
    std::vector<int> ubase(wv.blocks.size(), -1);
    int nunk = 0;
    for (std::size_t b = 0; b < wv.blocks.size(); ++b) {
      const int want_par = wv.blocks[b].parity ^ fp;
      for (std::size_t c = 0; c < wx.blocks.size(); ++c) {
        if (wx.blocks[c].parity == want_par && wx.blocks[c].weight == wv.blocks[b].weight) {
          partner[b] = static_cast<int>(c);
          ubase[b] = nunk;
          nunk += wx.blocks[c].basis.rows() * wv.blocks[b].basis.rows();
          break;
        }
      }
    }
    if (nunk == 0) continue;

    Mat K = Mat::identity(nunk);
    for (int gidx : gens) {
      if (K.rows() == 0) break;
      const int sgn = (g.parity[gidx] != 0 && fp != 0) ? -1 : +1;
      Mat avh = wv.SinvT * V.actions[gidx] * wv.ST;
      Mat axh = wx.SinvT * X.actions[gidx] * wx.ST;

      Mat M(0, nunk);
      for (int b = 0; b < dv; ++b) {
        const int vb = wv.block_of[b];
        const int lb = b - wv.start[vb];
        Mat eq(dx, nunk);
        bool any = false;
        // phi applied to the image of the generator
        for (int bp = 0; bp < dv; ++bp) {
          const Scalar& c = avh.at(bp, b);
          if (c == 0) continue;
          const int vbp = wv.block_of[bp];
          if (partner[vbp] < 0) continue;
          const int xb = partner[vbp];
          const int xrows = wx.blocks[xb].basis.rows();
          const int xs = wx.start[xb];
          const int lbp = bp - wv.start[vbp];
          for (int a = 0; a < xrows; ++a) {
            eq.at(xs + a, ubase[vbp] + lbp * xrows + a) += c;
          }
          any = true;
        }
        // minus the generator applied to phi
        if (partner[vb] >= 0) {
          const int xb = partner[vb];
          const int xrows = wx.blocks[xb].basis.rows();
          const int xs = wx.start[xb];
          for (int a = 0; a < xrows; ++a) {
            const int col = ubase[vb] + lb * xrows + a;
            for (int r = 0; r < dx; ++r) {
              const Scalar& c = axh.at(r, xs + a);
              if (c == 0) continue;
              if (sgn < 0)
                eq.at(r, col) += c;
              else
                eq.at(r, col) -= c;
              any = true;
            }
          }
        }
        if (!any) continue;
        for (int r = 0; r < dx; ++r) {
          bool nz = false;
          for (int u = 0; u < nunk; ++u) {
            if (eq.at(r, u) != 0) { nz = true; break; }
          }
          if (nz) M.append_row(eq.row(r));
        }
      }
      if (M.rows() == 0) continue;
      std::vector<ScalarVec> ker = kernel_basis(M * K.transposed());
      if (ker.empty()) {
        K = Mat(0, nunk);
        break;
      }
      K = Mat::from_rows(ker) * K;
    }

    for (int s = 0; s < K.rows(); ++s) {
      Mat phat(dx, dv);
      for (std::size_t b = 0; b < wv.blocks.size(); ++b) {
        if (partner[b] < 0) continue;
        const int xb = partner[b];
        const int xrows = wx.blocks[xb].basis.rows();
        const int vrows = wv.blocks[b].basis.rows();
        for (int lb = 0; lb < vrows; ++lb) {
          for (int a = 0; a < xrows; ++a) {
            phat.at(wx.start[xb] + a, wv.start[b] + lb) =
                K.at(s, ubase[b] + lb * xrows + a);
          }
        }
      }
      Mat P = wx.ST * phat * wv.SinvT;
      for (int i = 0; i < g.dim; ++i) {
        const int sgn = (g.parity[i] != 0 && fp != 0) ? -1 : +1;
        if (!equivariant_for(P, V.actions[i], X.actions[i], sgn))
          throw decomposition_failure_error("candidate map is not equivariant on the full basis");
      }
      if (fp == 0)
        out.even.push_back(std::move(P));
      else
        out.odd.push_back(std::move(P));
    }
  }
  return out;
}

// ===== span membership =====

std::optional<ScalarVec> express_map(const std::vector<Mat>& maps, const Mat& target) {
  const int n = target.rows() * target.cols();
  auto flatten = [n](const Mat& m) {
    ScalarVec v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  };
  if (maps.empty()) {
    if (target.is_zero()) return ScalarVec{};
    return std::nullopt;
  }
  Mat basis(0, n);
  for (const Mat& m : maps) {
    if (m.rows() != target.rows() || m.cols() != target.cols())
      throw dimension_mismatch_error("express_map: map shapes differ");
    basis.append_row(flatten(m));
  }
  Mat tgt(0, n);
  tgt.append_row(flatten(target));
  auto coords = express_in_rows(basis, tgt);
  if (!coords) return std::nullopt;
  return coords->row(0);
}

// ===== Casimir =====

Mat casimir_matrix(const ClassicalAlgebra& g, const GModule& V) {
  if (V.g != &g) throw invalid_parameter_error("casimir_matrix: module is not over g");
  auto ginv = inverse(g.form);
  if (!ginv) throw degenerate_form_error("invariant form is degenerate");
  const int n = V.dim;
  Mat C(n, n);
  for (int i = 0; i < g.dim; ++i) {
    // action of the dual basis element paired with x_i
    Mat dual(n, n);
    for (int b = 0; b < g.dim; ++b) {
      const Scalar& c = ginv->at(i, b);
      if (c == 0) continue;
      const Mat& act = V.actions[b];
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (act.at(r, s) != 0) dual.at(r, s) += c * act.at(r, s);
    }
    C = C + V.actions[i] * dual;
  }
  return C.scaled(Scalar(1, 2));
}

namespace {

GModule restricted_module(const GModule& V, const Mat& rows) {
  if (rows.rows() == 0) {
    GModule empty;
    empty.g = V.g;
    empty.dim = 0;
    empty.actions.assign(V.actions.size(), Mat(0, 0));
    return empty;
  }
  return induced_module(V, rows);
}

}  // namespace

CasimirSplit casimir_split(const GModule& V) {
  if (V.g == nullptr) throw invalid_parameter_error("casimir_split: unattached module");
  Mat C = casimir_matrix(*V.g, V);
  Mat ker(0, V.dim);
  Mat img(0, V.dim);
  for (int par = 0; par <= 1; ++par) {
    std::vector<int> idx;
    for (int j = 0; j < V.dim; ++j)
      if (V.parity[j] == par) idx.push_back(j);
    if (idx.empty()) continue;
    const int k = static_cast<int>(idx.size());
    Mat sub(k, k);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub.at(r, c) = C.at(idx[r], idx[c]);
    auto expand = [&](const ScalarVec& v) {
      ScalarVec full(static_cast<std::size_t>(V.dim), Scalar(0));
      for (int t = 0; t < k; ++t) full[static_cast<std::size_t>(idx[t])] = v[static_cast<std::size_t>(t)];
      return full;
    };
    for (const ScalarVec& v : kernel_basis(sub)) ker.append_row(expand(v));
    Mat colspan = row_basis(sub.transposed());
    for (int r = 0; r < colspan.rows(); ++r) img.append_row(expand(colspan.row(r)));
  }
  if (ker.rows() + img.rows() != V.dim || rank(vstack(ker, img)) != V.dim)
    throw decomposition_failure_error("Casimir kernel and image do not split the module");
  CasimirSplit out;
  out.kernel_basis = ker;
  out.image_basis = img;
  out.kernel_module = restricted_module(V, ker);
  out.image_module = restricted_module(V, img);
  return out;
}

// ===== invariant complements =====

std::optional<Mat> invariant_complement(const GModule& V, const Mat& u_rows) {
  const int n = V.dim;
  const int k = u_rows.rows();
  if (k == 0 || u_rows.cols() != n)
    throw invalid_parameter_error("invariant_complement: bad subspace basis");
  if (rank(u_rows) != k)
    throw invalid_parameter_error("invariant_complement: basis rows are dependent");

  std::vector<int> rp(static_cast<std::size_t>(k), -1);
  for (int j = 0; j < k; ++j) {
    for (int c = 0; c < n; ++c) {
      if (u_rows.at(j, c) == 0) continue;
      if (rp[j] < 0)
        rp[j] = V.parity[c];
      else if (rp[j] != V.parity[c])
        throw invalid_parameter_error("invariant_complement: basis row mixes parities");
    }
  }
  for (const Mat& act : V.actions) {
    if (!express_in_rows(u_rows, u_rows * act.transposed()))
      throw invalid_parameter_error("invariant_complement: span is not action-invariant");
  }

  // Unknown even map Y with P = u_rows^T Y; P restricts to the identity on
  // the span and commutes with every action.
  std::vector<std::vector<int>> uidx(static_cast<std::size_t>(k),
                                     std::vector<int>(static_cast<std::size_t>(n), -1));
  int nunk = 0;
  for (int j = 0; j < k; ++j)
    for (int c = 0; c < n; ++c)
      if (V.parity[c] == rp[j]) uidx[j][c] = nunk++;

  Mat M(0, nunk);
  ScalarVec rhs;
  auto push_row = [&](const ScalarVec& row, const Scalar& r) {
    bool nz = (r != 0);
    for (const Scalar& s : row)
      if (s != 0) { nz = true; break; }
    if (!nz) return;
    M.append_row(row);
    rhs.push_back(r);
  };

  for (int j = 0; j < k; ++j) {
    for (int j2 = 0; j2 < k; ++j2) {
      ScalarVec row(static_cast<std::size_t>(nunk), Scalar(0));
      for (int c = 0; c < n; ++c) {
        if (u_rows.at(j2, c) == 0 || uidx[j][c] < 0) continue;
        row[static_cast<std::size_t>(uidx[j][c])] += u_rows.at(j2, c);
      }
      push_row(row, Scalar(j == j2 ? 1 : 0));
    }
  }
  for (const Mat& A : V.actions) {
    Mat W = u_rows * A.transposed();
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        ScalarVec row(static_cast<std::size_t>(nunk), Scalar(0));
        for (int j = 0; j < k; ++j) {
          if (u_rows.at(j, r) != 0) {
            for (int cp = 0; cp < n; ++cp) {
              if (A.at(cp, c) == 0 || uidx[j][cp] < 0) continue;
              row[static_cast<std::size_t>(uidx[j][cp])] += u_rows.at(j, r) * A.at(cp, c);
            }
          }
          if (W.at(j, r) != 0 && uidx[j][c] >= 0)
            row[static_cast<std::size_t>(uidx[j][c])] -= W.at(j, r);
        }
        push_row(row, Scalar(0));
      }
    }
  }

  auto sol = solve(M, rhs);
  if (!sol) return std::nullopt;

  Mat P(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Scalar acc(0);
      for (int j = 0; j < k; ++j)
        if (uidx[j][c] >= 0 && u_rows.at(j, r) != 0)
          acc += u_rows.at(j, r) * (*sol)[static_cast<std::size_t>(uidx[j][c])];
      P.at(r, c) = acc;
    }
  Mat comp(0, n);
  for (const ScalarVec& v : kernel_basis(P)) comp.append_row(v);
  return comp;
}

}  // namespace rootgraded
