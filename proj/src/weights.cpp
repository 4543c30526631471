#include <rootgraded/weights.hpp>

#include <rootgraded/errors.hpp>

#include <algorithm>
#include <set>

namespace rootgraded {

// ===== Weight arithmetic =====

bool Weight::is_zero() const {
  auto zero = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  };
  return zero(eps) && zero(del);
}

bool Weight::operator<(const Weight& o) const {
  if (eps != o.eps) return eps < o.eps;
  return del < o.del;
}

Weight weight_zero(const BlockShape& sh) {
  return Weight{std::vector<int>(sh.p, 0), std::vector<int>(sh.q, 0)};
}

static void check_same_shape(const Weight& a, const Weight& b) {
  if (a.eps.size() != b.eps.size() || a.del.size() != b.del.size())
    throw dimension_mismatch_error("weights of different shapes");
}

Weight weight_add(const Weight& a, const Weight& b) {
  check_same_shape(a, b);
  Weight w = a;
  for (std::size_t i = 0; i < w.eps.size(); ++i) w.eps[i] += b.eps[i];
  for (std::size_t r = 0; r < w.del.size(); ++r) w.del[r] += b.del[r];
  return w;
}

Weight weight_sub(const Weight& a, const Weight& b) {
  check_same_shape(a, b);
  Weight w = a;
  for (std::size_t i = 0; i < w.eps.size(); ++i) w.eps[i] -= b.eps[i];
  for (std::size_t r = 0; r < w.del.size(); ++r) w.del[r] -= b.del[r];
  return w;
}

std::string weight_to_string(const Weight& w) {
  std::string out;
  auto emit = [&](int c, const std::string& sym, std::size_t idx) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    int a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a) + "*";
    out += sym + std::to_string(idx + 1);
  };
  for (std::size_t i = 0; i < w.eps.size(); ++i) emit(w.eps[i], "eps", i);
  for (std::size_t r = 0; r < w.del.size(); ++r) emit(w.del[r], "del", r);
  return out.empty() ? "0" : out;
}

Scalar weight_pair(const Weight& a, const Weight& b) {
  check_same_shape(a, b);
  long s = 0;
  for (std::size_t i = 0; i < a.eps.size(); ++i) s += long(a.eps[i]) * b.eps[i];
  for (std::size_t r = 0; r < a.del.size(); ++r) s -= long(a.del[r]) * b.del[r];
  return Scalar(s);
}

// ===== Root system =====

RootSystem root_system(const BlockShape& shape) {
  if (shape.p < 1 || shape.q < 1)
    throw invalid_parameter_error("root system requires p >= 1 and q >= 1");
  RootSystem rs;
  rs.shape = shape;
  auto eps_minus_eps = [&](int i, int j) {
    Weight w = weight_zero(shape);
    w.eps[i] = 1;
    w.eps[j] = -1;
    return w;
  };
  auto del_minus_del = [&](int r, int s) {
    Weight w = weight_zero(shape);
    w.del[r] = 1;
    w.del[s] = -1;
    return w;
  };
  auto eps_minus_del = [&](int i, int r, int sign) {
    Weight w = weight_zero(shape);
    w.eps[i] = sign;
    w.del[r] = -sign;
    return w;
  };

  for (int i = 0; i < shape.p; ++i)
    for (int j = i + 1; j < shape.p; ++j) rs.even_roots.push_back(eps_minus_eps(i, j));
  for (int r = 0; r < shape.q; ++r)
    for (int s = r + 1; s < shape.q; ++s) rs.even_roots.push_back(del_minus_del(r, s));
  std::size_t pos = rs.even_roots.size();
  for (std::size_t k = 0; k < pos; ++k)
    rs.even_roots.push_back(weight_sub(weight_zero(shape), rs.even_roots[k]));

  for (int i = 0; i < shape.p; ++i)
    for (int r = 0; r < shape.q; ++r) rs.odd_roots.push_back(eps_minus_del(i, r, 1));
  for (int i = 0; i < shape.p; ++i)
    for (int r = 0; r < shape.q; ++r) rs.odd_roots.push_back(eps_minus_del(i, r, -1));

  for (int i = 0; i + 1 < shape.p; ++i) rs.simple_roots.push_back(eps_minus_eps(i, i + 1));
  rs.simple_roots.push_back(eps_minus_del(shape.p - 1, 0, 1));
  for (int r = 0; r + 1 < shape.q; ++r) rs.simple_roots.push_back(del_minus_del(r, r + 1));
  return rs;
}

Mat cartan_matrix(const RootSystem& rs) {
  const int l = static_cast<int>(rs.simple_roots.size());
  Mat out(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      out.at(i, j) = weight_pair(rs.simple_roots[i], rs.simple_roots[j]);
  return out;
}

// ===== Normal form and reconstruction =====

Weight weight_normal_form(const BlockShape& sh, const Weight& w) {
  auto shift = [&](long t) {
    Weight out = w;
    for (auto& c : out.eps) c += static_cast<int>(t);
    for (auto& d : out.del) d -= static_cast<int>(t);
    return out;
  };
  if (sh.p == sh.q) return shift(w.del.back());
  // Representative with vanishing coefficient sum when one exists in the
  // coset (always the case for tensor powers of the adjoint); otherwise
  // gauge the last del coordinate to zero.
  long s = 0;
  for (int c : w.eps) s += c;
  for (int d : w.del) s += d;
  const long diff = sh.p - sh.q;
  if (s % diff == 0) return shift(-s / diff);
  return shift(w.del.back());
}

Weight weight_from_h_values(const BlockShape& sh, const ScalarVec& values, bool psl_mode) {
  const int N = sh.dim();
  const int expected = psl_mode ? N - 2 : N - 1;
  if (static_cast<int>(values.size()) != expected)
    throw dimension_mismatch_error("weight_from_h_values: wrong value count");

  Mat sys(0, N);
  ScalarVec rhs;
  for (int k = 1; k <= expected; ++k) {
    ScalarVec row(N, Scalar(0));
    row[k - 1] = 1;
    row[k] = (k == sh.p) ? 1 : -1;
    sys.append_row(row);
    rhs.push_back(values[k - 1]);
  }
  {
    ScalarVec gauge(N, Scalar(0));
    gauge[N - 1] = 1;
    sys.append_row(gauge);
    rhs.push_back(0);
  }
  if (psl_mode) {
    sys.append_row(ScalarVec(N, Scalar(1)));
    rhs.push_back(0);
  }
  auto sol = solve(sys, rhs);
  if (!sol)
    throw non_semisimple_action_error("eigenvalues do not define a weight");
  Weight w = weight_zero(sh);
  for (int i = 0; i < N; ++i) {
    const Scalar& c = (*sol)[i];
    if (!scalar_is_integer(c))
      throw non_semisimple_action_error("non-integral weight coordinate " +
                                        scalar_to_string(c));
    if (i < sh.p)
      w.eps[i] = static_cast<int>(scalar_to_long(c));
    else
      w.del[i - sh.p] = static_cast<int>(scalar_to_long(c));
  }
  return weight_normal_form(sh, w);
}

// ===== Kac module weight closure =====

bool kac_weight_closure(const BlockShape& shape, const Weight& lam) {
  if (shape.p + shape.q > 6)
    throw rank_too_large_error("kac_weight_closure capped at p + q <= 6");
  if (static_cast<int>(lam.eps.size()) != shape.p ||
      static_cast<int>(lam.del.size()) != shape.q)
    throw dimension_mismatch_error("highest weight has wrong shape");
  for (int i = 0; i + 1 < shape.p; ++i)
    if (lam.eps[i] < lam.eps[i + 1])
      throw invalid_parameter_error("highest weight is not dominant for the even part");
  for (int r = 0; r + 1 < shape.q; ++r)
    if (lam.del[r] < lam.del[r + 1])
      throw invalid_parameter_error("highest weight is not dominant for the even part");
  if (lam.is_zero()) return true;

  // Weight set of the irreducible even-part module: saturate lam under the
  // positive even root strings.
  std::set<Weight> wts{lam};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Weight> cur(wts.begin(), wts.end());
    for (const Weight& w : cur) {
      auto push_string = [&](int k, Weight step) {
        Weight x = w;
        for (int t = 1; t <= k; ++t) {
          x = weight_sub(x, step);
          if (wts.insert(x).second) grew = true;
        }
      };
      for (int i = 0; i < shape.p; ++i)
        for (int j = i + 1; j < shape.p; ++j) {
          int k = w.eps[i] - w.eps[j];
          if (k > 0) {
            Weight step = weight_zero(shape);
            step.eps[i] = 1;
            step.eps[j] = -1;
            push_string(k, step);
          }
        }
      for (int r = 0; r < shape.q; ++r)
        for (int s = r + 1; s < shape.q; ++s) {
          int k = w.del[r] - w.del[s];
          if (k > 0) {
            Weight step = weight_zero(shape);
            step.del[r] = 1;
            step.del[s] = -1;
            push_string(k, step);
          }
        }
    }
  }

  // Admissible values: the roots and zero, modulo the center when p == q.
  RootSystem rs = root_system(shape);
  std::set<Weight> admissible;
  admissible.insert(weight_normal_form(shape, weight_zero(shape)));
  for (const Weight& r : rs.even_roots) admissible.insert(weight_normal_form(shape, r));
  for (const Weight& r : rs.odd_roots) admissible.insert(weight_normal_form(shape, r));

  // Shifts: sums of distinct del_r - eps_i (weights of the exterior algebra
  // of the negative odd part).
  std::vector<Weight> gamma;
  for (int r = 0; r < shape.q; ++r)
    for (int i = 0; i < shape.p; ++i) {
      Weight g = weight_zero(shape);
      g.del[r] = 1;
      g.eps[i] = -1;
      gamma.push_back(g);
    }
  const std::size_t subsets = std::size_t(1) << gamma.size();
  for (const Weight& w : wts) {
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Weight v = w;
      for (std::size_t b = 0; b < gamma.size(); ++b)
        if (mask & (std::size_t(1) << b)) v = weight_add(v, gamma[b]);
      if (!admissible.count(weight_normal_form(shape, v))) return false;
    }
  }
  return true;
}

}  // namespace rootgraded
