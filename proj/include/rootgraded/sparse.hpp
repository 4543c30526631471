#pragma once

#include <rootgraded/scalar.hpp>

#include <utility>
#include <vector>

namespace rootgraded {

// Sparse coordinate vector: (index, value) pairs sorted by index, values nonzero.
using SVec = std::vector<std::pair<int, Scalar>>;

inline SVec svec_from_dense(const ScalarVec& v) {
  SVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

inline ScalarVec svec_to_dense(const SVec& v, int dim) {
  ScalarVec out(dim, Scalar(0));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

inline SVec svec_add(const SVec& a, const SVec& b) {
  SVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (s != 0) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

inline SVec svec_scaled(const SVec& a, const Scalar& c) {
  if (c == 0) return {};
  SVec out;
  out.reserve(a.size());
  for (const auto& [i, v] : a) out.emplace_back(i, v * c);
  return out;
}

inline bool svec_is_zero(const SVec& a) { return a.empty(); }

}  // namespace rootgraded
