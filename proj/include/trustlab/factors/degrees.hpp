#pragma once

#include <algorithm>

#include "trustlab/factors/feature_table.hpp"

namespace trustlab {

struct SetWeights {
  double w1 = 1.0, w2 = 1.0, w3 = 1.0, w4 = 1.0;
};

struct TdWeights {
  double w1 = 1.0, w2 = 1.0, w3 = 1.0, w4 = 1.0, w5 = 1.0;
};

// +1 iff both users are active in the context, else -1 (the rule as written:
// two inactive users also get -1).
inline double interest_match_set(const FeatureTable& ft, int source, int target, int context) {
  return (ft.interest(context, source) > 0 && ft.interest(context, target) > 0) ? 1.0 : -1.0;
}

// Product of the two 0/1 activity flags.
inline double interest_product_td(const FeatureTable& ft, int source, int target, int context) {
  return ft.interest(context, source) * ft.interest(context, target);
}

// FQPI min-max normalized over the context's ordered pairs (diagonal
// excluded); all-equal values map to 0.
inline Matrix normalized_fqpi(const FeatureTable& ft, int context) {
  const int n = ft.n;
  Matrix out(n, n, 0.0);
  if (!ft.has_fqpi) return out;
  const Matrix& raw = ft.fqpi[context];
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double x = raw(i, j);
      if (first) {
        lo = hi = x;
        first = false;
      } else {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
  if (hi <= lo) return out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out(i, j) = (raw(i, j) - lo) / (hi - lo);
  return out;
}

// Social-exchange trust degree of the pair: interest match plus the target's
// quality terms minus the target's swearing cost.
inline Matrix set_degrees(const FeatureTable& ft, int context, const SetWeights& w = {}) {
  const int n = ft.n;
  Matrix out(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out(i, j) = w.w1 * interest_match_set(ft, i, j, context) +
                  w.w2 * ft.expertise(context, j) + w.w3 * ft.followers_norm[j] -
                  w.w4 * ft.swear(context, j);
    }
  return out;
}

inline double set_degree(const FeatureTable& ft, int source, int target, int context,
                         const SetWeights& w = {}) {
  return w.w1 * interest_match_set(ft, source, target, context) +
         w.w2 * ft.expertise(context, target) + w.w3 * ft.followers_norm[target] -
         w.w4 * ft.swear(context, target);
}

// Three-context trust degree: interest product, target quality terms,
// self-disclosure, and the normalized FQPI of the pair. When the dataset has
// no rater-of-review attribution the FQPI term is omitted (weight ignored).
inline Matrix td_degrees(const FeatureTable& ft, int context, const TdWeights& w = {}) {
  const int n = ft.n;
  Matrix out(n, n, 0.0);
  const Matrix fq = normalized_fqpi(ft, context);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = w.w1 * interest_product_td(ft, i, j, context) +
                 w.w2 * ft.expertise(context, j) + w.w3 * ft.followers_norm[j] +
                 w.w4 * ft.self_disclosure(context, j);
      if (ft.has_fqpi) d += w.w5 * fq(i, j);
      out(i, j) = d;
    }
  return out;
}

inline double td_degree(const FeatureTable& ft, int source, int target, int context,
                        const TdWeights& w = {}) {
  return td_degrees(ft, context, w)(source, target);
}

}  // namespace trustlab
