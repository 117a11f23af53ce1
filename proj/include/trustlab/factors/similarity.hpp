#pragma once

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trustlab/corpus/types.hpp"

namespace trustlab {

// One user's item ratings: item id -> score. Multiple scores for the same
// item are averaged at construction.
using RatingVec = std::map<std::string, double>;

// Per-user rating vectors from rating records (keyed by rater). Records
// without rater attribution are skipped. Optional context filter (-1 = all).
inline std::vector<RatingVec> build_rating_vectors(const std::vector<RatingRecord>& ratings,
                                                   int n, int context = -1) {
  std::vector<std::map<std::string, std::pair<double, int>>> acc(n);
  for (const auto& r : ratings) {
    if (r.rater < 0 || r.rater >= n) continue;
    if (context >= 0 && r.context != context) continue;
    auto& slot = acc[r.rater][r.item];
    slot.first += r.score;
    slot.second += 1;
  }
  std::vector<RatingVec> out(n);
  for (int u = 0; u < n; ++u)
    for (const auto& [item, sc] : acc[u]) out[u][item] = sc.first / sc.second;
  return out;
}

inline double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  const std::size_t uni = a.size() + b.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

inline double jaccard(const RatingVec& a, const RatingVec& b) {
  std::set<std::string> sa, sb;
  for (const auto& [item, _] : a) sa.insert(item);
  for (const auto& [item, _] : b) sb.insert(item);
  return jaccard(sa, sb);
}

// Cosine over rating vectors aligned on the union of items (absent = 0), so
// only common items contribute to the dot product while each norm runs over
// the user's own rated items. Zero norm on either side -> 0.
inline double rating_cosine(const RatingVec& a, const RatingVec& b) {
  double dot = 0.0;
  for (const auto& [item, va] : a) {
    auto it = b.find(item);
    if (it != b.end()) dot += va * it->second;
  }
  double na = 0.0, nb = 0.0;
  for (const auto& [_, v] : a) na += v * v;
  for (const auto& [_, v] : b) nb += v * v;
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

// Pearson correlation over co-rated items, deviations taken from each user's
// global mean rating. Fewer than 2 co-rated items or zero variance -> 0.
inline double rating_pcc(const RatingVec& a, const RatingVec& b) {
  if (a.empty() || b.empty()) return 0.0;
  double mean_a = 0.0, mean_b = 0.0;
  for (const auto& [_, v] : a) mean_a += v;
  for (const auto& [_, v] : b) mean_b += v;
  mean_a /= static_cast<double>(a.size());
  mean_b /= static_cast<double>(b.size());

  double num = 0.0, da = 0.0, db = 0.0;
  int common = 0;
  for (const auto& [item, va] : a) {
    auto it = b.find(item);
    if (it == b.end()) continue;
    ++common;
    const double xa = va - mean_a;
    const double xb = it->second - mean_b;
    num += xa * xb;
    da += xa * xa;
    db += xb * xb;
  }
  if (common < 2 || da == 0.0 || db == 0.0) return 0.0;
  double r = num / (std::sqrt(da) * std::sqrt(db));
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  return r;
}

enum class Similarity { jc, rs, pcc };

// Full pairwise similarity matrix; symmetric, zero diagonal (self-similarity
// is never consumed — every regularizer sums over j != i).
inline Matrix similarity_matrix(const std::vector<RatingVec>& vecs, Similarity kind) {
  const int n = static_cast<int>(vecs.size());
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = 0.0;
      switch (kind) {
        case Similarity::jc: v = jaccard(vecs[i], vecs[j]); break;
        case Similarity::rs: v = rating_cosine(vecs[i], vecs[j]); break;
        case Similarity::pcc: v = rating_pcc(vecs[i], vecs[j]); break;
      }
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

}  // namespace trustlab
