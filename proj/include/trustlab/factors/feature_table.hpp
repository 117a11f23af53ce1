#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "trustlab/corpus/dataset.hpp"
#include "trustlab/factors/pagerank.hpp"
#include "trustlab/factors/similarity.hpp"
#include "trustlab/textfeat/personality.hpp"

namespace trustlab {

// All social-context factor values for one dataset. Per-(user,context)
// matrices are k x n (context-major); per-pair matrices are n x n.
struct FeatureTable {
  int n = 0, k = 1;

  Matrix expertise;        // v >= 0
  Matrix interest;         // p in {0,1}
  Matrix swear;            // Bl rate
  Matrix self_disclosure;  // Sd rate
  Matrix inclusive;        // Inc rate
  std::vector<double> followers_norm;  // NoF' per user, in [0,1]

  bool has_fqpi = false;
  std::vector<Matrix> fqpi;  // per context, raw mean score source gave target

  Matrix rs, jc, pcc;          // pooled pairwise rating similarities
  std::vector<Matrix> rs_ctx;  // optional context-restricted RS

  bool has_personality = false;
  Matrix personality_v;   // n x 5
  Matrix personality_sv;  // n x n cosine of trait vectors

  std::vector<double> pagerank_scores;  // per user; empty if not computed

  void init(int n_users, int k_contexts) {
    n = n_users;
    k = k_contexts;
    expertise = Matrix(k, n, 0.0);
    interest = Matrix(k, n, 0.0);
    swear = Matrix(k, n, 0.0);
    self_disclosure = Matrix(k, n, 0.0);
    inclusive = Matrix(k, n, 0.0);
    followers_norm.assign(n, 0.0);
    fqpi.assign(k, Matrix(n, n, 0.0));
    rs = Matrix(n, n, 0.0);
    jc = Matrix(n, n, 0.0);
    pcc = Matrix(n, n, 0.0);
    personality_v = Matrix(n, 5, 0.0);
    personality_sv = Matrix(n, n, 0.0);
  }

  void refresh_personality_sim() {
    personality_sv = Matrix(n, n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        PersonalityVector a{}, b{};
        for (int p = 0; p < 5; ++p) {
          a[p] = personality_v(i, p);
          b[p] = personality_v(j, p);
        }
        personality_sv(i, j) = personality_similarity(a, b);
      }
  }
};

// Expertise v = a * S * n: activity gate a is 1 iff the user's review count
// in the context reaches the mean count over all users there.
inline double expertise_value(int review_count, double mean_review_count,
                              double mean_received_score) {
  const double gate = review_count >= mean_review_count ? 1.0 : 0.0;
  return gate * mean_received_score * static_cast<double>(review_count);
}

// Min-max feature scaling to [0,1]; all-equal inputs map to 0 for everyone.
inline std::vector<double> normalize_followers(const std::vector<double>& raw) {
  if (raw.empty()) throw std::invalid_argument("normalize_followers: no users");
  double lo = raw[0], hi = raw[0];
  for (double x : raw) {
    if (x < 0) throw std::invalid_argument("normalize_followers: negative count");
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  std::vector<double> out(raw.size(), 0.0);
  if (hi > lo)
    for (std::size_t t = 0; t < raw.size(); ++t) out[t] = (raw[t] - lo) / (hi - lo);
  return out;
}

// Mean score `source` gave to `target`'s reviews in the context; 0 if none.
inline double fqpi_value(const std::vector<RatingRecord>& ratings, int source, int target,
                         int context) {
  double sum = 0.0;
  int cnt = 0;
  for (const auto& r : ratings) {
    if (r.rater == source && r.author == target && r.context == context) {
      sum += r.score;
      ++cnt;
    }
  }
  return cnt == 0 ? 0.0 : sum / cnt;
}

struct FeatureInputs {
  const Dataset* data = nullptr;      // required
  const TrustStore* graph = nullptr;  // trust graph feeding NoF/PageRank; default data->trust
  const LexiconTable* lexicon = nullptr;
  const PersonalityWeights* personality_weights = nullptr;
  bool context_rs = false;
  bool compute_pagerank = true;
};

inline FeatureTable build_feature_table(const FeatureInputs& in) {
  if (!in.data) throw std::invalid_argument("build_feature_table: data required");
  const Dataset& ds = *in.data;
  const TrustStore& graph = in.graph ? *in.graph : ds.trust;
  const int n = ds.users.size();
  const int k = ds.contexts.size();
  FeatureTable ft;
  ft.init(n, k);

  // Group review docs per (user, context) and per user.
  std::vector<std::vector<std::vector<ReviewDoc>>> docs(k,
      std::vector<std::vector<ReviewDoc>>(n));
  std::vector<std::vector<ReviewDoc>> user_docs(n);
  for (const auto& d : ds.reviews) {
    docs[d.context][d.author].push_back(d);
    user_docs[d.author].push_back(d);
  }

  // Received review scores per (author, context).
  Matrix score_sum(k, n, 0.0), score_cnt(k, n, 0.0);
  for (const auto& r : ds.ratings) {
    score_sum(r.context, r.author) += r.score;
    score_cnt(r.context, r.author) += 1.0;
  }

  for (int c = 0; c < k; ++c) {
    double mean_count = 0.0;
    for (int i = 0; i < n; ++i) mean_count += static_cast<double>(docs[c][i].size());
    mean_count /= std::max(1, n);
    for (int i = 0; i < n; ++i) {
      const int cnt = static_cast<int>(docs[c][i].size());
      const double s = score_cnt(c, i) > 0 ? score_sum(c, i) / score_cnt(c, i) : 0.0;
      ft.expertise(c, i) = expertise_value(cnt, mean_count, s);
      ft.interest(c, i) = cnt >= 1 ? 1.0 : 0.0;
      if (in.lexicon) {
        ft.swear(c, i) = category_rate(docs[c][i], "swear", *in.lexicon);
        ft.self_disclosure(c, i) = category_rate(docs[c][i], "self_disclosure", *in.lexicon);
        ft.inclusive(c, i) = category_rate(docs[c][i], "inclusive", *in.lexicon);
      }
    }
  }

  // NoF: follower count is trust in-degree; when rater attribution exists we
  // scale the followers / review-readers ratio, otherwise the raw in-degree.
  std::vector<double> in_degree(n, 0.0);
  {
    Matrix g = graph.adjacency();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) in_degree[j] += g(i, j);
  }
  std::vector<double> raw_nof(n, 0.0);
  if (ds.schema.has_rater_of_reviews && !ds.ratings.empty()) {
    std::vector<std::set<int>> readers(n);
    for (const auto& r : ds.ratings)
      if (r.rater >= 0) readers[r.author].insert(r.rater);
    for (int j = 0; j < n; ++j)
      raw_nof[j] = readers[j].empty() ? 0.0 : in_degree[j] / static_cast<double>(readers[j].size());
  } else {
    raw_nof = in_degree;
  }
  ft.followers_norm = normalize_followers(raw_nof);

  if (ds.schema.has_rater_of_reviews && !ds.ratings.empty()) {
    ft.has_fqpi = true;
    // Accumulate sums in one pass instead of calling fqpi_value per pair.
    std::vector<Matrix> sum(k, Matrix(n, n, 0.0)), cnt(k, Matrix(n, n, 0.0));
    for (const auto& r : ds.ratings) {
      if (r.rater < 0 || r.rater == r.author) continue;
      sum[r.context](r.rater, r.author) += r.score;
      cnt[r.context](r.rater, r.author) += 1.0;
    }
    for (int c = 0; c < k; ++c)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (cnt[c](i, j) > 0) ft.fqpi[c](i, j) = sum[c](i, j) / cnt[c](i, j);
  }

  auto vecs = build_rating_vectors(ds.ratings, n);
  ft.rs = similarity_matrix(vecs, Similarity::rs);
  ft.jc = similarity_matrix(vecs, Similarity::jc);
  ft.pcc = similarity_matrix(vecs, Similarity::pcc);
  if (in.context_rs) {
    ft.rs_ctx.clear();
    for (int c = 0; c < k; ++c)
      ft.rs_ctx.push_back(similarity_matrix(build_rating_vectors(ds.ratings, n, c),
                                            Similarity::rs));
  }

  if (in.lexicon && in.personality_weights) {
    ft.has_personality = true;
    for (int i = 0; i < n; ++i) {
      PersonalityVector v = personality(user_docs[i], *in.personality_weights, *in.lexicon);
      for (int p = 0; p < 5; ++p) ft.personality_v(i, p) = v[p];
    }
    ft.refresh_personality_sim();
  }

  if (in.compute_pagerank && n > 0) ft.pagerank_scores = pagerank(graph);

  return ft;
}

}  // namespace trustlab
