#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "trustlab/matrix.hpp"

namespace trustlab {

constexpr std::int64_t kNoTime = std::numeric_limits<std::int64_t>::min();

// Maps external string identifiers to dense contiguous indices and back.
class IdMap {
 public:
  int intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
  }
  std::optional<int> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const std::string& name(int id) const { return names_.at(id); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

struct TrustEdge {
  int source = 0;
  int target = 0;
  int context = 0;  // dense context index; datasets without contexts use 0
  std::int64_t time = kNoTime;
};

// Sparse directed 0/1 trust relations, per-context and optionally timestamped.
// Absent pairs mean "no trust"; there is no distrust value. Self-edges and
// repeated (source,target,context) triples are never stored.
class TrustStore {
 public:
  TrustStore() = default;
  TrustStore(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 1) throw std::invalid_argument("TrustStore: need n >= 0, k >= 1");
  }

  enum class Add { added, duplicate, self_edge };

  Add add_edge(int source, int target, int context, std::int64_t time = kNoTime) {
    if (source < 0 || source >= n_ || target < 0 || target >= n_)
      throw std::out_of_range("TrustStore::add_edge: user out of range");
    if (context < 0 || context >= k_)
      throw std::out_of_range("TrustStore::add_edge: context out of range");
    if (source == target) return Add::self_edge;
    std::uint64_t key =
        (static_cast<std::uint64_t>(source) * n_ + target) * k_ + context;
    if (!seen_.insert(key).second) return Add::duplicate;
    edges_.push_back(TrustEdge{source, target, context, time});
    return Add::added;
  }

  int user_count() const { return n_; }
  int context_count() const { return k_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<TrustEdge>& edges() const { return edges_; }

  // |edges| / n^2 — self-pairs stay in the denominator.
  double density() const {
    if (n_ == 0) return 0.0;
    return static_cast<double>(edges_.size()) /
           (static_cast<double>(n_) * static_cast<double>(n_));
  }

  bool has(int source, int target, int context) const {
    if (source == target) return false;
    std::uint64_t key =
        (static_cast<std::uint64_t>(source) * n_ + target) * k_ + context;
    return seen_.count(key) != 0;
  }

  bool has_any_context(int source, int target) const {
    for (int c = 0; c < k_; ++c)
      if (has(source, target, c)) return true;
    return false;
  }

  bool all_timestamped() const {
    for (const auto& e : edges_)
      if (e.time == kNoTime) return false;
    return true;
  }

  // Pooled 0/1 adjacency: 1 iff an edge exists in any context.
  Matrix adjacency() const {
    Matrix g(n_, n_, 0.0);
    for (const auto& e : edges_) g(e.source, e.target) = 1.0;
    return g;
  }

  Matrix slice(int context) const {
    Matrix g(n_, n_, 0.0);
    for (const auto& e : edges_)
      if (e.context == context) g(e.source, e.target) = 1.0;
    return g;
  }

  Tensor3 tensor() const {
    Tensor3 g(n_, n_, k_, 0.0);
    for (const auto& e : edges_) g(e.source, e.target, e.context) = 1.0;
    return g;
  }

  // Pooled out-neighbor lists, deduplicated and sorted.
  std::vector<std::vector<int>> out_neighbors() const {
    std::vector<std::vector<int>> adj(n_);
    Matrix g = adjacency();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (g(i, j) > 0.0) adj[i].push_back(j);
    return adj;
  }

 private:
  int n_ = 0;
  int k_ = 1;
  std::vector<TrustEdge> edges_;  // ingest order preserved
  std::unordered_set<std::uint64_t> seen_;
};

struct RatingRecord {
  int rater = -1;  // -1 when the dataset lacks rater-of-review attribution
  int author = 0;
  std::string item;
  int context = 0;
  double score = 0.0;
};

// One review/tweet/post: either a token sequence or precomputed per-category
// word counts plus a total.
struct ReviewDoc {
  int author = 0;
  int context = 0;
  std::int64_t time = kNoTime;
  std::vector<std::string> tokens;
  bool has_counts = false;
  std::map<std::string, long long> counts;
  long long total_words = 0;  // only meaningful when has_counts
};

struct RatingScale {
  double min = 1.0;
  double max = 5.0;
};

struct DatasetSchema {
  RatingScale scale;
  bool has_rater_of_reviews = true;
  bool has_timestamps = true;
};

}  // namespace trustlab
