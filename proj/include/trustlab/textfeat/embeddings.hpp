#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "trustlab/io.hpp"
#include "trustlab/matrix.hpp"
#include "trustlab/rng.hpp"
#include "trustlab/textfeat/lexicon.hpp"

namespace trustlab {

// Precomputed vectors keyed by user or document id. Lookups of absent keys
// resolve to a zero vector and bump a warning counter instead of failing, so
// pipelines keep running on partially covered corpora.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  std::size_t size() const { return map_.size(); }
  long long miss_count() const { return miss_count_; }

  void insert(const std::string& key, std::vector<double> v) {
    if (static_cast<int>(v.size()) != dim_)
      throw std::runtime_error("embedding dimension mismatch for key '" + key + "': got " +
                               std::to_string(v.size()) + ", expected " + std::to_string(dim_));
    map_[key] = std::move(v);
  }

  std::vector<double> lookup(const std::string& key) const {
    auto it = map_.find(key);
    if (it == map_.end()) {
      ++miss_count_;
      return std::vector<double>(dim_, 0.0);
    }
    return it->second;
  }

  bool contains(const std::string& key) const { return map_.count(key) != 0; }

 private:
  int dim_ = 0;
  std::unordered_map<std::string, std::vector<double>> map_;
  mutable long long miss_count_ = 0;
};

// Lines: key,v1,v2,...,vd (decimal, dot separator).
inline EmbeddingTable load_embeddings(const std::string& path, int expected_dim) {
  EmbeddingTable table(expected_dim);
  auto lines = read_lines(path);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    std::string line = trim(lines[t]);
    if (line.empty() || line[0] == '#') continue;
    auto f = split_delimited(line);
    if (static_cast<int>(f.size()) != expected_dim + 1)
      throw std::runtime_error(path + ":" + std::to_string(t + 1) +
                               ": embedding dimension mismatch for key '" + (f.empty() ? "" : f[0]) +
                               "': got " + std::to_string(f.size() - 1) + ", expected " +
                               std::to_string(expected_dim));
    std::vector<double> v(expected_dim);
    for (int d = 0; d < expected_dim; ++d)
      if (!parse_double(f[d + 1], v[d]))
        throw std::runtime_error(path + ":" + std::to_string(t + 1) + ": bad value '" + f[d + 1] + "'");
    table.insert(f[0], std::move(v));
  }
  return table;
}

// Deterministic hash-based text embedding: per-token pseudo-random vectors
// summed then unit-normalized. A stand-in so embedding-consuming pipelines
// run without external vector files; not a trained representation.
inline std::vector<double> hash_embed(const std::string& text, int dim, std::uint64_t seed) {
  std::vector<double> v(dim, 0.0);
  for (const auto& tok : tokenize(text)) {
    Rng rng(seed ^ fnv1a64(tok), "hash_embed");
    for (int d = 0; d < dim; ++d) v[d] += rng.uniform(-1.0, 1.0);
  }
  double norm = norm2(v);
  if (norm > 0.0)
    for (auto& x : v) x /= norm;
  return v;
}

}  // namespace trustlab
