#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "trustlab/corpus/types.hpp"
#include "trustlab/io.hpp"

namespace trustlab {

struct PageRankConfig {
  double damping = 0.85;
  double tol = 1e-10;   // L1 change between iterations
  int max_iter = 1000;
};

// Power iteration on out-neighbor lists. Dangling nodes redistribute their
// mass uniformly, so the ranks sum to 1 at every step.
inline std::vector<double> pagerank(const std::vector<std::vector<int>>& out_adj,
                                    const PageRankConfig& cfg = {}) {
  const int n = static_cast<int>(out_adj.size());
  if (n == 0) return {};
  const double uniform = 1.0 / n;
  std::vector<double> r(n, uniform), next(n, 0.0);
  for (int iter = 0; iter < cfg.max_iter; ++iter) {
    double dangling = 0.0;
    for (int u = 0; u < n; ++u)
      if (out_adj[u].empty()) dangling += r[u];
    const double base = (1.0 - cfg.damping) * uniform + cfg.damping * dangling * uniform;
    for (int v = 0; v < n; ++v) next[v] = base;
    for (int u = 0; u < n; ++u) {
      if (out_adj[u].empty()) continue;
      const double share = cfg.damping * r[u] / static_cast<double>(out_adj[u].size());
      for (int v : out_adj[u]) next[v] += share;
    }
    double change = 0.0;
    for (int v = 0; v < n; ++v) change += std::fabs(next[v] - r[v]);
    r.swap(next);
    if (change < cfg.tol) return r;
  }
  double residual = 0.0;
  for (int v = 0; v < n; ++v) residual += std::fabs(r[v] - next[v]);
  throw std::runtime_error("pagerank did not converge in " + std::to_string(cfg.max_iter) +
                           " iterations; last L1 residual " + fmt_g12(residual));
}

inline std::vector<double> pagerank(const TrustStore& g, const PageRankConfig& cfg = {}) {
  return pagerank(g.out_neighbors(), cfg);
}

}  // namespace trustlab
