#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace trustlab {

// 64-bit FNV-1a, used to derive sub-stream seeds from stream names.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic RNG. The engine (mt19937_64) is fully specified by the
// standard; the distribution mappings are our own so results are identical
// everywhere. All randomness in the library flows from one root seed through
// named sub-streams: Rng(root, "init", fold) etc.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}
  Rng(std::uint64_t root, std::string_view stream, std::uint64_t index = 0)
      : eng_(splitmix64(splitmix64(root ^ fnv1a64(stream)) ^ index)) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound). Modulo bias is negligible at our bounds.
  std::uint64_t below(std::uint64_t bound) { return bound ? eng_() % bound : 0; }

  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    // Fisher-Yates with our own index draws, for cross-platform stability.
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Stable per-pair uniform score in [0,1): a pure function of (seed, i, j),
// independent of evaluation order. Used by the random baseline.
inline double hash_uniform(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
  std::uint64_t x = splitmix64(seed ^ splitmix64(i * 0x9e3779b97f4a7c15ULL + 1) ^
                               splitmix64(j * 0xc2b2ae3d27d4eb4fULL + 2));
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace trustlab
