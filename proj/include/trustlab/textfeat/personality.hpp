#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "trustlab/textfeat/lexicon.hpp"

namespace trustlab {

// Big Five order is fixed: Openness, Conscientiousness, Extraversion,
// Agreeableness, Neuroticism.
using PersonalityVector = std::array<double, 5>;

inline const std::array<std::string, 5>& trait_names() {
  static const std::array<std::string, 5> names = {
      "openness", "conscientiousness", "extraversion", "agreeableness", "neuroticism"};
  return names;
}

inline int trait_index(const std::string& raw) {
  std::string t;
  for (char c : raw) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto& names = trait_names();
  for (int i = 0; i < 5; ++i)
    if (t == names[i] || (t.size() == 1 && std::toupper(t[0]) == "OCEAN"[i])) return i;
  throw std::runtime_error("unknown personality trait '" + raw + "' (use O,C,E,A,N or full names)");
}

// Per-trait linear weights over lexicon categories (the regression weights are
// an input file, not shipped constants).
struct PersonalityWeights {
  std::array<std::vector<std::pair<std::string, double>>, 5> per_trait;

  void validate(const LexiconTable& lex) const {
    for (int t = 0; t < 5; ++t)
      for (const auto& [cat, w] : per_trait[t]) {
        (void)w;
        if (!lex.has(cat))
          throw std::runtime_error("personality weights reference unknown category '" + cat +
                                   "'; known: " + lex.known_categories());
      }
  }

  // Lines: trait,category,weight. '#' comments and blank lines ignored.
  static PersonalityWeights from_file(const std::string& path, const LexiconTable& lex) {
    PersonalityWeights w;
    auto lines = read_lines(path);
    for (std::size_t t = 0; t < lines.size(); ++t) {
      std::string line = trim(lines[t]);
      if (line.empty() || line[0] == '#') continue;
      auto f = split_delimited(line);
      if (f.size() != 3)
        throw std::runtime_error(path + ":" + std::to_string(t + 1) +
                                 ": expected trait,category,weight");
      double val = 0.0;
      if (!parse_double(f[2], val))
        throw std::runtime_error(path + ":" + std::to_string(t + 1) + ": bad weight '" + f[2] + "'");
      w.per_trait[trait_index(f[0])].push_back({trim(f[1]), val});
    }
    w.validate(lex);
    return w;
  }

  // Documented smoke-test placeholder: every category feeds every trait with
  // the same weight.
  static PersonalityWeights uniform(const LexiconTable& lex, double weight = 1.0) {
    PersonalityWeights w;
    for (int t = 0; t < 5; ++t)
      for (const auto& cat : lex.category_names()) w.per_trait[t].push_back({cat, weight});
    return w;
  }
};

// Pure weighted sum of category rates per trait — no intercept, no
// normalization (the source gives regression weights only).
inline PersonalityVector personality(const std::vector<ReviewDoc>& docs,
                                     const PersonalityWeights& weights,
                                     const LexiconTable& lex) {
  PersonalityVector v{};
  for (int t = 0; t < 5; ++t) {
    double s = 0.0;
    for (const auto& [cat, w] : weights.per_trait[t]) s += w * category_rate(docs, cat, lex);
    v[t] = s;
  }
  return v;
}

// Cosine over the five traits; a zero-norm vector carries no evidence of
// similarity, so the result is 0.
inline double personality_similarity(const PersonalityVector& a, const PersonalityVector& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (int t = 0; t < 5; ++t) {
    dot += a[t] * b[t];
    na += a[t] * a[t];
    nb += b[t] * b[t];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace trustlab
