#pragma once

#include <array>
#include <string>
#include <vector>

#include "trustlab/textfeat/lexicon.hpp"

namespace trustlab {

// (H, S, A): mean per-tweet rates of positive_emotion / negative_emotion /
// anger words over the tweets of one user inside a time window. An empty
// window yields (0,0,0).
struct EmotionVector {
  double h = 0.0;
  double s = 0.0;
  double a = 0.0;
};

inline EmotionVector emotion_vectors(const std::vector<std::string>& tweet_texts,
                                     const LexiconTable& lex) {
  EmotionVector out;
  if (tweet_texts.empty()) return out;
  for (const auto& text : tweet_texts) {
    out.h += text_category_rate(text, "positive_emotion", lex);
    out.s += text_category_rate(text, "negative_emotion", lex);
    out.a += text_category_rate(text, "anger", lex);
  }
  const double n = static_cast<double>(tweet_texts.size());
  out.h /= n;
  out.s /= n;
  out.a /= n;
  return out;
}

}  // namespace trustlab
