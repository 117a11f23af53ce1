#pragma once

#include <cctype>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "trustlab/corpus/types.hpp"
#include "trustlab/io.hpp"

namespace trustlab {

// Fixed tokenization: lowercase, split on non-alphanumerics.
inline std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// File-based word-category table with LIWC-style rate semantics. Categories
// may overlap.
class LexiconTable {
 public:
  void add_category(const std::string& name, const std::vector<std::string>& words) {
    auto& set = cats_[name];
    for (const auto& w : words) {
      if (w.empty()) throw std::runtime_error("lexicon: empty word in category '" + name + "'");
      auto toks = tokenize(w);
      if (toks.size() != 1)
        throw std::runtime_error("lexicon: '" + w + "' in '" + name + "' is not a single word");
      set.insert(toks[0]);
    }
  }

  bool has(const std::string& category) const { return cats_.count(category) != 0; }

  const std::unordered_set<std::string>& words(const std::string& category) const {
    auto it = cats_.find(category);
    if (it == cats_.end())
      throw std::runtime_error("unknown lexicon category '" + category +
                               "'; known: " + known_categories());
    return it->second;
  }

  std::string known_categories() const {
    std::string s;
    for (const auto& [name, _] : cats_) s += (s.empty() ? "" : ", ") + name;
    return s.empty() ? "(none)" : s;
  }

  std::vector<std::string> category_names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : cats_) out.push_back(name);
    return out;
  }

  // Format: `category:` header line, one word per line, blank lines ignored.
  static LexiconTable from_file(const std::string& path) {
    LexiconTable lex;
    std::string current;
    auto lines = read_lines(path);
    for (std::size_t t = 0; t < lines.size(); ++t) {
      std::string line = trim(lines[t]);
      if (line.empty() || line[0] == '#') continue;
      if (line.back() == ':') {
        current = line.substr(0, line.size() - 1);
        if (current.empty())
          throw std::runtime_error(path + ":" + std::to_string(t + 1) + ": empty category name");
        lex.cats_[current];  // category may legitimately end up empty-free
        continue;
      }
      if (current.empty())
        throw std::runtime_error(path + ":" + std::to_string(t + 1) +
                                 ": word before any 'category:' header");
      lex.add_category(current, {line});
    }
    return lex;
  }

 private:
  std::map<std::string, std::unordered_set<std::string>> cats_;
};

namespace detail {

// Per-doc matched/total word counts for one category.
inline std::pair<long long, long long> doc_category_counts(const ReviewDoc& doc,
                                                           const std::string& category,
                                                           const LexiconTable& lex) {
  const auto& words = lex.words(category);
  if (doc.has_counts) {
    auto it = doc.counts.find(category);
    return {it == doc.counts.end() ? 0 : it->second, doc.total_words};
  }
  long long matched = 0, total = 0;
  for (const auto& raw : doc.tokens) {
    for (const auto& tok : tokenize(raw)) {
      ++total;
      if (words.count(tok)) ++matched;
    }
  }
  return {matched, total};
}

}  // namespace detail

// Fraction of words in the doc set belonging to the category; 0 when the doc
// set carries no words at all.
inline double category_rate(const std::vector<ReviewDoc>& docs, const std::string& category,
                            const LexiconTable& lex) {
  long long matched = 0, total = 0;
  for (const auto& doc : docs) {
    auto [m, t] = detail::doc_category_counts(doc, category, lex);
    matched += m;
    total += t;
  }
  if (total == 0) return 0.0;
  return static_cast<double>(matched) / static_cast<double>(total);
}

inline double text_category_rate(const std::string& text, const std::string& category,
                                 const LexiconTable& lex) {
  ReviewDoc doc;
  doc.tokens = tokenize(text);
  return category_rate({doc}, category, lex);
}

}  // namespace trustlab
