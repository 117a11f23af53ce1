#pragma once

#include <filesystem>
#include <string>

#include "trustlab/factors/degrees.hpp"
#include "trustlab/io.hpp"

namespace trustlab {

// Writes the inspection dumps: features.csv (per user-context), pairs.csv
// (per ordered pair and context; SET and B computed with default weights),
// plus personality.csv / pagerank.csv when available. read_feature_tables
// reverses the mapping so planted tables round-trip.
inline void write_feature_tables(const std::string& dir, const FeatureTable& ft) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::string features = "user,context,v,p,NoF',Bl,Sd,Inc\n";
  for (int i = 0; i < ft.n; ++i)
    for (int c = 0; c < ft.k; ++c) {
      features += std::to_string(i) + "," + std::to_string(c) + "," +
                  fmt_g17(ft.expertise(c, i)) + "," + fmt_g17(ft.interest(c, i)) + "," +
                  fmt_g17(ft.followers_norm[i]) + "," + fmt_g17(ft.swear(c, i)) + "," +
                  fmt_g17(ft.self_disclosure(c, i)) + "," + fmt_g17(ft.inclusive(c, i)) + "\n";
    }
  write_file_atomic(fs::path(dir) / "features.csv", features);

  std::string pairs = "source,target,context,RS,JC,PCC,FQPI,SET,B\n";
  for (int c = 0; c < ft.k; ++c) {
    const Matrix set_m = set_degrees(ft, c);
    const Matrix td_m = td_degrees(ft, c);
    for (int i = 0; i < ft.n; ++i)
      for (int j = 0; j < ft.n; ++j) {
        if (i == j) continue;
        pairs += std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(c) + "," +
                 fmt_g17(ft.rs(i, j)) + "," + fmt_g17(ft.jc(i, j)) + "," +
                 fmt_g17(ft.pcc(i, j)) + ",";
        if (ft.has_fqpi) pairs += fmt_g17(ft.fqpi[c](i, j));
        pairs += "," + fmt_g17(set_m(i, j)) + "," + fmt_g17(td_m(i, j)) + "\n";
      }
  }
  write_file_atomic(fs::path(dir) / "pairs.csv", pairs);

  if (ft.has_personality) {
    std::string pers = "user,openness,conscientiousness,extraversion,agreeableness,neuroticism\n";
    for (int i = 0; i < ft.n; ++i) {
      pers += std::to_string(i);
      for (int p = 0; p < 5; ++p) pers += "," + fmt_g17(ft.personality_v(i, p));
      pers += "\n";
    }
    write_file_atomic(fs::path(dir) / "personality.csv", pers);
  }

  if (!ft.pagerank_scores.empty()) {
    std::string pr = "user,rank\n";
    for (int i = 0; i < ft.n; ++i)
      pr += std::to_string(i) + "," + fmt_g17(ft.pagerank_scores[i]) + "\n";
    write_file_atomic(fs::path(dir) / "pagerank.csv", pr);
  }
}

inline FeatureTable read_feature_tables(const std::string& dir, int n, int k) {
  namespace fs = std::filesystem;
  FeatureTable ft;
  ft.init(n, k);

  {
    auto lines = read_lines((fs::path(dir) / "features.csv").string());
    for (std::size_t t = 1; t < lines.size(); ++t) {
      if (lines[t].empty()) continue;
      auto f = split_delimited(lines[t]);
      if (f.size() != 8)
        throw std::runtime_error("features.csv:" + std::to_string(t + 1) + ": expected 8 fields");
      const int i = std::stoi(f[0]);
      const int c = std::stoi(f[1]);
      ft.expertise(c, i) = std::stod(f[2]);
      ft.interest(c, i) = std::stod(f[3]);
      ft.followers_norm[i] = std::stod(f[4]);
      ft.swear(c, i) = std::stod(f[5]);
      ft.self_disclosure(c, i) = std::stod(f[6]);
      ft.inclusive(c, i) = std::stod(f[7]);
    }
  }

  {
    auto lines = read_lines((fs::path(dir) / "pairs.csv").string());
    bool any_fqpi = false;
    for (std::size_t t = 1; t < lines.size(); ++t) {
      if (lines[t].empty()) continue;
      auto f = split_delimited(lines[t]);
      if (f.size() != 9)
        throw std::runtime_error("pairs.csv:" + std::to_string(t + 1) + ": expected 9 fields");
      const int i = std::stoi(f[0]);
      const int j = std::stoi(f[1]);
      const int c = std::stoi(f[2]);
      if (c == 0) {
        ft.rs(i, j) = std::stod(f[3]);
        ft.jc(i, j) = std::stod(f[4]);
        ft.pcc(i, j) = std::stod(f[5]);
      }
      if (!f[6].empty()) {
        any_fqpi = true;
        ft.fqpi[c](i, j) = std::stod(f[6]);
      }
    }
    ft.has_fqpi = any_fqpi;
  }

  const auto pers_path = fs::path(dir) / "personality.csv";
  if (fs::exists(pers_path)) {
    ft.has_personality = true;
    auto lines = read_lines(pers_path.string());
    for (std::size_t t = 1; t < lines.size(); ++t) {
      if (lines[t].empty()) continue;
      auto f = split_delimited(lines[t]);
      const int i = std::stoi(f[0]);
      for (int p = 0; p < 5; ++p) ft.personality_v(i, p) = std::stod(f[1 + p]);
    }
    ft.refresh_personality_sim();
  }

  const auto pr_path = fs::path(dir) / "pagerank.csv";
  if (fs::exists(pr_path)) {
    ft.pagerank_scores.assign(n, 0.0);
    auto lines = read_lines(pr_path.string());
    for (std::size_t t = 1; t < lines.size(); ++t) {
      if (lines[t].empty()) continue;
      auto f = split_delimited(lines[t]);
      ft.pagerank_scores[std::stoi(f[0])] = std::stod(f[1]);
    }
  }

  return ft;
}

}  // namespace trustlab
