#pragma once

#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "trustlab/corpus/types.hpp"
#include "trustlab/io.hpp"

namespace trustlab {

struct Dataset {
  TrustStore trust;
  std::vector<RatingRecord> ratings;
  std::vector<ReviewDoc> reviews;
  IdMap users;
  IdMap contexts;
  DatasetSchema schema;
  std::vector<std::string> warnings;
  std::string id;

  std::string summary() const {
    std::ostringstream ss;
    ss << "users=" << users.size() << " contexts=" << contexts.size()
       << " trust_edges=" << trust.edge_count() << " ratings=" << ratings.size()
       << " reviews=" << reviews.size() << " density=" << fmt_g12(trust.density());
    return ss.str();
  }
};

namespace detail {

inline std::runtime_error row_error(const std::string& file, std::size_t line_no,
                                    const std::string& what) {
  return std::runtime_error(file + ":" + std::to_string(line_no) + ": " + what);
}

inline void check_header(const std::string& file, const std::vector<std::string>& got,
                         const std::vector<std::vector<std::string>>& allowed) {
  for (const auto& a : allowed)
    if (got == a) return;
  std::string msg = file + ": unexpected header; allowed:";
  for (const auto& a : allowed) {
    msg += " [";
    for (std::size_t t = 0; t < a.size(); ++t) msg += (t ? "," : "") + a[t];
    msg += "]";
  }
  throw std::runtime_error(msg);
}

}  // namespace detail

// Reads trust.csv / ratings.csv / reviews.csv from a directory. User and
// context identifiers are interned in first-appearance order scanning trust,
// then ratings, then reviews, so indices are stable and contiguous.
inline Dataset load_review_dataset(const std::string& dir, const DatasetSchema& schema,
                                   const IdMap* preset_users = nullptr,
                                   const IdMap* preset_contexts = nullptr) {
  namespace fs = std::filesystem;
  Dataset ds;
  ds.schema = schema;
  ds.id = fs::path(dir).filename().string();
  if (preset_users) ds.users = *preset_users;
  if (preset_contexts) ds.contexts = *preset_contexts;

  const std::string trust_path = (fs::path(dir) / "trust.csv").string();
  const std::string ratings_path = (fs::path(dir) / "ratings.csv").string();
  const std::string reviews_path = (fs::path(dir) / "reviews.csv").string();
  if (!fs::exists(trust_path)) throw std::runtime_error("missing file: " + trust_path);

  auto trust_lines = read_lines(trust_path);
  if (trust_lines.empty()) throw std::runtime_error(trust_path + ": missing header row");
  auto trust_header = split_delimited(trust_lines[0]);
  detail::check_header("trust.csv", trust_header,
                       {{"source_id", "target_id"},
                        {"source_id", "target_id", "context"},
                        {"source_id", "target_id", "timestamp"},
                        {"source_id", "target_id", "context", "timestamp"}});
  bool trust_has_context = false, trust_has_time = false;
  for (const auto& h : trust_header) {
    if (h == "context") trust_has_context = true;
    if (h == "timestamp") trust_has_time = true;
  }

  std::vector<std::string> rating_lines, review_lines;
  if (fs::exists(ratings_path)) {
    rating_lines = read_lines(ratings_path);
    if (rating_lines.empty()) throw std::runtime_error(ratings_path + ": missing header row");
    detail::check_header("ratings.csv", split_delimited(rating_lines[0]),
                         {{"rater_id", "author_id", "item_id", "context", "score"}});
  } else {
    ds.warnings.push_back("ratings.csv absent; rating-based factors unavailable");
  }
  bool reviews_has_time = false, reviews_are_counts = false;
  if (fs::exists(reviews_path)) {
    review_lines = read_lines(reviews_path);
    if (review_lines.empty()) throw std::runtime_error(reviews_path + ": missing header row");
    auto h = split_delimited(review_lines[0]);
    detail::check_header("reviews.csv", h,
                         {{"author_id", "context", "text"},
                          {"author_id", "context", "timestamp", "text"},
                          {"author_id", "context", "counts_json"},
                          {"author_id", "context", "timestamp", "counts_json"}});
    reviews_has_time = h.size() == 4;
    reviews_are_counts = h.back() == "counts_json";
  } else {
    ds.warnings.push_back("reviews.csv absent; text-based factors unavailable");
  }

  // Pass 1: intern identifiers in deterministic order.
  auto intern_context = [&](const std::string& label) { return ds.contexts.intern(label); };
  for (std::size_t t = 1; t < trust_lines.size(); ++t) {
    if (trust_lines[t].empty()) continue;
    auto f = split_delimited(trust_lines[t]);
    if (f.size() != trust_header.size())
      throw detail::row_error("trust.csv", t + 1, "expected " +
                              std::to_string(trust_header.size()) + " fields");
    ds.users.intern(f[0]);
    ds.users.intern(f[1]);
    if (trust_has_context) intern_context(f[2]);
  }
  for (std::size_t t = 1; t < rating_lines.size(); ++t) {
    if (rating_lines[t].empty()) continue;
    auto f = split_delimited(rating_lines[t]);
    if (f.size() != 5) throw detail::row_error("ratings.csv", t + 1, "expected 5 fields");
    if (schema.has_rater_of_reviews && !f[0].empty()) ds.users.intern(f[0]);
    ds.users.intern(f[1]);
    intern_context(f[3]);
  }
  for (std::size_t t = 1; t < review_lines.size(); ++t) {
    if (review_lines[t].empty()) continue;
    auto f = split_delimited(review_lines[t]);
    ds.users.intern(f[0]);
    if (f.size() >= 2) intern_context(f[1]);
  }
  if (ds.contexts.size() == 0) ds.contexts.intern("all");

  // Pass 2: records.
  ds.trust = TrustStore(ds.users.size(), ds.contexts.size());
  for (std::size_t t = 1; t < trust_lines.size(); ++t) {
    if (trust_lines[t].empty()) continue;
    auto f = split_delimited(trust_lines[t]);
    int s = *ds.users.find(f[0]);
    int g = *ds.users.find(f[1]);
    int c = trust_has_context ? *ds.contexts.find(f[2]) : 0;
    std::int64_t time = kNoTime;
    if (trust_has_time && schema.has_timestamps) {
      const std::string& ts = f[trust_has_context ? 3 : 2];
      long long v = 0;
      if (!ts.empty()) {
        if (!parse_long(ts, v)) throw detail::row_error("trust.csv", t + 1, "bad timestamp '" + ts + "'");
        time = v;
      }
    }
    switch (ds.trust.add_edge(s, g, c, time)) {
      case TrustStore::Add::added:
        break;
      case TrustStore::Add::duplicate:
        ds.warnings.push_back("trust.csv:" + std::to_string(t + 1) + ": duplicate edge (" +
                              f[0] + "," + f[1] + ") deduplicated");
        break;
      case TrustStore::Add::self_edge:
        ds.warnings.push_back("trust.csv:" + std::to_string(t + 1) + ": self-edge (" + f[0] +
                              ") rejected");
        break;
    }
  }

  for (std::size_t t = 1; t < rating_lines.size(); ++t) {
    if (rating_lines[t].empty()) continue;
    auto f = split_delimited(rating_lines[t]);
    RatingRecord r;
    r.rater = (schema.has_rater_of_reviews && !f[0].empty()) ? *ds.users.find(f[0]) : -1;
    r.author = *ds.users.find(f[1]);
    r.item = f[2];
    r.context = *ds.contexts.find(f[3]);
    if (!parse_double(f[4], r.score))
      throw detail::row_error("ratings.csv", t + 1, "bad score '" + f[4] + "'");
    if (r.score < schema.scale.min || r.score > schema.scale.max)
      throw detail::row_error("ratings.csv", t + 1,
                              "score " + f[4] + " outside declared scale [" +
                              fmt_g12(schema.scale.min) + "," + fmt_g12(schema.scale.max) + "]");
    if (r.rater >= 0 && r.rater == r.author)
      throw detail::row_error("ratings.csv", t + 1, "rater equals review author");
    ds.ratings.push_back(std::move(r));
  }

  for (std::size_t t = 1; t < review_lines.size(); ++t) {
    if (review_lines[t].empty()) continue;
    auto f = split_delimited(review_lines[t]);
    std::size_t want = 2 + (reviews_has_time ? 1 : 0) + 1;
    if (f.size() != want) throw detail::row_error("reviews.csv", t + 1, "expected " +
                                                  std::to_string(want) + " fields");
    ReviewDoc doc;
    doc.author = *ds.users.find(f[0]);
    doc.context = *ds.contexts.find(f[1]);
    std::size_t body = 2;
    if (reviews_has_time) {
      long long v = 0;
      if (!f[2].empty()) {
        if (!parse_long(f[2], v)) throw detail::row_error("reviews.csv", t + 1, "bad timestamp '" + f[2] + "'");
        doc.time = v;
      }
      body = 3;
    }
    if (reviews_are_counts) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(f[body]);
      } catch (const std::exception& e) {
        throw detail::row_error("reviews.csv", t + 1, std::string("bad counts_json: ") + e.what());
      }
      doc.has_counts = true;
      if (!j.contains("total") || !j["total"].is_number_integer())
        throw detail::row_error("reviews.csv", t + 1, "counts_json needs integer 'total'");
      doc.total_words = j["total"].get<long long>();
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.key() == "total") continue;
        long long c = it.value().get<long long>();
        if (c < 0 || c > doc.total_words)
          throw detail::row_error("reviews.csv", t + 1,
                                  "count for '" + it.key() + "' outside [0,total]");
        doc.counts[it.key()] = c;
      }
    } else {
      std::istringstream ss(f[body]);
      std::string tok;
      while (ss >> tok) doc.tokens.push_back(tok);
    }
    ds.reviews.push_back(std::move(doc));
  }

  return ds;
}

// Serializes a Dataset back to a directory in the same three-file format,
// plus dataset.json (schema, shape) and users.csv / contexts.csv sidecar maps
// so a round trip preserves indices exactly.
inline void write_dataset_dir(const std::string& dir, const Dataset& ds) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  std::string trust = "source_id,target_id,context,timestamp\n";
  for (const auto& e : ds.trust.edges()) {
    trust += ds.users.name(e.source) + "," + ds.users.name(e.target) + "," +
             ds.contexts.name(e.context) + ",";
    if (e.time != kNoTime) trust += std::to_string(e.time);
    trust += "\n";
  }
  write_file_atomic(fs::path(dir) / "trust.csv", trust);

  std::string ratings = "rater_id,author_id,item_id,context,score\n";
  for (const auto& r : ds.ratings) {
    ratings += (r.rater >= 0 ? ds.users.name(r.rater) : std::string()) + "," +
               ds.users.name(r.author) + "," + quote_field(r.item) + "," +
               ds.contexts.name(r.context) + "," + fmt_g17(r.score) + "\n";
  }
  write_file_atomic(fs::path(dir) / "ratings.csv", ratings);

  bool any_counts = false;
  for (const auto& d : ds.reviews) any_counts |= d.has_counts;
  std::string reviews = std::string("author_id,context,timestamp,") +
                        (any_counts ? "counts_json" : "text") + "\n";
  for (const auto& d : ds.reviews) {
    reviews += ds.users.name(d.author) + "," + ds.contexts.name(d.context) + ",";
    if (d.time != kNoTime) reviews += std::to_string(d.time);
    reviews += ",";
    if (any_counts) {
      nlohmann::json j;
      j["total"] = d.total_words;
      for (const auto& [k, v] : d.counts) j[k] = v;
      reviews += quote_field(j.dump());
    } else {
      std::string text;
      for (std::size_t t = 0; t < d.tokens.size(); ++t)
        text += (t ? " " : "") + d.tokens[t];
      reviews += quote_field(text);
    }
    reviews += "\n";
  }
  write_file_atomic(fs::path(dir) / "reviews.csv", reviews);

  std::string users = "index,name\n";
  for (int i = 0; i < ds.users.size(); ++i)
    users += std::to_string(i) + "," + quote_field(ds.users.name(i)) + "\n";
  write_file_atomic(fs::path(dir) / "users.csv", users);
  std::string contexts = "index,name\n";
  for (int c = 0; c < ds.contexts.size(); ++c)
    contexts += std::to_string(c) + "," + quote_field(ds.contexts.name(c)) + "\n";
  write_file_atomic(fs::path(dir) / "contexts.csv", contexts);

  nlohmann::json meta;
  meta["id"] = ds.id;
  meta["scale_min"] = ds.schema.scale.min;
  meta["scale_max"] = ds.schema.scale.max;
  meta["has_rater_of_reviews"] = ds.schema.has_rater_of_reviews;
  meta["has_timestamps"] = ds.schema.has_timestamps;
  meta["n"] = ds.users.size();
  meta["k"] = ds.contexts.size();
  write_file_atomic(fs::path(dir) / "dataset.json", meta.dump(2) + "\n");
}

// Loads a directory previously written by write_dataset_dir (or by synth):
// dataset.json supplies the schema and the sidecar maps pin the indices.
inline Dataset load_dataset_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  const std::string meta_path = (fs::path(dir) / "dataset.json").string();
  if (!fs::exists(meta_path))
    throw std::runtime_error("not a normalized dataset dir (missing dataset.json): " + dir);
  nlohmann::json meta = nlohmann::json::parse(read_file(meta_path));
  DatasetSchema schema;
  schema.scale.min = meta.value("scale_min", 1.0);
  schema.scale.max = meta.value("scale_max", 5.0);
  schema.has_rater_of_reviews = meta.value("has_rater_of_reviews", true);
  schema.has_timestamps = meta.value("has_timestamps", true);

  auto load_map = [&](const std::string& file) {
    IdMap m;
    const std::string p = (fs::path(dir) / file).string();
    if (fs::exists(p)) {
      auto lines = read_lines(p);
      for (std::size_t t = 1; t < lines.size(); ++t) {
        if (lines[t].empty()) continue;
        auto f = split_delimited(lines[t]);
        m.intern(f.at(1));
      }
    }
    return m;
  };
  IdMap users = load_map("users.csv");
  IdMap contexts = load_map("contexts.csv");

  Dataset ds = load_review_dataset(dir, schema, users.size() ? &users : nullptr,
                                   contexts.size() ? &contexts : nullptr);
  if (meta.contains("id")) ds.id = meta["id"].get<std::string>();
  return ds;
}

}  // namespace trustlab
