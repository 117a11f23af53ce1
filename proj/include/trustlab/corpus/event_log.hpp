#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "trustlab/corpus/types.hpp"
#include "trustlab/io.hpp"

namespace trustlab {

struct Tweet {
  std::string id;
  int author = 0;
  std::int64_t time = 0;
  std::string text;
};

struct Retweet {
  int source = 0;  // the retweeter (trustor)
  int target = 0;  // author of the referenced tweet (trustee)
  std::int64_t time = 0;
  int tweet_index = -1;
};

struct BioRecord {
  int user = 0;
  std::string text;
};

struct FollowerRecord {
  int user = 0;
  std::int64_t time = 0;
  long long followers = 0;
  long long followees = 0;
};

// Time-stamped Twitter-style activity. Retweets are the trust proxy:
// source retweeting target's tweet means source trusts target.
struct EventLog {
  IdMap users;
  std::vector<Tweet> tweets;
  std::vector<Retweet> retweets;
  std::vector<BioRecord> bios;
  std::vector<FollowerRecord> follower_counts;
  std::vector<std::string> warnings;

  std::size_t unique_pair_count() const {
    std::set<std::pair<int, int>> pairs;
    for (const auto& r : retweets) pairs.insert({r.source, r.target});
    return pairs.size();
  }

  std::map<std::int64_t, int> retweets_per_day() const {
    std::map<std::int64_t, int> out;
    for (const auto& r : retweets) out[r.time / 86400]++;
    return out;
  }

  // Tweets of one author sorted by time (index pairs into tweets).
  std::vector<int> tweets_of(int author) const {
    std::vector<int> out;
    for (int t = 0; t < static_cast<int>(tweets.size()); ++t)
      if (tweets[t].author == author) out.push_back(t);
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) {
      return tweets[a].time < tweets[b].time;
    });
    return out;
  }
};

// One JSON object per line: {"kind":"tweet","id":...,"user":...,"time":...,
// "text":...} | {"kind":"retweet","user":...,"time":...,"tweet":...}
// | {"kind":"bio","user":...,"text":...} | {"kind":"followers","user":...,
// "time":...,"followers":...,"followees":...}. Timestamps are integer epoch
// seconds. A retweet's target is the referenced tweet's author; an explicit
// "target" field, when present, must agree.
inline EventLog load_event_log(const std::string& path) {
  EventLog log;
  std::unordered_map<std::string, int> tweet_index;
  auto lines = read_lines(path);
  for (std::size_t t = 0; t < lines.size(); ++t) {
    const std::string& line = lines[t];
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(t + 1);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(where + ": bad JSON: " + e.what());
    }
    const std::string kind = j.value("kind", "");
    auto need_time = [&]() -> std::int64_t {
      if (!j.contains("time") || !j["time"].is_number_integer())
        throw std::runtime_error(where + ": missing or non-integer 'time'");
      return j["time"].get<std::int64_t>();
    };
    auto need_user = [&](const char* field) -> int {
      if (!j.contains(field) || !j[field].is_string())
        throw std::runtime_error(where + ": missing '" + std::string(field) + "'");
      return log.users.intern(j[field].get<std::string>());
    };
    if (kind == "tweet") {
      Tweet tw;
      tw.id = j.value("id", "");
      if (tw.id.empty()) throw std::runtime_error(where + ": tweet needs an 'id'");
      tw.author = need_user("user");
      tw.time = need_time();
      tw.text = j.value("text", "");
      if (tweet_index.count(tw.id))
        throw std::runtime_error(where + ": duplicate tweet id '" + tw.id + "'");
      tweet_index[tw.id] = static_cast<int>(log.tweets.size());
      log.tweets.push_back(std::move(tw));
    } else if (kind == "retweet") {
      Retweet rt;
      rt.source = need_user("user");
      rt.time = need_time();
      const std::string ref = j.value("tweet", "");
      auto it = tweet_index.find(ref);
      if (it == tweet_index.end())
        throw std::runtime_error(where + ": retweet references unknown tweet '" + ref + "'");
      rt.tweet_index = it->second;
      rt.target = log.tweets[it->second].author;
      if (j.contains("target")) {
        int claimed = log.users.intern(j["target"].get<std::string>());
        if (claimed != rt.target)
          throw std::runtime_error(where + ": retweet 'target' disagrees with tweet author");
      }
      if (rt.time < log.tweets[it->second].time) {
        log.warnings.push_back(where + ": retweet predates its tweet; rejected");
        continue;
      }
      log.retweets.push_back(rt);
    } else if (kind == "bio") {
      BioRecord b;
      b.user = need_user("user");
      b.text = j.value("text", "");
      log.bios.push_back(std::move(b));
    } else if (kind == "followers") {
      FollowerRecord f;
      f.user = need_user("user");
      f.time = need_time();
      f.followers = j.value("followers", 0LL);
      f.followees = j.value("followees", 0LL);
      if (f.followers < 0 || f.followees < 0)
        throw std::runtime_error(where + ": negative follower counts");
      log.follower_counts.push_back(f);
    } else {
      throw std::runtime_error(where + ": unknown record kind '" + kind + "'");
    }
  }
  return log;
}

inline void write_event_log(const std::string& path, const EventLog& log) {
  std::string out;
  // Tweets first so every retweet reference resolves on reload.
  for (const auto& tw : log.tweets) {
    nlohmann::json j;
    j["kind"] = "tweet";
    j["id"] = tw.id;
    j["user"] = log.users.name(tw.author);
    j["time"] = tw.time;
    j["text"] = tw.text;
    out += j.dump() + "\n";
  }
  for (const auto& b : log.bios) {
    nlohmann::json j;
    j["kind"] = "bio";
    j["user"] = log.users.name(b.user);
    j["text"] = b.text;
    out += j.dump() + "\n";
  }
  for (const auto& f : log.follower_counts) {
    nlohmann::json j;
    j["kind"] = "followers";
    j["user"] = log.users.name(f.user);
    j["time"] = f.time;
    j["followers"] = f.followers;
    j["followees"] = f.followees;
    out += j.dump() + "\n";
  }
  for (const auto& r : log.retweets) {
    nlohmann::json j;
    j["kind"] = "retweet";
    j["user"] = log.users.name(r.source);
    j["time"] = r.time;
    j["tweet"] = log.tweets[r.tweet_index].id;
    out += j.dump() + "\n";
  }
  write_file_atomic(path, out);
}

}  // namespace trustlab
