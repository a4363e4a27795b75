#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairaudit/common.hpp"

namespace fairaudit {

/// One timestamped user-item rating event, the atom of ingestion.
struct Interaction {
  std::string user_id;
  std::string item_id;
  double rating = 0.0;
  std::int64_t timestamp = 0;
};

struct ItemMeta {
  std::string title;
  std::optional<int> year;
  std::vector<std::string> genres;
};

struct Catalog {
  std::map<std::string, ItemMeta> items;  // item_id -> meta
};

/// A user with demographics, a time-ordered train history and held-out test
/// interactions. Invariant: max(train timestamps) <= min(test timestamps).
struct UserRecord {
  std::string user_id;
  Gender gender = Gender::Male;
  AgeGroup age_group = AgeGroup::Young;
  int age_years = 0;
  std::vector<Interaction> train;
  std::vector<Interaction> test;

  std::size_t total_interactions() const { return train.size() + test.size(); }
};

struct ActivityBand {
  std::size_t min_interactions = 50;
  std::size_t max_interactions = 500;
};

struct Cohort {
  std::vector<UserRecord> users;
  std::uint64_t selection_seed = 0;
  ActivityBand activity_band;
};

struct Corpus {
  Cohort cohort;
  Catalog catalog;
};

enum class DatasetFormat { MovieLens1M, Tsv };

inline std::string_view to_string(DatasetFormat f) {
  return f == DatasetFormat::MovieLens1M ? "movielens-1m" : "tsv";
}

inline DatasetFormat parse_dataset_format(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "movielens-1m" || v == "ml-1m") return DatasetFormat::MovieLens1M;
  if (v == "tsv") return DatasetFormat::Tsv;
  throw ConfigError("unknown dataset format: " + std::string(s));
}

enum class LinePolicy { Abort, Skip };

struct ParseOptions {
  DatasetFormat format = DatasetFormat::MovieLens1M;
  std::string delimiter;  // empty: format default ("::" or "\t")
  double rating_min = 1.0;
  double rating_max = 5.0;
  LinePolicy policy = LinePolicy::Abort;

  std::string effective_delimiter() const {
    if (!delimiter.empty()) return delimiter;
    return format == DatasetFormat::MovieLens1M ? "::" : "\t";
  }
};

namespace detail {

inline double parse_rating_field(const std::string& field, std::size_t line_no) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric rating '" + field + "'");
  }
  if (consumed != field.size()) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric rating '" + field + "'");
  }
  return value;
}

inline std::int64_t parse_timestamp_field(const std::string& field, std::size_t line_no) {
  try {
    std::size_t consumed = 0;
    const std::int64_t ts = std::stoll(field, &consumed);
    if (consumed != field.size()) throw std::invalid_argument(field);
    return ts;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": bad timestamp '" + field + "'");
  }
}

}  // namespace detail

/// Parses a delimiter-separated ratings stream (user, item, rating, timestamp
/// per line). Well-formed lines map to one Interaction each, input order
/// preserved. Malformed lines abort with the line number, or are skipped and
/// reported through `warnings` under LinePolicy::Skip.
inline std::vector<Interaction> parse_interactions(std::istream& in, const ParseOptions& opts,
                                                   std::vector<std::string>* warnings = nullptr) {
  std::vector<Interaction> out;
  const std::string delim = opts.effective_delimiter();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      const auto fields = split(line, delim);
      if (fields.size() != 4) {
        throw DataError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                        std::to_string(fields.size()));
      }
      Interaction it;
      it.user_id = trim(fields[0]);
      it.item_id = trim(fields[1]);
      it.rating = detail::parse_rating_field(fields[2], line_no);
      it.timestamp = detail::parse_timestamp_field(fields[3], line_no);
      if (it.user_id.empty() || it.item_id.empty()) {
        throw DataError("line " + std::to_string(line_no) + ": empty identifier");
      }
      if (it.rating < opts.rating_min || it.rating > opts.rating_max) {
        throw DataError("line " + std::to_string(line_no) + ": rating " +
                        std::to_string(it.rating) + " outside scale [" +
                        std::to_string(opts.rating_min) + ", " + std::to_string(opts.rating_max) + "]");
      }
      if (it.timestamp <= 0) {
        throw DataError("line " + std::to_string(line_no) + ": nonpositive timestamp");
      }
      out.push_back(std::move(it));
    } catch (const DataError& e) {
      if (opts.policy == LinePolicy::Abort) throw;
      if (warnings) warnings->push_back(e.what());
    }
  }
  return out;
}

inline void serialize_interactions(std::ostream& out, const std::vector<Interaction>& interactions,
                                   const ParseOptions& opts) {
  const std::string delim = opts.effective_delimiter();
  for (const auto& it : interactions) {
    out << it.user_id << delim << it.item_id << delim;
    // Integral ratings are written without a decimal point, matching the
    // source files so the parse -> serialize -> parse round trip is identity.
    if (it.rating == static_cast<double>(static_cast<long long>(it.rating))) {
      out << static_cast<long long>(it.rating);
    } else {
      out << it.rating;
    }
    out << delim << it.timestamp << '\n';
  }
}

struct UserAttrs {
  Gender gender = Gender::Male;
  int age_years = 0;
};

/// Parses a users stream: user, gender, age per line (MovieLens-1M style
/// files carry occupation and zip in trailing fields, which are ignored).
inline std::map<std::string, UserAttrs> parse_users(std::istream& in, const ParseOptions& opts) {
  std::map<std::string, UserAttrs> out;
  const std::string delim = opts.effective_delimiter();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, delim);
    if (fields.size() < 3) {
      throw DataError("users line " + std::to_string(line_no) + ": expected at least 3 fields");
    }
    UserAttrs attrs;
    try {
      attrs.gender = parse_gender(trim(fields[1]));
    } catch (const ConfigError& e) {
      throw DataError("users line " + std::to_string(line_no) + ": " + e.what());
    }
    try {
      attrs.age_years = std::stoi(fields[2]);
    } catch (const std::exception&) {
      throw DataError("users line " + std::to_string(line_no) + ": bad age '" + fields[2] + "'");
    }
    out[trim(fields[0])] = attrs;
  }
  return out;
}

/// Parses an items stream: item, title, genres per line ("|"-separated genre
/// list). A trailing "(dddd)" in the title is also captured as the year.
inline Catalog parse_movies(std::istream& in, const ParseOptions& opts) {
  Catalog catalog;
  const std::string delim = opts.effective_delimiter();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line, delim);
    if (fields.size() < 2) {
      throw DataError("items line " + std::to_string(line_no) + ": expected at least 2 fields");
    }
    ItemMeta meta;
    meta.title = trim(fields[1]);
    if (meta.title.empty()) {
      throw DataError("items line " + std::to_string(line_no) + ": empty title");
    }
    const auto& t = meta.title;
    if (t.size() >= 6 && t.back() == ')' && t[t.size() - 6] == '(') {
      const std::string digits = t.substr(t.size() - 5, 4);
      if (std::all_of(digits.begin(), digits.end(),
                      [](unsigned char c) { return std::isdigit(c); })) {
        meta.year = std::stoi(digits);
      }
    }
    if (fields.size() >= 3) meta.genres = split(fields[2], "|");
    const std::string item_id = trim(fields[0]);
    if (!catalog.items.emplace(item_id, std::move(meta)).second) {
      throw DataError("items line " + std::to_string(line_no) + ": duplicate item id " + item_id);
    }
  }
  return catalog;
}

/// Young below the boundary, Old at or above it (default boundary 35).
inline AgeGroup derive_age_group(int age_years, int boundary = 35) {
  if (age_years <= 0) throw DataError("nonpositive age: " + std::to_string(age_years));
  return age_years < boundary ? AgeGroup::Young : AgeGroup::Old;
}

/// A user's full history before the temporal split.
struct UserHistory {
  std::string user_id;
  Gender gender = Gender::Male;
  AgeGroup age_group = AgeGroup::Young;
  int age_years = 0;
  std::vector<Interaction> events;  // sorted ascending by (timestamp, item_id)
};

/// Groups interactions by user, attaches demographics, and sorts each user's
/// events ascending by timestamp with ties broken by item id.
inline std::vector<UserHistory> assemble_histories(const std::vector<Interaction>& interactions,
                                                   const std::map<std::string, UserAttrs>& attrs,
                                                   int age_boundary = 35) {
  std::map<std::string, UserHistory> by_user;
  for (const auto& it : interactions) {
    auto [pos, inserted] = by_user.try_emplace(it.user_id);
    if (inserted) {
      const auto found = attrs.find(it.user_id);
      if (found == attrs.end()) {
        throw DataError("no demographics for user " + it.user_id);
      }
      pos->second.user_id = it.user_id;
      pos->second.gender = found->second.gender;
      pos->second.age_years = found->second.age_years;
      pos->second.age_group = derive_age_group(found->second.age_years, age_boundary);
    }
    pos->second.events.push_back(it);
  }
  std::vector<UserHistory> out;
  out.reserve(by_user.size());
  for (auto& [id, hist] : by_user) {
    std::sort(hist.events.begin(), hist.events.end(),
              [](const Interaction& a, const Interaction& b) {
                if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
                return a.item_id < b.item_id;
              });
    out.push_back(std::move(hist));
  }
  return out;
}

/// Per-user temporal split: the first ceil(f * m) events become train, the
/// remainder test. Users whose test side would be empty are dropped (returns
/// nullopt) so every evaluated user has ground truth.
inline std::optional<UserRecord> temporal_split(const UserHistory& history, double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train_fraction must be in (0, 1)");
  }
  const std::size_t m = history.events.size();
  if (m == 0) return std::nullopt;
  const auto train_count = static_cast<std::size_t>(
      std::ceil(train_fraction * static_cast<double>(m)));
  if (train_count >= m) return std::nullopt;  // empty test side
  UserRecord user;
  user.user_id = history.user_id;
  user.gender = history.gender;
  user.age_group = history.age_group;
  user.age_years = history.age_years;
  user.train.assign(history.events.begin(), history.events.begin() + train_count);
  user.test.assign(history.events.begin() + train_count, history.events.end());
  return user;
}

/// Draws exactly `n` users uniformly without replacement from those whose
/// total interaction count lies inside the activity band. Deterministic in
/// (input set, band, n, seed); the selected users are returned sorted by id.
inline Cohort select_cohort(const std::vector<UserRecord>& all_users, std::size_t n,
                            const ActivityBand& band, std::uint64_t seed) {
  std::vector<const UserRecord*> eligible;
  for (const auto& u : all_users) {
    const std::size_t total = u.total_interactions();
    if (total >= band.min_interactions && total <= band.max_interactions) {
      eligible.push_back(&u);
    }
  }
  if (eligible.size() < n) {
    throw DataError("cohort shortfall: need " + std::to_string(n) + " users in band [" +
                    std::to_string(band.min_interactions) + ", " +
                    std::to_string(band.max_interactions) + "], found " +
                    std::to_string(eligible.size()));
  }
  std::sort(eligible.begin(), eligible.end(),
            [](const UserRecord* a, const UserRecord* b) { return a->user_id < b->user_id; });
  DetRng rng(seed);
  const auto picks = rng.sample_indices(eligible.size(), n);
  Cohort cohort;
  cohort.selection_seed = seed;
  cohort.activity_band = band;
  cohort.users.reserve(n);
  for (const std::size_t idx : picks) cohort.users.push_back(*eligible[idx]);
  std::sort(cohort.users.begin(), cohort.users.end(),
            [](const UserRecord& a, const UserRecord& b) { return a.user_id < b.user_id; });
  return cohort;
}

struct SplitStats {
  std::size_t users = 0;
  std::size_t train_total = 0;
  std::size_t test_total = 0;

  double mean_train() const {
    return users == 0 ? 0.0 : static_cast<double>(train_total) / static_cast<double>(users);
  }
  double mean_test() const {
    return users == 0 ? 0.0 : static_cast<double>(test_total) / static_cast<double>(users);
  }
};

inline SplitStats split_stats(const Cohort& cohort) {
  SplitStats s;
  s.users = cohort.users.size();
  for (const auto& u : cohort.users) {
    s.train_total += u.train.size();
    s.test_total += u.test.size();
  }
  return s;
}

}  // namespace fairaudit
