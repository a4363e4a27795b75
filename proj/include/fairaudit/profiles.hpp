#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"

namespace fairaudit {

enum class Strategy { Rand, Freq, RecFreq };

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Rand: return "rand";
    case Strategy::Freq: return "freq";
    case Strategy::RecFreq: return "rec-freq";
  }
  return "unknown";
}

inline Strategy parse_strategy(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "rand") return Strategy::Rand;
  if (v == "freq") return Strategy::Freq;
  if (v == "rec-freq" || v == "recfreq") return Strategy::RecFreq;
  throw ConfigError("unknown sampling strategy: " + std::string(s));
}

struct ProfileItem {
  std::string item_id;
  std::string title;
  double weight = 0.0;
  int source_rank = 0;  // 1-based position in sampled order
};

struct Profile {
  std::string user_id;
  Strategy strategy = Strategy::Rand;
  std::vector<ProfileItem> items;
  std::uint64_t sample_seed = 0;
};

/// One worked (history prefix -> next item) pair taken from the tail of the
/// user's train timeline. Never references test items.
struct IclExample {
  std::vector<std::string> history_prefix;  // item titles, time order
  std::string next_item;
};

namespace detail {

inline const std::string& title_of(const Catalog& catalog, const std::string& item_id) {
  const auto found = catalog.items.find(item_id);
  if (found == catalog.items.end()) {
    throw DataError("item " + item_id + " missing from catalog");
  }
  return found->second.title;
}

// Shared ordering for weight-ranked strategies: weight descending, then more
// recent first, then item id ascending. Total and deterministic.
inline bool weighted_before(const Interaction& a, double wa, const Interaction& b, double wb) {
  if (wa != wb) return wa > wb;
  if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
  return a.item_id < b.item_id;
}

}  // namespace detail

/// Samples a natural-language-ready profile from the user's train history.
///
///  - rand: uniform draw without replacement via the seeded generator.
///  - freq: weight = rating, ordered by weight (ties: recency, then id).
///  - rec-freq: weight = alpha * norm_recency + (1 - alpha) * norm_weight,
///    where norm_recency min-max normalizes the timestamp over the user's
///    train set (0 when degenerate) and norm_weight divides by the maximum
///    rating weight. alpha = 0 reduces to freq, alpha = 1 to pure recency.
inline Profile sample_profile(const UserRecord& user, const Catalog& catalog, Strategy strategy,
                              std::size_t length, std::uint64_t seed, double alpha = 0.5) {
  if (user.train.empty()) throw DataError("user " + user.user_id + " has empty train history");
  if (length == 0) throw ConfigError("profile length must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must be in [0, 1]");

  Profile profile;
  profile.user_id = user.user_id;
  profile.strategy = strategy;
  profile.sample_seed = seed;

  struct Scored {
    const Interaction* it;
    double weight;
  };
  std::vector<Scored> scored;
  scored.reserve(user.train.size());

  switch (strategy) {
    case Strategy::Rand: {
      DetRng rng(seed);
      const auto picks = rng.sample_indices(user.train.size(), length);
      for (const std::size_t idx : picks) {
        scored.push_back({&user.train[idx], user.train[idx].rating});
      }
      break;
    }
    case Strategy::Freq: {
      for (const auto& it : user.train) scored.push_back({&it, it.rating});
      std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        return detail::weighted_before(*a.it, a.weight, *b.it, b.weight);
      });
      break;
    }
    case Strategy::RecFreq: {
      std::int64_t min_ts = user.train.front().timestamp;
      std::int64_t max_ts = min_ts;
      double max_weight = 0.0;
      for (const auto& it : user.train) {
        min_ts = std::min(min_ts, it.timestamp);
        max_ts = std::max(max_ts, it.timestamp);
        max_weight = std::max(max_weight, it.rating);
      }
      const double ts_span = static_cast<double>(max_ts - min_ts);
      for (const auto& it : user.train) {
        const double norm_recency =
            ts_span > 0.0 ? static_cast<double>(it.timestamp - min_ts) / ts_span : 0.0;
        const double norm_weight = max_weight > 0.0 ? it.rating / max_weight : 0.0;
        scored.push_back({&it, alpha * norm_recency + (1.0 - alpha) * norm_weight});
      }
      std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        return detail::weighted_before(*a.it, a.weight, *b.it, b.weight);
      });
      break;
    }
  }

  const std::size_t take = std::min(length, scored.size());
  profile.items.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    ProfileItem item;
    item.item_id = scored[i].it->item_id;
    item.title = detail::title_of(catalog, scored[i].it->item_id);
    item.weight = scored[i].weight;
    item.source_rank = static_cast<int>(i + 1);
    profile.items.push_back(std::move(item));
  }
  return profile;
}

/// Builds `n` in-context examples from the most recent train interactions.
/// Example 1 uses the newest train item as the next item with the preceding
/// window as prefix; example 2 shifts back by one. Test items never appear.
inline std::vector<IclExample> select_icl_examples(const UserRecord& user, const Catalog& catalog,
                                                   int n, std::size_t window = 5) {
  if (n < 0 || n > 2) throw ConfigError("icl example count must be 0, 1 or 2");
  if (n == 0) return {};
  const std::size_t m = user.train.size();
  if (m < static_cast<std::size_t>(n) + 1) {
    throw DataError("user " + user.user_id + " has too little history for " +
                    std::to_string(n) + " in-context examples");
  }
  if (window == 0) throw ConfigError("icl prefix window must be positive");

  std::vector<IclExample> examples;
  examples.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const std::size_t next_pos = m - static_cast<std::size_t>(i);
    const std::size_t begin = next_pos >= window ? next_pos - window : 0;
    IclExample ex;
    ex.next_item = detail::title_of(catalog, user.train[next_pos].item_id);
    for (std::size_t p = begin; p < next_pos; ++p) {
      ex.history_prefix.push_back(detail::title_of(catalog, user.train[p].item_id));
    }
    examples.push_back(std::move(ex));
  }
  return examples;
}

}  // namespace fairaudit
