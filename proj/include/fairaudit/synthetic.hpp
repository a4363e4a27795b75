#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fairaudit/backend.hpp"
#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"

namespace fairaudit {

/// Controlled quality degradation for offline validation: a recommended slot
/// is filled from the user's ground truth with probability q, degraded to
/// q * (1 - beta) when the user belongs to a targeted (attribute, value)
/// group AND the prompt is not neutral. With beta = 0 the ranker is
/// demographically exchangeable by construction.
struct SyntheticBiasConfig {
  struct Target {
    Attribute attribute = Attribute::Gender;
    std::string value;  // canonical token: male/female/young/old
    double beta = 0.0;  // multiplicative degradation in [0, 1]
  };

  double base_quality = 0.6;
  std::vector<Target> bias;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(base_quality >= 0.0 && base_quality <= 1.0)) {
      throw ConfigError("synthetic base_quality must be in [0, 1]");
    }
    for (const auto& t : bias) {
      if (!(t.beta >= 0.0 && t.beta <= 1.0)) {
        throw ConfigError("synthetic beta must be in [0, 1]");
      }
      if (t.attribute == Attribute::Gender) {
        parse_gender(t.value);
      } else {
        parse_age_group(t.value);
      }
    }
  }
};

namespace detail {

inline bool user_in_target(const UserRecord& user, const SyntheticBiasConfig::Target& target) {
  if (target.attribute == Attribute::Gender) {
    return to_string(user.gender) == target.value;
  }
  return to_string(user.age_group) == target.value;
}

}  // namespace detail

inline double effective_quality(const UserRecord& user, const RankerSpec& spec,
                                const SyntheticBiasConfig& cfg) {
  double q = cfg.base_quality;
  if (spec.is_neutral()) return q;
  for (const auto& target : cfg.bias) {
    if (detail::user_in_target(user, target)) q *= (1.0 - target.beta);
  }
  return q;
}

/// Generates a numbered recommendation list: each of the k slots is one of
/// the user's ground-truth items with probability q' (without replacement),
/// otherwise a random non-ground-truth catalog item. Deterministic in
/// (cfg.seed, user, spec tag, k); the draw seed deliberately excludes the
/// user's demographic values so that relabeling a group cannot change any
/// draw when beta = 0.
inline RawCompletion synthetic_rank(const UserRecord& user, const RankerSpec& spec, int k,
                                    const SyntheticBiasConfig& cfg, const Catalog& catalog) {
  if (catalog.items.empty()) throw DataError("synthetic_rank: empty catalog");
  cfg.validate();
  const double quality = effective_quality(user, spec, cfg);

  std::vector<std::string> truth_pool;
  truth_pool.reserve(user.test.size());
  for (const auto& it : user.test) truth_pool.push_back(it.item_id);
  std::vector<std::string> other_pool;
  other_pool.reserve(catalog.items.size());
  for (const auto& [item_id, meta] : catalog.items) {
    if (std::find(truth_pool.begin(), truth_pool.end(), item_id) == truth_pool.end()) {
      other_pool.push_back(item_id);
    }
  }

  DetRng rng(DetRng::mix(DetRng::mix(cfg.seed, hash_string(user.user_id)),
                         hash_string(spec.tag())));
  std::string text;
  int produced = 0;
  for (int slot = 0; slot < k; ++slot) {
    std::vector<std::string>* pool = nullptr;
    if (rng.uniform_double() < quality && !truth_pool.empty()) {
      pool = &truth_pool;
    } else if (!other_pool.empty()) {
      pool = &other_pool;
    } else if (!truth_pool.empty()) {
      pool = &truth_pool;
    } else {
      break;
    }
    const std::size_t pick = rng.uniform_index(pool->size());
    const std::string item_id = (*pool)[pick];
    pool->erase(pool->begin() + static_cast<std::ptrdiff_t>(pick));
    const auto meta = catalog.items.find(item_id);
    text += std::to_string(++produced) + ". " +
            (meta != catalog.items.end() ? meta->second.title : item_id) + "\n";
  }

  RawCompletion completion;
  completion.text = std::move(text);
  completion.backend_tag = "synthetic";
  return completion;
}

class SyntheticBackend : public Backend {
 public:
  explicit SyntheticBackend(SyntheticBiasConfig cfg) : cfg_(std::move(cfg)) { cfg_.validate(); }

  RawCompletion execute(const RankerRequest& request, const BackendContext& ctx) override {
    if (!ctx.user || !ctx.catalog) {
      throw ConfigError("synthetic backend needs user and catalog context");
    }
    RawCompletion completion =
        synthetic_rank(*ctx.user, request.prompt.ranker, request.prompt.k, cfg_, *ctx.catalog);
    completion.request_key = request.request_key;
    return completion;
  }

  std::string_view tag() const override { return "synthetic"; }

  const SyntheticBiasConfig& config() const { return cfg_; }

 private:
  SyntheticBiasConfig cfg_;
};

/// Deterministic corpus factory for offline validation and power studies.
struct SyntheticCorpusConfig {
  std::size_t users = 200;
  std::size_t catalog_size = 400;
  std::size_t min_events = 20;
  std::size_t max_events = 60;
  double train_fraction = 0.8;
  int age_boundary = 35;
  std::uint64_t seed = 1;
};

inline Catalog make_synthetic_catalog(std::size_t size) {
  // Title fragments chosen to stay clear of the demographic lexicon.
  static const char* adjectives[] = {"Crimson",  "Silent",  "Golden", "Hidden", "Broken",
                                     "Electric", "Distant", "Frozen", "Velvet", "Hollow"};
  static const char* nouns[] = {"Harbor", "Mountain", "Signal", "Garden", "Mirror",
                                "Voyage", "Teacher", "Circus", "Winter", "Lantern"};
  Catalog catalog;
  for (std::size_t i = 0; i < size; ++i) {
    char id[16];
    std::snprintf(id, sizeof(id), "m%05zu", i + 1);
    ItemMeta meta;
    meta.title = std::string(adjectives[i % 10]) + " " + nouns[(i / 10) % 10] + " " +
                 std::to_string(i + 1) + " (19" + std::to_string(70 + i % 30) + ")";
    meta.year = 1970 + static_cast<int>(i % 30);
    meta.genres = {"Drama"};
    catalog.items.emplace(id, std::move(meta));
  }
  return catalog;
}

inline Corpus make_synthetic_corpus(const SyntheticCorpusConfig& cfg) {
  if (cfg.max_events < cfg.min_events || cfg.min_events < 5) {
    throw ConfigError("synthetic corpus: need max_events >= min_events >= 5");
  }
  if (cfg.catalog_size < cfg.max_events) {
    throw ConfigError("synthetic corpus: catalog smaller than a user's history");
  }
  Corpus corpus;
  corpus.catalog = make_synthetic_catalog(cfg.catalog_size);
  std::vector<std::string> item_ids;
  item_ids.reserve(corpus.catalog.items.size());
  for (const auto& [item_id, meta] : corpus.catalog.items) item_ids.push_back(item_id);

  DetRng rng(cfg.seed);
  corpus.cohort.selection_seed = cfg.seed;
  corpus.cohort.activity_band = {cfg.min_events, cfg.max_events};
  corpus.cohort.users.reserve(cfg.users);

  for (std::size_t u = 0; u < cfg.users; ++u) {
    char uid[16];
    std::snprintf(uid, sizeof(uid), "u%05zu", u + 1);

    UserHistory history;
    history.user_id = uid;
    history.gender = rng.uniform_index(2) == 0 ? Gender::Male : Gender::Female;
    history.age_years = 18 + static_cast<int>(rng.uniform_index(45));
    history.age_group = derive_age_group(history.age_years, cfg.age_boundary);

    const std::size_t events =
        cfg.min_events + rng.uniform_index(cfg.max_events - cfg.min_events + 1);
    const auto picks = rng.sample_indices(item_ids.size(), events);
    std::int64_t ts = 1'000'000'000 + static_cast<std::int64_t>(rng.uniform_index(1'000'000));
    for (const std::size_t idx : picks) {
      Interaction it;
      it.user_id = history.user_id;
      it.item_id = item_ids[idx];
      it.rating = 1.0 + static_cast<double>(rng.uniform_index(5));
      ts += 3600 + static_cast<std::int64_t>(rng.uniform_index(86'400));
      it.timestamp = ts;
      history.events.push_back(std::move(it));
    }
    if (auto user = temporal_split(history, cfg.train_fraction)) {
      corpus.cohort.users.push_back(std::move(*user));
    }
  }
  return corpus;
}

}  // namespace fairaudit
