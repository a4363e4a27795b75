#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fairaudit/backend.hpp"
#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/extraction.hpp"
#include "fairaudit/fairness.hpp"
#include "fairaudit/http_backend.hpp"
#include "fairaudit/metrics.hpp"
#include "fairaudit/profiles.hpp"
#include "fairaudit/prompts.hpp"
#include "fairaudit/sha256.hpp"
#include "fairaudit/synthetic.hpp"

namespace fairaudit {

struct DatasetConfig {
  DatasetFormat format = DatasetFormat::MovieLens1M;
  std::string ratings_path;
  std::string users_path;
  std::string movies_path;
  std::string delimiter;  // empty: format default
  double rating_min = 1.0;
  double rating_max = 5.0;
  LinePolicy line_policy = LinePolicy::Abort;
};

struct CohortConfig {
  std::size_t size = 80;
  ActivityBand band{50, 500};
  std::uint64_t seed = 42;
  int age_boundary = 35;
};

struct ProfileConfig {
  std::size_t length = 20;
  double alpha = 0.5;
  std::uint64_t seed = 7;
  std::size_t icl_window = 5;
};

struct GridConfig {
  std::vector<Condition> conditions;
  std::vector<Strategy> strategies;
  std::vector<RankerSpec> rankers;
};

struct BackendConfig {
  std::string kind = "synthetic";  // http | replay | synthetic
  std::string model = "offline-synthetic";
  double temperature = 0.0;
  int max_tokens = 512;
  std::string endpoint;
  std::string api_key_env = "FAIRAUDIT_API_KEY";
  std::string replay_store;  // replay source, or record sink when record=true
  bool record = false;
  std::size_t max_in_flight = 4;
  int max_attempts = 3;
  int backoff_initial_ms = 250;
  SyntheticBiasConfig synthetic;
};

struct FairnessConfig {
  ThresholdPolicy policy;
  TestKind test = TestKind::WelchT;
  std::vector<DisparityKind> notions = {DisparityKind::Nsd, DisparityKind::Ncsd,
                                        DisparityKind::Intrinsic};
  std::map<Attribute, IntrinsicTarget> intrinsic_targets;  // default: uniform parity
};

struct AuditConfig {
  int config_version = 1;
  DatasetConfig dataset;
  CohortConfig cohort;
  double train_fraction = 0.8;
  ProfileConfig profiles;
  GridConfig grid;
  int k = 10;
  std::vector<Metric> metrics = {Metric::Hit, Metric::Rank};
  BackendConfig backend;
  FairnessConfig fairness;
  double max_failed_fraction = 0.2;
  std::string template_path;  // optional prompt template override
  std::string output_dir = "out";

  nlohmann::json source_json;  // snapshot for the manifest
  std::string config_digest;

  void validate(bool check_paths) const;
  static AuditConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
  static AuditConfig from_file(const std::string& path);
};

inline void AuditConfig::validate(bool check_paths) const {
  if (config_version != 1) throw ConfigError("unsupported config_version");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ConfigError("train_fraction must be in (0, 1)");
  }
  if (k < 1) throw ConfigError("k must be at least 1");
  if (cohort.size == 0) throw ConfigError("cohort size must be positive");
  if (cohort.band.min_interactions > cohort.band.max_interactions) {
    throw ConfigError("activity band is inverted");
  }
  if (profiles.length == 0) throw ConfigError("profile length must be positive");
  if (!(profiles.alpha >= 0.0 && profiles.alpha <= 1.0)) {
    throw ConfigError("profile alpha must be in [0, 1]");
  }
  if (grid.conditions.empty() || grid.strategies.empty() || grid.rankers.empty()) {
    throw ConfigError("grid axes must be nonempty");
  }
  if (metrics.empty()) throw ConfigError("at least one metric is required");
  if (!fairness.notions.empty()) {
    const bool has_neutral =
        std::any_of(grid.rankers.begin(), grid.rankers.end(),
                    [](const RankerSpec& s) { return s.is_neutral(); });
    if (!has_neutral) {
      throw ConfigError("fairness notions need the neutral ranker in the grid");
    }
  }
  fairness.policy.validate();
  if (!(max_failed_fraction >= 0.0 && max_failed_fraction <= 1.0)) {
    throw ConfigError("max_failed_fraction must be in [0, 1]");
  }
  if (backend.kind != "http" && backend.kind != "replay" && backend.kind != "synthetic") {
    throw ConfigError("unknown backend kind: " + backend.kind);
  }
  if (backend.kind == "http" && backend.endpoint.empty()) {
    throw ConfigError("http backend needs an endpoint");
  }
  if (backend.kind == "replay" && backend.replay_store.empty()) {
    throw ConfigError("replay backend needs a replay_store path");
  }
  if (backend.max_in_flight == 0) throw ConfigError("max_in_flight must be positive");
  backend.synthetic.validate();
  if (check_paths) {
    for (const std::string* p :
         {&dataset.ratings_path, &dataset.users_path, &dataset.movies_path}) {
      if (p->empty() || !std::filesystem::exists(*p)) {
        throw ConfigError("dataset file missing: " + (p->empty() ? "<unset>" : *p));
      }
    }
    if (!template_path.empty() && !std::filesystem::exists(template_path)) {
      throw ConfigError("template file missing: " + template_path);
    }
    if (backend.kind == "replay" && !backend.record &&
        !std::filesystem::exists(backend.replay_store)) {
      throw ConfigError("replay store missing: " + backend.replay_store);
    }
  }
}

namespace detail {

inline std::string resolve_path(const std::filesystem::path& base_dir, const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return p.string();
  return (base_dir / p).lexically_normal().string();
}

inline TestKind parse_test_kind(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "welch" || v == "welch_t") return TestKind::WelchT;
  if (v == "pooled" || v == "pooled_t") return TestKind::PooledT;
  if (v == "mann-whitney" || v == "mann_whitney" || v == "mwu") return TestKind::MannWhitney;
  throw ConfigError("unknown significance test: " + std::string(s));
}

}  // namespace detail

inline AuditConfig AuditConfig::from_json(const nlohmann::json& j,
                                          const std::filesystem::path& base_dir) {
  AuditConfig cfg;
  cfg.source_json = j;
  cfg.config_digest = sha256_hex(j.dump());
  cfg.config_version = j.value("config_version", 1);

  if (j.contains("dataset")) {
    const auto& d = j.at("dataset");
    cfg.dataset.format = parse_dataset_format(d.value("format", "movielens-1m"));
    cfg.dataset.ratings_path = detail::resolve_path(base_dir, d.value("ratings", ""));
    cfg.dataset.users_path = detail::resolve_path(base_dir, d.value("users", ""));
    cfg.dataset.movies_path = detail::resolve_path(base_dir, d.value("movies", ""));
    cfg.dataset.delimiter = d.value("delimiter", "");
    cfg.dataset.rating_min = d.value("rating_min", 1.0);
    cfg.dataset.rating_max = d.value("rating_max", 5.0);
    cfg.dataset.line_policy =
        to_lower(d.value("line_policy", "abort")) == "skip" ? LinePolicy::Skip
                                                            : LinePolicy::Abort;
  }
  if (j.contains("cohort")) {
    const auto& c = j.at("cohort");
    cfg.cohort.size = c.value("size", std::size_t{80});
    if (c.contains("band")) {
      cfg.cohort.band.min_interactions = c.at("band").at(0).get<std::size_t>();
      cfg.cohort.band.max_interactions = c.at("band").at(1).get<std::size_t>();
    }
    cfg.cohort.seed = c.value("seed", std::uint64_t{42});
    cfg.cohort.age_boundary = c.value("age_boundary", 35);
  }
  cfg.train_fraction = j.value("train_fraction", 0.8);
  if (j.contains("profiles")) {
    const auto& p = j.at("profiles");
    cfg.profiles.length = p.value("length", std::size_t{20});
    cfg.profiles.alpha = p.value("alpha", 0.5);
    cfg.profiles.seed = p.value("seed", std::uint64_t{7});
    cfg.profiles.icl_window = p.value("icl_window", std::size_t{5});
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    for (const auto& c : g.value("conditions", std::vector<std::string>{})) {
      cfg.grid.conditions.push_back(parse_condition(c));
    }
    for (const auto& s : g.value("strategies", std::vector<std::string>{})) {
      cfg.grid.strategies.push_back(parse_strategy(s));
    }
    for (const auto& r : g.value("rankers", std::vector<std::string>{})) {
      cfg.grid.rankers.push_back(parse_ranker_spec(r));
    }
  }
  cfg.k = j.value("k", 10);
  if (j.contains("metrics")) {
    cfg.metrics.clear();
    for (const auto& m : j.at("metrics")) cfg.metrics.push_back(parse_metric(m.get<std::string>()));
  }
  if (j.contains("backend")) {
    const auto& b = j.at("backend");
    cfg.backend.kind = b.value("kind", "synthetic");
    cfg.backend.model = b.value("model", "offline-synthetic");
    cfg.backend.temperature = b.value("temperature", 0.0);
    cfg.backend.max_tokens = b.value("max_tokens", 512);
    cfg.backend.endpoint = b.value("endpoint", "");
    cfg.backend.api_key_env = b.value("api_key_env", "FAIRAUDIT_API_KEY");
    cfg.backend.replay_store = detail::resolve_path(base_dir, b.value("replay_store", ""));
    cfg.backend.record = b.value("record", false);
    cfg.backend.max_in_flight = b.value("max_in_flight", std::size_t{4});
    cfg.backend.max_attempts = b.value("max_attempts", 3);
    cfg.backend.backoff_initial_ms = b.value("backoff_initial_ms", 250);
    if (b.contains("synthetic")) {
      const auto& s = b.at("synthetic");
      cfg.backend.synthetic.base_quality = s.value("base_quality", 0.6);
      cfg.backend.synthetic.seed = s.value("seed", std::uint64_t{1});
      for (const auto& t : s.value("bias", nlohmann::json::array())) {
        SyntheticBiasConfig::Target target;
        target.attribute = parse_attribute(t.at("attribute").get<std::string>());
        target.value = to_lower(t.at("value").get<std::string>());
        target.beta = t.at("beta").get<double>();
        cfg.backend.synthetic.bias.push_back(std::move(target));
      }
    }
  }
  if (j.contains("fairness")) {
    const auto& f = j.at("fairness");
    cfg.fairness.policy.small_bound = f.value("small_bound", 0.06);
    cfg.fairness.policy.large_bound = f.value("large_bound", 0.10);
    cfg.fairness.policy.alpha = f.value("alpha", 0.05);
    cfg.fairness.test = detail::parse_test_kind(f.value("test", "welch"));
    if (f.contains("notions")) {
      cfg.fairness.notions.clear();
      for (const auto& n : f.at("notions")) {
        cfg.fairness.notions.push_back(parse_disparity_kind(n.get<std::string>()));
      }
    }
    if (f.contains("intrinsic_targets")) {
      for (const auto& [key, value] : f.at("intrinsic_targets").items()) {
        IntrinsicTarget target;
        target.first = value.at(0).get<double>();
        target.second = value.at(1).get<double>();
        cfg.fairness.intrinsic_targets[parse_attribute(key)] = target;
      }
    }
  }
  cfg.max_failed_fraction = j.value("max_failed_fraction", 0.2);
  cfg.template_path = detail::resolve_path(base_dir, j.value("template", ""));
  cfg.output_dir = detail::resolve_path(base_dir, j.value("output_dir", "out"));
  return cfg;
}

inline AuditConfig AuditConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  return from_json(j, std::filesystem::path(path).parent_path());
}

struct LoadedCorpus {
  Corpus corpus;
  std::size_t dropped_users = 0;   // empty or test-side-empty histories
  std::vector<std::string> parse_warnings;
  SplitStats stats;
};

/// Full ingestion path: ratings + users + movies files, per-user temporal
/// split, band-filtered seeded cohort selection.
inline LoadedCorpus load_corpus(const AuditConfig& cfg) {
  ParseOptions opts;
  opts.format = cfg.dataset.format;
  opts.delimiter = cfg.dataset.delimiter;
  opts.rating_min = cfg.dataset.rating_min;
  opts.rating_max = cfg.dataset.rating_max;
  opts.policy = cfg.dataset.line_policy;

  LoadedCorpus loaded;
  std::ifstream ratings(cfg.dataset.ratings_path);
  if (!ratings) throw DataError("cannot open ratings file " + cfg.dataset.ratings_path);
  const auto interactions = parse_interactions(ratings, opts, &loaded.parse_warnings);

  std::ifstream users(cfg.dataset.users_path);
  if (!users) throw DataError("cannot open users file " + cfg.dataset.users_path);
  const auto attrs = parse_users(users, opts);

  std::ifstream movies(cfg.dataset.movies_path);
  if (!movies) throw DataError("cannot open movies file " + cfg.dataset.movies_path);
  loaded.corpus.catalog = parse_movies(movies, opts);

  const auto histories = assemble_histories(interactions, attrs, cfg.cohort.age_boundary);
  std::vector<UserRecord> split_users;
  split_users.reserve(histories.size());
  for (const auto& history : histories) {
    if (auto user = temporal_split(history, cfg.train_fraction)) {
      split_users.push_back(std::move(*user));
    } else {
      ++loaded.dropped_users;
    }
  }
  loaded.corpus.cohort =
      select_cohort(split_users, cfg.cohort.size, cfg.cohort.band, cfg.cohort.seed);
  loaded.stats = split_stats(loaded.corpus.cohort);
  return loaded;
}

struct ScoreRow {
  std::string user_id;
  Condition condition = Condition::ZeroShot;
  Strategy strategy = Strategy::Rand;
  std::string spec_tag;
  Metric metric = Metric::Hit;
  double value = 0.0;
};

struct JobDiagnostic {
  std::string cell;
  std::string user_id;
  std::string request_key;
  std::string kind;  // backend_error | extraction_error | profile_error | shortfall | ...
  std::string message;
};

struct AuditResult {
  std::string config_digest;
  std::string template_version;
  std::vector<DisparityResult> grid;
  std::vector<ScoreRow> scores;
  std::vector<JobDiagnostic> diagnostics;
  std::size_t cohort_size = 0;
  std::size_t cells = 0;
  std::size_t total_jobs = 0;
  std::size_t failed_jobs = 0;
  std::size_t prompt_violations = 0;
  TestKind test_kind = TestKind::WelchT;
};

namespace detail {

inline std::uint64_t profile_seed(const ProfileConfig& cfg, const std::string& user_id,
                                  Strategy strategy) {
  return DetRng::mix(DetRng::mix(cfg.seed, hash_string(user_id)),
                     static_cast<std::uint64_t>(strategy));
}

struct JobOutcome {
  bool failed = false;
  std::vector<std::pair<Metric, double>> values;
  std::vector<JobDiagnostic> diagnostics;
  bool prompt_violation = false;
};

inline bool disparity_sort_before(const DisparityResult& a, const DisparityResult& b) {
  const auto key = [](const DisparityResult& r) {
    return std::tuple(static_cast<int>(r.notion), static_cast<int>(r.attribute),
                      r.forced_value.value_or(""), static_cast<int>(r.condition),
                      static_cast<int>(r.strategy), static_cast<int>(r.metric));
  };
  return key(a) < key(b);
}

}  // namespace detail

/// Executes the full audit grid against a prepared corpus and backend.
/// Deterministic given seeds and a deterministic backend: jobs are indexed up
/// front and every result lands in its preassigned slot, so worker scheduling
/// cannot reorder anything.
inline AuditResult run_audit(const AuditConfig& cfg, const Corpus& corpus, Backend& backend) {
  cfg.validate(false);
  const Cohort& cohort = corpus.cohort;
  if (cohort.users.empty()) throw DataError("run_audit: empty cohort");

  PromptTemplate tmpl = PromptTemplate::builtin();
  if (!cfg.template_path.empty()) {
    std::ifstream in(cfg.template_path);
    if (!in) throw ConfigError("cannot open template file " + cfg.template_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    tmpl = PromptTemplate::from_user_template(buffer.str());
  }

  AuditResult result;
  result.config_digest = cfg.config_digest;
  result.template_version = tmpl.version;
  result.cohort_size = cohort.users.size();
  result.test_kind = cfg.fairness.test;

  std::vector<std::string> grid_warnings;
  const auto cells =
      expand_condition_grid(cfg.grid.conditions, cfg.grid.strategies, cfg.grid.rankers,
                            &grid_warnings);
  for (const auto& w : grid_warnings) {
    result.diagnostics.push_back({"", "", "", "config_warning", w});
  }
  result.cells = cells.size();

  const CatalogIndex index(corpus.catalog);
  std::map<std::string, std::vector<std::string>> truth_by_user;
  for (const auto& user : cohort.users) {
    truth_by_user.emplace(user.user_id, ground_truth_ids(user));
  }

  // All (cell, user) jobs, executed by a bounded worker pool. The pool size
  // is the backend in-flight limit, so no more than that many requests are
  // ever outstanding.
  struct Job {
    std::size_t cell_idx;
    std::size_t user_idx;
  };
  std::vector<Job> jobs;
  jobs.reserve(cells.size() * cohort.users.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::size_t u = 0; u < cohort.users.size(); ++u) jobs.push_back({c, u});
  }
  result.total_jobs = jobs.size();
  std::vector<detail::JobOutcome> outcomes(jobs.size());

  const auto run_job = [&](const Job& job, detail::JobOutcome& outcome) {
    const GridCell& cell = cells[job.cell_idx];
    const UserRecord& user = cohort.users[job.user_idx];
    const std::string cell_tag = cell.tag();
    std::string request_key;
    try {
      const Profile profile =
          sample_profile(user, corpus.catalog, cell.strategy, cfg.profiles.length,
                         detail::profile_seed(cfg.profiles, user.user_id, cell.strategy),
                         cfg.profiles.alpha);
      const auto icl = select_icl_examples(user, corpus.catalog, icl_count(cell.condition),
                                           cfg.profiles.icl_window);
      const Prompt prompt = build_prompt(profile, user, cell.spec, icl, cfg.k, tmpl);

      if (cell.spec.kind == RankerSpec::Kind::Neutral && !neutral_prompt_ok(prompt)) {
        outcome.prompt_violation = true;
        outcome.diagnostics.push_back(
            {cell_tag, user.user_id, "", "prompt_invariant", "neutral prompt leaks demographics"});
      }
      if (cell.spec.kind == RankerSpec::Kind::Counterfactual &&
          !counterfactual_prompt_ok(prompt)) {
        outcome.prompt_violation = true;
        outcome.diagnostics.push_back({cell_tag, user.user_id, "", "prompt_invariant",
                                       "counterfactual prompt lacks the forced value"});
      }

      RankerRequest request =
          make_request(prompt, cfg.backend.model, cfg.backend.temperature,
                       cfg.backend.max_tokens);
      request_key = request.request_key;
      BackendContext ctx{&user, &corpus.catalog};
      const RawCompletion completion = backend.execute(request, ctx);

      const auto titles = parse_list(completion.text, cfg.k);
      const RecommendationList rec =
          to_recommendation_list(titles, index, user.user_id, cell.spec, cell.condition,
                                 cell.strategy, cfg.k);
      if (rec.shortfall) {
        outcome.diagnostics.push_back({cell_tag, user.user_id, request_key, "shortfall",
                                       "completion yielded fewer than k entries"});
      }
      const auto& truth = truth_by_user.at(user.user_id);
      for (const Metric metric : cfg.metrics) {
        outcome.values.emplace_back(metric, compute_benefit(metric, rec, truth, cfg.k));
      }
    } catch (const ExtractionError& e) {
      outcome.failed = true;
      outcome.diagnostics.push_back(
          {cell_tag, user.user_id, request_key, "extraction_error", e.what()});
    } catch (const BackendError& e) {
      outcome.failed = true;
      outcome.diagnostics.push_back(
          {cell_tag, user.user_id, request_key, "backend_error", e.what()});
    } catch (const Error& e) {
      outcome.failed = true;
      outcome.diagnostics.push_back(
          {cell_tag, user.user_id, request_key, "profile_error", e.what()});
    }
  };

  const std::size_t workers = std::min<std::size_t>(cfg.backend.max_in_flight, jobs.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(jobs[i], outcomes[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= jobs.size()) return;
          run_job(jobs[i], outcomes[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  // Deterministic reduction in job order.
  std::map<std::pair<std::size_t, Metric>, ScoreMap> cell_scores;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& outcome = outcomes[i];
    const GridCell& cell = cells[jobs[i].cell_idx];
    const UserRecord& user = cohort.users[jobs[i].user_idx];
    if (outcome.failed) ++result.failed_jobs;
    if (outcome.prompt_violation) ++result.prompt_violations;
    for (const auto& d : outcome.diagnostics) result.diagnostics.push_back(d);
    for (const auto& [metric, value] : outcome.values) {
      cell_scores[{jobs[i].cell_idx, metric}][user.user_id] = value;
      result.scores.push_back(
          {user.user_id, cell.condition, cell.strategy, cell.spec.tag(), metric, value});
    }
  }

  if (result.total_jobs > 0 &&
      static_cast<double>(result.failed_jobs) >
          cfg.max_failed_fraction * static_cast<double>(result.total_jobs)) {
    throw BackendError("audit aborted: " + std::to_string(result.failed_jobs) + " of " +
                       std::to_string(result.total_jobs) +
                       " requests failed, above the configured budget of " +
                       format_fixed(cfg.max_failed_fraction * 100.0, 1) + "%");
  }

  // Neutral reference cell per (condition, strategy).
  std::map<std::pair<int, int>, std::size_t> neutral_cells;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].spec.is_neutral()) {
      neutral_cells[{static_cast<int>(cells[c].condition),
                     static_cast<int>(cells[c].strategy)}] = c;
    }
  }

  const auto notion_enabled = [&](DisparityKind n) {
    return std::find(cfg.fairness.notions.begin(), cfg.fairness.notions.end(), n) !=
           cfg.fairness.notions.end();
  };

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const GridCell& cell = cells[c];
    const auto neutral_it = neutral_cells.find(
        {static_cast<int>(cell.condition), static_cast<int>(cell.strategy)});
    if (neutral_it == neutral_cells.end()) continue;

    for (const Metric metric : cfg.metrics) {
      const auto target_scores = cell_scores.find({c, metric});
      const auto neutral_scores = cell_scores.find({neutral_it->second, metric});
      if (neutral_scores == cell_scores.end()) continue;

      try {
        if (cell.spec.is_neutral() && notion_enabled(DisparityKind::Intrinsic)) {
          for (const Attribute attr : {Attribute::Gender, Attribute::AgeGroup}) {
            IntrinsicTarget target;
            if (const auto t = cfg.fairness.intrinsic_targets.find(attr);
                t != cfg.fairness.intrinsic_targets.end()) {
              target = t->second;
            }
            result.grid.push_back(intrinsic_fairness(neutral_scores->second, cohort, attr,
                                                     cell.condition, cell.strategy, metric,
                                                     cfg.fairness.policy, cfg.fairness.test,
                                                     target));
          }
        } else if (cell.spec.kind == RankerSpec::Kind::Sensitive &&
                   notion_enabled(DisparityKind::Nsd)) {
          if (target_scores == cell_scores.end()) continue;
          for (const Attribute attr : cell.spec.attributes) {
            result.grid.push_back(nsd(target_scores->second, neutral_scores->second, cohort,
                                      attr, cell.condition, cell.strategy, metric,
                                      cfg.fairness.policy, cfg.fairness.test));
          }
        } else if (cell.spec.kind == RankerSpec::Kind::Counterfactual &&
                   notion_enabled(DisparityKind::Ncsd)) {
          if (target_scores == cell_scores.end()) continue;
          result.grid.push_back(ncsd(target_scores->second, neutral_scores->second, cohort,
                                     cell.spec.attributes.front(), *cell.spec.forced_value,
                                     cell.condition, cell.strategy, metric,
                                     cfg.fairness.policy, cfg.fairness.test));
        }
      } catch (const Error& e) {
        result.diagnostics.push_back({cell.tag(), "", "",
                                      "fairness_skipped", e.what()});
      }
    }
  }

  std::sort(result.grid.begin(), result.grid.end(), detail::disparity_sort_before);
  return result;
}

struct BackendBundle {
  std::unique_ptr<Backend> inner;
  std::unique_ptr<ReplayStore> store;
  std::unique_ptr<Backend> active;  // what run_audit should use
  Backend& get() { return active ? *active : *inner; }
};

/// Assembles the configured backend stack: the base backend, optionally
/// wrapped in a recording or strict replay layer.
inline BackendBundle make_backend(const BackendConfig& cfg, HttpLogger http_logger = nullptr) {
  BackendBundle bundle;
  if (cfg.kind == "synthetic") {
    bundle.inner = std::make_unique<SyntheticBackend>(cfg.synthetic);
  } else if (cfg.kind == "http") {
    HttpBackendConfig http;
    http.endpoint = cfg.endpoint;
    http.api_key_env = cfg.api_key_env;
    http.max_attempts = cfg.max_attempts;
    http.backoff_initial_ms = cfg.backoff_initial_ms;
    bundle.inner = std::make_unique<HttpBackend>(http, std::move(http_logger));
  }
  if (cfg.kind == "replay") {
    bundle.store = std::make_unique<ReplayStore>(cfg.replay_store);
    bundle.active = std::make_unique<ReplayBackend>(*bundle.store);
  } else if (cfg.record && !cfg.replay_store.empty()) {
    bundle.store = std::make_unique<ReplayStore>(cfg.replay_store);
    bundle.active = std::make_unique<ReplayBackend>(*bundle.store, bundle.inner.get());
  }
  return bundle;
}

/// Synthetic power study: how reliably does the audit flag a known injected
/// bias, and how often does it false-alarm when there is none.
struct PowerStudyConfig {
  std::size_t users = 200;
  std::size_t catalog_size = 400;
  double base_quality = 0.6;
  double beta = 0.5;
  Attribute attribute = Attribute::AgeGroup;
  std::string value = "old";  // targeted group
  int replicates = 100;
  std::uint64_t seed = 1;
  int k = 10;
  Metric metric = Metric::Rank;
  TestKind test = TestKind::WelchT;
  ThresholdPolicy policy;
};

struct PowerStudyResult {
  int replicates = 0;
  int rejections = 0;        // p < alpha
  int predicted_sign = 0;    // +1 when the untargeted group is favored
  int sign_agreements = 0;   // delta carries the predicted sign
  double mean_delta = 0.0;
  std::vector<double> deltas;

  double rejection_rate() const {
    return replicates == 0 ? 0.0 : static_cast<double>(rejections) / replicates;
  }
};

inline PowerStudyResult run_power_study(const PowerStudyConfig& cfg) {
  PowerStudyResult out;
  out.replicates = cfg.replicates;
  const bool targets_second_group = (cfg.value == "female" || cfg.value == "old");
  out.predicted_sign = targets_second_group ? 1 : -1;

  AuditConfig audit;
  audit.k = cfg.k;
  audit.metrics = {cfg.metric};
  audit.grid.conditions = {Condition::ZeroShot};
  audit.grid.strategies = {Strategy::Freq};
  audit.grid.rankers = {RankerSpec::neutral(), RankerSpec::sensitive({cfg.attribute})};
  audit.fairness.test = cfg.test;
  audit.fairness.policy = cfg.policy;
  audit.fairness.notions = {DisparityKind::Nsd};
  audit.backend.kind = "synthetic";

  double delta_sum = 0.0;
  for (int r = 0; r < cfg.replicates; ++r) {
    SyntheticCorpusConfig corpus_cfg;
    corpus_cfg.users = cfg.users;
    corpus_cfg.catalog_size = cfg.catalog_size;
    corpus_cfg.seed = DetRng::mix(cfg.seed, static_cast<std::uint64_t>(r));
    const Corpus corpus = make_synthetic_corpus(corpus_cfg);

    SyntheticBiasConfig bias_cfg;
    bias_cfg.base_quality = cfg.base_quality;
    bias_cfg.seed = DetRng::mix(cfg.seed, 0x9000 + static_cast<std::uint64_t>(r));
    if (cfg.beta > 0.0) {
      bias_cfg.bias.push_back({cfg.attribute, cfg.value, cfg.beta});
    }
    SyntheticBackend backend(bias_cfg);

    const AuditResult result = run_audit(audit, corpus, backend);
    for (const auto& disparity : result.grid) {
      if (disparity.notion != DisparityKind::Nsd || disparity.attribute != cfg.attribute) {
        continue;
      }
      out.deltas.push_back(disparity.delta);
      delta_sum += disparity.delta;
      if (disparity.test && disparity.test->p_value < cfg.policy.alpha) ++out.rejections;
      if (disparity.delta * out.predicted_sign > 0.0) ++out.sign_agreements;
    }
  }
  if (!out.deltas.empty()) out.mean_delta = delta_sum / static_cast<double>(out.deltas.size());
  return out;
}

}  // namespace fairaudit
