#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairaudit/fairaudit.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// 0 success, 2 config error, 3 backend failure budget exceeded, 4 data error
constexpr int kExitConfig = 2;
constexpr int kExitBackend = 3;
constexpr int kExitData = 4;

fairaudit::AuditConfig load_config(const std::string& path) {
  auto cfg = fairaudit::AuditConfig::from_file(path);
  cfg.validate(true);
  return cfg;
}

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::filesystem::create_directories(path.parent_path().empty() ? "." : path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fairaudit::DataError("cannot write " + path.string());
  out << body;
}

int cmd_validate(const std::string& config_path) {
  load_config(config_path);
  std::cout << "config ok: " << config_path << "\n";
  return 0;
}

int cmd_ingest(const std::string& config_path) {
  const auto cfg = load_config(config_path);
  const auto loaded = fairaudit::load_corpus(cfg);
  const auto& stats = loaded.stats;
  std::cout << "catalog items:        " << loaded.corpus.catalog.items.size() << "\n"
            << "cohort users:         " << stats.users << "\n"
            << "train interactions:   " << stats.train_total << " (mean "
            << fairaudit::format_fixed(stats.mean_train(), 2) << " per user)\n"
            << "test interactions:    " << stats.test_total << " (mean "
            << fairaudit::format_fixed(stats.mean_test(), 2) << " per user)\n"
            << "dropped users:        " << loaded.dropped_users << "\n"
            << "parse warnings:       " << loaded.parse_warnings.size() << "\n";
  return 0;
}

int cmd_split(const std::string& config_path) {
  const auto cfg = load_config(config_path);
  const auto loaded = fairaudit::load_corpus(cfg);
  const auto manifest =
      fairaudit::split_manifest_to_json(loaded.corpus.cohort, cfg.train_fraction);
  const std::filesystem::path out =
      std::filesystem::path(cfg.output_dir) / "split_manifest.json";
  write_text(out, manifest.dump(2) + "\n");
  std::cout << "split manifest written to " << out.string() << " (" << loaded.corpus.cohort.users.size()
            << " users)\n";
  return 0;
}

int cmd_profiles(const std::string& config_path) {
  const auto cfg = load_config(config_path);
  const auto loaded = fairaudit::load_corpus(cfg);
  nlohmann::ordered_json dump = nlohmann::ordered_json::array();
  for (const auto& user : loaded.corpus.cohort.users) {
    for (const fairaudit::Strategy strategy : cfg.grid.strategies) {
      const auto seed =
          fairaudit::detail::profile_seed(cfg.profiles, user.user_id, strategy);
      const auto profile = fairaudit::sample_profile(
          user, loaded.corpus.catalog, strategy, cfg.profiles.length, seed,
          cfg.profiles.alpha);
      nlohmann::ordered_json record;
      record["user"] = user.user_id;
      record["strategy"] = fairaudit::to_string(strategy);
      record["seed"] = seed;
      record["items"] = nlohmann::ordered_json::array();
      for (const auto& item : profile.items) {
        record["items"].push_back({{"item", item.item_id},
                                   {"title", item.title},
                                   {"weight", item.weight},
                                   {"rank", item.source_rank}});
      }
      dump.push_back(std::move(record));
    }
  }
  const std::filesystem::path out = std::filesystem::path(cfg.output_dir) / "profiles.json";
  write_text(out, dump.dump(2) + "\n");
  std::cout << "profile dump written to " << out.string() << "\n";
  return 0;
}

int cmd_run(const std::string& config_path, bool quiet) {
  const auto cfg = load_config(config_path);
  const auto loaded = fairaudit::load_corpus(cfg);
  auto bundle = fairaudit::make_backend(cfg.backend);
  const auto result = fairaudit::run_audit(cfg, loaded.corpus, bundle.get());
  fairaudit::write_outputs(result, cfg);
  if (!quiet) {
    std::cout << fairaudit::render_console(result) << "\n";
  }
  std::cout << "audit complete: " << result.grid.size() << " disparity results, "
            << result.failed_jobs << "/" << result.total_jobs
            << " failed requests; outputs in " << cfg.output_dir << "\n";
  return 0;
}

int cmd_report(const std::string& result_path, const std::string& format,
               const std::string& out_path) {
  std::ifstream in(result_path);
  if (!in) throw fairaudit::DataError("cannot open " + result_path);
  nlohmann::json j;
  in >> j;

  // Rehydrate the grid from the structured file.
  fairaudit::AuditResult result;
  result.config_digest = j.value("config_digest", "");
  result.template_version = j.value("template_version", "");
  result.test_kind = fairaudit::detail::parse_test_kind(j.value("test_kind", "welch"));
  const auto& totals = j.at("totals");
  result.cohort_size = totals.value("cohort_size", std::size_t{0});
  result.cells = totals.value("cells", std::size_t{0});
  result.total_jobs = totals.value("requests", std::size_t{0});
  result.failed_jobs = totals.value("failed_requests", std::size_t{0});
  for (const auto& g : j.at("grid")) {
    fairaudit::DisparityResult r;
    r.notion = fairaudit::parse_disparity_kind(g.at("notion").get<std::string>());
    r.attribute = fairaudit::parse_attribute(g.at("attribute").get<std::string>());
    if (g.contains("forced_value")) r.forced_value = g.at("forced_value").get<std::string>();
    r.condition = fairaudit::parse_condition(g.at("condition").get<std::string>());
    r.strategy = fairaudit::parse_strategy(g.at("strategy").get<std::string>());
    r.metric = fairaudit::parse_metric(g.at("metric").get<std::string>());
    for (const auto& [label, value] : g.at("group_deltas").items()) {
      if (r.first_group_label.empty()) {
        r.first_group_label = label;
        r.first_group_delta = value.get<double>();
      } else {
        r.second_group_label = label;
        r.second_group_delta = value.get<double>();
      }
    }
    // group_deltas serialize first-group-first, but json object order is
    // alphabetical; restore the canonical first group (male / young)
    if (r.first_group_label != "male" && r.first_group_label != "young") {
      std::swap(r.first_group_label, r.second_group_label);
      std::swap(r.first_group_delta, r.second_group_delta);
    }
    r.delta = g.at("delta").get<double>();
    if (g.contains("test") && !g.at("test").is_null()) {
      fairaudit::TestResult t;
      const auto& tj = g.at("test");
      t.kind = fairaudit::detail::parse_test_kind(tj.at("kind").get<std::string>());
      t.statistic = tj.at("statistic").get<double>();
      t.p_value = tj.at("p_value").get<double>();
      t.n1 = tj.at("n1").get<std::size_t>();
      t.n2 = tj.at("n2").get<std::size_t>();
      if (tj.contains("dof")) t.dof = tj.at("dof").get<double>();
      r.test = t;
    }
    r.p_missing = g.value("p_missing", false);
    r.level = fairaudit::classify(
        r.delta, r.test ? std::optional<double>(r.test->p_value) : std::nullopt, {});
    r.excluded_users = g.value("excluded_users", std::size_t{0});
    result.grid.push_back(std::move(r));
  }

  std::string body;
  if (format == "markdown") {
    body = fairaudit::render_markdown(result);
  } else if (format == "csv") {
    body = fairaudit::render_csv(result);
  } else if (format == "console") {
    body = fairaudit::render_console(result);
  } else {
    throw fairaudit::ConfigError("unknown report format: " + format);
  }
  if (out_path.empty()) {
    std::cout << body;
  } else {
    write_text(out_path, body);
    std::cout << "report written to " << out_path << "\n";
  }
  return 0;
}

int cmd_simulate(const fairaudit::PowerStudyConfig& cfg) {
  const auto result = fairaudit::run_power_study(cfg);
  std::cout << "replicates:        " << result.replicates << "\n"
            << "rejections:        " << result.rejections << " ("
            << fairaudit::format_fixed(result.rejection_rate() * 100.0, 1) << "% at alpha="
            << fairaudit::format_fixed(cfg.policy.alpha, 3) << ")\n"
            << "predicted sign:    " << (result.predicted_sign > 0 ? "+" : "-") << "\n"
            << "sign agreements:   " << result.sign_agreements << "\n"
            << "mean delta:        " << fairaudit::format_fixed(result.mean_delta, 4) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consumer-fairness audit toolkit for LLM-backed recommenders"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  bool quiet = false;

  auto* validate = app.add_subcommand("validate-config", "Validate a config file");
  validate->add_option("--config", config_path, "Config file")->required();

  auto* ingest = app.add_subcommand("ingest", "Load the dataset and print cohort statistics");
  ingest->add_option("--config", config_path, "Config file")->required();

  auto* split = app.add_subcommand("split", "Write the temporal split manifest");
  split->add_option("--config", config_path, "Config file")->required();

  auto* profiles = app.add_subcommand("profiles", "Dump sampled profiles for inspection");
  profiles->add_option("--config", config_path, "Config file")->required();

  auto* run = app.add_subcommand("run", "Run the full audit");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_flag("--quiet", quiet, "Suppress the console verdict table");

  std::string result_path, report_format = "console", report_out;
  auto* report = app.add_subcommand("report", "Re-render a result file");
  report->add_option("--result", result_path, "result.json from a previous run")->required();
  report->add_option("--format", report_format, "markdown | csv | console");
  report->add_option("--out", report_out, "Output file (stdout when omitted)");

  fairaudit::PowerStudyConfig power;
  std::string power_attribute = "age_group";
  auto* simulate = app.add_subcommand("simulate", "Synthetic-backend bias power study");
  simulate->add_option("--users", power.users, "Users per replicate");
  simulate->add_option("--catalog", power.catalog_size, "Catalog size");
  simulate->add_option("--q", power.base_quality, "Base slot quality");
  simulate->add_option("--beta", power.beta, "Injected degradation");
  simulate->add_option("--attribute", power_attribute, "gender | age_group");
  simulate->add_option("--value", power.value, "Targeted group value");
  simulate->add_option("--replicates", power.replicates, "Replicate count");
  simulate->add_option("--seed", power.seed, "Base seed");
  simulate->add_option("--k", power.k, "List length");
  std::string power_metric = "rank", power_test = "welch";
  simulate->add_option("--metric", power_metric, "hit | rank");
  simulate->add_option("--test", power_test, "welch | pooled | mann-whitney");
  simulate->add_option("--alpha", power.policy.alpha, "Significance level");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(config_path);
    if (ingest->parsed()) return cmd_ingest(config_path);
    if (split->parsed()) return cmd_split(config_path);
    if (profiles->parsed()) return cmd_profiles(config_path);
    if (run->parsed()) return cmd_run(config_path, quiet);
    if (report->parsed()) return cmd_report(result_path, report_format, report_out);
    if (simulate->parsed()) {
      power.attribute = fairaudit::parse_attribute(power_attribute);
      power.metric = fairaudit::parse_metric(power_metric);
      power.test = fairaudit::detail::parse_test_kind(power_test);
      return cmd_simulate(power);
    }
  } catch (const fairaudit::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const fairaudit::BackendError& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const fairaudit::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
