#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fairaudit/audit.hpp"
#include "fairaudit/common.hpp"
#include "fairaudit/fairness.hpp"

namespace fairaudit {

// All report surfaces print deltas with 4 decimals and p-values with 3,
// round-half-even, so csv, markdown and the structured file agree digit for
// digit.
inline std::string format_delta(double value) { return format_fixed(value, 4); }

inline std::string format_p(const std::optional<TestResult>& test) {
  if (!test) return "n/a";
  return format_fixed(test->p_value, 3);
}

namespace detail {

inline std::string block_heading(const DisparityResult& r) {
  std::string out = to_lower(std::string(to_string(r.notion)));
  if (r.notion == DisparityKind::Nsd) out = "NSD";
  if (r.notion == DisparityKind::Ncsd) out = "NCSD";
  if (r.notion == DisparityKind::Intrinsic) out = "IF";
  out += " / ";
  out += to_string(r.attribute);
  if (r.forced_value) {
    out += " (do ";
    out += *r.forced_value;
    out += ")";
  }
  out += " / ";
  out += to_string(r.metric);
  return out;
}

inline std::string block_key(const DisparityResult& r) {
  return std::to_string(static_cast<int>(r.notion)) + "|" +
         std::to_string(static_cast<int>(r.attribute)) + "|" + r.forced_value.value_or("") +
         "|" + std::to_string(static_cast<int>(r.metric));
}

inline std::string severity_ansi(Severity s) {
  switch (s) {
    case Severity::Safe: return "\x1b[32m";
    case Severity::AttentionNeeded: return "\x1b[33m";
    case Severity::LikelyIssue: return "\x1b[38;5;208m";
    case Severity::SignificantIssue: return "\x1b[31m";
  }
  return "";
}

}  // namespace detail

/// Markdown report: one block per (notion, attribute, forced value, metric),
/// rows are condition/strategy pairs, columns are the two group deltas and
/// the signed disparity with its p-value. Severity carries a CSS-class token.
inline std::string render_markdown(const AuditResult& result) {
  std::ostringstream out;
  out << "# Disparity report\n\n";
  out << "Config digest: `" << result.config_digest << "`; template: `"
      << result.template_version << "`; significance test: `"
      << to_string(result.test_kind) << "` (two-sided).\n";

  std::string current_block;
  bool any = false;
  for (const auto& r : result.grid) {
    const std::string key = detail::block_key(r);
    if (key != current_block) {
      current_block = key;
      out << "\n## " << detail::block_heading(r) << "\n\n";
      out << "| Condition | ΔB " << r.first_group_label << " | ΔB " << r.second_group_label
          << " | δ (p-value) | Severity |\n";
      out << "|---|---|---|---|---|\n";
    }
    out << "| " << to_string(r.condition) << "/" << to_string(r.strategy) << " | "
        << format_delta(r.first_group_delta) << " | " << format_delta(r.second_group_delta)
        << " | " << format_delta(r.delta) << " (p=" << format_p(r.test) << ") | ["
        << to_string(r.level) << "]{." << severity_css_class(r.level) << "} |\n";
    any = true;
  }
  if (!any) out << "\nNo disparity results: the grid produced no comparable cells.\n";

  std::size_t excluded = 0;
  for (const auto& r : result.grid) excluded += r.excluded_users;
  if (result.failed_jobs > 0 || excluded > 0) {
    out << "\nDiagnostics: " << result.failed_jobs << " of " << result.total_jobs
        << " requests failed and were excluded from the statistics";
    if (excluded > 0) out << "; " << excluded << " per-user comparisons lacked a counterpart";
    out << ". Cells rendered n/a carry no significance test.\n";
  }
  return out.str();
}

/// Console rendering mirrors the markdown tables with ANSI color per severity.
inline std::string render_console(const AuditResult& result) {
  std::ostringstream out;
  std::string current_block;
  for (const auto& r : result.grid) {
    const std::string key = detail::block_key(r);
    if (key != current_block) {
      current_block = key;
      out << "\n" << detail::block_heading(r) << "\n";
    }
    out << "  " << to_string(r.condition) << "/" << to_string(r.strategy) << "  dB("
        << r.first_group_label << ")=" << format_delta(r.first_group_delta) << "  dB("
        << r.second_group_label << ")=" << format_delta(r.second_group_delta)
        << "  delta=" << format_delta(r.delta) << " (p=" << format_p(r.test) << ")  "
        << detail::severity_ansi(r.level) << to_string(r.level) << "\x1b[0m\n";
  }
  return out.str();
}

inline std::string render_csv(const AuditResult& result) {
  std::ostringstream out;
  out << "notion,attribute,forced_value,condition,strategy,metric,"
         "delta_b_first,delta_b_second,delta,p_value,test,n1,n2,severity\n";
  for (const auto& r : result.grid) {
    out << to_string(r.notion) << ',' << to_string(r.attribute) << ','
        << r.forced_value.value_or("") << ',' << to_string(r.condition) << ','
        << to_string(r.strategy) << ',' << to_string(r.metric) << ','
        << format_delta(r.first_group_delta) << ',' << format_delta(r.second_group_delta) << ','
        << format_delta(r.delta) << ',' << format_p(r.test) << ','
        << (r.test ? to_string(r.test->kind) : "none") << ','
        << (r.test ? std::to_string(r.test->n1) : "") << ','
        << (r.test ? std::to_string(r.test->n2) : "") << ',' << to_string(r.level) << '\n';
  }
  return out.str();
}

inline nlohmann::ordered_json disparity_to_json(const DisparityResult& r) {
  nlohmann::ordered_json j;
  j["notion"] = to_string(r.notion);
  j["attribute"] = to_string(r.attribute);
  if (r.forced_value) j["forced_value"] = *r.forced_value;
  j["condition"] = to_string(r.condition);
  j["strategy"] = to_string(r.strategy);
  j["metric"] = to_string(r.metric);
  j["group_deltas"] = {{r.first_group_label, r.first_group_delta},
                       {r.second_group_label, r.second_group_delta}};
  j["delta"] = r.delta;
  if (r.test) {
    j["test"] = {{"kind", to_string(r.test->kind)},
                 {"statistic", r.test->statistic},
                 {"p_value", r.test->p_value},
                 {"n1", r.test->n1},
                 {"n2", r.test->n2}};
    if (r.test->dof) (*j.find("test"))["dof"] = *r.test->dof;
  } else {
    j["test"] = nullptr;
  }
  j["p_missing"] = r.p_missing;
  j["severity"] = to_string(r.level);
  j["severity_level"] = severity_level(r.level);
  j["excluded_users"] = r.excluded_users;
  return j;
}

/// Structured result document. Contains no timestamps: two runs of the same
/// config against the same replay store serialize byte-identically.
inline nlohmann::ordered_json result_to_json(const AuditResult& result) {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["config_digest"] = result.config_digest;
  j["template_version"] = result.template_version;
  j["test_kind"] = to_string(result.test_kind);
  j["p_value_sidedness"] = "two-sided";
  j["totals"] = {{"cohort_size", result.cohort_size},
                 {"cells", result.cells},
                 {"requests", result.total_jobs},
                 {"failed_requests", result.failed_jobs},
                 {"prompt_invariant_violations", result.prompt_violations}};
  j["grid"] = nlohmann::ordered_json::array();
  for (const auto& r : result.grid) j["grid"].push_back(disparity_to_json(r));
  j["scores"] = nlohmann::ordered_json::array();
  for (const auto& s : result.scores) {
    j["scores"].push_back({{"user", s.user_id},
                           {"condition", to_string(s.condition)},
                           {"strategy", to_string(s.strategy)},
                           {"spec", s.spec_tag},
                           {"metric", to_string(s.metric)},
                           {"value", s.value}});
  }
  return j;
}

inline nlohmann::ordered_json manifest_to_json(const AuditResult& result,
                                               const AuditConfig& config) {
  const auto now = std::chrono::system_clock::now();
  const auto time = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&time));

  nlohmann::ordered_json j;
  j["created_at"] = stamp;
  j["config_digest"] = result.config_digest;
  j["template_version"] = result.template_version;
  j["config"] = config.source_json;
  j["counts"] = {{"cohort_size", result.cohort_size},
                 {"cells", result.cells},
                 {"requests", result.total_jobs},
                 {"failed_requests", result.failed_jobs},
                 {"prompt_invariant_violations", result.prompt_violations}};
  j["diagnostics"] = nlohmann::ordered_json::array();
  for (const auto& d : result.diagnostics) {
    j["diagnostics"].push_back({{"cell", d.cell},
                                {"user", d.user_id},
                                {"request_key", d.request_key},
                                {"kind", d.kind},
                                {"message", d.message}});
  }
  return j;
}

inline nlohmann::ordered_json split_manifest_to_json(const Cohort& cohort,
                                                     double train_fraction) {
  const SplitStats stats = split_stats(cohort);
  nlohmann::ordered_json j;
  j["selection_seed"] = cohort.selection_seed;
  j["activity_band"] = {cohort.activity_band.min_interactions,
                        cohort.activity_band.max_interactions};
  j["train_fraction"] = train_fraction;
  j["totals"] = {{"users", stats.users},
                 {"train_interactions", stats.train_total},
                 {"test_interactions", stats.test_total},
                 {"mean_train", stats.mean_train()},
                 {"mean_test", stats.mean_test()}};
  j["users"] = nlohmann::ordered_json::array();
  for (const auto& user : cohort.users) {
    j["users"].push_back({{"user", user.user_id},
                          {"gender", to_string(user.gender)},
                          {"age_group", to_string(user.age_group)},
                          {"train", user.train.size()},
                          {"test", user.test.size()}});
  }
  return j;
}

/// Writes report.md, report.csv, result.json and manifest.json under the
/// configured output directory, plus a content-addressed manifest copy under
/// manifests/ (append-only: an existing copy for the same config digest is
/// left untouched).
inline void write_outputs(const AuditResult& result, const AuditConfig& config) {
  const std::filesystem::path out_dir(config.output_dir);
  std::filesystem::create_directories(out_dir);

  const auto write_file = [](const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    out << body;
  };

  write_file(out_dir / "report.md", render_markdown(result));
  write_file(out_dir / "report.csv", render_csv(result));
  write_file(out_dir / "result.json", result_to_json(result).dump(2) + "\n");
  const std::string manifest_body = manifest_to_json(result, config).dump(2) + "\n";
  write_file(out_dir / "manifest.json", manifest_body);

  const std::filesystem::path archive = out_dir / "manifests";
  std::filesystem::create_directories(archive);
  const std::filesystem::path addressed = archive / (result.config_digest + ".json");
  if (!std::filesystem::exists(addressed)) {
    write_file(addressed, manifest_body);
  }
}

}  // namespace fairaudit
