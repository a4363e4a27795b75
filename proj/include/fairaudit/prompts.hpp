#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/profiles.hpp"
#include "fairaudit/sha256.hpp"

namespace fairaudit {

enum class Condition { ZeroShot, Icl1, Icl2 };

inline std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::ZeroShot: return "0-shot";
    case Condition::Icl1: return "ICL-1";
    case Condition::Icl2: return "ICL-2";
  }
  return "unknown";
}

inline Condition parse_condition(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "0-shot" || v == "zero-shot" || v == "0shot") return Condition::ZeroShot;
  if (v == "icl-1" || v == "icl1") return Condition::Icl1;
  if (v == "icl-2" || v == "icl2") return Condition::Icl2;
  throw ConfigError("unknown condition: " + std::string(s));
}

inline int icl_count(Condition c) {
  switch (c) {
    case Condition::ZeroShot: return 0;
    case Condition::Icl1: return 1;
    case Condition::Icl2: return 2;
  }
  return 0;
}

/// Which ranker variant a prompt realizes. Neutral prompts carry no
/// demographics; Sensitive prompts reveal the user's true attribute value(s);
/// Counterfactual prompts force one attribute to a fixed hypothetical value
/// for every user.
struct RankerSpec {
  enum class Kind { Neutral, Sensitive, Counterfactual };

  Kind kind = Kind::Neutral;
  std::vector<Attribute> attributes;        // Sensitive: >= 1; Counterfactual: exactly 1
  std::optional<std::string> forced_value;  // Counterfactual only, canonical token

  static RankerSpec neutral() { return RankerSpec{}; }

  static RankerSpec sensitive(std::vector<Attribute> attrs) {
    if (attrs.empty()) throw ConfigError("sensitive ranker needs at least one attribute");
    std::sort(attrs.begin(), attrs.end());
    attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
    RankerSpec spec;
    spec.kind = Kind::Sensitive;
    spec.attributes = std::move(attrs);
    return spec;
  }

  static RankerSpec counterfactual(Attribute attribute, std::string_view value) {
    RankerSpec spec;
    spec.kind = Kind::Counterfactual;
    spec.attributes = {attribute};
    if (attribute == Attribute::Gender) {
      spec.forced_value = std::string(to_string(parse_gender(value)));
    } else {
      spec.forced_value = std::string(to_string(parse_age_group(value)));
    }
    return spec;
  }

  bool is_neutral() const { return kind == Kind::Neutral; }

  std::string tag() const {
    switch (kind) {
      case Kind::Neutral:
        return "neutral";
      case Kind::Sensitive: {
        std::string out = "sensitive:";
        for (std::size_t i = 0; i < attributes.size(); ++i) {
          if (i > 0) out += '+';
          out += to_string(attributes[i]);
        }
        return out;
      }
      case Kind::Counterfactual:
        return "counterfactual:" + std::string(to_string(attributes.front())) + "=" +
               *forced_value;
    }
    return "unknown";
  }
};

inline bool operator==(const RankerSpec& a, const RankerSpec& b) {
  return a.kind == b.kind && a.attributes == b.attributes && a.forced_value == b.forced_value;
}

/// Parses "neutral", "sensitive:gender", "sensitive:gender+age_group",
/// "counterfactual:age_group=old", ...
inline RankerSpec parse_ranker_spec(std::string_view s) {
  const std::string v = to_lower(trim(s));
  if (v == "neutral") return RankerSpec::neutral();
  if (v.starts_with("sensitive:")) {
    std::vector<Attribute> attrs;
    for (const auto& part : split(v.substr(10), "+")) {
      attrs.push_back(parse_attribute(trim(part)));
    }
    return RankerSpec::sensitive(std::move(attrs));
  }
  if (v.starts_with("counterfactual:")) {
    const auto body = v.substr(15);
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("counterfactual spec needs attribute=value: " + std::string(s));
    }
    return RankerSpec::counterfactual(parse_attribute(trim(body.substr(0, eq))),
                                      trim(body.substr(eq + 1)));
  }
  throw ConfigError("unknown ranker spec: " + std::string(s));
}

struct PromptTemplate {
  std::string system_text;
  std::string user_template;
  std::string version;

  static PromptTemplate builtin() {
    PromptTemplate t;
    t.version = "builtin-v1";
    t.system_text = "You are a recommendation assistant for a media catalog.";
    t.user_template =
        "{demographics}Here are items the user has interacted with, most representative "
        "first:\n{profile}\n{icl_examples}"
        "Recommend exactly {k} items from the catalog that the user is most likely to enjoy "
        "next. Reply with a numbered list of titles only, one title per line, and nothing "
        "else.";
    return t;
  }

  /// A user-supplied template body; the version records its content digest so
  /// wording changes are visible in every result.
  static PromptTemplate from_user_template(std::string body, std::string system_text = "") {
    PromptTemplate t = builtin();
    if (!system_text.empty()) t.system_text = std::move(system_text);
    t.user_template = std::move(body);
    t.version = "file:" + sha256_hex(t.system_text + "\x1f" + t.user_template).substr(0, 12);
    return t;
  }
};

struct Prompt {
  std::string system_text;
  std::string user_text;
  RankerSpec ranker;
  Condition condition = Condition::ZeroShot;
  Strategy strategy = Strategy::Rand;
  int k = 10;
  std::string render_hash;
};

namespace detail {

inline std::string demographic_clause(const RankerSpec& spec, const UserRecord& user) {
  if (spec.kind == RankerSpec::Kind::Neutral) return "";
  std::string out;
  const auto add = [&out](std::string_view value) {
    if (!out.empty()) out += ' ';
    out += "The user is ";
    out += value;
    out += '.';
  };
  if (spec.kind == RankerSpec::Kind::Sensitive) {
    for (const Attribute attr : spec.attributes) {
      add(attr == Attribute::Gender ? to_string(user.gender) : to_string(user.age_group));
    }
  } else {
    add(*spec.forced_value);
  }
  out += '\n';
  return out;
}

inline std::string render_profile_block(const Profile& profile) {
  std::string out;
  for (const auto& item : profile.items) {
    out += "- ";
    out += item.title;
    out += '\n';
  }
  return out;
}

inline std::string render_icl_block(const std::vector<IclExample>& examples) {
  if (examples.empty()) return "";
  std::string out = "Worked examples of the user's sequential behavior:\n";
  for (std::size_t i = 0; i < examples.size(); ++i) {
    out += "Example " + std::to_string(i + 1) + ": previously interacted with: ";
    for (std::size_t j = 0; j < examples[i].history_prefix.size(); ++j) {
      if (j > 0) out += "; ";
      out += examples[i].history_prefix[j];
    }
    out += ". Next interaction: " + examples[i].next_item + ".\n";
  }
  out += '\n';
  return out;
}

inline void replace_all(std::string& text, std::string_view placeholder, std::string_view value) {
  std::size_t pos = 0;
  while ((pos = text.find(placeholder, pos)) != std::string::npos) {
    text.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
}

}  // namespace detail

/// Renders the prompt for one (user, ranker, condition) cell; the condition
/// is implied by the number of in-context examples. Rendering is a pure
/// function of its inputs; render_hash is a content digest over the full
/// rendered text plus parameters and is stable across runs and machines.
inline Prompt build_prompt(const Profile& profile, const UserRecord& user, const RankerSpec& spec,
                           const std::vector<IclExample>& icl, int k,
                           const PromptTemplate& tmpl) {
  if (k < 1) throw ConfigError("k must be at least 1");
  if (icl.size() > 2) throw ConfigError("at most 2 in-context examples are supported");

  Prompt prompt;
  prompt.system_text = tmpl.system_text;
  prompt.ranker = spec;
  prompt.strategy = profile.strategy;
  prompt.condition = icl.empty() ? Condition::ZeroShot
                                 : (icl.size() == 1 ? Condition::Icl1 : Condition::Icl2);
  prompt.k = k;

  std::string text = tmpl.user_template;
  detail::replace_all(text, "{demographics}", detail::demographic_clause(spec, user));
  detail::replace_all(text, "{profile}", detail::render_profile_block(profile));
  detail::replace_all(text, "{icl_examples}", detail::render_icl_block(icl));
  detail::replace_all(text, "{k}", std::to_string(k));

  const auto open = text.find('{');
  if (open != std::string::npos) {
    const auto close = text.find('}', open);
    const std::string name =
        close == std::string::npos ? text.substr(open) : text.substr(open + 1, close - open - 1);
    throw ConfigError("unresolved template placeholder: {" + name + "}");
  }
  prompt.user_text = std::move(text);

  std::string hash_input = prompt.system_text;
  hash_input += '\x1f';
  hash_input += prompt.user_text;
  hash_input += '\x1f';
  hash_input += spec.tag();
  hash_input += '\x1f';
  hash_input += to_string(prompt.condition);
  hash_input += '\x1f';
  hash_input += to_string(prompt.strategy);
  hash_input += '\x1f';
  hash_input += std::to_string(k);
  hash_input += '\x1f';
  hash_input += tmpl.version;
  prompt.render_hash = sha256_hex(hash_input);
  return prompt;
}

/// Lowercased word tokens of the rendered text (alphanumeric runs).
inline std::vector<std::string> prompt_word_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

inline const std::set<std::string>& default_demographic_lexicon() {
  static const std::set<std::string> lexicon = {"male", "female", "young", "old",
                                                "age",  "gender", "woman", "man"};
  return lexicon;
}

inline bool contains_lexicon_token(const Prompt& prompt, const std::set<std::string>& lexicon) {
  for (const auto& token : prompt_word_tokens(prompt.system_text)) {
    if (lexicon.count(token)) return true;
  }
  for (const auto& token : prompt_word_tokens(prompt.user_text)) {
    if (lexicon.count(token)) return true;
  }
  return false;
}

/// Neutral prompts must contain no token from the demographic lexicon.
inline bool neutral_prompt_ok(const Prompt& prompt,
                              const std::set<std::string>& lexicon = default_demographic_lexicon()) {
  return !contains_lexicon_token(prompt, lexicon);
}

/// Counterfactual prompts must contain the forced value token and must not
/// contain the opposite value token of the intervened attribute.
inline bool counterfactual_prompt_ok(const Prompt& prompt) {
  if (prompt.ranker.kind != RankerSpec::Kind::Counterfactual) return false;
  const std::string& forced = *prompt.ranker.forced_value;
  std::string opposite;
  if (prompt.ranker.attributes.front() == Attribute::Gender) {
    opposite = forced == "male" ? "female" : "male";
  } else {
    opposite = forced == "young" ? "old" : "young";
  }
  bool has_forced = false;
  for (const auto& token : prompt_word_tokens(prompt.user_text)) {
    if (token == forced) has_forced = true;
    if (token == opposite) return false;
  }
  return has_forced;
}

struct GridCell {
  Condition condition = Condition::ZeroShot;
  Strategy strategy = Strategy::Rand;
  RankerSpec spec;

  std::string tag() const {
    return std::string(to_string(condition)) + "/" + std::string(to_string(strategy)) + "/" +
           spec.tag();
  }
};

/// Full Cartesian product of the enabled axes in deterministic order
/// (condition, then strategy, then spec). Duplicate specs are dropped with a
/// warning.
inline std::vector<GridCell> expand_condition_grid(const std::vector<Condition>& conditions,
                                                   const std::vector<Strategy>& strategies,
                                                   const std::vector<RankerSpec>& specs,
                                                   std::vector<std::string>* warnings = nullptr) {
  if (conditions.empty()) throw ConfigError("grid: no conditions enabled");
  if (strategies.empty()) throw ConfigError("grid: no strategies enabled");
  if (specs.empty()) throw ConfigError("grid: no ranker specs enabled");

  std::vector<RankerSpec> unique_specs;
  std::set<std::string> seen;
  for (const auto& spec : specs) {
    if (!seen.insert(spec.tag()).second) {
      if (warnings) warnings->push_back("duplicate ranker spec dropped: " + spec.tag());
      continue;
    }
    unique_specs.push_back(spec);
  }

  std::vector<GridCell> cells;
  cells.reserve(conditions.size() * strategies.size() * unique_specs.size());
  for (const Condition c : conditions) {
    for (const Strategy s : strategies) {
      for (const auto& spec : unique_specs) {
        cells.push_back({c, s, spec});
      }
    }
  }
  return cells;
}

}  // namespace fairaudit
