#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/prompts.hpp"

namespace fairaudit {

class ExtractionError : public Error {
 public:
  using Error::Error;
};

enum class MatchKind { Exact, Normalized, Fuzzy, Unmatched };

inline std::string_view to_string(MatchKind k) {
  switch (k) {
    case MatchKind::Exact: return "exact";
    case MatchKind::Normalized: return "normalized";
    case MatchKind::Fuzzy: return "fuzzy";
    case MatchKind::Unmatched: return "unmatched";
  }
  return "unknown";
}

struct RecEntry {
  std::string raw_title;
  std::optional<std::string> item_id;
  MatchKind match_kind = MatchKind::Unmatched;
};

/// Catalog-matched, deduplicated, length-capped recommendation list for one
/// (user, condition, ranker) cell. Unmatched (hallucinated) entries are kept
/// in place: they earn zero benefit but still consume a rank position.
struct RecommendationList {
  std::string user_id;
  RankerSpec spec;
  Condition condition = Condition::ZeroShot;
  Strategy strategy = Strategy::Rand;
  std::vector<RecEntry> entries;
  int k = 0;
  bool shortfall = false;  // fewer than k entries survived
};

/// Extracts the ordered list lines (numbered "1." / "2)" or bulleted "-",
/// "*") from a raw completion, strips numbering and surrounding quotes, and
/// truncates to k. Zero extractable lines is an extraction error.
inline std::vector<std::string> parse_list(std::string_view raw, int k) {
  std::vector<std::string> titles;
  for (const auto& line : split(raw, "\n")) {
    std::string body = trim(line);
    if (body.empty()) continue;
    bool is_list_line = false;
    if (body.size() >= 2 && (body[0] == '-' || body[0] == '*') && body[1] == ' ') {
      body = trim(body.substr(2));
      is_list_line = true;
    } else {
      std::size_t digits = 0;
      while (digits < body.size() && std::isdigit(static_cast<unsigned char>(body[digits]))) {
        ++digits;
      }
      if (digits > 0 && digits < body.size() && (body[digits] == '.' || body[digits] == ')')) {
        body = trim(body.substr(digits + 1));
        is_list_line = true;
      }
    }
    if (!is_list_line || body.empty()) continue;
    if (body.size() >= 2 && ((body.front() == '"' && body.back() == '"') ||
                             (body.front() == '\'' && body.back() == '\''))) {
      body = trim(body.substr(1, body.size() - 2));
    }
    if (body.empty()) continue;
    titles.push_back(std::move(body));
    if (static_cast<int>(titles.size()) == k) break;
  }
  if (titles.empty()) {
    throw ExtractionError("no list lines found in completion");
  }
  return titles;
}

/// Canonical title form used for the normalized matching stage: casefolded,
/// year suffix "(dddd)" stripped, whitespace collapsed, and a trailing-comma
/// article ("Matrix, The") moved back to the front ("The Matrix").
inline std::string normalize_title(std::string_view title) {
  std::string work = trim(title);
  // strip one trailing year suffix
  if (work.size() >= 6 && work.back() == ')') {
    const auto open = work.rfind('(');
    if (open != std::string::npos && work.size() - open == 6) {
      const std::string_view inner(work.data() + open + 1, 4);
      if (std::all_of(inner.begin(), inner.end(),
                      [](unsigned char c) { return std::isdigit(c); })) {
        work = trim(work.substr(0, open));
      }
    }
  }
  // ", The" / ", A" / ", An" in trailing position moves to the front
  for (const std::string_view article : {", the", ", an", ", a"}) {
    if (work.size() > article.size()) {
      const std::string tail = to_lower(work.substr(work.size() - article.size()));
      if (tail == article) {
        const std::string head = work.substr(0, work.size() - article.size());
        work = std::string(article.substr(2)) + " " + head;
        break;
      }
    }
  }
  std::string out;
  out.reserve(work.size());
  bool pending_space = false;
  for (const char raw : work) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

namespace detail {

// Numeric ids compare numerically, everything else lexicographically; keeps
// tie-breaking stable for MovieLens-style integer ids.
inline bool item_id_less(const std::string& a, const std::string& b) {
  const bool a_num = !a.empty() && std::all_of(a.begin(), a.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  const bool b_num = !b.empty() && std::all_of(b.begin(), b.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
  if (a_num && b_num) {
    if (a.size() != b.size()) return a.size() < b.size();
  }
  return a < b;
}

inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<std::size_t> row(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::size_t prev_diag = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      const std::size_t prev = row[i];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[i] = std::min({row[i] + 1, row[i - 1] + 1, prev_diag + cost});
      prev_diag = prev;
    }
  }
  return row[a.size()];
}

inline double edit_similarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

}  // namespace detail

/// Precomputed lookup structures for one catalog. Build once, match many.
class CatalogIndex {
 public:
  explicit CatalogIndex(const Catalog& catalog) {
    for (const auto& [item_id, meta] : catalog.items) {
      insert_preferring_smaller_id(exact_, meta.title, item_id);
      const std::string norm = normalize_title(meta.title);
      insert_preferring_smaller_id(normalized_, norm, item_id);
      normalized_titles_.emplace_back(norm, item_id);
    }
  }

  /// Matching pipeline: exact title, then normalized form, then fuzzy
  /// (normalized edit-distance similarity >= threshold, best match wins,
  /// ties by smaller item id). Unmatched is a value, not an error.
  std::pair<std::optional<std::string>, MatchKind> match(std::string_view raw_title,
                                                         double threshold = 0.9) const {
    const std::string raw(trim(raw_title));
    if (const auto hit = exact_.find(raw); hit != exact_.end()) {
      return {hit->second, MatchKind::Exact};
    }
    const std::string norm = normalize_title(raw);
    if (const auto hit = normalized_.find(norm); hit != normalized_.end()) {
      return {hit->second, MatchKind::Normalized};
    }
    std::optional<std::string> best_id;
    double best_score = threshold;
    for (const auto& [candidate, item_id] : normalized_titles_) {
      // length gap alone caps similarity below the threshold: skip early
      const std::size_t longest = std::max(norm.size(), candidate.size());
      const std::size_t gap =
          norm.size() > candidate.size() ? norm.size() - candidate.size()
                                         : candidate.size() - norm.size();
      if (longest == 0 ||
          1.0 - static_cast<double>(gap) / static_cast<double>(longest) < threshold) {
        continue;
      }
      const double score = detail::edit_similarity(norm, candidate);
      if (score > best_score ||
          (score == best_score &&
           (!best_id || detail::item_id_less(item_id, *best_id)))) {
        best_score = score;
        best_id = item_id;
      }
    }
    if (best_id) return {best_id, MatchKind::Fuzzy};
    return {std::nullopt, MatchKind::Unmatched};
  }

 private:
  static void insert_preferring_smaller_id(std::unordered_map<std::string, std::string>& map,
                                           const std::string& key, const std::string& item_id) {
    const auto [pos, inserted] = map.try_emplace(key, item_id);
    if (!inserted && detail::item_id_less(item_id, pos->second)) {
      pos->second = item_id;
    }
  }

  std::unordered_map<std::string, std::string> exact_;
  std::unordered_map<std::string, std::string> normalized_;
  std::vector<std::pair<std::string, std::string>> normalized_titles_;
};

inline std::pair<std::optional<std::string>, MatchKind> match_title(std::string_view raw_title,
                                                                    const Catalog& catalog,
                                                                    double threshold = 0.9) {
  if (catalog.items.empty()) throw DataError("match_title: empty catalog");
  return CatalogIndex(catalog).match(raw_title, threshold);
}

/// Matches every parsed title, drops duplicate item ids keeping the first
/// occurrence, retains unmatched entries in order, truncates to k.
inline RecommendationList to_recommendation_list(const std::vector<std::string>& titles,
                                                 const CatalogIndex& index,
                                                 const std::string& user_id, const RankerSpec& spec,
                                                 Condition condition, Strategy strategy, int k,
                                                 double threshold = 0.9) {
  RecommendationList rec;
  rec.user_id = user_id;
  rec.spec = spec;
  rec.condition = condition;
  rec.strategy = strategy;
  rec.k = k;

  std::set<std::string> seen_ids;
  for (const auto& title : titles) {
    if (static_cast<int>(rec.entries.size()) >= k) break;
    RecEntry entry;
    entry.raw_title = title;
    auto [item_id, kind] = index.match(title, threshold);
    entry.match_kind = kind;
    if (item_id) {
      if (!seen_ids.insert(*item_id).second) continue;  // duplicate, keep first
      entry.item_id = std::move(item_id);
    }
    rec.entries.push_back(std::move(entry));
  }
  rec.shortfall = static_cast<int>(rec.entries.size()) < k;
  return rec;
}

}  // namespace fairaudit
