#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fairaudit/common.hpp"
#include "fairaudit/corpus.hpp"
#include "fairaudit/extraction.hpp"

namespace fairaudit {

enum class Metric { Hit, Rank };

inline std::string_view to_string(Metric m) { return m == Metric::Hit ? "hit" : "rank"; }

inline Metric parse_metric(std::string_view s) {
  const std::string v = to_lower(s);
  if (v == "hit") return Metric::Hit;
  if (v == "rank") return Metric::Rank;
  throw ConfigError("unknown metric: " + std::string(s));
}

struct BenefitScore {
  std::string user_id;
  RankerSpec spec;
  Condition condition = Condition::ZeroShot;
  Strategy strategy = Strategy::Rand;
  Metric metric = Metric::Hit;
  double value = 0.0;  // in [0, 1]
};

/// Ground-truth item ids for a user, ordered by relevance: rating descending,
/// then timestamp ascending, then item id. Position in this ordering drives
/// the graded relevance of the rank benefit.
inline std::vector<std::string> ground_truth_ids(const UserRecord& user) {
  std::vector<const Interaction*> ordered;
  ordered.reserve(user.test.size());
  for (const auto& it : user.test) ordered.push_back(&it);
  std::sort(ordered.begin(), ordered.end(), [](const Interaction* a, const Interaction* b) {
    if (a->rating != b->rating) return a->rating > b->rating;
    if (a->timestamp != b->timestamp) return a->timestamp < b->timestamp;
    return a->item_id < b->item_id;
  });
  std::vector<std::string> ids;
  ids.reserve(ordered.size());
  for (const auto* it : ordered) ids.push_back(it->item_id);
  return ids;
}

/// 1.0 if any matched entry among the first k appears in the ground truth,
/// else 0.0. An empty recommendation list scores 0.0 (shortfall is flagged on
/// the list itself).
inline double benefit_hit(const RecommendationList& rec,
                          const std::vector<std::string>& ground_truth, int k) {
  if (ground_truth.empty()) throw DataError("benefit_hit: empty ground truth");
  std::unordered_set<std::string> truth(ground_truth.begin(), ground_truth.end());
  const std::size_t limit = std::min<std::size_t>(rec.entries.size(), static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < limit; ++p) {
    const auto& entry = rec.entries[p];
    if (entry.item_id && truth.count(*entry.item_id)) return 1.0;
  }
  return 0.0;
}

/// NDCG@k with graded relevance rel(i) = 1 / log2(1 + gt_rank(i)) for items
/// in the ground truth (gt_rank is the 1-based position in the ground-truth
/// ordering) and 0 otherwise:
///
///   DCG  = sum_{p=1..k} rel(item_p) / log2(1 + p)
///   IDCG = the k highest relevances of this user's ground truth, best order
///
/// Unmatched entries contribute zero gain but consume their rank position.
inline double benefit_rank(const RecommendationList& rec,
                           const std::vector<std::string>& ground_truth, int k) {
  if (ground_truth.empty()) throw DataError("benefit_rank: empty ground truth");

  std::unordered_map<std::string, double> relevance;
  relevance.reserve(ground_truth.size());
  for (std::size_t r = 0; r < ground_truth.size(); ++r) {
    relevance.emplace(ground_truth[r], 1.0 / std::log2(2.0 + static_cast<double>(r)));
  }

  double dcg = 0.0;
  const std::size_t limit = std::min<std::size_t>(rec.entries.size(), static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < limit; ++p) {
    const auto& entry = rec.entries[p];
    if (!entry.item_id) continue;
    const auto found = relevance.find(*entry.item_id);
    if (found == relevance.end()) continue;
    dcg += found->second / std::log2(2.0 + static_cast<double>(p));
  }

  // Relevances are decreasing in ground-truth rank, so the ideal list is the
  // first min(k, |gt|) ground-truth items in order.
  double idcg = 0.0;
  const std::size_t ideal = std::min<std::size_t>(ground_truth.size(), static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < ideal; ++p) {
    idcg += (1.0 / std::log2(2.0 + static_cast<double>(p))) /
            std::log2(2.0 + static_cast<double>(p));
  }
  if (idcg == 0.0) return 0.0;
  return dcg / idcg;
}

inline double compute_benefit(Metric metric, const RecommendationList& rec,
                              const std::vector<std::string>& ground_truth, int k) {
  return metric == Metric::Hit ? benefit_hit(rec, ground_truth, k)
                               : benefit_rank(rec, ground_truth, k);
}

}  // namespace fairaudit
