// Brute-force ranking-quality oracle, independent of the library's metric
// path. The ideal score is found by exhaustively enumerating every ordering
// of the ground-truth items rather than assuming any particular arrangement
// is optimal. Only usable for small instances (|gt| <= ~7).
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairaudit::testing {

inline double oracle_position_discount(std::size_t position_1based) {
  return std::log2(1.0 + static_cast<double>(position_1based));
}

inline double oracle_ndcg(const std::vector<std::optional<std::string>>& rec_ids,
                          const std::vector<std::string>& ground_truth, int k) {
  std::map<std::string, double> rel;
  for (std::size_t r = 0; r < ground_truth.size(); ++r) {
    rel[ground_truth[r]] = 1.0 / std::log2(2.0 + static_cast<double>(r));
  }

  double dcg = 0.0;
  const std::size_t limit = std::min<std::size_t>(rec_ids.size(), static_cast<std::size_t>(k));
  for (std::size_t p = 0; p < limit; ++p) {
    if (!rec_ids[p]) continue;
    const auto found = rel.find(*rec_ids[p]);
    if (found == rel.end()) continue;
    dcg += found->second / oracle_position_discount(p + 1);
  }

  // Ideal score: exhaustive search over all orderings of the ground truth,
  // scoring the first min(k, |gt|) positions of each.
  std::vector<std::string> perm = ground_truth;
  std::sort(perm.begin(), perm.end());
  double idcg = 0.0;
  do {
    double candidate = 0.0;
    const std::size_t take = std::min<std::size_t>(perm.size(), static_cast<std::size_t>(k));
    for (std::size_t p = 0; p < take; ++p) {
      candidate += rel.at(perm[p]) / oracle_position_discount(p + 1);
    }
    idcg = std::max(idcg, candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (idcg == 0.0) return 0.0;
  return dcg / idcg;
}

}  // namespace fairaudit::testing
