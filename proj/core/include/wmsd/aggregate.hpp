#ifndef WMSD_AGGREGATE_HPP_
#define WMSD_AGGREGATE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wmsd/model.hpp"
#include "wmsd/spaces.hpp"
#include "wmsd/wmsd.hpp"

namespace wmsd {

/// I: closeness to the ideal, A: remoteness from the anti-ideal,
/// R: relative closeness (the classic TOPSIS score). All are maximized.
enum class AggregationKind { I, A, R };

std::string_view to_string(AggregationKind kind) noexcept;
std::optional<AggregationKind> parse_aggregation(std::string_view text) noexcept;

inline constexpr double kDefaultTieTolerance = 1e-9;

double agg_unweighted(AggregationKind kind, const UtilityPoint& u);

/// Primary path: distances are taken in VS directly.
double agg_weighted(AggregationKind kind, const WeightedPoint& v, const WeightVector& w);

/// Same aggregation expressed through WMSD coordinates.
double agg_from_wmsd(AggregationKind kind, WmsdPoint p, double mean_w);

struct RankEntry {
  std::string id;
  double score = 0.0;
  int rank = 0;          // competition numbering: 1, 2, 2, 4
  std::size_t group = 0; // index into Ranking::groups
};

struct Ranking {
  std::vector<RankEntry> entries;
  std::vector<std::vector<std::string>> groups;

  const RankEntry* find(std::string_view id) const;
};

using ScoredId = std::pair<std::string, double>;

/// Sorts by score, best first. A group opens at its highest score and takes
/// every following score within tie_tolerance of it; members of a group
/// keep their input order.
Ranking rank(std::span<const ScoredId> scores, double tie_tolerance = kDefaultTieTolerance);

struct RankDelta {
  std::string id;
  int rank_a = 0;
  int rank_b = 0;
  int delta = 0;  // rank_b - rank_a
};

struct RankComparison {
  std::vector<RankDelta> deltas;  // in the order of the first ranking
  double kendall_tau_b = 1.0;
  /// (x, y) where x was strictly preferred to y in the first ranking and y
  /// is strictly preferred to x in the second.
  std::vector<std::pair<std::string, std::string>> reversals;
};

RankComparison compare_rankings(const Ranking& a, const Ranking& b);

/// Tau-b between two pre-orders given as parallel rank arrays.
double kendall_tau_b(std::span<const int> ranks_a, std::span<const int> ranks_b);

}  // namespace wmsd

#endif  // WMSD_AGGREGATE_HPP_
