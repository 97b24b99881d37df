#include "wmsd/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "wmsd/error.hpp"

namespace wmsd {

namespace {

double unit_clamp(double x) { return std::clamp(x, 0.0, 1.0); }

double combine(AggregationKind kind, double to_ideal, double to_anti, double scale) {
  switch (kind) {
    case AggregationKind::I: return unit_clamp(1.0 - to_ideal / scale);
    case AggregationKind::A: return unit_clamp(to_anti / scale);
    case AggregationKind::R: return unit_clamp(to_anti / (to_ideal + to_anti));
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(AggregationKind kind) noexcept {
  switch (kind) {
    case AggregationKind::I: return "I";
    case AggregationKind::A: return "A";
    case AggregationKind::R: return "R";
  }
  return "?";
}

std::optional<AggregationKind> parse_aggregation(std::string_view text) noexcept {
  if (text == "I") return AggregationKind::I;
  if (text == "A") return AggregationKind::A;
  if (text == "R") return AggregationKind::R;
  return std::nullopt;
}

double agg_unweighted(AggregationKind kind, const UtilityPoint& u) {
  const auto n = u.size();
  const double to_ideal = rescaled_euclid(u, UtilityPoint::ideal(n));
  const double to_anti = rescaled_euclid(u, UtilityPoint::anti_ideal(n));
  return combine(kind, to_ideal, to_anti, 1.0);
}

double agg_weighted(AggregationKind kind, const WeightedPoint& v, const WeightVector& w) {
  const double to_ideal = weighted_rescaled_euclid(v, WeightedPoint::ideal(w), w);
  const double to_anti = weighted_rescaled_euclid(v, WeightedPoint::anti_ideal(w), w);
  return combine(kind, to_ideal, to_anti, w.mean());
}

double agg_from_wmsd(AggregationKind kind, WmsdPoint p, double mean_w) {
  const auto d = ia_distances(p, mean_w);
  return combine(kind, d.to_ideal, d.to_anti_ideal, mean_w);
}

const RankEntry* Ranking::find(std::string_view id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

Ranking rank(std::span<const ScoredId> scores, double tie_tolerance) {
  for (const auto& [id, score] : scores) {
    if (!std::isfinite(score)) {
      throw Error(ErrorCode::NonFiniteScore, "score of '" + id + "' is not finite").with_id(id);
    }
  }
  if (!(tie_tolerance >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tie tolerance must be non-negative");
  }

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a].second > scores[b].second;
  });

  Ranking out;
  out.entries.reserve(scores.size());
  std::size_t start = 0;
  while (start < order.size()) {
    const double leader = scores[order[start]].second;
    std::size_t end = start + 1;
    while (end < order.size() && leader - scores[order[end]].second <= tie_tolerance) ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(start),
              order.begin() + static_cast<std::ptrdiff_t>(end));

    const std::size_t group = out.groups.size();
    auto& members = out.groups.emplace_back();
    for (std::size_t k = start; k < end; ++k) {
      const auto& [id, score] = scores[order[k]];
      out.entries.push_back({id, score, static_cast<int>(start) + 1, group});
      members.push_back(id);
    }
    start = end;
  }
  return out;
}

double kendall_tau_b(std::span<const int> ranks_a, std::span<const int> ranks_b) {
  if (ranks_a.size() != ranks_b.size()) {
    throw Error(ErrorCode::LengthMismatch, "rank arrays differ in length");
  }
  const std::size_t n = ranks_a.size();
  long long concordant = 0;
  long long discordant = 0;
  long long ties_a = 0;  // pairs tied in a (including joint ties)
  long long ties_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int da = ranks_a[i] - ranks_a[j];
      const int db = ranks_b[i] - ranks_b[j];
      if (da == 0) ++ties_a;
      if (db == 0) ++ties_b;
      if (da == 0 || db == 0) continue;
      if ((da > 0) == (db > 0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const auto pairs = static_cast<long long>(n * (n - 1) / 2);
  const double denom = std::sqrt(static_cast<double>(pairs - ties_a) *
                                 static_cast<double>(pairs - ties_b));
  if (denom == 0.0) {
    // Undefined; report agreement only when both pre-orders are fully tied
    // (or empty), which makes them identical.
    return (ties_a == pairs && ties_b == pairs) ? 1.0 : 0.0;
  }
  return static_cast<double>(concordant - discordant) / denom;
}

RankComparison compare_rankings(const Ranking& a, const Ranking& b) {
  if (a.entries.size() != b.entries.size()) {
    throw Error(ErrorCode::IdSetMismatch, "rankings cover different numbers of alternatives");
  }
  std::unordered_map<std::string, int> rank_in_b;
  for (const auto& e : b.entries) rank_in_b.emplace(e.id, e.rank);

  RankComparison out;
  std::vector<int> ra;
  std::vector<int> rb;
  ra.reserve(a.entries.size());
  rb.reserve(a.entries.size());
  for (const auto& e : a.entries) {
    auto it = rank_in_b.find(e.id);
    if (it == rank_in_b.end()) {
      throw Error(ErrorCode::IdSetMismatch, "'" + e.id + "' is missing from the second ranking")
          .with_id(e.id);
    }
    out.deltas.push_back({e.id, e.rank, it->second, it->second - e.rank});
    ra.push_back(e.rank);
    rb.push_back(it->second);
  }
  if (rank_in_b.size() != a.entries.size()) {
    throw Error(ErrorCode::IdSetMismatch, "second ranking has duplicate ids");
  }

  for (std::size_t i = 0; i < ra.size(); ++i) {
    for (std::size_t j = 0; j < ra.size(); ++j) {
      if (ra[i] < ra[j] && rb[j] < rb[i]) {
        out.reversals.emplace_back(out.deltas[i].id, out.deltas[j].id);
      }
    }
  }
  out.kendall_tau_b = kendall_tau_b(ra, rb);
  return out;
}

}  // namespace wmsd
