#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "wmsd/aggregate.hpp"

namespace {

// Scores and ranks a batch of alternatives over 8 criteria.
void BM_ScoreAndRank(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 8;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> raw(n);
  for (double& w : raw) w = unit(rng) + 0.05;
  const auto w = wmsd::WeightVector::from_raw(raw);
  std::vector<wmsd::WeightedPoint> points;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> u(n);
    for (double& c : u) c = unit(rng);
    points.push_back(wmsd::to_weighted(wmsd::UtilityPoint(u), w));
    ids.push_back("a" + std::to_string(i));
  }
  std::vector<wmsd::ScoredId> scores(count);
  for (auto _ : state) {
    for (std::size_t i = 0; i < count; ++i) {
      scores[i] = {ids[i], wmsd::agg_weighted(wmsd::AggregationKind::R, points[i], w)};
    }
    benchmark::DoNotOptimize(wmsd::rank(scores));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * count));
}
BENCHMARK(BM_ScoreAndRank)->Arg(100)->Arg(1000)->Arg(10000);

void BM_KendallTau(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> r(1, static_cast<int>(count));
  std::vector<int> a(count), b(count);
  for (std::size_t i = 0; i < count; ++i) {
    a[i] = r(rng);
    b[i] = r(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(wmsd::kendall_tau_b(a, b));
}
BENCHMARK(BM_KendallTau)->Arg(100)->Arg(1000);

}  // namespace
