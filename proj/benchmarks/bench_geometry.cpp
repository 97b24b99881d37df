#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "wmsd/geometry.hpp"

namespace {

wmsd::WeightVector random_weights(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.05, 1.0);
  std::vector<double> raw(n);
  for (double& w : raw) w = d(rng);
  return wmsd::WeightVector::from_raw(raw);
}

// Exact envelope cost grows with the number of positive weights.
void BM_ExactBoundary(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(wmsd::boundary(w, 256));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactBoundary)->DenseRange(2, 20, 3)->Unit(benchmark::kMillisecond);

void BM_SampledBoundary(benchmark::State& state) {
  const auto w = random_weights(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(wmsd::sampled_boundary(w, 256));
}
BENCHMARK(BM_SampledBoundary)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Contains(benchmark::State& state) {
  const wmsd::AttainableRegion region(random_weights(6, 3));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> x(0.0, region.mean_w());
  std::uniform_real_distribution<double> y(0.0, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(region.contains({x(rng), y(rng)}, 1e-9));
}
BENCHMARK(BM_Contains);

}  // namespace
