#include <benchmark/benchmark.h>

#include "wmsd/render.hpp"

namespace {

void BM_RenderPlot(benchmark::State& state) {
  wmsd::PlotSpec spec(wmsd::WeightVector::from_raw(std::vector<double>{0.5, 0.6, 1.0}));
  spec.grid = static_cast<std::size_t>(state.range(0));
  spec.isolines = {0.25, 0.5, 0.75};
  for (auto _ : state) benchmark::DoNotOptimize(wmsd::render_wmsd_plot(spec));
}
BENCHMARK(BM_RenderPlot)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
