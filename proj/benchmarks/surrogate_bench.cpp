#include <random>

#include <benchmark/benchmark.h>

#include "fxc/surrogate.hpp"

namespace {

void BM_Iaaft(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (auto& x : v) x = nd(rng);
  const fxc::TimeSeries series(std::move(v));
  fxc::IaaftConfig cfg;
  for (auto _ : state) {
    ++cfg.seed;
    benchmark::DoNotOptimize(fxc::iaaft_surrogate(series, cfg));
  }
}
BENCHMARK(BM_Iaaft)->Arg(1024)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

}  // namespace
