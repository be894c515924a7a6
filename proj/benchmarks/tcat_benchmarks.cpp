#include <benchmark/benchmark.h>

#include <vector>

#include "tcat/tcat.hpp"

namespace {

const tcat::UniformSeries& brownian(std::size_t n) {
  static std::vector<std::pair<std::size_t, tcat::UniformSeries>> cache;
  for (const auto& [len, s] : cache)
    if (len == n) return s;
  cache.emplace_back(n, tcat::gen_sbm(n, 1.0, 1.0, 7));
  return cache.back().second;
}

void BM_FitPowerLaw(benchmark::State& state) {
  std::vector<double> lags, msd;
  for (int t = 1; t <= state.range(0); ++t) {
    lags.push_back(t);
    msd.push_back(2.0 * t * (1.0 + 0.01 * (t % 3)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(tcat::fit_power_law(lags, msd));
}
BENCHMARK(BM_FitPowerLaw)->Arg(16)->Arg(64);

void BM_TransportIncrements(benchmark::State& state) {
  const auto& s = brownian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tcat::transport_increments(s, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TransportIncrements)->Arg(1 << 10)->Arg(1 << 14);

void BM_ReynoldsSeries(benchmark::State& state) {
  const auto& s = brownian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tcat::reynolds_series(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ReynoldsSeries)->Arg(1 << 10)->Arg(1 << 14);

void BM_RollingFits(benchmark::State& state) {
  const auto& s = brownian(2048);
  const auto lags = tcat::lag_range(1, 16);
  const auto window = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tcat::rolling_fits(s, lags, window, 1, 1));
}
BENCHMARK(BM_RollingFits)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_FbmFactorize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tcat::FbmGenerator({0.7, n, 1.0, 1.0, 0}));
}
BENCHMARK(BM_FbmFactorize)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_FbmSample(benchmark::State& state) {
  const tcat::FbmGenerator gen({0.7, static_cast<std::size_t>(state.range(0)), 1.0, 1.0, 0});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen.sample(seed++));
}
BENCHMARK(BM_FbmSample)->Arg(512)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ComputeVh(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tcat::compute_vh(0.7));
}
BENCHMARK(BM_ComputeVh);

}  // namespace

BENCHMARK_MAIN();
