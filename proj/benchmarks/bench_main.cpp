#include <benchmark/benchmark.h>

#include "somix/bounds.hpp"
#include "somix/branching.hpp"
#include "somix/walk.hpp"
#include "somix/weyl.hpp"

namespace {

somix::OddLabel staircase(int n) {
  somix::OddLabel a;
  for (int q = 1; q <= n; ++q) a.parts.push_back(q);
  return a;
}

void BM_Dimension(benchmark::State& state) {
  const auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(somix::dimension(a));
}
BENCHMARK(BM_Dimension)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_FourierProfile(benchmark::State& state) {
  const auto a = staircase(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(somix::fourier_profile(a));
}
BENCHMARK(BM_FourierProfile)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_CharacterValue(benchmark::State& state) {
  const auto a = staircase(4);
  const double theta = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(somix::character_value(a, theta));
}
BENCHMARK(BM_CharacterValue)->Arg(1)->Arg(100)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_L2Bound(benchmark::State& state) {
  const somix::LabelBudget budget{3, static_cast<int>(state.range(0)), static_cast<int>(state.range(0))};
  const std::vector<long long> grid{1, 2, 4, 8, 16, 32};
  for (auto _ : state) benchmark::DoNotOptimize(somix::l2_bound(3, somix::AngleLaw::fixed(1.0), budget, grid));
}
BENCHMARK(BM_L2Bound)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_WalkStep(benchmark::State& state) {
  somix::WalkConfig config;
  config.N = static_cast<int>(state.range(0));
  config.kind = state.range(1) ? somix::WalkKind::kac_pair : somix::WalkKind::rosenthal_conjugacy;
  config.law = somix::AngleLaw::uniform();
  somix::Rng rng = somix::trial_stream(1, 0);
  somix::Matrix X = somix::Matrix::Identity(config.N, config.N);
  for (auto _ : state) {
    X = somix::step(X, config, rng);
    benchmark::DoNotOptimize(X.data());
  }
}
BENCHMARK(BM_WalkStep)->Args({5, 0})->Args({5, 1})->Args({21, 0})->Args({21, 1});

}  // namespace

BENCHMARK_MAIN();
