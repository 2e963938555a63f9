#include <benchmark/benchmark.h>

#include <numbers>

#include "bellmatch/sampler.hpp"

using namespace bellmatch;

static void BM_SamplePairRun(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto run = sample_pair_run({std::numbers::pi / 3, 0.0, n, Seed{seed++}});
    benchmark::DoNotOptimize(run.a_list);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePairRun)->Arg(1000)->Arg(100000);

static void BM_SampleGedanken4(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AngleConfig4 cfg{0.0, std::numbers::pi / 2, std::numbers::pi / 4, -std::numbers::pi / 4};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = sample_gedanken4(cfg, n, Seed{seed++});
    benchmark::DoNotOptimize(g.bp);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleGedanken4)->Arg(10000);
