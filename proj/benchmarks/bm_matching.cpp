#include <benchmark/benchmark.h>

#include "bellmatch/matching.hpp"
#include "bellmatch/sampler.hpp"

using namespace bellmatch;

static void BM_MatchThree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PairedRun ab = sample_pair_run({0.3, 0.0, n, Seed{1}});
  const PairedRun apb = sample_pair_run({1.2, 0.0, n, Seed{2}});
  for (auto _ : state) {
    auto m = match_three(ab, apb);
    benchmark::DoNotOptimize(m.ap);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchThree)->Arg(10000)->Arg(1000000);

static void BM_MatchFour(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PairedRun ab = sample_pair_run({0.0, 0.5, n, Seed{1}});
  const PairedRun abp = sample_pair_run({0.0, -0.5, n, Seed{2}});
  const PairedRun apb = sample_pair_run({1.5, 0.5, n, Seed{3}});
  for (auto _ : state) {
    auto m = match_four(ab, apb, abp);
    benchmark::DoNotOptimize(m.bp);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatchFour)->Arg(10000);
