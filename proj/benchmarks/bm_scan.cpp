#include <benchmark/benchmark.h>

#include "bellmatch/scan.hpp"

using namespace bellmatch;

static void BM_Fig2SmallGrid(benchmark::State& state) {
  GridSpec g;
  g.alpha.steps = 5;
  g.alpha_prime.steps = 5;
  g.n_per_cell = 10000;
  g.source = state.range(0) == 0 ? Fig2Source::gedanken : Fig2Source::matched_runs;
  for (auto _ : state) benchmark::DoNotOptimize(fig2_scan(g, 1));
}
BENCHMARK(BM_Fig2SmallGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
