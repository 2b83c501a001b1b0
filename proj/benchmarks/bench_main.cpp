#include <benchmark/benchmark.h>

#include "percgame/engine.hpp"
#include "percgame/estimators.hpp"
#include "percgame/perc.hpp"
#include "percgame/strategies.hpp"

using namespace percgame;

// Square box of half-size range(0) at p = 0.65.
static void BM_HasVerticalCrossing(benchmark::State& state) {
  const auto n = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(has_vertical_crossing(Configuration(seed++, 0.65), BoxSpec{{0, 0}, n, n}));
  state.SetItemsProcessed(state.iterations() * 4 * n * n);
}
BENCHMARK(BM_HasVerticalCrossing)->Arg(16)->Arg(128)->Arg(1024);

static void BM_MaxOrientedPathCost(benchmark::State& state) {
  const auto len = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(max_oriented_path_cost(Configuration(seed++, 0.5), {0, 0}, len));
  state.SetItemsProcessed(state.iterations() * len * len);
}
BENCHMARK(BM_MaxOrientedPathCost)->Arg(500)->Arg(2000);

static void BM_Play(benchmark::State& state) {
  const auto p2 = parse_p2_portfolio(kDefaultP2Portfolio);
  const auto& tau = *p2[static_cast<std::size_t>(state.range(0))];
  std::uint64_t seed = 0;
  for (auto _ : state) {
    AlwaysTop top;
    auto t2 = tau.clone();
    benchmark::DoNotOptimize(play(Configuration(seed++, 0.65), {0, 0}, top, *t2, 500).cost_sum(500));
  }
  state.SetLabel(tau.name());
}
BENCHMARK(BM_Play)->DenseRange(0, 3);

static void BM_ValueMatrix(benchmark::State& state) {
  const auto p1 = parse_p1_portfolio(kDefaultP1Portfolio);
  const auto p2 = parse_p2_portfolio(kDefaultP2Portfolio);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(value_matrix(0.5, {0, 0}, p1, p2, 500, 4, seed++, 1).value);
}
BENCHMARK(BM_ValueMatrix)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
