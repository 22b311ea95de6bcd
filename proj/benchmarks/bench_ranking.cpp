#include <benchmark/benchmark.h>

#include "gembench/evaluation.hpp"
#include "gembench/generators.hpp"
#include "gembench/heuristics.hpp"
#include "gembench/split.hpp"

using namespace gembench;

namespace {

EdgeSplit sbm_split(std::size_t n) {
  const auto b = n / 4;
  const auto g = gen::generate({gen::StochasticBlockModel{{b, b, b, b}, 16.0 / static_cast<double>(n), 1.6 / static_cast<double>(n)}, 3});
  return split_edges(g, 0.2, 5);
}

}  // namespace

static void BM_HeuristicTopK(benchmark::State& state) {
  const auto split = sbm_split(static_cast<std::size_t>(state.range(0)));
  const HeuristicScorer scorer(HeuristicKind::adamic_adar, split.train);
  for (auto _ : state) benchmark::DoNotOptimize(rank_candidates(scorer, split, 100));
}
BENCHMARK(BM_HeuristicTopK)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_Evaluate(benchmark::State& state) {
  const auto split = sbm_split(static_cast<std::size_t>(state.range(0)));
  const HeuristicScorer scorer(HeuristicKind::common_neighbors, split.train);
  for (auto _ : state) benchmark::DoNotOptimize(eval::evaluate(scorer, split, 100));
}
BENCHMARK(BM_Evaluate)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_RandomBaseline(benchmark::State& state) {
  const auto split = sbm_split(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval::random_baseline(split, 100, 10, 1));
}
BENCHMARK(BM_RandomBaseline)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
