#include <benchmark/benchmark.h>

#include "gembench/corpus.hpp"
#include "gembench/generators.hpp"
#include "gembench/split.hpp"

using namespace gembench;

static void BM_BarabasiAlbert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen::generate({gen::BarabasiAlbert{n, 2}, seed++}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BarabasiAlbert)->Arg(256)->Arg(1024)->Arg(8192);

static void BM_StochasticBlockModel(benchmark::State& state) {
  const auto b = static_cast<std::size_t>(state.range(0)) / 4;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen::generate({gen::StochasticBlockModel{{b, b, b, b}, 0.05, 0.005}, seed++}));
  }
}
BENCHMARK(BM_StochasticBlockModel)->Arg(256)->Arg(1024);

static void BM_Isrw(benchmark::State& state) {
  const auto g = gen::generate({gen::BarabasiAlbert{20000, 3}, 1});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen::isrw_sample(g, static_cast<std::size_t>(state.range(0)), seed++));
}
BENCHMARK(BM_Isrw)->Arg(256)->Arg(1024);

static void BM_SplitEdges(benchmark::State& state) {
  const auto g = gen::generate({gen::BarabasiAlbert{static_cast<std::size_t>(state.range(0)), 2}, 1});
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(split_edges(g, 0.2, seed++));
}
BENCHMARK(BM_SplitEdges)->Arg(256)->Arg(1024);

static void BM_SyntheticCorpusSmall(benchmark::State& state) {
  auto plan = CorpusPlan::appendix_default();
  plan.sizes = {256};
  plan.degrees = {4.0};
  for (auto _ : state) benchmark::DoNotOptimize(build_synthetic_corpus(plan, 1));
}
BENCHMARK(BM_SyntheticCorpusSmall)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
