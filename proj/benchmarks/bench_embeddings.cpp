#include <benchmark/benchmark.h>

#include "gembench/embeddings.hpp"
#include "gembench/generators.hpp"

using namespace gembench;

namespace {

Graph plc(std::size_t n) { return gen::generate({gen::PowerlawCluster{n, 2, 0.5}, 7}); }

}  // namespace

static void BM_LaplacianEigenmaps(benchmark::State& state) {
  const auto g = plc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(embed::embed_laplacian_eigenmaps(g, 128));
}
BENCHMARK(BM_LaplacianEigenmaps)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_HopeFactorize(benchmark::State& state) {
  const auto g = plc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(embed::hope_factorize(g, embed::HopeParams{}, 128));
}
BENCHMARK(BM_HopeFactorize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_GraphFactorization(benchmark::State& state) {
  const auto g = plc(static_cast<std::size_t>(state.range(0)));
  embed::GfParams p;
  p.epochs = 50;
  for (auto _ : state) benchmark::DoNotOptimize(embed::embed_graph_factorization(g, 64, p, 1));
}
BENCHMARK(BM_GraphFactorization)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_SdneEpochs(benchmark::State& state) {
  const auto g = plc(static_cast<std::size_t>(state.range(0)));
  embed::SdneParams p;
  p.epochs = 5;
  for (auto _ : state) benchmark::DoNotOptimize(embed::embed_sdne(g, 64, p, 1));
}
BENCHMARK(BM_SdneEpochs)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
