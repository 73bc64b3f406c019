#include <benchmark/benchmark.h>

#include "rainbow/exact.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/kernels.hpp"
#include "rainbow/random.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

struct Instance {
  Graph g;
  std::vector<std::uint8_t> colors;
  std::size_t k;
};

Instance instance(std::size_t n, std::size_t k) {
  Graph g = gen::random_diam2({.n = n, .p = 0.3, .seed = n * 31 + k}).graph;
  SplitMix64 rng(k);
  std::vector<std::uint8_t> colors(g.size());
  for (auto& c : colors) c = static_cast<std::uint8_t>(rng.below(k));
  return {std::move(g), std::move(colors), k};
}

EdgeColoring as_coloring(const Instance& in) {
  std::vector<Color> c(in.colors.begin(), in.colors.end());
  for (auto& x : c) ++x;
  return EdgeColoring(in.g, c, in.k);
}

void BM_FailingPairsSerial(benchmark::State& state) {
  Instance in = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  kernels::ColorMasks masks(in.g, in.colors, in.k);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::failing_pair_count_serial(masks));
}

void BM_FailingPairsParallel(benchmark::State& state) {
  Instance in = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  kernels::ColorMasks masks(in.g, in.colors, in.k);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::failing_pair_count_parallel(masks));
}

void BM_VerifyWitnesses(benchmark::State& state) {
  Instance in = instance(static_cast<std::size_t>(state.range(0)), 5);
  EdgeColoring col = as_coloring(in);
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_rainbow_connected(in.g, col, {.witnesses = true, .parallel = parallel}));
  }
}

void BM_ExactSearch(benchmark::State& state) {
  Graph g = gen::petersen();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_coloring(g, 2, 100'000'000, parallel));
}

}  // namespace

BENCHMARK(BM_FailingPairsSerial)->Args({32, 4})->Args({64, 4})->Args({64, 8});
BENCHMARK(BM_FailingPairsParallel)->Args({32, 4})->Args({64, 4})->Args({64, 8});
BENCHMARK(BM_VerifyWitnesses)->Args({40, 0})->Args({40, 1})->Args({100, 0})->Args({100, 1});
BENCHMARK(BM_ExactSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
