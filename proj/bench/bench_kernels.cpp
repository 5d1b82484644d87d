#include <benchmark/benchmark.h>

#include "riordan/decomposition.hpp"
#include "riordan/graph_ops.hpp"
#include "riordan/riordan_graph.hpp"
#include "riordan/riordan_matrix.hpp"

namespace {

using namespace riordan;

Execution mode(const benchmark::State& state) {
  return state.range(1) != 0 ? Execution::parallel : Execution::serial;
}

void BM_EnumerateLabeled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_labeled(n, mode(state)).count);
}
BENCHMARK(BM_EnumerateLabeled)->ArgsProduct({{5, 6, 7}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_EnumerateMatrices(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order_n(n, mode(state)).total);
}
BENCHMARK(BM_EnumerateMatrices)->ArgsProduct({{3, 4, 5}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_WalkMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = family_spec(Family::pascal, n), b = family_spec(Family::catalan, n);
  for (auto _ : state) benchmark::DoNotOptimize(rgb_walk_matrix(a, b, mode(state)).entries.data());
}
BENCHMARK(BM_WalkMatrix)->ArgsProduct({{64, 256, 512}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_BuildGraph(benchmark::State& state) {
  const auto spec = family_spec(Family::catalan, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(spec).edge_count());
}
BENCHMARK(BM_BuildGraph)->RangeMultiplier(4)->Range(64, 4096);

void BM_Decompose(benchmark::State& state) {
  const auto spec = family_spec(Family::pascal, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(spec).bridge.popcount());
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
