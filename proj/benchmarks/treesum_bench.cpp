#include <benchmark/benchmark.h>

#include "treesum/treesum.hpp"

namespace {

using namespace treesum;

WeightedTree make_tree(std::size_t n, std::size_t important, std::uint64_t seed = 1) {
  GenSpec spec;
  spec.n = n;
  spec.important_count = important;
  spec.seed = seed;
  return gen_random_tree(spec);
}

// Marginal gain of the root against a small random summary.
void BM_MarginalGainFast(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 4);
  SummarySet s(tree.size());
  for (NodeId v = 1; v < tree.size(); v += 97) s.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(marginal_gain_fast(tree, s, tree.root()));
}
BENCHMARK(BM_MarginalGainFast)->Arg(1 << 10)->Arg(1 << 14);

void BM_MarginalGainNaive(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 4);
  SummarySet s(tree.size());
  for (NodeId v = 1; v < tree.size(); v += 97) s.insert(v);
  for (auto _ : state) benchmark::DoNotOptimize(marginal_gain_naive(tree, s, tree.root()));
}
BENCHMARK(BM_MarginalGainNaive)->Arg(1 << 10)->Arg(1 << 14);

void BM_Gts(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 4);
  for (auto _ : state) benchmark::DoNotOptimize(gts(tree, 10).score);
}
BENCHMARK(BM_Gts)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Ots(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 4);
  for (auto _ : state) benchmark::DoNotOptimize(ots(tree, 10).score);
}
BENCHMARK(BM_Ots)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Vtree(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 100);
  for (auto _ : state) benchmark::DoNotOptimize(vtree(tree).size());
}
BENCHMARK(BM_Vtree)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_ReducedOts(benchmark::State& state) {
  const auto tree = make_tree(static_cast<std::size_t>(state.range(0)), state.range(0) / 100);
  const auto reduced = vtree(tree);
  for (auto _ : state) benchmark::DoNotOptimize(ots(reduced.tree, 10).score);
}
BENCHMARK(BM_ReducedOts)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
