#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "graphdesign/graph.hpp"
#include "graphdesign/kramer_mesner.hpp"
#include "graphdesign/search.hpp"

namespace {

using namespace graphdesign;

void BM_CanonicalForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937 rng(7);
  std::vector<std::vector<Edge>> inputs;
  for (const auto& g : enumerate_classes(m)) {
    std::vector<int> perm(2 * m);
    for (int i = 0; i < 2 * m; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.canonical_edges()) edges.push_back({perm[e.a], perm[e.b]});
    inputs.push_back(std::move(edges));
  }
  for (auto _ : state) {
    for (const auto& edges : inputs) benchmark::DoNotOptimize(canonical_form(edges));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(5);

void BM_GrayStep(benchmark::State& state) {
  const EvaluatedKM ekm = evaluate(km_table(2, 5), 40);
  std::vector<std::vector<std::int64_t>> values(ekm.cols());
  for (std::size_t c = 0; c < values.size(); ++c) {
    for (const auto& row : ekm.matrix) values[c].push_back(row[c]);
  }
  values.resize(static_cast<std::size_t>(state.range(0)));
  GrayWalker walker(values);
  const std::uint64_t last = (std::uint64_t{1} << values.size()) - 1;
  for (auto _ : state) {
    if (walker.index() == last) walker.seek(0);
    walker.step();
    benchmark::DoNotOptimize(walker.sums().data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GrayStep)->Arg(20);

void BM_EnumerateSolutions(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const EvaluatedKM ekm = evaluate(km_table(t, 5), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_solutions(ekm, 1));
}
BENCHMARK(BM_EnumerateSolutions)->Args({2, 12})->Args({3, 12})->Unit(benchmark::kMillisecond);

void BM_EvaluateMatrix(benchmark::State& state) {
  const KMTable& table = km_table(2, 5);
  int n = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(table, n));
    n = n == 537 ? 5 : n + 1;
  }
}
BENCHMARK(BM_EvaluateMatrix)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
