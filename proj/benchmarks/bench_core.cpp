#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hiercoop/explorer.hpp"
#include "hiercoop/optimizer.hpp"
#include "hiercoop/recurrence.hpp"
#include "hiercoop/throughput.hpp"

namespace {

using namespace hiercoop;

void BM_DelayRecursive(benchmark::State& state) {
  const SchemeParams params = derive(1.0, 1.0);
  const int h = static_cast<int>(state.range(0));
  const HierarchyPlan plan = optimal_cluster_sizes(h, 1e12, params);
  for (auto _ : state) benchmark::DoNotOptimize(delay_recursive(plan, params).slots);
}
BENCHMARK(BM_DelayRecursive)->DenseRange(2, 6, 2);

void BM_DelayClosedForm(benchmark::State& state) {
  const SchemeParams params = derive(1.0, 1.0);
  const int h = static_cast<int>(state.range(0));
  const HierarchyPlan plan = optimal_cluster_sizes(h, 1e12, params);
  for (auto _ : state) benchmark::DoNotOptimize(delay_closed_form(plan, params).slots);
}
BENCHMARK(BM_DelayClosedForm)->DenseRange(2, 6, 2);

void BM_LayerChoice(benchmark::State& state) {
  const SchemeParams params = derive(1.0, 1.0);
  const std::int64_t n = std::int64_t{1} << state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(layer_choice(n, params).h_int);
}
BENCHMARK(BM_LayerChoice)->Arg(17)->Arg(30)->Arg(60);

void BM_OptimalModified(benchmark::State& state) {
  const SchemeParams params = derive(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_modified(131072, params).value);
}
BENCHMARK(BM_OptimalModified);

void BM_CompareSchemes(benchmark::State& state) {
  const SchemeParams params = derive(1.0, 1.0);
  std::vector<std::int64_t> grid;
  for (int k = 10; k <= 44; ++k) grid.push_back(std::int64_t{1} << k);
  const NetworkConfig cfg{4, 1.0, 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(compare_schemes(grid, cfg, params, 1.0).rows.size());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_CompareSchemes);

}  // namespace
BENCHMARK_MAIN();
