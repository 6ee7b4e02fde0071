// Serial reference vs OpenMP kernels. The weight map uses the OpenMP
// default thread count, Monte-Carlo batches take it as the argument.

#include <benchmark/benchmark.h>

#include "wbsearch/config.hpp"
#include "wbsearch/montecarlo.hpp"

using namespace wbsearch;

namespace {

SurvivorReport report_for(double n) { return {{0.23 * n, 0.67 * n}, 33.0, 0.0}; }

void BM_WeightMapSerial(benchmark::State& state) {
    const auto n = static_cast<double>(state.range(0));
    const auto env = make_environment(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_weight_map_serial(env, report_for(n)));
    state.SetItemsProcessed(state.iterations() * env.cell_count());
}

void BM_WeightMapParallel(benchmark::State& state) {
    const auto n = static_cast<double>(state.range(0));
    const auto env = make_environment(n, n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_weight_map(env, report_for(n)));
    state.SetItemsProcessed(state.iterations() * env.cell_count());
}

BatchConfig field600_batch(int threads) {
    auto batch = load_config(WBSEARCH_SOURCE_DIR "/configs/field600.cfg").batch;
    batch.runs = 20;
    batch.parallelism = threads;
    batch.base.record_trajectory = false;
    return batch;
}

void BM_MonteCarloSerial(benchmark::State& state) {
    const auto batch = field600_batch(1);
    for (auto _ : state) benchmark::DoNotOptimize(run_montecarlo_serial(batch));
    state.SetItemsProcessed(state.iterations() * batch.runs * 2);
}

void BM_MonteCarloParallel(benchmark::State& state) {
    const auto batch = field600_batch(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_montecarlo(batch));
    state.SetItemsProcessed(state.iterations() * batch.runs * 2);
}

}  // namespace

BENCHMARK(BM_WeightMapSerial)->Arg(100)->Arg(600)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_WeightMapParallel)->Arg(100)->Arg(600)->Arg(2000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
