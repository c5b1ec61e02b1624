#include <benchmark/benchmark.h>

#include "ribbonspec/batch.hpp"

using namespace ribbonspec;

namespace {

BatchConfig bench_config(int genus)
{
    return BatchConfig::for_genus(genus, 1, 64);
}

void BM_TrialsSerial(benchmark::State& state)
{
    const auto cfg = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

void BM_TrialsParallel(benchmark::State& state)
{
    const auto cfg = bench_config(static_cast<int>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_trials_parallel(cfg, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

void BM_HistogramSerial(benchmark::State& state)
{
    const auto records = run_trials_serial(bench_config(32));
    for (auto _ : state) benchmark::DoNotOptimize(cycle_histogram(records, 0.0, 0.08, 50));
}

void BM_HistogramParallel(benchmark::State& state)
{
    const auto records = run_trials_serial(bench_config(32));
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cycle_histogram_parallel(records, 0.0, 0.08, 50, workers));
}

}  // namespace

BENCHMARK(BM_TrialsSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->ArgsProduct({{8, 32}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HistogramSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HistogramParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
