#include <benchmark/benchmark.h>

#include "polarcog/sweeps.hpp"

using polarcog::Execution;

namespace {

Execution exec_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Completeness(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polarcog::completeness_check(3, 8, exec_of(state)));
}
BENCHMARK(BM_Completeness)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_EssentialSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polarcog::essential_sweep(9, exec_of(state)));
}
BENCHMARK(BM_EssentialSweep)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_OracleSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(polarcog::oracle_sweep(7, 4, exec_of(state)));
}
BENCHMARK(BM_OracleSweep)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
