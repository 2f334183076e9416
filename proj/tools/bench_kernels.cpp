// Serial against OpenMP sweeps over the verification kernels.

#include <benchmark/benchmark.h>

#include <eisencalc/sweep.hpp>

using namespace eisencalc;

namespace
{

Execution mode(const benchmark::State &state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_telescope(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(telescope_cell(4, 6, mode(state)));
    }
}

void BM_pole(benchmark::State &state)
{
    const CriticalPoint pt(5, 5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pole_cell(pt, mode(state)));
    }
}

void BM_orbit(benchmark::State &state)
{
    const CriticalPoint pt(4, 4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_cell(pt, default_truncation(pt), mode(state)));
    }
}

} // namespace

BENCHMARK(BM_telescope)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pole)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_orbit)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
