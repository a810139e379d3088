// Serial reference vs OpenMP kernel for each parallel entry point.
#include "omnilie/calgebra.hpp"
#include "omnilie/courant.hpp"
#include "omnilie/dstruct.hpp"
#include "omnilie/omni.hpp"

#include <benchmark/benchmark.h>

using namespace omnilie;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_AnomalySweep(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(omni::anomaly_sweep(4, 500, 0, mode(st)));
}

void BM_CheckAxioms(benchmark::State& st)
{
    auto c = calgebra::build_omni_instance(3);
    for (auto _ : st) benchmark::DoNotOptimize(calgebra::check_axioms(c, {}, mode(st)));
}

void BM_CourantAxioms(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(courant::axioms_sample_check(3, 2, 20, 0, courant::BracketVariant::courant, mode(st)));
}

void BM_SearchGreedy(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(dstruct::search_d_structures(3, dstruct::Strategy::greedy, 0, 64, mode(st)));
}

}  // namespace

// Arg 0 = serial reference, 1 = parallel.
BENCHMARK(BM_AnomalySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CourantAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SearchGreedy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
