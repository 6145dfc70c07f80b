#include <benchmark/benchmark.h>

#include "sgo/verify.hpp"

namespace {

sgo::SuiteParams params(sgo::Execution e, int M, int N, int samples) {
    sgo::SuiteParams p;
    p.M = M;
    p.N = N;
    p.box = 1;
    p.samples = samples;
    p.execution = e;
    return p;
}

template <sgo::SuiteReport (*Run)(const sgo::SuiteParams&)>
void suite(benchmark::State& state) {
    const auto e = state.range(0) ? sgo::Execution::Parallel : sgo::Execution::Serial;
    const sgo::SuiteParams p = params(e, 2, 4, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(Run(p).trials);
}

}

// arg 0: serial reference loop, arg 1: OpenMP
BENCHMARK(suite<sgo::run_roundtrip>)->Name("roundtrip")->Args({0, 5})->Args({1, 5})->Unit(benchmark::kMillisecond);
BENCHMARK(suite<sgo::run_prop81>)->Name("prop81")->Args({0, 200})->Args({1, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(suite<sgo::run_closure_equiv>)->Name("closure")->Args({0, 0})->Args({1, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(suite<sgo::run_relevance_stab>)->Name("relevance")->Args({0, 0})->Args({1, 0})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
