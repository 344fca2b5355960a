#include <benchmark/benchmark.h>

#include "rcs/trace.hpp"

using namespace rcs;

namespace {

void BM_TraceBuiltin(benchmark::State& state, const char* name) {
    LoopSpec l = builtin(name);
    for (auto _ : state) benchmark::DoNotOptimize(trace(l));
}

void BM_Validate(benchmark::State& state) {
    LoopSpec l = builtin("rc4_Gamma1");
    for (auto _ : state) benchmark::DoNotOptimize(validate(l, static_cast<int>(state.range(0))));
}

void BM_ArtinEqual(benchmark::State& state) {
    BraidWord a = garside(4) * garside(4);
    BraidWord b = parse_braid(4, "x3 x2 x1 x3 x2 x1 x3 x2 x1 x3 x2 x1");
    for (auto _ : state) benchmark::DoNotOptimize(braid_equal(a, b));
}

}  // namespace

BENCHMARK_CAPTURE(BM_TraceBuiltin, gamma3, "gamma3");
BENCHMARK_CAPTURE(BM_TraceBuiltin, rc4_delta3, "rc4_delta3");
BENCHMARK_CAPTURE(BM_TraceBuiltin, qc3_alpha_m2, "qc3_alpha_m2");
BENCHMARK(BM_Validate)->Arg(128)->Arg(512);
BENCHMARK(BM_ArtinEqual);
