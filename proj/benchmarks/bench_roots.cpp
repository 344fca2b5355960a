#include <benchmark/benchmark.h>

#include "rcs/rng.hpp"
#include "rcs/roots.hpp"

using namespace rcs;

namespace {

CPoly64 random_monic(int deg, std::uint64_t seed) {
    Rng rng(seed);
    CPoly64 p;
    for (int k = 0; k < deg; ++k) p.c.push_back(C64{rng.uniform(-5, 5), rng.uniform(-5, 5)});
    p.c.push_back(C64{1});
    return p;
}

void BM_AberthCold(benchmark::State& state) {
    CPoly64 p = random_monic(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(aberth_roots<double>(p));
}

void BM_AberthWarm(benchmark::State& state) {
    CPoly64 p = random_monic(static_cast<int>(state.range(0)), 7);
    std::vector<C64> start = aberth_roots<double>(p);
    // perturb slightly: one continuation step
    CPoly64 q = p;
    q.c[0] += C64{1e-3, 1e-3};
    RootOptions<double> opts;
    opts.initial = start;
    for (auto _ : state) benchmark::DoNotOptimize(aberth_roots<double>(q, opts));
}

void BM_AberthQuad(benchmark::State& state) {
    CPoly64 pd = random_monic(static_cast<int>(state.range(0)), 7);
    CxPoly<Quad> p;
    for (const auto& c : pd.c) p.c.push_back(Cx<Quad>{Quad(c.re), Quad(c.im)});
    for (auto _ : state) benchmark::DoNotOptimize(aberth_roots<Quad>(p));
}

}  // namespace

BENCHMARK(BM_AberthCold)->Arg(3)->Arg(4)->Arg(8);
BENCHMARK(BM_AberthWarm)->Arg(3)->Arg(4)->Arg(8);
BENCHMARK(BM_AberthQuad)->Arg(4);
