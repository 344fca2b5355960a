#include <benchmark/benchmark.h>

#include "rcs/membership.hpp"
#include "rcs/rng.hpp"
#include "rcs/sij.hpp"

using namespace rcs;

namespace {

Poly random_monic_exact(int deg, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ExactComplex> c;
    for (int k = 0; k < deg; ++k) c.push_back(rng.complex_rational());
    c.push_back(ExactComplex{Rat(1)});
    return Poly(std::move(c));
}

void BM_Discriminant(benchmark::State& state) {
    Poly p = random_monic_exact(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(discriminant(p));
}

void BM_Membership(benchmark::State& state) {
    Poly p = random_monic_exact(static_cast<int>(state.range(0)), 13);
    for (auto _ : state) benchmark::DoNotOptimize(membership(p));
}

void BM_SijBuild(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sij_poly(m, 1, 2));
}

void BM_SijValue(benchmark::State& state) {
    Rng rng(17);
    int m = static_cast<int>(state.range(0));
    std::vector<ExactComplex> pts;
    for (int k = 0; k < m; ++k) pts.push_back(rng.complex_rational());
    for (auto _ : state) benchmark::DoNotOptimize(sij_value(pts, 1, 2));
}

}  // namespace

BENCHMARK(BM_Discriminant)->Arg(4)->Arg(8);
BENCHMARK(BM_Membership)->Arg(4)->Arg(6);
BENCHMARK(BM_SijBuild)->Arg(4)->Arg(6);
BENCHMARK(BM_SijValue)->Arg(4)->Arg(7);
