#pragma once

// Deterministic RNG for the property suites (splitmix64 core). All draws
// go through explicit arithmetic so the streams are identical across
// platforms; the seed only ever affects randomized property checks, never the
// anchored reference values.

#include <cstdint>

#include "rcs/exact.hpp"

namespace rcs {

struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    Rat rational(long max_num = 10, long max_den = 6) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        return Rat(num, den);
    }

    ExactComplex complex_rational(long max_num = 10, long max_den = 6) {
        return ExactComplex{rational(max_num, max_den), rational(max_num, max_den)};
    }
};

}  // namespace rcs
