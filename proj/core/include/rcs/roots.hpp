#pragma once

// Simultaneous root finding (Aberth-Ehrlich) with a deterministic,
// seedless start: points on a circle of radius 1 + max |a_k/a_n| whose
// angles are offset by the golden angle so no input symmetry can pin the
// iteration. Also the small root-set utilities the rest of the library
// needs (minimum separation, elementary symmetric values, the brute-force
// discriminant oracle).

#include <stdexcept>
#include <vector>

#include "rcs/poly.hpp"

namespace rcs {

struct RootsError : std::runtime_error {
    std::vector<C64> best;  // best iterate when convergence failed
    explicit RootsError(const std::string& what, std::vector<C64> iterate = {})
        : std::runtime_error(what), best(std::move(iterate)) {}
};

template <class R>
struct RootOptions {
    int max_iterations = 256;
    // residual acceptance scale, in units of the type's epsilon
    R residual_factor = R(64);
    // warm start (continuation); must have degree-many entries when set
    std::vector<Cx<R>> initial;
};

// All degree-many roots; residual |p(r)| below the precision-scaled
// tolerance, deterministic for a given precision. Throws RootsError on
// non-convergence (carrying the best iterate) and on degree < 1.
template <class R>
std::vector<Cx<R>> aberth_roots(const CxPoly<R>& p, const RootOptions<R>& opts = {});

std::vector<C64> roots(const Poly& p);
std::vector<C64> roots(const CPoly64& p);

// Roots of an exact polynomial snapped to exact Gaussian rationals where an
// exact root is recognized (verified by exact evaluation); nullopt when any
// root resists snapping.
std::optional<std::vector<ExactComplex>> exact_roots(const Poly& p);

template <class R>
R min_separation(const std::vector<Cx<R>>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("min_separation: need at least 2 points");
    R best{};
    bool first = true;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            R d = cabs(pts[i] - pts[j]);
            if (first || d < best) best = d, first = false;
        }
    return best;
}

// prod_{i<j} (z_i - z_j)^2; empty product (fewer than two points) is 1.
template <class R>
Cx<R> discriminant_oracle(const std::vector<Cx<R>>& pts) {
    Cx<R> acc{R(1)};
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            Cx<R> d = pts[i] - pts[j];
            acc = acc * d * d;
        }
    return acc;
}

// sigma_k of the inputs, exact; sigma_0 = 1.
ExactComplex elem_symmetric(const std::vector<ExactComplex>& pts, int k);

template <class R>
Cx<R> elem_symmetric(const std::vector<Cx<R>>& pts, int k) {
    int n = static_cast<int>(pts.size());
    if (k < 0 || k > n) throw std::invalid_argument("elem_symmetric: k out of range");
    std::vector<Cx<R>> e(k + 1);
    e[0] = Cx<R>(R(1));
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] = e[j] + pts[i] * e[j - 1];
    return e[k];
}

}  // namespace rcs
