#include "rcs/roots.hpp"

#include <algorithm>
#include <cmath>

namespace rcs {

namespace {

// 2*pi*(golden ratio - 1): the irrational start-angle rotation.
template <class R>
R golden_offset() {
    using std::sqrt;
    return pi_const<R>() * (sqrt(R(5)) - 1);
}

template <class R>
std::vector<Cx<R>> start_points(const CxPoly<R>& p) {
    int n = p.degree();
    Cx<R> lead = p.c.back();
    R radius = R(1);
    for (int k = 0; k < n; ++k) {
        R ratio = cabs(p.c[k] / lead);
        if (ratio > radius - 1) radius = 1 + ratio;
    }
    std::vector<Cx<R>> z(n);
    R two_pi = 2 * pi_const<R>();
    R off = golden_offset<R>();
    for (int j = 0; j < n; ++j)
        z[j] = unit_phase(two_pi * R(j) / R(n) + off) * Cx<R>(radius);
    return z;
}

}  // namespace

template <class R>
std::vector<Cx<R>> aberth_roots(const CxPoly<R>& p, const RootOptions<R>& opts) {
    int n = p.degree();
    if (n < 1) throw RootsError("aberth_roots: degree must be >= 1");
    for (const auto& v : p.c)
        if (!cfinite(v)) throw RootsError("aberth_roots: non-finite coefficient");

    CxPoly<R> d = p.derive();
    std::vector<Cx<R>> z =
        opts.initial.size() == size_t(n) ? opts.initial : start_points(p);

    R eps = std::numeric_limits<R>::epsilon();
    auto residual_ok = [&](const Cx<R>& zi) {
        // backward-stable criterion: |p(z)| below eps-scaled coefficient sum at |z|
        R scale{};
        R zp = R(1);
        R az = cabs(zi);
        for (const auto& ck : p.c) {
            scale += cabs(ck) * zp;
            zp *= az;
        }
        if (scale == R(0)) scale = R(1);
        return cabs(p.eval(zi)) <= opts.residual_factor * eps * scale;
    };

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        R max_step{};
        for (int i = 0; i < n; ++i) {  // Gauss-Seidel sweep, fixed order
            Cx<R> pv = p.eval(z[i]);
            if (pv == Cx<R>{}) continue;
            Cx<R> dv = d.eval(z[i]);
            Cx<R> newton = dv == Cx<R>{} ? Cx<R>{R(0)} : pv / dv;
            if (newton == Cx<R>{}) {
                // flat derivative at a non-root: nudge deterministically
                z[i] += Cx<R>{eps * 1024, eps * 1024};
                continue;
            }
            Cx<R> sum{};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Cx<R> diff = z[i] - z[j];
                if (diff == Cx<R>{}) diff = Cx<R>{eps * 1024, R(0)};
                sum += Cx<R>{R(1)} / diff;
            }
            Cx<R> denom = Cx<R>{R(1)} - newton * sum;
            Cx<R> w = denom == Cx<R>{} ? newton : newton / denom;
            z[i] -= w;
            R st = cabs(w);
            if (st > max_step) max_step = st;
        }
        if (max_step <= eps * 8) {
            bool all_ok = true;
            for (int i = 0; i < n; ++i) all_ok = all_ok && residual_ok(z[i]);
            if (all_ok) return z;
        }
    }
    bool all_ok = true;
    for (int i = 0; i < n; ++i) all_ok = all_ok && residual_ok(z[i]);
    if (all_ok) return z;
    std::vector<C64> best;
    for (const auto& v : z) best.push_back(to_c64(v));
    throw RootsError("aberth_roots: no convergence after max iterations", best);
}

template std::vector<Cx<double>> aberth_roots<double>(const CxPoly<double>&,
                                                      const RootOptions<double>&);
template std::vector<Cx<Quad>> aberth_roots<Quad>(const CxPoly<Quad>&, const RootOptions<Quad>&);

std::vector<C64> roots(const Poly& p) { return aberth_roots<double>(to_cxpoly<double>(p)); }
std::vector<C64> roots(const CPoly64& p) { return aberth_roots<double>(p); }

std::optional<std::vector<ExactComplex>> exact_roots(const Poly& p) {
    std::vector<C64> approx = roots(p);
    const Int max_den = Int(1) << 24;
    std::vector<ExactComplex> out;
    out.reserve(approx.size());
    for (const auto& r : approx) {
        ExactComplex cand(rational_reconstruct(r.re, max_den), rational_reconstruct(r.im, max_den));
        if (std::abs(rat_to_double(cand.re) - r.re) > 1e-7 ||
            std::abs(rat_to_double(cand.im) - r.im) > 1e-7)
            return std::nullopt;
        if (!eval(p, cand).is_zero()) return std::nullopt;
        out.push_back(std::move(cand));
    }
    return out;
}

ExactComplex elem_symmetric(const std::vector<ExactComplex>& pts, int k) {
    int n = static_cast<int>(pts.size());
    if (k < 0 || k > n) throw std::invalid_argument("elem_symmetric: k out of range");
    std::vector<ExactComplex> e(k + 1);
    e[0] = ExactComplex(Rat(1));
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, k); j >= 1; --j) e[j] = e[j] + pts[i] * e[j - 1];
    return e[k];
}

}  // namespace rcs
