#include "rcs/fibration.hpp"

#include <array>
#include <cmath>

#include "rcs/roots.hpp"

namespace rcs {

C64 plane_shift(const std::vector<C64>& anchors0, const std::vector<C64>& anchors, double eps,
                const C64& z) {
    if (anchors0.size() != anchors.size())
        throw std::invalid_argument("plane_shift: anchor lists differ in size");
    if (eps <= 0) throw std::invalid_argument("plane_shift: eps must be positive");
    for (size_t i = 0; i < anchors0.size(); ++i) {
        if (cabs(anchors[i] - anchors0[i]) >= eps)
            throw std::invalid_argument("plane_shift: |anchors_i - anchors0_i| < eps violated at i=" +
                                        std::to_string(i + 1));
        for (size_t j = i + 1; j < anchors0.size(); ++j)
            if (cabs(anchors0[i] - anchors0[j]) <= 3 * eps)
                throw std::invalid_argument("plane_shift: anchor spacing > 3*eps violated at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
    for (size_t i = 0; i < anchors0.size(); ++i) {
        double d = cabs(z - anchors0[i]);
        if (d <= eps)
            return z + (anchors[i] - anchors0[i]) * C64{1.0 - d / eps};
    }
    return z;
}

namespace {

double max_abs_on_circle(const Poly& q, double radius) {
    // max-modulus: the maximum over the closed disk is attained on the
    // boundary; dense angular grid plus local ternary refinement
    const int grid = 2048;
    double best = 0;
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        double phi = 2 * M_PI * k / grid;
        double v = cabs(eval(q, C64{radius * std::cos(phi), radius * std::sin(phi)}));
        if (v > best) best = v, best_k = k;
    }
    double lo = 2 * M_PI * (best_k - 1) / grid, hi = 2 * M_PI * (best_k + 1) / grid;
    for (int it = 0; it < 80; ++it) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        double v1 = cabs(eval(q, C64{radius * std::cos(m1), radius * std::sin(m1)}));
        double v2 = cabs(eval(q, C64{radius * std::cos(m2), radius * std::sin(m2)}));
        if (v1 < v2)
            lo = m1;
        else
            hi = m2;
        best = std::max(best, std::max(v1, v2));
    }
    return best;
}

}  // namespace

TrivializationChart build_trivialization(const Poly& q0) {
    if (!in_qc_exact(q0))
        throw std::domain_error("build_trivialization: q0 is not in the restricted base space");
    TrivializationChart ch;
    ch.q0 = q0;
    ch.P0 = primitive(q0);
    ch.roots0 = roots(q0);
    for (const auto& b : ch.roots0) ch.critvals0.push_back(eval(ch.P0, b));

    double max_root = 0;
    for (const auto& b : ch.roots0) max_root = std::max(max_root, cabs(b));
    ch.K_radius = 2 + max_root;

    ch.delta1 = min_separation(ch.roots0) / 3 * (1 - 1e-9);
    ch.eps = min_separation(ch.critvals0) / 3 * (1 - 1e-9);

    double lipschitz = max_abs_on_circle(q0, ch.K_radius);  // |P0'| = |q0| on K
    ch.delta2 = ch.eps / (2 * lipschitz) * (1 - 1e-9);

    // delta3 by bisection on the monotone coefficient-displacement bound:
    // sup_K |P - P0| <= R * |lc| * m * d * (R + B + d)^{m-1}  for max_i |beta_i - beta_i^0| <= d
    int m = q0.degree();
    double lc = cabs(to_c64(q0.leading()));
    double R = ch.K_radius, B = max_root;
    auto bound = [&](double d) { return R * lc * m * d * std::pow(R + B + d, m - 1); };
    double lo = 0, hi = 1.0;
    while (bound(hi) < ch.eps / 2) hi *= 2;
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        if (bound(mid) < ch.eps / 2)
            lo = mid;
        else
            hi = mid;
    }
    ch.delta3 = lo;
    ch.delta = std::min({ch.delta1, ch.delta2, ch.delta3});
    return ch;
}

CPoly64 TrivializeResult::value() const {
    CPoly64 out = to_cxpoly<double>(exact_primitive);
    if (out.c.empty()) out.c.push_back(C64{});
    out.c[0] -= shift;
    return out;
}

TrivializeResult trivialize(const TrivializationChart& chart, const Poly& q, const C64& c) {
    if (q.degree() != chart.q0.degree())
        throw std::invalid_argument("trivialize: degree mismatch with the base point");
    std::vector<C64> rq = roots(q);

    // match each root of q0 to its displaced continuation
    std::vector<C64> matched(rq.size());
    std::vector<bool> used(rq.size(), false);
    double worst = 0;
    for (size_t i = 0; i < chart.roots0.size(); ++i) {
        double best = HUGE_VAL;
        size_t arg = 0;
        for (size_t j = 0; j < rq.size(); ++j) {
            if (used[j]) continue;
            double d = cabs(chart.roots0[i] - rq[j]);
            if (d < best) best = d, arg = j;
        }
        used[arg] = true;
        matched[i] = rq[arg];
        worst = std::max(worst, best);
    }
    if (worst >= chart.delta)
        throw std::domain_error("trivialize: q outside neighborhood, max_i min_j |beta_i^0 - beta_j| = " +
                                std::to_string(worst) + " >= delta = " + std::to_string(chart.delta));

    Poly P = primitive(q);
    std::vector<C64> critvals;
    for (const auto& b : matched) critvals.push_back(eval(P, b));
    for (size_t i = 0; i < critvals.size(); ++i)
        if (cabs(critvals[i] - chart.critvals0[i]) >= chart.eps)
            throw std::domain_error(
                "trivialize: critical value drift >= eps at i=" + std::to_string(i + 1) +
                " (|P(beta_i) - P0(beta_i^0)| = " + std::to_string(cabs(critvals[i] - chart.critvals0[i])) + ")");

    return TrivializeResult{P, plane_shift(chart.critvals0, critvals, chart.eps, c)};
}

Qf3Chart qf3_chart(const ExactComplex& z1, const ExactComplex& z2, const ExactComplex& z3) {
    ExactComplex X = z2 + z3 - ExactComplex{Rat(2)} * z1;
    ExactComplex Y = z1 + z3 - ExactComplex{Rat(2)} * z2;
    ExactComplex Z = z1 + z2 + z3;
    if (Y.is_zero()) throw std::domain_error("qf3_chart: not in QF3 (Y = 0)");
    ExactComplex ratio = X / Y;
    static const Rat forbidden[] = {Rat(1), Rat(0), Rat(-1, 2), Rat(-1), Rat(-2)};
    for (const Rat& h : forbidden)
        if (ratio == ExactComplex{h})
            throw std::domain_error("qf3_chart: not in QF3 (ratio = " + rat_to_string(h) + ")");
    return Qf3Chart{ratio, Y, Z};
}

std::array<ExactComplex, 3> qf3_chart_inverse(const Qf3Chart& c) {
    ExactComplex X = c.ratio * c.y;
    ExactComplex third{Rat(1, 3)};
    return {third * (c.sum - X), third * (c.sum - c.y), third * (X + c.y + c.sum)};
}

std::array<ExactComplex, 3> lagrange_resolvent(const ExactComplex& z1, const ExactComplex& z2,
                                               const ExactComplex& z3, const ExactComplex& z4) {
    return {(z1 + z2) * (z3 + z4), (z1 + z3) * (z2 + z4), (z1 + z4) * (z2 + z3)};
}

}  // namespace rcs
