#include "rcs/realfib.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rcs/roots.hpp"

namespace rcs {

RPoly RPoly::from_roots(double lead, const std::vector<double>& roots) {
    std::vector<double> c{lead};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return RPoly(std::move(c));
}

RPoly RPoly::from_exact(const Poly& p) {
    std::vector<double> c;
    for (const auto& v : p.c) {
        if (v.im != 0) throw std::invalid_argument("RPoly::from_exact: complex coefficient");
        c.push_back(rat_to_double(v.re));
    }
    return RPoly(std::move(c));
}

void RPoly::trim() {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double RPoly::eval(double x) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RPoly RPoly::derive() const {
    RPoly d;
    for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * double(k));
    return d;
}

RPoly RPoly::primitive() const {
    RPoly p;
    p.c.assign(c.size() + 1, 0.0);
    for (size_t k = 0; k < c.size(); ++k) p.c[k + 1] = c[k] / double(k + 1);
    p.trim();
    return p;
}

std::vector<double> real_roots_sorted(const RPoly& p, double im_tol) {
    CPoly64 cp;
    for (double v : p.c) cp.c.push_back(C64{v, 0});
    std::vector<C64> rts = roots(cp);
    double scale = 1.0;
    for (const auto& r : rts) scale = std::max(scale, cabs(r));
    std::vector<double> out;
    for (const auto& r : rts) {
        if (std::abs(r.im) > im_tol * scale)
            throw std::domain_error("real_roots_sorted: non-real root");
        out.push_back(r.re);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

RealFiberData minmax_from_roots(const RPoly& q, const std::vector<double>& roots) {
    int m = static_cast<int>(roots.size());
    double scale = 1;
    for (double b : roots) scale = std::max(scale, std::abs(b));
    for (int k = 0; k + 1 < m; ++k)
        if (roots[k + 1] - roots[k] < 1e-9 * scale)
            throw std::domain_error("minmax: repeated roots");
    RealFiberData out;
    RPoly P = q.primitive();
    for (double b : roots) out.critical_values.push_back(P.eval(b));
    if (m == 1) {
        out.m = out.critical_values[0];
        out.M_unbounded = true;
        return out;
    }
    // indices n-1, n-3, ... from the top for m; n-2, n-4, ... for M (1-based)
    bool have_m = false, have_M = false;
    for (int k = m; k >= 1; k -= 2) {
        double v = out.critical_values[k - 1];
        if (!have_m || v > out.m) out.m = v;
        have_m = true;
    }
    for (int k = m - 1; k >= 1; k -= 2) {
        double v = out.critical_values[k - 1];
        if (!have_M || v < out.M) out.M = v;
        have_M = true;
    }
    out.M_unbounded = !have_M;
    return out;
}

}  // namespace

RealFiberData minmax(const RPoly& q) {
    if (q.degree() < 1) throw std::domain_error("minmax: constant polynomial");
    return minmax_from_roots(q, real_roots_sorted(q));
}

RealFiberData minmax(const Poly& q) {
    RPoly rq = RPoly::from_exact(q);
    RealFiberData out = minmax(rq);
    auto snapped = exact_roots(q);
    if (snapped) {
        std::vector<Rat> reals;
        for (const auto& z : *snapped) {
            if (z.im != 0) throw std::domain_error("minmax: non-real root");
            reals.push_back(z.re);
        }
        std::sort(reals.begin(), reals.end());
        Poly P = primitive(q);
        int m = static_cast<int>(reals.size());
        std::optional<Rat> me, Me;
        for (int k = m; k >= 1; k -= 2) {
            Rat v = eval(P, ExactComplex{reals[k - 1]}).re;
            if (!me || v > *me) me = v;
        }
        for (int k = m - 1; k >= 1; k -= 2) {
            Rat v = eval(P, ExactComplex{reals[k - 1]}).re;
            if (!Me || v < *Me) Me = v;
        }
        out.m_exact = me;
        out.M_exact = Me;
    }
    return out;
}

bool in_qc_real(const RPoly& q) {
    RealFiberData d = minmax(q);
    return d.M_unbounded || d.m < d.M;
}

double ev0(const RPoly& p) {
    int n = p.degree();
    if (n < 2) throw std::domain_error("ev0: degree must be >= 2");
    if (p.c.back() != 1.0) throw std::domain_error("ev0: polynomial must be monic");
    real_roots_sorted(p);  // all roots real distinct, else throws
    RealFiberData d = minmax(p.derive());
    double P0 = p.c.empty() ? 0.0 : p.c[0];
    double value;
    if (n == 2)
        value = (P0 + d.m) / (P0 + d.m - 1);
    else
        value = (P0 + d.M) / (d.M - d.m);
    if (!(value > 0 && value < 1))
        throw std::domain_error("ev0: value escaped (0,1); input outside the domain");
    return value;
}

RPoly fiber_inverse(const RPoly& q, double c) {
    if (!(c > 0 && c < 1)) throw std::domain_error("fiber_inverse: c must lie in (0,1)");
    if (!in_qc_real(q)) throw std::domain_error("fiber_inverse: q is not in the restricted real base");
    RealFiberData d = minmax(q);
    RPoly P = q.primitive();
    double shift = q.degree() == 1 ? c / (c - 1) - d.m : (d.M - d.m) * c - d.M;
    if (P.c.empty()) P.c.push_back(0.0);
    P.c[0] += shift;
    return P;
}

RPoly counterexample(int d) {
    if (d < 4)
        throw std::domain_error(
            "counterexample: none exists for cubic or lower Q (the primitive's local max always "
            "separates the local minima)");
    const double pi = M_PI;
    std::vector<double> roots{0, 1, 3, pi};
    RPoly q = RPoly::from_roots(5, roots);
    for (int deg = 5; deg <= d; ++deg) {
        // bound: min(smallest existing root, pi - P(pi)^-1 Int_0^pi P), minus one
        RPoly P = q.primitive();
        double Ppi = P.eval(pi);
        RPoly PP = P.primitive();
        double integral = PP.eval(pi);
        double smallest = *std::min_element(roots.begin(), roots.end());
        double b = std::min(smallest, pi - integral / Ppi) - 1.0;
        roots.push_back(b);
        std::sort(roots.begin(), roots.end());
        // Q_{new} = ((n+1)/n) (X - b) Q with n = deg of the primitive level
        double scale = double(deg + 1) / double(deg);
        std::vector<double> next(q.c.size() + 1, 0.0);
        for (size_t k = 0; k < q.c.size(); ++k) {
            next[k + 1] += q.c[k] * scale;
            next[k] -= b * q.c[k] * scale;
        }
        q = RPoly(std::move(next));
    }
    RealFiberData md = minmax(q);
    if (md.M_unbounded || !(md.m >= md.M))
        throw std::logic_error("counterexample: construction failed to verify m >= M");
    return q;
}

}  // namespace rcs
