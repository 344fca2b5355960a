#include "rcs/membership.hpp"

#include <cmath>
#include <stdexcept>

#include "rcs/roots.hpp"

namespace rcs {

Poly critical_values_poly(const Poly& q) {
    int m = q.degree();
    if (m < 1) throw std::domain_error("critical_values_poly: constant polynomial");
    Poly P = primitive(q);
    // R(Y) has degree m with leading coefficient 1; interpolate from m+1 nodes.
    std::vector<ExactComplex> nodes, values;
    ExactComplex lead_pow(Rat(1));
    for (int k = 0; k < m + 1; ++k) lead_pow *= q.leading();  // lc(q)^{deg P}
    for (int k = 0; k <= m; ++k) {
        ExactComplex y{Rat(k)};
        Poly shifted = Poly::constant(y) - P;
        values.push_back(resultant(q, shifted) / lead_pow);
        nodes.push_back(y);
    }
    // Lagrange interpolation
    Poly acc;
    for (int k = 0; k <= m; ++k) {
        Poly basis = Poly::constant(ExactComplex{Rat(1)});
        ExactComplex denom{Rat(1)};
        for (int l = 0; l <= m; ++l) {
            if (l == k) continue;
            basis = basis * (Poly::monomial(ExactComplex{Rat(1)}, 1) - Poly::constant(nodes[l]));
            denom *= nodes[k] - nodes[l];
        }
        acc = acc + (values[k] / denom) * basis;
    }
    return acc;
}

bool in_qc_exact(const Poly& q) {
    int m = q.degree();
    if (m < 1) throw std::domain_error("in_qc_exact: constant polynomial");
    if (discriminant(q).is_zero()) return false;
    if (m < 2) return true;
    return !discriminant(critical_values_poly(q)).is_zero();
}

MembershipVerdict membership(const Poly& p) {
    MembershipVerdict v;
    int n = p.degree();
    if (n < 1) throw std::domain_error("membership: constant polynomial");
    if (n == 1) {
        v.in_c = v.in_qc = v.in_rc = true;
        return v;
    }
    Poly normalized = monic(p);
    v.in_c = !discriminant(normalized).is_zero();
    if (!v.in_c) v.witness = "repeated root (discriminant = 0)";
    Poly d = derive(normalized);
    if (discriminant(d).is_zero()) {
        v.in_qc = false;
        if (v.witness.empty()) v.witness = "derivative has a repeated root";
    } else if (d.degree() < 2) {
        v.in_qc = true;
    } else {
        v.in_qc = !discriminant(critical_values_poly(d)).is_zero();
        if (!v.in_qc && v.witness.empty()) v.witness = "coincident critical values";
    }
    v.in_rc = v.in_c && v.in_qc;
    return v;
}

NumericMembership membership_numeric(const CPoly64& p, double floor) {
    NumericMembership out;
    int n = p.degree();
    if (n < 1) throw std::domain_error("membership_numeric: constant polynomial");
    std::vector<C64> rp = roots(p);
    out.abs_disc_p = cabs(discriminant_oracle(rp));
    out.verdict.in_c = out.abs_disc_p > floor;
    if (!out.verdict.in_c) out.verdict.witness = "repeated root (|disc| below floor)";

    out.abs_disc_q = HUGE_VAL;
    out.min_abs_s = HUGE_VAL;
    out.min_critval_gap = HUGE_VAL;
    out.verdict.in_qc = true;
    if (n >= 2) {
        CPoly64 d = p.derive();
        std::vector<C64> rq = roots(d);
        out.abs_disc_q = cabs(discriminant_oracle(rq));
        if (out.abs_disc_q <= floor) {
            out.verdict.in_qc = false;
            if (out.verdict.witness.empty()) out.verdict.witness = "derivative has a repeated root";
        }
        if (rq.size() >= 2) {
            // critical values of the zero-constant primitive of p'
            CPoly64 P;
            P.c.assign(p.c.begin(), p.c.end());
            if (!P.c.empty()) P.c[0] = C64{};
            std::vector<C64> cv;
            for (const auto& b : rq) cv.push_back(P.eval(b));
            out.min_critval_gap = min_separation(cv);
            if (out.min_critval_gap <= floor) {
                out.verdict.in_qc = false;
                if (out.verdict.witness.empty()) out.verdict.witness = "coincident critical values";
            }
        }
        if (rq.size() >= 3) {
            QfMargins qm = qf_margins(rq);
            out.min_abs_s = qm.min_abs_s;
        }
    }
    out.verdict.in_rc = out.verdict.in_c && out.verdict.in_qc;
    return out;
}

std::optional<std::vector<ExactComplex>> critical_values_exact(const Poly& q) {
    if (q.degree() < 1) throw std::domain_error("critical_values: constant polynomial");
    if (discriminant(q).is_zero()) throw std::domain_error("critical_values: repeated roots");
    auto rts = exact_roots(q);
    if (!rts) return std::nullopt;
    Poly P = primitive(q);
    std::vector<ExactComplex> out;
    for (const auto& b : *rts) out.push_back(eval(P, b));
    return out;
}

std::vector<C64> critical_values_numeric(const Poly& q) {
    if (q.degree() < 1) throw std::domain_error("critical_values: constant polynomial");
    if (discriminant(q).is_zero()) throw std::domain_error("critical_values: repeated roots");
    Poly P = primitive(q);
    std::vector<C64> out;
    for (const auto& b : roots(q)) out.push_back(eval(P, b));
    return out;
}

Poly section_point(const Poly& q) {
    if (!in_qc_exact(q)) throw std::domain_error("section_point: q is not in the restricted base space");
    Poly P = primitive(q);
    ExactComplex shift;
    auto cv = critical_values_exact(q);
    bool exact_ok = false;
    if (cv) {
        Rat sum(1);
        exact_ok = true;
        for (const auto& v : *cv) {
            auto a = exact_abs(v);
            if (!a) {
                exact_ok = false;
                break;
            }
            sum += *a;
        }
        if (exact_ok) shift = ExactComplex{sum};
    }
    if (!exact_ok) {
        double sum = 1.0;
        for (const auto& v : critical_values_numeric(q)) sum += cabs(v);
        // exact rational ceiling on a 2^-32 grid keeps the result a Poly
        Int grid = Int(1) << 32;
        Int ticks = Int(std::ceil(sum * 4294967296.0)) + 1;
        shift = ExactComplex{Rat(ticks, grid)};
    }
    return P - Poly::constant(shift);
}

}  // namespace rcs
