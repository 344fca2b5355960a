#include <functional>
#include <map>

#include "rcs/loop.hpp"

// The named loops: base points X^3-3X (cubic level), 4X(X-1)(X-3) (base of
// the quartic fibration), X^4-16/3X^3+6X^2-1/3 (quartic level), and -1/3
// in the fiber over 4X(X-1)(X-3). The epsilon of the d_k fiber paths is
// fixed at the dyadic 1/1024 (any value below 1/1000 works).

namespace rcs {

void finalize_structure(LoopSpec& l);

namespace {

const Rat kEps{1, 1024};

Expr aff(Rat a, Rat b) { return e_add(e_mul(e_rat(std::move(a)), e_t()), e_rat(std::move(b))); }

LoopSegment seg(Rat t0, Rat t1, std::vector<Expr> coeffs) {
    LoopSegment s;
    s.t0 = std::move(t0);
    s.t1 = std::move(t1);
    s.coeffs = std::move(coeffs);
    return s;
}

// monic-in-spirit product lead * prod (X - root_k), expanded symbolically
std::vector<Expr> poly_from_roots(const Expr& lead, const std::vector<Expr>& roots) {
    std::vector<Expr> acc{lead};
    for (const auto& r : roots) {
        std::vector<Expr> next(acc.size() + 1, e_int(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] = e_add(next[k + 1], acc[k]);
            next[k] = e_add(next[k], e_mul(e_neg(r), acc[k]));
        }
        acc = std::move(next);
    }
    return acc;
}

// the scalar a(t) of the cubic level, one expression per third
std::vector<std::pair<std::pair<Rat, Rat>, Expr>> a_thirds() {
    return {
        {{Rat(0), Rat(1, 3)}, aff(Rat(27, 5), Rat(0))},
        {{Rat(1, 3), Rat(2, 3)}, e_add(e_int(2), e_mul(e_rat(Rat(1, 5)), e_exppi(Rat(-6), Rat(3))))},
        {{Rat(2, 3), Rat(1)}, aff(Rat(-27, 5), Rat(27, 5))},
    };
}

LoopSpec cubic_with_constant(const std::string& name, bool negate) {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Total;
    l.name = name;
    for (auto& [iv, a] : a_thirds()) {
        Expr c0 = negate ? e_neg(a) : a;
        l.segments.push_back(seg(iv.first, iv.second, {c0, e_int(-3), e_int(0), e_int(1)}));
    }
    finalize_structure(l);
    return l;
}

LoopSpec make_gamma3() {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Total;
    l.name = "gamma3";
    l.segments.push_back(
        seg(Rat(0), Rat(1), {e_int(0), e_mul(e_int(-3), e_exppi(Rat(2), Rat(0))), e_int(0), e_int(1)}));
    finalize_structure(l);
    return l;
}

// coefficients of 4(X - (4-a)/3)(X - 1)(X - (a+5)/3) as expressions of a
std::vector<Expr> qc3_alpha_coeffs(const Expr& a) {
    Expr a2 = e_pow(a, 2);
    Expr c0 = e_mul(e_rat(Rat(-4, 9)), e_sum({e_int(20), e_neg(a), e_neg(a2)}));
    Expr c1 = e_mul(e_rat(Rat(4, 9)), e_sum({e_int(47), e_neg(a), e_neg(a2)}));
    return {c0, c1, e_int(-16), e_int(4)};
}

LoopSpec make_qc3_alpha(const std::string& name, const Rat& h) {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Base;
    l.name = name;
    Rat mid_center = (h + 1) / 2;
    Rat mid_radius = (5 - 3 * h) / 6;
    std::vector<std::pair<std::pair<Rat, Rat>, Expr>> a_segments = {
        {{Rat(0), Rat(1, 3)}, aff(Rat(-8), Rat(4))},
        {{Rat(1, 3), Rat(2, 3)},
         e_add(e_rat(mid_center), e_mul(e_rat(mid_radius), e_exppi(Rat(6), Rat(0))))},
        {{Rat(2, 3), Rat(1)}, aff(Rat(8), Rat(-4))},
    };
    for (auto& [iv, a] : a_segments) l.segments.push_back(seg(iv.first, iv.second, qc3_alpha_coeffs(a)));
    finalize_structure(l);
    return l;
}

LoopSpec make_qc3_beta() {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Base;
    l.name = "qc3_beta";
    Expr e2 = e_exppi(Rat(4), Rat(0));  // e^{4 pi i t}
    Expr e3 = e_exppi(Rat(6), Rat(0));  // e^{6 pi i t}
    Expr c1 = e_mul(e_rat(Rat(4, 3)), e_sub(e_int(16), e_mul(e_int(7), e2)));
    Expr c0 = e_mul(e_rat(Rat(-4, 27)),
                    e_sum({e_int(64), e_mul(e_int(-84), e2), e_mul(e_int(20), e3)}));
    l.segments.push_back(seg(Rat(0), Rat(1), {c0, c1, e_int(-16), e_int(4)}));
    finalize_structure(l);
    return l;
}

LoopSpec make_qc3_gamma(int k) {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Base;
    l.name = "qc3_gamma" + std::to_string(k);
    Expr e = e_exppi(Rat(2), Rat(0));
    if (k == 1) {
        // 4(X-3)(X^2 - X + 1/4 - E(2t)/4)
        Expr c0 = e_add(e_int(-3), e_mul(e_int(3), e));
        Expr c1 = e_sub(e_int(13), e);
        l.segments.push_back(seg(Rat(0), Rat(1), {c0, c1, e_int(-16), e_int(4)}));
    } else {
        // 4X(X^2 - 4X + 4 - E(2t))
        Expr c1 = e_sub(e_int(16), e_mul(e_int(4), e));
        l.segments.push_back(seg(Rat(0), Rat(1), {e_int(0), c1, e_int(-16), e_int(4)}));
    }
    finalize_structure(l);
    return l;
}

// the three fiber paths d_k(t) around -5/3, 0, 9, base point -1/3
std::vector<LoopSegment> d_scalar_segments(int k) {
    Rat e = kEps;
    Expr circle = e_exppi(Rat(6), Rat(0));
    switch (k) {
        case 1:
            return {
                seg(Rat(0), Rat(1, 3), {aff(1 - 3 * e, Rat(-1, 3))}),
                seg(Rat(1, 3), Rat(2, 3), {e_mul(e_rat(-e), circle)}),
                seg(Rat(2, 3), Rat(1), {aff(3 * e - 1, Rat(2, 3) - 3 * e)}),
            };
        case 2:
            return {
                seg(Rat(0), Rat(1, 3), {aff(3 * e - 4, Rat(-1, 3))}),
                seg(Rat(1, 3), Rat(2, 3), {e_add(e_rat(Rat(-5, 3)), e_mul(e_rat(e), circle))}),
                seg(Rat(2, 3), Rat(1), {aff(4 - 3 * e, 3 * e - Rat(13, 3))}),
            };
        case 3:
            return {
                seg(Rat(0), Rat(1, 12), {aff(4 - 12 * e, Rat(-1, 3))}),
                seg(Rat(1, 12), Rat(1, 4), {e_mul(e_mul(e_rat(e), e_i()), circle)}),
                seg(Rat(1, 4), Rat(1, 3), {aff(108 - 24 * e, 7 * e - 27)}),
                seg(Rat(1, 3), Rat(2, 3), {e_sub(e_int(9), e_mul(e_rat(e), circle))}),
                seg(Rat(2, 3), Rat(3, 4), {aff(24 * e - 108, 81 - 17 * e)}),
                seg(Rat(3, 4), Rat(11, 12), {e_mul(e_mul(e_rat(e), e_i()), e_exppi(Rat(-6), Rat(0)))}),
                seg(Rat(11, 12), Rat(1), {aff(12 * e - 4, Rat(11, 3) - 12 * e)}),
            };
        default:
            throw LoopError("d_scalar_segments: k must be 1, 2 or 3");
    }
}

LoopSpec make_fiber_d(int k) {
    LoopSpec l;
    l.n = 0;
    l.space = LoopSpace::Fiber;
    l.name = "fiber_d" + std::to_string(k);
    l.fiber_forbidden = {C64{-5.0 / 3, 0}, C64{0, 0}, C64{9, 0}};
    l.segments = d_scalar_segments(k);
    finalize_structure(l);
    return l;
}

LoopSpec make_rc4_delta(int k) {
    LoopSpec l;
    l.n = 4;
    l.space = LoopSpace::Total;
    l.name = "rc4_delta" + std::to_string(k);
    for (const auto& ds : d_scalar_segments(k)) {
        l.segments.push_back(
            seg(ds.t0, ds.t1, {ds.coeffs[0], e_int(0), e_int(6), e_rat(Rat(-16, 3)), e_int(1)}));
    }
    finalize_structure(l);
    return l;
}

LoopSpec make_rc4_Gamma(int k) {
    LoopSpec l;
    l.n = 4;
    l.space = LoopSpace::Total;
    l.name = "rc4_Gamma" + std::to_string(k);
    Expr e = e_exppi(Rat(2), Rat(0));
    if (k == 1) {
        Expr c2 = e_sub(e_rat(Rat(13, 2)), e_mul(e_rat(Rat(1, 2)), e));
        Expr c1 = e_add(e_mul(e_int(3), e), e_int(-3));
        l.segments.push_back(
            seg(Rat(0), Rat(1), {e_rat(Rat(-1, 3)), c1, c2, e_rat(Rat(-16, 3)), e_int(1)}));
    } else {
        Expr c2 = e_sub(e_int(8), e_mul(e_int(2), e));
        l.segments.push_back(
            seg(Rat(0), Rat(1), {e_rat(Rat(-1, 3)), e_int(0), c2, e_rat(Rat(-16, 3)), e_int(1)}));
    }
    finalize_structure(l);
    return l;
}

LoopSpec from_root_segments(
    const std::string& name,
    const std::vector<std::pair<std::pair<Rat, Rat>, std::vector<Expr>>>& pieces) {
    LoopSpec l;
    l.n = 3;
    l.space = LoopSpace::Base;
    l.name = name;
    for (const auto& [iv, roots] : pieces)
        l.segments.push_back(seg(iv.first, iv.second, poly_from_roots(e_int(4), roots)));
    finalize_structure(l);
    return l;
}

// explicit lift of gamma_2 alpha_1 gamma_2^{-1}
LoopSpec make_lift_g2a1g2inv() {
    auto E = [](Rat q, Rat r) { return e_exppi(std::move(q), std::move(r)); };
    return from_root_segments(
        "lift_g2a1g2inv",
        {
            {{Rat(0), Rat(1, 3)},
             {e_int(0), e_sub(e_int(2), E(Rat(3), Rat(0))), e_add(e_int(2), E(Rat(3), Rat(0)))}},
            {{Rat(1, 3), Rat(4, 9)}, {aff(Rat(8), Rat(-8, 3)), aff(Rat(-8), Rat(17, 3)), e_int(1)}},
            {{Rat(4, 9), Rat(5, 9)},
             {e_sub(e_int(1), e_mul(e_rat(Rat(1, 9)), E(Rat(18), Rat(0)))),
              e_add(e_int(2), e_mul(e_rat(Rat(1, 9)), E(Rat(18), Rat(0)))), e_int(1)}},
            {{Rat(5, 9), Rat(2, 3)}, {aff(Rat(-8), Rat(16, 3)), aff(Rat(8), Rat(-7, 3)), e_int(1)}},
            {{Rat(2, 3), Rat(1)},
             {e_int(0), e_add(e_int(2), E(Rat(-3), Rat(0))), e_sub(e_int(2), E(Rat(-3), Rat(0)))}},
        });
}

// explicit lift of gamma_1 gamma_2 gamma_1 gamma_2^{-1} gamma_1^{-1} gamma_2^{-1}
LoopSpec make_lift_commutator() {
    auto E = [](Rat q) { return e_exppi(std::move(q), Rat(0)); };
    auto half = e_rat(Rat(1, 2));
    auto circ_minus = [&](Rat q) { return e_sub(half, e_mul(half, E(q))); };
    auto circ_plus = [&](Rat q) { return e_add(half, e_mul(half, E(q))); };
    return from_root_segments(
        "lift_commutator",
        {
            {{Rat(0), Rat(1, 6)}, {circ_minus(Rat(6)), circ_plus(Rat(6)), e_int(3)}},
            {{Rat(1, 6), Rat(1, 3)},
             {e_add(e_int(2), E(Rat(6))), e_int(0), e_sub(e_int(2), E(Rat(6)))}},
            {{Rat(1, 3), Rat(1, 2)}, {e_int(3), circ_minus(Rat(6)), circ_plus(Rat(6))}},
            {{Rat(1, 2), Rat(2, 3)},
             {e_sub(e_int(2), E(Rat(-6))), e_add(e_int(2), E(Rat(-6))), e_int(0)}},
            {{Rat(2, 3), Rat(5, 6)}, {circ_plus(Rat(-6)), e_int(3), circ_minus(Rat(-6))}},
            {{Rat(5, 6), Rat(1)},
             {e_int(0), e_sub(e_int(2), E(Rat(-6))), e_add(e_int(2), E(Rat(-6)))}},
        });
}

using Maker = std::function<LoopSpec()>;

const std::map<std::string, Maker>& registry() {
    static const std::map<std::string, Maker> reg = {
        {"gamma3", make_gamma3},
        {"alpha3", [] { return cubic_with_constant("alpha3", false); }},
        {"beta3", [] { return cubic_with_constant("beta3", true); }},
        {"qc3_alpha_1", [] { return make_qc3_alpha("qc3_alpha_1", Rat(1)); }},
        {"qc3_alpha_0", [] { return make_qc3_alpha("qc3_alpha_0", Rat(0)); }},
        {"qc3_alpha_mhalf", [] { return make_qc3_alpha("qc3_alpha_mhalf", Rat(-1, 2)); }},
        {"qc3_alpha_m1", [] { return make_qc3_alpha("qc3_alpha_m1", Rat(-1)); }},
        {"qc3_alpha_m2", [] { return make_qc3_alpha("qc3_alpha_m2", Rat(-2)); }},
        {"qc3_beta", make_qc3_beta},
        {"qc3_gamma1", [] { return make_qc3_gamma(1); }},
        {"qc3_gamma2", [] { return make_qc3_gamma(2); }},
        {"rc4_delta1", [] { return make_rc4_delta(1); }},
        {"rc4_delta2", [] { return make_rc4_delta(2); }},
        {"rc4_delta3", [] { return make_rc4_delta(3); }},
        {"rc4_Gamma1", [] { return make_rc4_Gamma(1); }},
        {"rc4_Gamma2", [] { return make_rc4_Gamma(2); }},
        {"fiber_d1", [] { return make_fiber_d(1); }},
        {"fiber_d2", [] { return make_fiber_d(2); }},
        {"fiber_d3", [] { return make_fiber_d(3); }},
        {"lift_g2a1g2inv", make_lift_g2a1g2inv},
        {"lift_commutator", make_lift_commutator},
    };
    return reg;
}

}  // namespace

LoopSpec builtin(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) {
        std::string msg = "unknown builtin '" + name + "'; available:";
        for (const auto& [k, v] : registry()) msg += " " + k;
        throw LoopError(msg);
    }
    return it->second();
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

}  // namespace rcs
