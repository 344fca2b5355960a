#pragma once

// The real-coefficient case: the alternating min-max / max-min of the
// primitive's critical values, the m < M image characterization of the
// derivative, the Ev0 fiber coordinate, and the constructor for
// polynomials of degree >= 4 with all-real distinct roots whose primitives
// never have all-real roots.

#include <optional>
#include <vector>

#include "rcs/exact.hpp"
#include "rcs/poly.hpp"

namespace rcs {

// Real dense polynomial, ascending coefficients.
struct RPoly {
    std::vector<double> c;

    RPoly() = default;
    explicit RPoly(std::vector<double> coeffs) : c(std::move(coeffs)) { trim(); }
    static RPoly from_roots(double lead, const std::vector<double>& roots);
    static RPoly from_exact(const Poly& p);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    void trim();
    double eval(double x) const;
    RPoly derive() const;
    RPoly primitive() const;  // zero constant term
};

// All roots; error if any root strays from the real axis beyond tolerance.
std::vector<double> real_roots_sorted(const RPoly& p, double im_tol = 1e-7);

struct RealFiberData {
    double m = 0;                      // max of P at roots n-1, n-3, ... (from the top)
    double M = 0;                      // min at n-2, n-4, ...; ignored when unbounded
    bool M_unbounded = false;          // degree-1 input: M = +infinity marker
    std::vector<double> critical_values;  // P(b_k), b_1 < ... < b_{n-1}
    // exact values when every root snapped to a rational (kept for the
    // exact assertions of the acceptance suite)
    std::optional<Rat> m_exact, M_exact;
};

// q must have distinct real roots. P = primitive(q) with zero constant.
RealFiberData minmax(const RPoly& q);
RealFiberData minmax(const Poly& q);  // exact m/M when the roots are rational

// m(Q) < M(Q); degree-1 q is always inside (M unbounded).
bool in_qc_real(const RPoly& q);

// Ev0 for monic p with all-real distinct roots:
//   n  = 2: (P(0) + m(P')) / (P(0) + m(P') - 1)
//   n >= 3: (P(0) + M(P')) / (M(P') - m(P'))
// Result lies strictly in (0, 1).
double ev0(const RPoly& p);

// inverse fiber map: primitive(q) + [M-m] c - M (n >= 3) or
// primitive(q) + c/(c-1) - m (n = 2); requires in_qc_real(q) and c in (0,1)
RPoly fiber_inverse(const RPoly& q, double c);

// Degree-d polynomial (d >= 4) with d distinct real roots and m >= M,
// verified before returning. d = 4 is 5X(X-1)(X-3)(X-pi); higher degrees
// follow the inductive construction with the new leftmost root placed one
// unit below min(smallest existing root, pi - P(pi)^-1 Int_0^pi P).
RPoly counterexample(int d);

}  // namespace rcs
