#pragma once

// Membership in the restricted configuration spaces, decided exactly for
// rational-coefficient polynomials: no root extraction is needed because
// the product of squared critical-value differences is a symmetric
// function of the roots of the derivative, hence an exact rational
// computed by resultant elimination.

#include <optional>
#include <string>
#include <vector>

#include "rcs/poly.hpp"
#include "rcs/sij.hpp"

namespace rcs {

struct MembershipVerdict {
    bool in_c = false;   // distinct roots
    bool in_qc = false;  // derivative has distinct roots with distinct critical values
    bool in_rc = false;  // in_c and in_qc
    std::string witness; // description of the first failed condition, empty when in_rc
};

// prod_k (Y - P(beta_k)) for P = primitive(q), beta_k the roots of q;
// computed exactly as Res_X(q(X), Y - P(X)) / lc(q)^{deg P} via
// evaluation/interpolation. q must be nonconstant.
Poly critical_values_poly(const Poly& q);

// Exact membership of q in the restricted base space at its own level:
// disc(q) != 0 and all critical values distinct.
bool in_qc_exact(const Poly& q);

// Verdict for p itself (derivative conditions apply to derive(p)).
MembershipVerdict membership(const Poly& p);

// Floating-point verdict with margins, for polynomials that are not
// exactly representable; tolerances are relative to the reported minima.
struct NumericMembership {
    MembershipVerdict verdict;
    double abs_disc_p = 0;
    double abs_disc_q = 0;
    double min_abs_s = 0;       // HUGE_VAL when no S condition applies
    double min_critval_gap = 0; // HUGE_VAL for degree < 3
};
NumericMembership membership_numeric(const CPoly64& p, double floor = 1e-9);

// {P(beta_k)} for P = primitive(q); exact values when every root of q is
// an exact Gaussian rational, otherwise nullopt (use the numeric variant).
// Repeated roots are rejected.
std::optional<std::vector<ExactComplex>> critical_values_exact(const Poly& q);
std::vector<C64> critical_values_numeric(const Poly& q);

// primitive(q) - (1 + sum_k |P(beta_k)|): a section of the derivative
// fibration. The constant is exact when every |P(beta_k)| is rational;
// otherwise its exact 2^-32 ceiling is used, which preserves the section
// property. q must lie in the restricted base space.
Poly section_point(const Poly& q);

}  // namespace rcs
