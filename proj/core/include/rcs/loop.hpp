#pragma once

// Piecewise-parametric closed paths of polynomials: the text grammar
//
//   loop   := "loop" "n=" INT "{" segment+ "}"
//   segment:= "[" RAT "," RAT "]" ":" polyexpr ";"?
//
// with polyexpr over X, t, i, rationals, E(q t + r) (= e^{i pi (q t + r)}),
// conj(...), + - * ^. Every reference loop ships as a builtin; the
// loop algebra (concat, invert, conjugate) reparametrizes segments exactly.

#include <optional>
#include <string>
#include <vector>

#include "rcs/coeff_expr.hpp"
#include "rcs/poly.hpp"

namespace rcs {

enum class LoopSpace {
    Total,  // restricted configuration space at the loop's own degree
    Base,   // restricted base space: conditions on the loop's own roots
    Fiber,  // scalar path in a punctured plane
    Plain,  // configuration space only (distinct roots)
};

struct LoopSegment {
    Rat t0, t1;
    std::vector<Expr> coeffs;  // ascending powers of X
};

struct LoopSpec {
    int n = 0;  // polynomial degree (0 for scalar fiber loops)
    std::vector<LoopSegment> segments;
    std::optional<Poly> basepoint_exact;
    CPoly64 basepoint;
    LoopSpace space = LoopSpace::Total;
    std::vector<C64> fiber_forbidden;  // Fiber loops: points the path must avoid
    std::string name;
};

struct LoopError : std::runtime_error {
    int line = 0, column = 0;
    LoopError(const std::string& what, int ln = 0, int col = 0)
        : std::runtime_error(what), line(ln), column(col) {}
};

// Structural validation included: exact rational endpoints, interval cover
// of [0,1], endpoint agreement, closure.
LoopSpec parse_loop(const std::string& text);
std::string print_loop(const LoopSpec& l);

template <class R>
CxPoly<R> eval_loop(const LoopSpec& l, const R& t);
CPoly64 eval_loop(const LoopSpec& l, double t);
std::optional<Poly> eval_loop_exact(const LoopSpec& l, const Rat& t);

// The built-in named loops; unknown names raise a LoopError listing
// what exists.
LoopSpec builtin(const std::string& name);
std::vector<std::string> builtin_names();

LoopSpec concat(const LoopSpec& a, const LoopSpec& b);
LoopSpec invert(const LoopSpec& l);
LoopSpec conjugate(const LoopSpec& l, const LoopSpec& by);

struct ValidationReport {
    bool closed = false;
    double closure_error = 0;
    bool basepoint_ok = false;
    bool continuity_ok = false;
    double max_boundary_gap = 0;
    bool in_space = false;
    double min_abs_disc = 0;        // discriminant of the sampled polynomial
    double min_abs_disc_deriv = 0;  // of its derivative (Total loops)
    double min_abs_s = 0;           // S margin at the applicable level
    double min_forbidden_dist = 0;  // Fiber loops
    int samples = 0;
    std::vector<std::string> failures;
    bool valid() const { return closed && basepoint_ok && continuity_ok && in_space; }
};

// Closure, basepoint and in-space membership at Chebyshev-spaced samples
// (clustered near segment boundaries); reports the minima encountered.
ValidationReport validate(const LoopSpec& l, int samples = 512, double floor = 1e-9);

// exact when both basepoints are exact, numeric (1e-9) otherwise
bool same_basepoint(const LoopSpec& a, const LoopSpec& b);

}  // namespace rcs
