#pragma once

// Braid extraction: continue the roots of a polynomial loop, detect when
// two strands adjacent in real-part order swap, and emit a braid word.
//
// Conventions (calibrated once against the cubic-level anchors gamma3 ->
// x1 x2 x1 and alpha3 -> x2^-1, then frozen): strand identity is the
// position in the (Re, Im)-sorted root list at t = 0; a crossing of the
// strands at ranks (k, k+1) emits generator x_{k+1}; the sign is +1 when
// the strand arriving from the lower real position carries the smaller
// imaginary part at the crossing (it passes in front, Im < 0 side).

#include <stdexcept>
#include <vector>

#include "rcs/braid.hpp"
#include "rcs/loop.hpp"

namespace rcs {

struct TraceOptions {
    double max_step = 1.0 / 256;
    double min_step = 1e-12;
    double collision_floor = 1e-9;   // "roots collide" below this separation
    double im_gap_floor = 1e-9;      // "ambiguous crossing" below this gap
    double time_refine_tol = 1e-12;  // bisection width for crossing times
    bool auto_retry = true;          // rerun at 2x precision when separation dips under 1e-5
    int precision_bits = 64;         // 128 runs the quad engine outright
    std::vector<double> watch_re_lines;  // record min distance of strands to these Re lines
};

struct CrossingEvent {
    double t = 0;        // refined crossing time
    int strand_low = 0;  // strand arriving from the lower real position
    int strand_high = 0;
    int position = 0;    // 1-based rank of the pair before the swap (= generator index)
    int sign = 0;
    double im_gap = 0;
};

struct TraceResult {
    BraidWord word{2, {}};
    std::vector<int> permutation;  // permutation[i] = final rank of strand i
    double min_separation_seen = 0;
    long steps = 0;
    std::vector<CrossingEvent> crossings;
    std::vector<double> re_line_min_dist;  // aligned with watch_re_lines
    bool used_higher_precision = false;
};

struct TraceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TraceResult trace(const LoopSpec& l, const TraceOptions& opts = {});

// pure <=> the endpoint permutation is the identity
bool trace_pure_check(const LoopSpec& l, const TraceOptions& opts = {});

// Checks the homotopy H(t,s) = X^3 - 3 e^{2 pi i t} mu(t,s) X + a(s) nu(t)
// on a grid: its discriminant against 27 e^{6 pi i t} (4 - a(s)^2), the
// boundary identities H(0,s) = alpha(s), H(1,s) = beta(s),
// H(t,0) = H(t,1) = gamma(t), and mu(0,s) = 1.
struct HomotopyReport {
    int grid = 0;
    double max_disc_deviation = 0;
    double max_boundary_deviation = 0;
    double max_mu0_deviation = 0;
};
HomotopyReport verify_h_discriminant(int grid = 64);

}  // namespace rcs
