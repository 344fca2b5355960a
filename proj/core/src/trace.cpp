#include "rcs/trace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rcs/roots.hpp"

namespace rcs {

namespace {

template <class R>
struct Engine {
    const LoopSpec& loop;
    const TraceOptions& opts;
    int n;
    std::vector<Letter> letters;
    std::vector<CrossingEvent> events;
    double min_sep = HUGE_VAL;
    std::vector<double> line_dist;
    long steps = 0;

    Engine(const LoopSpec& l, const TraceOptions& o) : loop(l), opts(o), n(l.n) {
        line_dist.assign(opts.watch_re_lines.size(), HUGE_VAL);
    }

    std::vector<Cx<R>> roots_at(const R& t, const std::vector<Cx<R>>& warm) {
        CxPoly<R> p = eval_loop<R>(loop, t);
        if (p.degree() != n) throw TraceError("trace: degree collapse along the loop");
        Cx<R> lead = p.c.back();
        for (auto& c : p.c) c /= lead;
        RootOptions<R> ro;
        ro.initial = warm;
        try {
            return aberth_roots<R>(p, ro);
        } catch (const RootsError& e) {
            throw TraceError(std::string("trace: roots collide (root refinement failed: ") +
                             e.what() + ")");
        }
    }

    // greedy nearest-neighbor matching of new roots onto previous strand slots
    static std::vector<Cx<R>> match(const std::vector<Cx<R>>& prev,
                                    const std::vector<Cx<R>>& fresh) {
        size_t m = prev.size();
        struct Entry {
            R d;
            size_t i, j;
        };
        std::vector<Entry> all;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) all.push_back({cabs(prev[i] - fresh[j]), i, j});
        std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.d < b.d; });
        std::vector<bool> ui(m, false), uj(m, false);
        std::vector<Cx<R>> out(m);
        size_t placed = 0;
        for (const Entry& e : all) {
            if (ui[e.i] || uj[e.j]) continue;
            ui[e.i] = uj[e.j] = true;
            out[e.i] = fresh[e.j];
            if (++placed == m) break;
        }
        return out;
    }

    std::vector<Cx<R>> continued(const R& t, const std::vector<Cx<R>>& from) {
        return match(from, roots_at(t, from));
    }

    // strand ids sorted by (Re, Im)
    std::vector<int> order_of(const std::vector<Cx<R>>& pos) const {
        std::vector<int> o(n);
        std::iota(o.begin(), o.end(), 0);
        std::sort(o.begin(), o.end(), [&](int a, int b) {
            if (pos[a].re != pos[b].re) return pos[a].re < pos[b].re;
            return pos[a].im < pos[b].im;
        });
        return o;
    }

    void observe(const std::vector<Cx<R>>& pos) {
        double sep = to_double(min_separation(pos));
        min_sep = std::min(min_sep, sep);
        if (sep < opts.collision_floor) throw TraceError("trace: roots collide");
        for (size_t k = 0; k < opts.watch_re_lines.size(); ++k)
            for (const auto& z : pos)
                line_dist[k] =
                    std::min(line_dist[k], std::abs(to_double(z.re) - opts.watch_re_lines[k]));
    }

    void emit(double t, int u, int v, int rank0, int sign, double gap) {
        letters.emplace_back(rank0 + 1, sign);
        events.push_back(CrossingEvent{t, u, v, rank0 + 1, sign, gap});
    }

    int crossing_sign(const Cx<R>& low, const Cx<R>& high) {
        double gap = std::abs(to_double(low.im) - to_double(high.im));
        if (gap < opts.im_gap_floor) throw TraceError("trace: ambiguous crossing (Im gap below floor)");
        return low.im < high.im ? +1 : -1;
    }

    // one adjacent pair (u at rank k, v at rank k+1) swaps inside [t1, t2]
    void refine_single(const R& t1, const std::vector<Cx<R>>& P1, const R& t2, int u, int v,
                       int rank0) {
        R lo = t1, hi = t2;
        std::vector<Cx<R>> Plo = P1;
        R s1 = P1[u].re - P1[v].re;  // expected < 0 (u left of v)
        while (to_double(hi - lo) > opts.time_refine_tol) {
            R mid = (lo + hi) / R(2);
            std::vector<Cx<R>> Pm = continued(mid, Plo);
            R f = Pm[u].re - Pm[v].re;
            if ((f <= R(0)) == (s1 <= R(0))) {
                lo = mid;
                Plo = std::move(Pm);
            } else {
                hi = mid;
            }
        }
        std::vector<Cx<R>> Pc = continued((lo + hi) / R(2), Plo);
        double tc = to_double((lo + hi) / R(2));
        double gap = std::abs(to_double(Pc[u].im) - to_double(Pc[v].im));
        emit(tc, u, v, rank0, crossing_sign(Pc[u], Pc[v]), gap);
    }

    // multiple swaps collapsed onto one instant: resolve as a sorting
    // network; the Im order at the instant fixes every sign consistently
    void resolve_instant(const R& t1, const std::vector<Cx<R>>& P1, const R& t2,
                         const std::vector<int>& target) {
        R mid = (t1 + t2) / R(2);
        std::vector<Cx<R>> Pm = continued(mid, P1);
        std::vector<int> cur = order_of(P1);
        std::vector<int> pos_in_target(n);
        for (int k = 0; k < n; ++k) pos_in_target[target[k]] = k;
        double tc = to_double(mid);
        int guard = n * n + 4;
        while (cur != target) {
            if (--guard < 0) throw TraceError("trace: crossing resolution did not terminate");
            for (int k = 0; k + 1 < n; ++k) {
                int u = cur[k], v = cur[k + 1];
                if (pos_in_target[u] > pos_in_target[v]) {
                    double gap = std::abs(to_double(Pm[u].im) - to_double(Pm[v].im));
                    emit(tc, u, v, k, crossing_sign(Pm[u], Pm[v]), gap);
                    std::swap(cur[k], cur[k + 1]);
                    break;
                }
            }
        }
    }

    void resolve(const R& t1, const std::vector<Cx<R>>& P1, const R& t2,
                 const std::vector<Cx<R>>& P2, int depth) {
        std::vector<int> o1 = order_of(P1), o2 = order_of(P2);
        if (o1 == o2) return;

        // single adjacent swap?
        int mismatch = -1;
        bool single = true;
        for (int k = 0; k < n && single; ++k) {
            if (o1[k] == o2[k]) continue;
            if (mismatch < 0 && k + 1 < n && o1[k] == o2[k + 1] && o1[k + 1] == o2[k]) {
                mismatch = k;
                ++k;  // skip the partner slot
            } else if (mismatch >= 0 || k + 1 >= n || o1[k] != o2[k + 1] || o1[k + 1] != o2[k]) {
                single = false;
            }
        }
        if (single && mismatch >= 0) {
            refine_single(t1, P1, t2, o1[mismatch], o1[mismatch + 1], mismatch);
            return;
        }
        if (depth > 60 || to_double(t2 - t1) < 4 * opts.time_refine_tol) {
            resolve_instant(t1, P1, t2, o2);
            return;
        }
        R mid = (t1 + t2) / R(2);
        std::vector<Cx<R>> Pm = continued(mid, P1);
        resolve(t1, P1, mid, Pm, depth + 1);
        resolve(mid, Pm, t2, P2, depth + 1);
    }

    TraceResult run() {
        CxPoly<R> p0 = eval_loop<R>(loop, R(0));
        if (p0.degree() != n || n < 2)
            throw TraceError("trace: loop degree must match n >= 2");
        std::vector<Cx<R>> fresh = roots_at(R(0), {});
        // strand identity: (Re, Im) order at t = 0
        std::sort(fresh.begin(), fresh.end(), [](const Cx<R>& a, const Cx<R>& b) {
            if (a.re != b.re) return a.re < b.re;
            return a.im < b.im;
        });
        std::vector<Cx<R>> pos = fresh;
        observe(pos);

        R t(0), h(opts.max_step);
        while (to_double(t) < 1.0) {
            R t2 = t + h;
            if (t2 > R(1)) t2 = R(1);
            std::vector<Cx<R>> next = continued(t2, pos);
            R sep = min_separation(pos);
            R disp{};
            for (int i = 0; i < n; ++i) disp = std::max(disp, cabs(next[i] - pos[i]));
            if (!(disp < sep / R(3))) {
                h = h / R(2);
                if (to_double(h) < opts.min_step) throw TraceError("trace: step floor reached");
                continue;
            }
            resolve(t, pos, t2, next, 0);
            pos = std::move(next);
            t = t2;
            ++steps;
            observe(pos);
            h = std::min(R(opts.max_step), h * R(3) / R(2));
        }

        TraceResult res;
        res.word = BraidWord(n, free_reduce(letters));
        std::vector<int> final_order = order_of(pos);
        res.permutation.assign(n, 0);
        for (int rank = 0; rank < n; ++rank) res.permutation[final_order[rank]] = rank;
        res.min_separation_seen = min_sep;
        res.steps = steps;
        res.crossings = std::move(events);
        res.re_line_min_dist = line_dist;
        return res;
    }
};

}  // namespace

TraceResult trace(const LoopSpec& l, const TraceOptions& opts) {
    if (opts.precision_bits > 64) {
        Engine<Quad> eng(l, opts);
        TraceResult res = eng.run();
        res.used_higher_precision = true;
        return res;
    }
    Engine<double> eng(l, opts);
    TraceResult res = eng.run();
    if (opts.auto_retry && res.min_separation_seen < 1e-5) {
        Engine<Quad> eng2(l, opts);
        res = eng2.run();
        res.used_higher_precision = true;
    }
    return res;
}

bool trace_pure_check(const LoopSpec& l, const TraceOptions& opts) {
    TraceResult res = trace(l, opts);
    for (size_t k = 0; k < res.permutation.size(); ++k)
        if (res.permutation[k] != static_cast<int>(k)) return false;
    return true;
}

namespace {

// a(t) of the cubic level: 27t/5, then 2 + e^{3 pi i (1-2t)}/5, then 27(1-t)/5
C64 a_path(double t) {
    if (t <= 1.0 / 3) return C64{27.0 * t / 5, 0};
    if (t >= 2.0 / 3) return C64{27.0 * (1 - t) / 5, 0};
    return C64{2, 0} + C64{0.2} * unit_phase(3 * M_PI * (1 - 2 * t));
}

}  // namespace

HomotopyReport verify_h_discriminant(int grid) {
    HomotopyReport rep;
    rep.grid = grid;
    auto H_coeffs = [](double t, double s) {
        C64 a = a_path(s);
        C64 rho = a * a * C64{(t - t * t) / (4 * (1 - t + t * t))};
        C64 mu = ccbrt(C64{1} + rho);
        C64 nu = unit_phase(3 * M_PI * t) / C64{std::sqrt(1 - t + t * t)};
        C64 p = C64{-3} * unit_phase(2 * M_PI * t) * mu;
        C64 q = a * nu;
        return std::pair<C64, C64>{p, q};
    };
    for (int i = 0; i < grid; ++i) {
        double t = double(i) / (grid - 1);
        for (int j = 0; j < grid; ++j) {
            double s = double(j) / (grid - 1);
            auto [p, q] = H_coeffs(t, s);
            C64 disc = C64{-4} * p * p * p - C64{27} * q * q;
            C64 a = a_path(s);
            C64 expected = C64{27} * unit_phase(6 * M_PI * t) * (C64{4} - a * a);
            rep.max_disc_deviation = std::max(rep.max_disc_deviation, cabs(disc - expected));
        }
    }
    for (int j = 0; j < grid; ++j) {
        double s = double(j) / (grid - 1);
        C64 a = a_path(s);
        // H(0,s) = X^3 - 3X + a(s), H(1,s) = X^3 - 3X - a(s)
        auto [p0, q0] = H_coeffs(0, s);
        auto [p1, q1] = H_coeffs(1, s);
        rep.max_boundary_deviation =
            std::max({rep.max_boundary_deviation, cabs(p0 - C64{-3}), cabs(q0 - a),
                      cabs(p1 - C64{-3}), cabs(q1 + a)});
        C64 rho0 = a * a * C64{0.0};
        C64 mu0 = ccbrt(C64{1} + rho0);
        rep.max_mu0_deviation = std::max(rep.max_mu0_deviation, cabs(mu0 - C64{1}));
    }
    for (int i = 0; i < grid; ++i) {
        double t = double(i) / (grid - 1);
        // H(t,0) = H(t,1) = X^3 - 3 e^{2 pi i t} X
        for (double s : {0.0, 1.0}) {
            auto [p, q] = H_coeffs(t, s);
            rep.max_boundary_deviation =
                std::max({rep.max_boundary_deviation,
                          cabs(p - C64{-3} * unit_phase(2 * M_PI * t)), cabs(q)});
        }
    }
    return rep;
}

}  // namespace rcs
