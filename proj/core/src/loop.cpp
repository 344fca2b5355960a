#include "rcs/loop.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rcs/membership.hpp"
#include "rcs/roots.hpp"
#include "rcs/sij.hpp"

namespace rcs {

namespace {

// ------------------------------------------------------------------ lexer

struct Token {
    enum class Kind { Int, Ident, Punct, End } kind = Kind::End;
    std::string text;
    Int ival;
    int line = 1, col = 1;
};

struct Lexer {
    std::string src;
    size_t pos = 0;
    int line = 1, col = 1;
    Token cur;

    explicit Lexer(std::string s) : src(std::move(s)) { advance(); }

    [[noreturn]] void fail(const std::string& why, const Token& at) {
        throw LoopError("syntax error: " + why + " (line " + std::to_string(at.line) + ", column " +
                            std::to_string(at.col) + ")",
                        at.line, at.col);
    }

    void bump(char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void advance() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {  // line comment
                while (pos < src.size() && src[pos] != '\n') bump(src[pos]);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump(c);
            } else {
                break;
            }
        }
        cur = Token{};
        cur.line = line;
        cur.col = col;
        if (pos >= src.size()) {
            cur.kind = Token::Kind::End;
            return;
        }
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int value = 0;
            std::string digits;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                value = value * 10 + (src[pos] - '0');
                digits += src[pos];
                bump(src[pos]);
            }
            cur.kind = Token::Kind::Int;
            cur.text = digits;
            cur.ival = value;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                ident += src[pos];
                bump(src[pos]);
            }
            cur.kind = Token::Kind::Ident;
            cur.text = ident;
            return;
        }
        cur.kind = Token::Kind::Punct;
        cur.text = std::string(1, c);
        bump(c);
    }

    bool is_punct(const char* p) const { return cur.kind == Token::Kind::Punct && cur.text == p; }
    bool is_ident(const char* w) const { return cur.kind == Token::Kind::Ident && cur.text == w; }
    void expect_punct(const char* p) {
        if (!is_punct(p)) fail(std::string("expected '") + p + "'", cur);
        advance();
    }
};

// polynomial in X with expression coefficients, ascending
using PExpr = std::vector<Expr>;

PExpr p_const(Expr e) { return {std::move(e)}; }

void p_trim(PExpr& p) {
    while (!p.empty() && expr_is_zero(p.back())) p.pop_back();
}

PExpr p_add(const PExpr& a, const PExpr& b) {
    PExpr out(std::max(a.size(), b.size()), e_int(0));
    for (size_t k = 0; k < out.size(); ++k) {
        Expr x = k < a.size() ? a[k] : e_int(0);
        Expr y = k < b.size() ? b[k] : e_int(0);
        out[k] = e_add(x, y);
    }
    p_trim(out);
    return out;
}

PExpr p_neg(const PExpr& a) {
    PExpr out;
    for (const auto& c : a) out.push_back(e_neg(c));
    return out;
}

PExpr p_mul(const PExpr& a, const PExpr& b) {
    if (a.empty() || b.empty()) return {};
    PExpr out(a.size() + b.size() - 1, e_int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = e_add(out[i + j], e_mul(a[i], b[j]));
    p_trim(out);
    return out;
}

PExpr p_pow(PExpr base, int k) {
    // scalar powers stay IntPower nodes (canonical form round trip);
    // powers of X-carrying expressions expand into coefficients
    if (base.size() <= 1) {
        if (base.empty()) return k == 0 ? p_const(e_int(1)) : PExpr{};
        return {e_pow(base[0], k)};
    }
    PExpr acc = p_const(e_int(1));
    for (int j = 0; j < k; ++j) acc = p_mul(acc, base);
    return acc;
}

// ------------------------------------------------------------------ parser

struct Parser {
    Lexer lx;
    explicit Parser(std::string s) : lx(std::move(s)) {}

    Rat rational() {
        bool neg = false;
        if (lx.is_punct("-")) {
            neg = true;
            lx.advance();
        }
        if (lx.cur.kind != Token::Kind::Int) lx.fail("expected rational", lx.cur);
        Int num = lx.cur.ival;
        lx.advance();
        Int den = 1;
        if (lx.is_punct("/")) {
            lx.advance();
            if (lx.cur.kind != Token::Kind::Int) lx.fail("expected denominator", lx.cur);
            den = lx.cur.ival;
            if (den == 0) lx.fail("zero denominator", lx.cur);
            lx.advance();
        }
        Rat r(num, den);
        return neg ? Rat(-r) : r;
    }

    // linear form q*t + r inside E(...)
    std::pair<Rat, Rat> linear_form() {
        Rat q(0), r(0);
        bool first = true;
        while (true) {
            int sign = 1;
            if (lx.is_punct("-")) {
                sign = -1;
                lx.advance();
            } else if (lx.is_punct("+")) {
                lx.advance();
            } else if (!first) {
                break;
            }
            first = false;
            if (lx.is_ident("t")) {
                lx.advance();
                q += sign;
                continue;
            }
            if (lx.cur.kind != Token::Kind::Int) lx.fail("expected term in E(...)", lx.cur);
            Rat v = rational();
            if (lx.is_punct("*")) {
                lx.advance();
                if (!lx.is_ident("t")) lx.fail("expected 't' after '*' in E(...)", lx.cur);
                lx.advance();
                q += sign * v;
            } else if (lx.is_ident("t")) {
                lx.advance();
                q += sign * v;
            } else {
                r += sign * v;
            }
        }
        return {q, r};
    }

    PExpr atom() {
        if (lx.is_punct("(")) {
            lx.advance();
            PExpr e = expr();
            lx.expect_punct(")");
            return e;
        }
        if (lx.is_punct("-")) {
            lx.advance();
            return p_neg(factor());
        }
        if (lx.cur.kind == Token::Kind::Int) {
            Int num = lx.cur.ival;
            lx.advance();
            Int den = 1;
            if (lx.is_punct("/")) {
                lx.advance();
                if (lx.cur.kind != Token::Kind::Int) lx.fail("expected denominator", lx.cur);
                den = lx.cur.ival;
                if (den == 0) lx.fail("zero denominator", lx.cur);
                lx.advance();
            }
            return p_const(e_rat(Rat(num, den)));
        }
        if (lx.is_ident("X")) {
            lx.advance();
            return PExpr{e_int(0), e_int(1)};
        }
        if (lx.is_ident("t")) {
            lx.advance();
            return p_const(e_t());
        }
        if (lx.is_ident("i")) {
            lx.advance();
            return p_const(e_i());
        }
        if (lx.is_ident("E")) {
            lx.advance();
            lx.expect_punct("(");
            auto [q, r] = linear_form();
            lx.expect_punct(")");
            return p_const(e_exppi(q, r));
        }
        if (lx.is_ident("conj")) {
            Token at = lx.cur;
            lx.advance();
            lx.expect_punct("(");
            PExpr e = expr();
            lx.expect_punct(")");
            if (e.size() > 1) lx.fail("conj(...) must not contain X", at);
            return p_const(e_conj(e.empty() ? e_int(0) : e[0]));
        }
        lx.fail("expected expression", lx.cur);
    }

    PExpr factor() {
        PExpr base = atom();
        while (lx.is_punct("^")) {
            lx.advance();
            if (lx.cur.kind != Token::Kind::Int) lx.fail("expected integer exponent", lx.cur);
            if (lx.cur.ival > 64) lx.fail("exponent too large", lx.cur);
            int k = static_cast<int>(lx.cur.ival);
            lx.advance();
            base = p_pow(std::move(base), k);
        }
        return base;
    }

    PExpr term() {
        PExpr acc = factor();
        while (lx.is_punct("*")) {
            lx.advance();
            acc = p_mul(acc, factor());
        }
        return acc;
    }

    PExpr expr() {
        PExpr acc = term();
        while (lx.is_punct("+") || lx.is_punct("-")) {
            bool minus = lx.is_punct("-");
            lx.advance();
            PExpr rhs = term();
            acc = p_add(acc, minus ? p_neg(rhs) : rhs);
        }
        return acc;
    }

    LoopSpec loop() {
        if (!lx.is_ident("loop")) lx.fail("expected 'loop'", lx.cur);
        lx.advance();
        if (!lx.is_ident("n")) lx.fail("expected 'n='", lx.cur);
        lx.advance();
        lx.expect_punct("=");
        if (lx.cur.kind != Token::Kind::Int) lx.fail("expected degree after 'n='", lx.cur);
        int n = static_cast<int>(lx.cur.ival);
        lx.advance();
        lx.expect_punct("{");
        LoopSpec l;
        l.n = n;
        while (!lx.is_punct("}")) {
            LoopSegment seg;
            lx.expect_punct("[");
            seg.t0 = rational();
            lx.expect_punct(",");
            seg.t1 = rational();
            lx.expect_punct("]");
            lx.expect_punct(":");
            PExpr coeffs = expr();
            if (lx.is_punct(";")) lx.advance();
            seg.coeffs = std::move(coeffs);
            l.segments.push_back(std::move(seg));
        }
        lx.advance();
        if (lx.cur.kind != Token::Kind::End) lx.fail("trailing input after '}'", lx.cur);
        return l;
    }
};

double coeff_gap(const CPoly64& a, const CPoly64& b) {
    double gap = 0;
    size_t m = std::max(a.c.size(), b.c.size());
    for (size_t k = 0; k < m; ++k) {
        C64 x = k < a.c.size() ? a.c[k] : C64{};
        C64 y = k < b.c.size() ? b.c[k] : C64{};
        gap = std::max(gap, cabs(x - y));
    }
    return gap;
}

CPoly64 eval_segment(const LoopSegment& s, double t) {
    CPoly64 p;
    for (const auto& c : s.coeffs) p.c.push_back(eval_expr<double>(c, t));
    p.trim();
    return p;
}

std::optional<Poly> eval_segment_exact(const LoopSegment& s, const Rat& t) {
    std::vector<ExactComplex> coeffs;
    for (const auto& c : s.coeffs) {
        auto v = eval_expr_exact(c, t);
        if (!v) return std::nullopt;
        coeffs.push_back(*v);
    }
    return Poly(std::move(coeffs));
}

}  // namespace

void finalize_structure(LoopSpec& l);  // forward, shared with builtins.cpp

void finalize_structure(LoopSpec& l) {
    if (l.segments.empty()) throw LoopError("loop has no segments");
    for (const auto& s : l.segments)
        if (!(s.t0 < s.t1)) throw LoopError("segment interval is empty or reversed");
    if (l.segments.front().t0 != 0 || l.segments.back().t1 != 1)
        throw LoopError("intervals do not cover [0,1]");
    for (size_t k = 0; k + 1 < l.segments.size(); ++k) {
        if (l.segments[k].t1 != l.segments[k + 1].t0) {
            if (l.segments[k].t1 < l.segments[k + 1].t0)
                throw LoopError("intervals do not cover [0,1]");
            throw LoopError("segment intervals overlap");
        }
        // endpoint agreement, exact where both sides evaluate exactly
        const Rat& tb = l.segments[k].t1;
        auto left = eval_segment_exact(l.segments[k], tb);
        auto right = eval_segment_exact(l.segments[k + 1], tb);
        if (left && right) {
            if (!(*left == *right))
                throw LoopError("segment endpoint mismatch at t=" + rat_to_string(tb));
        } else {
            double td = rat_to_double(tb);
            if (coeff_gap(eval_segment(l.segments[k], td), eval_segment(l.segments[k + 1], td)) >
                1e-12)
                throw LoopError("segment endpoint mismatch at t=" + rat_to_string(tb));
        }
    }
    l.basepoint_exact = eval_segment_exact(l.segments.front(), Rat(0));
    l.basepoint = l.basepoint_exact ? to_cxpoly<double>(*l.basepoint_exact)
                                    : eval_segment(l.segments.front(), 0.0);
}

LoopSpec parse_loop(const std::string& text) {
    Parser p(text);
    LoopSpec l = p.loop();
    finalize_structure(l);
    return l;
}

std::string print_loop(const LoopSpec& l) {
    std::ostringstream os;
    os << "loop n=" << l.n << " {\n";
    for (const auto& s : l.segments) {
        os << "  [" << rat_to_string(s.t0) << "," << rat_to_string(s.t1) << "]: ";
        bool wrote = false;
        for (size_t k = 0; k < s.coeffs.size(); ++k) {
            if (expr_is_zero(s.coeffs[k])) continue;
            if (wrote) os << " + ";
            os << to_string_factor(s.coeffs[k]);
            if (k == 1) os << "*X";
            if (k > 1) os << "*X^" << k;
            wrote = true;
        }
        if (!wrote) os << "0";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

template <class R>
CxPoly<R> eval_loop(const LoopSpec& l, const R& t) {
    if (t < R(0) || t > R(1)) throw LoopError("eval_loop: t outside [0,1]");
    for (const auto& s : l.segments) {
        if (t >= rat_to<R>(s.t0) && t <= rat_to<R>(s.t1)) {
            CxPoly<R> p;
            for (const auto& c : s.coeffs) p.c.push_back(eval_expr<R>(c, t));
            p.trim();
            return p;
        }
    }
    // floating roundoff can leave t marginally outside every interval
    const LoopSegment& last = l.segments.back();
    CxPoly<R> p;
    for (const auto& c : last.coeffs) p.c.push_back(eval_expr<R>(c, t));
    p.trim();
    return p;
}
template CxPoly<double> eval_loop<double>(const LoopSpec&, const double&);
template CxPoly<Quad> eval_loop<Quad>(const LoopSpec&, const Quad&);

CPoly64 eval_loop(const LoopSpec& l, double t) { return eval_loop<double>(l, t); }

std::optional<Poly> eval_loop_exact(const LoopSpec& l, const Rat& t) {
    if (t < 0 || t > 1) throw LoopError("eval_loop_exact: t outside [0,1]");
    for (const auto& s : l.segments)
        if (t >= s.t0 && t <= s.t1) return eval_segment_exact(s, t);
    return std::nullopt;
}

bool same_basepoint(const LoopSpec& a, const LoopSpec& b) {
    if (a.basepoint_exact && b.basepoint_exact) return *a.basepoint_exact == *b.basepoint_exact;
    return coeff_gap(a.basepoint, b.basepoint) < 1e-9;
}

namespace {

LoopSegment remap_segment(const LoopSegment& s, const Rat& u, const Rat& v, const Rat& nt0,
                          const Rat& nt1) {
    LoopSegment out;
    out.t0 = nt0;
    out.t1 = nt1;
    for (const auto& c : s.coeffs) out.coeffs.push_back(subst_affine(c, u, v));
    return out;
}

}  // namespace

LoopSpec concat(const LoopSpec& a, const LoopSpec& b) {
    if (a.n != b.n) throw LoopError("concat: degree mismatch");
    if (!same_basepoint(a, b)) throw LoopError("concat: basepoint mismatch");
    LoopSpec out;
    out.n = a.n;
    out.space = a.space;
    out.fiber_forbidden = a.fiber_forbidden;
    out.name = "";
    Rat half(1, 2);
    // first half runs a at double speed: t in [t0/2, t1/2], expr t -> 2t
    for (const auto& s : a.segments)
        out.segments.push_back(remap_segment(s, Rat(2), Rat(0), s.t0 * half, s.t1 * half));
    // second half runs b: expr t -> 2t - 1
    for (const auto& s : b.segments)
        out.segments.push_back(
            remap_segment(s, Rat(2), Rat(-1), s.t0 * half + half, s.t1 * half + half));
    finalize_structure(out);
    return out;
}

LoopSpec invert(const LoopSpec& l) {
    LoopSpec out;
    out.n = l.n;
    out.space = l.space;
    out.fiber_forbidden = l.fiber_forbidden;
    for (auto it = l.segments.rbegin(); it != l.segments.rend(); ++it)
        out.segments.push_back(remap_segment(*it, Rat(-1), Rat(1), Rat(1) - it->t1, Rat(1) - it->t0));
    finalize_structure(out);
    return out;
}

LoopSpec conjugate(const LoopSpec& l, const LoopSpec& by) {
    return concat(concat(by, l), invert(by));
}

ValidationReport validate(const LoopSpec& l, int samples, double floor) {
    ValidationReport rep;
    rep.samples = samples;
    rep.min_abs_disc = HUGE_VAL;
    rep.min_abs_disc_deriv = HUGE_VAL;
    rep.min_abs_s = HUGE_VAL;
    rep.min_forbidden_dist = HUGE_VAL;

    rep.closure_error = coeff_gap(eval_loop(l, 0.0), eval_loop(l, 1.0));
    rep.closed = rep.closure_error < 1e-9;
    if (!rep.closed) rep.failures.push_back("loop is not closed");
    rep.basepoint_ok = coeff_gap(eval_loop(l, 0.0), l.basepoint) < 1e-9;
    if (!rep.basepoint_ok) rep.failures.push_back("value at t=0 differs from the basepoint");

    rep.continuity_ok = true;
    rep.max_boundary_gap = 0;
    for (size_t k = 0; k + 1 < l.segments.size(); ++k) {
        double tb = rat_to_double(l.segments[k].t1);
        double gap = coeff_gap(eval_loop(l, std::nextafter(tb, 0.0)), eval_loop(l, std::nextafter(tb, 1.0)));
        rep.max_boundary_gap = std::max(rep.max_boundary_gap, gap);
        if (gap > 1e-9) rep.continuity_ok = false;
    }
    if (!rep.continuity_ok) rep.failures.push_back("segment boundary discontinuity");

    // distribute samples per segment (proportional, at least 8), Chebyshev
    // points clustered toward both segment ends
    std::vector<double> ts;
    double total = 1.0;
    for (const auto& s : l.segments) {
        double len = rat_to_double(s.t1) - rat_to_double(s.t0);
        int count = std::max(8, static_cast<int>(std::lround(samples * len / total)));
        double a = rat_to_double(s.t0), b = rat_to_double(s.t1);
        for (int k = 0; k < count; ++k) {
            double x = 0.5 * (1 - std::cos(M_PI * (k + 0.5) / count));
            ts.push_back(a + (b - a) * x);
        }
    }

    bool ok = true;
    for (double t : ts) {
        CPoly64 p = eval_loop(l, t);
        if (l.space == LoopSpace::Fiber) {
            C64 v = p.c.empty() ? C64{} : p.c[0];
            for (const auto& f : l.fiber_forbidden)
                rep.min_forbidden_dist = std::min(rep.min_forbidden_dist, cabs(v - f));
            continue;
        }
        if (p.degree() < 1) {
            ok = false;
            rep.failures.push_back("degree collapse at t=" + std::to_string(t));
            continue;
        }
        try {
            std::vector<C64> rp = roots(p);
            rep.min_abs_disc = std::min(rep.min_abs_disc, cabs(discriminant_oracle(rp)));
            if (l.space == LoopSpace::Base && rp.size() >= 3) {
                QfMargins qm = qf_margins(rp);
                rep.min_abs_s = std::min(rep.min_abs_s, qm.min_abs_s);
            }
            if (l.space == LoopSpace::Total && p.degree() >= 2) {
                std::vector<C64> rq = roots(p.derive());
                rep.min_abs_disc_deriv =
                    std::min(rep.min_abs_disc_deriv, cabs(discriminant_oracle(rq)));
                if (rq.size() >= 3) {
                    QfMargins qm = qf_margins(rq);
                    rep.min_abs_s = std::min(rep.min_abs_s, qm.min_abs_s);
                }
            }
        } catch (const RootsError&) {
            ok = false;
            rep.failures.push_back("root finding failed at t=" + std::to_string(t));
        }
    }

    if (l.space == LoopSpace::Fiber) {
        ok = rep.min_forbidden_dist > floor;
        if (!ok) rep.failures.push_back("path touches a forbidden point");
    } else {
        if (rep.min_abs_disc <= floor) {
            ok = false;
            rep.failures.push_back("discriminant collapses along the loop");
        }
        if (l.space == LoopSpace::Total && rep.min_abs_disc_deriv <= floor) {
            ok = false;
            rep.failures.push_back("derivative discriminant collapses along the loop");
        }
        if (rep.min_abs_s != HUGE_VAL && rep.min_abs_s <= floor) {
            ok = false;
            rep.failures.push_back("an S value collapses along the loop");
        }
    }
    rep.in_space = ok;
    return rep;
}

}  // namespace rcs
