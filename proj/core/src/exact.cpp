#include "rcs/exact.hpp"

#include <cctype>
#include <cmath>

namespace rcs {

std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::optional<Rat> rat_exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rat(0);
    Int num = numerator(r), den = denominator(r);
    Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rat(sn, sd);
}

std::optional<Rat> exact_abs(const ExactComplex& z) {
    if (z.im == 0) return z.re < 0 ? -z.re : z.re;
    if (z.re == 0) return z.im < 0 ? -z.im : z.im;
    return rat_exact_sqrt(exact_norm(z));
}

namespace {

struct RatScanner {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + why);
    }
    Int integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            neg = s[pos] == '-';
            ++pos;
        }
        size_t digits = pos;
        Int value = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            value = value * 10 + (s[pos] - '0');
            ++pos;
        }
        if (pos == digits) fail("expected integer");
        return neg ? Int(-value) : value;
    }
    Rat rational() {
        Int num = integer();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            Int den = integer();
            if (den == 0) fail("zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }
};

// one signed term: RAT, RAT*i, RAT i, or bare i
void parse_term(RatScanner& sc, ExactComplex& acc, int sign) {
    if (sc.peek() == 'i') {
        ++sc.pos;
        acc.im += sign;
        return;
    }
    Rat v = sc.rational();
    sc.skip_ws();
    bool imag = false;
    if (sc.pos < sc.s.size() && sc.s[sc.pos] == '*') {
        ++sc.pos;
        sc.skip_ws();
        if (sc.pos >= sc.s.size() || sc.s[sc.pos] != 'i') sc.fail("expected 'i' after '*'");
        ++sc.pos;
        imag = true;
    } else if (sc.pos < sc.s.size() && sc.s[sc.pos] == 'i') {
        ++sc.pos;
        imag = true;
    }
    if (sign < 0) v = -v;
    if (imag)
        acc.im += v;
    else
        acc.re += v;
}

}  // namespace

std::string to_string(const ExactComplex& z) {
    if (z.im == 0) return rat_to_string(z.re);
    std::string im_part;
    if (z.im == 1)
        im_part = "i";
    else if (z.im == -1)
        im_part = "-i";
    else
        im_part = rat_to_string(z.im) + "*i";
    if (z.re == 0) return im_part;
    std::string out = rat_to_string(z.re);
    if (im_part[0] != '-') out += "+";
    return out + im_part;
}

ExactComplex parse_exact_complex(const std::string& text) {
    RatScanner sc{text};
    ExactComplex acc;
    int sign = 1;
    if (sc.peek() == '+' || sc.peek() == '-') {
        sign = sc.peek() == '-' ? -1 : 1;
        ++sc.pos;
    }
    parse_term(sc, acc, sign);
    while (!sc.eof()) {
        char c = sc.peek();
        if (c == '+' || c == '-') {
            ++sc.pos;
            parse_term(sc, acc, c == '-' ? -1 : 1);
        } else {
            sc.fail("unexpected character");
        }
    }
    return acc;
}

Rat parse_rat(const std::string& text) {
    RatScanner sc{text};
    Rat r = sc.rational();
    if (!sc.eof()) sc.fail("trailing characters after rational");
    return r;
}

Rat rational_reconstruct(double x, const Int& max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_reconstruct: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;
    // continued fraction with convergent denominators capped at max_den
    Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(frac);
        if (fl > 9e15) break;
        Int a = static_cast<long long>(fl);
        Int p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rat(0);
    Rat r(p1, q1);
    return neg ? -r : r;
}

}  // namespace rcs
