#include "rcs/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace rcs {

Poly Poly::constant(ExactComplex v) {
    Poly p;
    if (!v.is_zero()) p.c.push_back(std::move(v));
    return p;
}

Poly Poly::monomial(ExactComplex v, int k) {
    Poly p;
    if (v.is_zero()) return p;
    p.c.assign(k + 1, ExactComplex{});
    p.c[k] = std::move(v);
    return p;
}

const ExactComplex& Poly::leading() const {
    if (c.empty()) throw std::domain_error("leading(): zero polynomial");
    return c.back();
}

void Poly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t k = 0; k < out.c.size(); ++k) {
        if (k < a.c.size()) out.c[k] += a.c[k];
        if (k < b.c.size()) out.c[k] += b.c[k];
    }
    out.trim();
    return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& v : out.c) v = -v;
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, ExactComplex{});
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    out.trim();
    return out;
}

Poly operator*(const ExactComplex& s, const Poly& a) {
    Poly out = a;
    for (auto& v : out.c) v = s * v;
    out.trim();
    return out;
}

Poly derive(const Poly& p) {
    Poly d;
    for (size_t k = 1; k < p.c.size(); ++k) d.c.push_back(ExactComplex(Rat(long(k))) * p.c[k]);
    d.trim();
    return d;
}

Poly primitive(const Poly& q) {
    Poly p;
    if (q.is_zero()) return p;
    p.c.assign(q.c.size() + 1, ExactComplex{});
    for (size_t k = 0; k < q.c.size(); ++k)
        p.c[k + 1] = q.c[k] / ExactComplex(Rat(long(k + 1)));
    p.trim();
    return p;
}

ExactComplex eval(const Poly& p, const ExactComplex& z) {
    ExactComplex acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    PolyDivMod out;
    out.rem = a;
    int db = b.degree();
    if (a.degree() < db) return out;
    out.quot.c.assign(a.degree() - db + 1, ExactComplex{});
    while (!out.rem.is_zero() && out.rem.degree() >= db) {
        int k = out.rem.degree() - db;
        ExactComplex q = out.rem.leading() / b.leading();
        out.quot.c[k] = q;
        out.rem = out.rem - (Poly::monomial(q, k) * b);
    }
    out.quot.trim();
    return out;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("monic: zero polynomial");
    return (ExactComplex(Rat(1)) / p.leading()) * p;
}

ExactComplex resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return ExactComplex{};
    Poly a = f, b = g;
    ExactComplex acc(Rat(1));
    bool negate = false;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) {
            // res(a, const) = const^deg(a)
            ExactComplex base = b.c[0], pw(Rat(1));
            for (int k = 0; k < da; ++k) pw *= base;
            acc *= pw;
            break;
        }
        if (da < db) {
            std::swap(a, b);
            if ((da % 2) == 1 && (db % 2) == 1) negate = !negate;
            continue;
        }
        Poly r = divmod(a, b).rem;
        if (r.is_zero()) return ExactComplex{};
        int dr = r.degree();
        if ((da % 2) == 1 && (db % 2) == 1) negate = !negate;
        ExactComplex pw(Rat(1));
        for (int k = 0; k < da - dr; ++k) pw *= b.leading();
        acc *= pw;
        a = b;
        b = r;
    }
    return negate ? -acc : acc;
}

ExactComplex discriminant(const Poly& p) {
    int n = p.degree();
    if (n < 1) throw std::domain_error("discriminant: constant polynomial");
    if (n == 1) return ExactComplex(Rat(1));
    ExactComplex res = resultant(p, derive(p));
    ExactComplex d = res / p.leading();
    // (-1)^{n(n-1)/2}
    if (((long(n) * (n - 1)) / 2) % 2 == 1) d = -d;
    return d;
}

std::string to_string(const Poly& p) {
    std::string out = "[";
    for (size_t k = 0; k < p.c.size(); ++k) {
        if (k) out += ", ";
        out += to_string(p.c[k]);
    }
    return out + "]";
}

Poly parse_poly(const std::string& text) {
    size_t lb = text.find('[');
    size_t rb = text.rfind(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("parse_poly: expected '[c0, c1, ...]'");
    std::string body = text.substr(lb + 1, rb - lb - 1);
    std::vector<ExactComplex> coeffs;
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        bool blank = tok.find_first_not_of(" \t\r\n") == std::string::npos;
        if (!blank) coeffs.push_back(parse_exact_complex(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poly(std::move(coeffs));
}

}  // namespace rcs
