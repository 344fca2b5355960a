#pragma once

// Dense univariate polynomials, ascending coefficients. Poly carries exact
// Gaussian-rational coefficients; CxPoly<R> is the floating mirror used
// where roots are required. The zero polynomial is the empty coefficient
// vector (degree -1).

#include <string>
#include <vector>

#include "rcs/exact.hpp"
#include "rcs/numeric.hpp"

namespace rcs {

struct Poly {
    std::vector<ExactComplex> c;  // c[k] multiplies X^k; invariant: c.empty() or c.back() != 0

    Poly() = default;
    explicit Poly(std::vector<ExactComplex> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(ExactComplex v);
    // X^k with coefficient v
    static Poly monomial(ExactComplex v, int k);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const ExactComplex& leading() const;
    ExactComplex coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : ExactComplex{}; }

    void trim();

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const ExactComplex& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

// Coefficient-wise exact derivative.
Poly derive(const Poly& p);

// Exact antiderivative with zero constant term; derive(primitive(q)) == q.
Poly primitive(const Poly& q);

ExactComplex eval(const Poly& p, const ExactComplex& z);

template <class R>
Cx<R> eval(const Poly& p, const Cx<R>& z) {
    Cx<R> acc{};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * z + to_cx<R>(*it);
    return acc;
}

// Euclidean division over the field Q(i); divisor must be nonzero.
struct PolyDivMod {
    Poly quot;
    Poly rem;
};
PolyDivMod divmod(const Poly& a, const Poly& b);

Poly monic(const Poly& p);

// Sylvester resultant via the Euclidean remainder sequence (exact field
// arithmetic keeps this correct; degrees here are small).
ExactComplex resultant(const Poly& f, const Poly& g);

// Normalization: lc^(2 deg - 2) * prod_{i<j} (r_i - r_j)^2, i.e. the plain
// product of squared root differences for monic input. Degree 0 input is
// rejected ("constant polynomial").
ExactComplex discriminant(const Poly& p);

// Canonical text form: "[-1/3, 0, 6, -16/3, 1]" ascending.
std::string to_string(const Poly& p);
Poly parse_poly(const std::string& text);

// ---------------------------------------------------------------------------

template <class R>
struct CxPoly {
    std::vector<Cx<R>> c;

    CxPoly() = default;
    explicit CxPoly(std::vector<Cx<R>> coeffs) : c(std::move(coeffs)) { trim(); }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() == Cx<R>{}) c.pop_back();
    }

    Cx<R> eval(const Cx<R>& z) const {
        Cx<R> acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    CxPoly derive() const {
        CxPoly d;
        for (size_t k = 1; k < c.size(); ++k) d.c.push_back(c[k] * Cx<R>(R(double(k))));
        return d;
    }
};

template <class R>
CxPoly<R> to_cxpoly(const Poly& p) {
    CxPoly<R> out;
    out.c.reserve(p.c.size());
    for (const auto& v : p.c) out.c.push_back(to_cx<R>(v));
    return out;
}

using CPoly64 = CxPoly<double>;

}  // namespace rcs
