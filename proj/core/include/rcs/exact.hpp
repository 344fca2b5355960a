#pragma once

// Exact arithmetic layer: arbitrary-precision rationals and Gaussian
// rationals (complex numbers with rational real/imaginary parts). All
// membership identities downstream are polynomial identities over this
// field, so they are decided with zero tolerance.

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rcs/numeric.hpp"

namespace rcs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double rat_to_double(const Rat& r) { return static_cast<double>(r); }

template <class R>
R rat_to(const Rat& r) {
    return R(numerator(r).template convert_to<R>() / denominator(r).template convert_to<R>());
}
template <>
inline double rat_to<double>(const Rat& r) {
    return rat_to_double(r);
}

std::string rat_to_string(const Rat& r);

// Exact |r|^(1/2) when it exists in Q.
std::optional<Rat> rat_exact_sqrt(const Rat& r);

struct ExactComplex {
    Rat re{};
    Rat im{};

    ExactComplex() = default;
    ExactComplex(Rat r) : re(std::move(r)) {}
    ExactComplex(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        if (a.im == 0 && b.im == 0) return {a.re * b.re, Rat(0)};  // hot: real values
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        Rat d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("ExactComplex: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    ExactComplex& operator+=(const ExactComplex& o) { *this = *this + o; return *this; }
    ExactComplex& operator-=(const ExactComplex& o) { *this = *this - o; return *this; }
    ExactComplex& operator*=(const ExactComplex& o) { *this = *this * o; return *this; }
    ExactComplex& operator/=(const ExactComplex& o) { *this = *this / o; return *this; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }
inline Rat exact_norm(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }

// Exact |z| when the norm is a rational square.
std::optional<Rat> exact_abs(const ExactComplex& z);

template <class R>
Cx<R> to_cx(const ExactComplex& z) {
    return {rat_to<R>(z.re), rat_to<R>(z.im)};
}
inline C64 to_c64(const ExactComplex& z) { return to_cx<double>(z); }

// Canonical text form "re+im*i" with exact rationals, e.g. "-16/3",
// "1/2+3/4*i", "-i". parse_exact_complex accepts the same grammar.
std::string to_string(const ExactComplex& z);
ExactComplex parse_exact_complex(const std::string& text);
Rat parse_rat(const std::string& text);

// Nearest rational with bounded denominator (continued fractions); used to
// recognize exactly-representable roots of exact polynomials.
Rat rational_reconstruct(double x, const Int& max_den);

}  // namespace rcs
