#pragma once

// Floating complex arithmetic over a configurable real type. The double
// instantiation is the workhorse; cpp_bin_float_quad provides the 128-bit
// path used by the precision-doubling retries.

#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace rcs {

using Quad = boost::multiprecision::cpp_bin_float_quad;

template <class R>
struct Cx {
    R re{};
    R im{};

    Cx() = default;
    Cx(R r) : re(std::move(r)) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cx& operator+=(const Cx& o) { *this = *this + o; return *this; }
    Cx& operator-=(const Cx& o) { *this = *this - o; return *this; }
    Cx& operator*=(const Cx& o) { *this = *this * o; return *this; }
    Cx& operator/=(const Cx& o) { *this = *this / o; return *this; }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
R cnorm(const Cx<R>& z) {
    return z.re * z.re + z.im * z.im;
}

template <class R>
R cabs(const Cx<R>& z) {
    using std::sqrt;
    return sqrt(cnorm(z));
}

template <class R>
Cx<R> conj(const Cx<R>& z) {
    return {z.re, -z.im};
}

// e^{i*phi}
template <class R>
Cx<R> unit_phase(const R& phi) {
    using std::cos;
    using std::sin;
    return {cos(phi), sin(phi)};
}

template <class R>
R pi_const() {
    using std::atan;
    return atan(R(1)) * 4;
}

// Principal square root (branch cut along the negative real axis).
template <class R>
Cx<R> csqrt(const Cx<R>& z) {
    using std::atan2;
    using std::sqrt;
    R r = cabs(z);
    if (r == R(0)) return {R(0), R(0)};
    R phi = atan2(z.im, z.re) / 2;
    return unit_phase(phi) * Cx<R>(sqrt(r));
}

// Principal cube root; maps 1 to 1, well defined away from the negative
// real axis (all call sites guarantee Re > 0).
template <class R>
Cx<R> ccbrt(const Cx<R>& z) {
    using std::atan2;
    using std::cbrt;
    using std::pow;
    R r = cabs(z);
    if (r == R(0)) return {R(0), R(0)};
    R phi = atan2(z.im, z.re) / 3;
    R mag = pow(r, R(1) / 3);
    return unit_phase(phi) * Cx<R>(mag);
}

template <class R>
bool cfinite(const Cx<R>& z) {
    using std::isfinite;
    return isfinite(z.re) && isfinite(z.im);
}

using C64 = Cx<double>;
using C128 = Cx<Quad>;

inline double to_double(double x) { return x; }
inline double to_double(const Quad& x) { return static_cast<double>(x); }
template <class R>
Cx<double> to_c64(const Cx<R>& z) {
    return {to_double(z.re), to_double(z.im)};
}

}  // namespace rcs
