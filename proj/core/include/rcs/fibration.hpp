#pragma once

// Local trivialization of the derivative fibration around a base point,
// the compactly supported plane shift it is built from, the coordinate
// chart on the arithmetic-progression-free triples, and the Lagrange
// resolvent of a quadruple.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rcs/membership.hpp"
#include "rcs/poly.hpp"

namespace rcs {

// z + (anchors_i - anchors0_i)(1 - |z - anchors0_i|/eps) inside the eps-disk
// around anchors0_i, identity outside every disk. Preconditions:
// |anchors_i - anchors0_i| < eps and pairwise |anchors0_i - anchors0_j| > 3 eps.
C64 plane_shift(const std::vector<C64>& anchors0, const std::vector<C64>& anchors, double eps,
                const C64& z);

// Neighborhood constants of the trivialization around q0, computed by
// direct numerical search over the compact disk K of radius 2 + max|beta_i^0|.
struct TrivializationChart {
    Poly q0;
    Poly P0;                   // primitive(q0)
    std::vector<C64> roots0;   // roots of q0
    std::vector<C64> critvals0;
    double K_radius = 0;
    double delta1 = 0, delta2 = 0, delta3 = 0, delta = 0;
    double eps = 0;
};

TrivializationChart build_trivialization(const Poly& q0);

struct TrivializeResult {
    Poly exact_primitive;  // primitive(q), exact: derive() returns q exactly
    C64 shift;             // the plane-shifted fiber coordinate
    CPoly64 value() const; // exact_primitive - shift, as a floating polynomial
};

// Psi(q, c) = primitive(q) - plane_shift(critvals(q0), critvals(q), eps, c).
// Throws naming the violated bound when q is outside the delta-neighborhood.
TrivializeResult trivialize(const TrivializationChart& chart, const Poly& q, const C64& c);

// Composed chart (z1,z2,z3) -> (X/Y, Y, Z) with X = z2+z3-2z1,
// Y = z1+z3-2z2, Z = z1+z2+z3. Defined exactly on the complement of the
// arrangement; the ratio must avoid H = {1, 0, -1/2, -1, -2} and Y != 0.
struct Qf3Chart {
    ExactComplex ratio, y, sum;
};
Qf3Chart qf3_chart(const ExactComplex& z1, const ExactComplex& z2, const ExactComplex& z3);
std::array<ExactComplex, 3> qf3_chart_inverse(const Qf3Chart& c);

// w1 = (z1+z2)(z3+z4), w2 = (z1+z3)(z2+z4), w3 = (z1+z4)(z2+z3).
std::array<ExactComplex, 3> lagrange_resolvent(const ExactComplex& z1, const ExactComplex& z2,
                                               const ExactComplex& z3, const ExactComplex& z4);

}  // namespace rcs
