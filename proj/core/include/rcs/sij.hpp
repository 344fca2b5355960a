#pragma once

// The excluded hypersurfaces of the restricted base configuration space.
// An ATable holds the two-variable homogeneous polynomials A_0..A_{n-3}
// generated by the recurrence
//
//   A_{n-3}^{(n)}(u,v) = (n-2)u^{n-3} + 2(n-3)u^{n-4}v + ... + (n-2)v^{n-3},
//   A_m^{(n)} = (-n/(n-3)) A_m^{(n-1)} for m <= n-4,  A_0^{(3)} = 1,
//
// and S_ij at base size m expands level n = m+1 against the elementary
// symmetric polynomials of the remaining m-2 variables. Membership of a
// point tuple in QF is decided exactly from these values.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcs/exact.hpp"
#include "rcs/numeric.hpp"

namespace rcs {

// Sparse multivariate polynomial over Q, fixed variable count.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rat> terms;  // exponent vector -> coefficient

    explicit MultiPoly(int nv = 0) : nvars(nv) {}
    static MultiPoly constant(int nv, Rat v);
    static MultiPoly var(int nv, int index);  // 0-based

    void add_term(std::vector<int> expo, const Rat& coef);
    bool is_zero() const { return terms.empty(); }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rat& s, const MultiPoly& a);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }

    ExactComplex eval(const std::vector<ExactComplex>& pt) const;
    template <class R>
    Cx<R> eval(const std::vector<Cx<R>>& pt) const;

    // descending graded lexicographic, variables z1 < z2 < ...
    std::string to_string(const std::string& stem = "z") const;
};

struct ATable {
    int n = 0;                              // level, >= 3
    std::vector<std::vector<Rat>> entries;  // entries[m][j]: coeff of u^{m-j} v^j in A_m

    ExactComplex eval_entry(int m, const ExactComplex& u, const ExactComplex& v) const;
    template <class R>
    Cx<R> eval_entry(int m, const Cx<R>& u, const Cx<R>& v) const;
};

// Exact table per the recurrence; n < 3 is rejected.
ATable a_table(int n);

struct SijPoly {
    int m = 0;  // number of base points (m = n-1)
    int i = 0, j = 0;  // 1-based
    MultiPoly expression;
};

// Expands A-table level n = m+1 against sigma_k of the remaining m-2
// variables. m < 3 is rejected (no S condition exists at base size 2).
SijPoly sij_poly(int m, int i, int j);

// Direct exact evaluation without building the expanded expression.
ExactComplex sij_value(const std::vector<ExactComplex>& pts, int i, int j);
template <class R>
Cx<R> sij_value(const std::vector<Cx<R>>& pts, int i, int j);

struct QfWitness {
    enum class Kind { Hyperplane, Hypersurface } kind;
    int i = 0, j = 0;  // 1-based pair
    ExactComplex value; // the vanishing S value for Hypersurface witnesses
    std::string to_string() const;
};

struct QfVerdict {
    bool in_qf = false;
    std::optional<QfWitness> witness;
};

// True iff all points are pairwise distinct and (for m >= 3) every S_ij
// value is nonzero; exact arithmetic throughout.
QfVerdict in_qf(const std::vector<ExactComplex>& pts);

// Floating variant; reports the minimum |S| and minimum pairwise distance.
struct QfMargins {
    bool distinct = false;
    double min_pair_distance = 0;
    double min_abs_s = 0;  // +inf marker (HUGE_VAL) when m < 3
};
QfMargins qf_margins(const std::vector<C64>& pts);

}  // namespace rcs
