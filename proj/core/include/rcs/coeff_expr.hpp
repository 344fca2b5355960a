#pragma once

// Coefficient expressions in the loop parameter t: rational-complex
// constants, t itself, E(q t + r) = e^{i pi (q t + r)}, conjugation, sums,
// products, integer powers, plus two nodes that exist only for programmatic
// transcriptions (never produced by the text grammar): CbrtBranch(rho) for
// the branch of (1 + rho)^(1/3) fixed by 1 -> 1, and RatFrac for a fixed
// rational-function form with nonvanishing denominator.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcs/exact.hpp"
#include "rcs/numeric.hpp"

namespace rcs {

struct CoeffExpr;
using Expr = std::shared_ptr<const CoeffExpr>;

struct CoeffExpr {
    enum class Kind { Const, T, ExpPi, Conj, Sum, Product, IntPower, CbrtBranch, RatFrac };
    Kind kind = Kind::Const;
    ExactComplex value;       // Const
    Rat q, r;                 // ExpPi
    std::vector<Expr> kids;   // Sum/Product: n-ary; Conj/CbrtBranch/IntPower: 1; RatFrac: 2
    int power = 0;            // IntPower exponent, >= 2
};

Expr e_const(ExactComplex v);
Expr e_rat(Rat v);
Expr e_int(long v);
Expr e_i();
Expr e_t();
Expr e_exppi(Rat q, Rat r);  // e^{i pi (q t + r)}
Expr e_conj(Expr k);
Expr e_sum(std::vector<Expr> terms);
Expr e_add(Expr a, Expr b);
Expr e_sub(Expr a, Expr b);
Expr e_neg(Expr a);
Expr e_prod(std::vector<Expr> factors);
Expr e_mul(Expr a, Expr b);
Expr e_pow(Expr base, int k);
Expr e_cbrt_branch(Expr rho);
Expr e_ratfrac(Expr num, Expr den);

// t -> u*t + v
Expr subst_affine(const Expr& e, const Rat& u, const Rat& v);

template <class R>
Cx<R> eval_expr(const Expr& e, const R& t);

// exact value at rational t when every phase lands on a quarter turn
std::optional<ExactComplex> eval_expr_exact(const Expr& e, const Rat& t);

// precedence-aware rendering; parseable for grammar-expressible nodes
std::string to_string(const Expr& e);
// rendered as a product factor (sums get parentheses)
std::string to_string_factor(const Expr& e);

bool expr_is_zero(const Expr& e);

}  // namespace rcs
