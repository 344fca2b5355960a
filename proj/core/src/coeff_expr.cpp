#include "rcs/coeff_expr.hpp"

#include <sstream>
#include <stdexcept>

namespace rcs {

namespace {

Expr make(CoeffExpr e) { return std::make_shared<const CoeffExpr>(std::move(e)); }

bool is_const(const Expr& e, const ExactComplex** out = nullptr) {
    if (e->kind != CoeffExpr::Kind::Const) return false;
    if (out) *out = &e->value;
    return true;
}

}  // namespace

Expr e_const(ExactComplex v) {
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::Const;
    e.value = std::move(v);
    return make(std::move(e));
}

Expr e_rat(Rat v) { return e_const(ExactComplex{std::move(v)}); }
Expr e_int(long v) { return e_rat(Rat(v)); }
Expr e_i() { return e_const(ExactComplex{Rat(0), Rat(1)}); }

Expr e_t() {
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::T;
    return make(std::move(e));
}

Expr e_exppi(Rat q, Rat r) {
    // normalize the constant phase into [0, 2): subtract 2 * floor(r / 2)
    Rat two(2);
    Rat half = r / two;
    Int whole = numerator(half) / denominator(half);
    if (half < 0 && Rat(whole) != half) whole -= 1;  // floor for negatives
    r -= two * Rat(whole);
    if (q == 0) {
        // constant phase; exact on quarter turns
        Rat four_r = 4 * r;
        if (denominator(four_r) == 1) {
            long k = static_cast<long>(numerator(four_r) % 8);
            switch (k) {
                case 0: return e_int(1);
                case 2: return e_i();
                case 4: return e_int(-1);
                case 6: return e_const(ExactComplex{Rat(0), Rat(-1)});
                default: break;
            }
        }
    }
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::ExpPi;
    e.q = std::move(q);
    e.r = std::move(r);
    return make(std::move(e));
}

Expr e_conj(Expr k) {
    const ExactComplex* v;
    if (is_const(k, &v)) return e_const(conj(*v));
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::Conj;
    e.kids = {std::move(k)};
    return make(std::move(e));
}

Expr e_sum(std::vector<Expr> terms) {
    std::vector<Expr> flat;
    ExactComplex c;
    for (auto& t : terms) {
        const ExactComplex* v;
        if (is_const(t, &v)) {
            c += *v;
        } else if (t->kind == CoeffExpr::Kind::Sum) {
            for (const auto& k : t->kids) {
                if (is_const(k, &v))
                    c += *v;
                else
                    flat.push_back(k);
            }
        } else {
            flat.push_back(std::move(t));
        }
    }
    if (!c.is_zero() || flat.empty()) flat.push_back(e_const(c));
    if (flat.size() == 1) return flat[0];
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::Sum;
    e.kids = std::move(flat);
    return make(std::move(e));
}

Expr e_add(Expr a, Expr b) { return e_sum({std::move(a), std::move(b)}); }
Expr e_sub(Expr a, Expr b) { return e_add(std::move(a), e_neg(std::move(b))); }
Expr e_neg(Expr a) { return e_mul(e_int(-1), std::move(a)); }

Expr e_prod(std::vector<Expr> factors) {
    std::vector<Expr> flat;
    ExactComplex c{Rat(1)};
    for (auto& f : factors) {
        const ExactComplex* v;
        if (is_const(f, &v)) {
            c *= *v;
        } else if (f->kind == CoeffExpr::Kind::Product) {
            for (const auto& k : f->kids) {
                if (is_const(k, &v))
                    c *= *v;
                else
                    flat.push_back(k);
            }
        } else {
            flat.push_back(std::move(f));
        }
    }
    if (c.is_zero()) return e_int(0);
    if (!(c == ExactComplex{Rat(1)})) flat.insert(flat.begin(), e_const(c));
    if (flat.empty()) return e_int(1);
    if (flat.size() == 1) return flat[0];
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::Product;
    e.kids = std::move(flat);
    return make(std::move(e));
}

Expr e_mul(Expr a, Expr b) { return e_prod({std::move(a), std::move(b)}); }

Expr e_pow(Expr base, int k) {
    if (k == 0) return e_int(1);
    if (k == 1) return base;
    if (k < 0) throw std::invalid_argument("e_pow: negative exponent");
    const ExactComplex* v;
    if (is_const(base, &v)) {
        ExactComplex acc{Rat(1)};
        for (int j = 0; j < k; ++j) acc *= *v;
        return e_const(acc);
    }
    if (base->kind == CoeffExpr::Kind::ExpPi) return e_exppi(base->q * k, base->r * k);
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::IntPower;
    e.kids = {std::move(base)};
    e.power = k;
    return make(std::move(e));
}

Expr e_cbrt_branch(Expr rho) {
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::CbrtBranch;
    e.kids = {std::move(rho)};
    return make(std::move(e));
}

Expr e_ratfrac(Expr num, Expr den) {
    CoeffExpr e;
    e.kind = CoeffExpr::Kind::RatFrac;
    e.kids = {std::move(num), std::move(den)};
    return make(std::move(e));
}

Expr subst_affine(const Expr& e, const Rat& u, const Rat& v) {
    switch (e->kind) {
        case CoeffExpr::Kind::Const:
            return e;
        case CoeffExpr::Kind::T:
            if (u == 1 && v == 0) return e;
            return e_add(e_mul(e_rat(u), e_t()), e_rat(v));
        case CoeffExpr::Kind::ExpPi:
            return e_exppi(e->q * u, e->q * v + e->r);
        case CoeffExpr::Kind::Conj:
            return e_conj(subst_affine(e->kids[0], u, v));
        case CoeffExpr::Kind::Sum: {
            std::vector<Expr> kids;
            for (const auto& k : e->kids) kids.push_back(subst_affine(k, u, v));
            return e_sum(std::move(kids));
        }
        case CoeffExpr::Kind::Product: {
            std::vector<Expr> kids;
            for (const auto& k : e->kids) kids.push_back(subst_affine(k, u, v));
            return e_prod(std::move(kids));
        }
        case CoeffExpr::Kind::IntPower:
            return e_pow(subst_affine(e->kids[0], u, v), e->power);
        case CoeffExpr::Kind::CbrtBranch:
            return e_cbrt_branch(subst_affine(e->kids[0], u, v));
        case CoeffExpr::Kind::RatFrac:
            return e_ratfrac(subst_affine(e->kids[0], u, v), subst_affine(e->kids[1], u, v));
    }
    throw std::logic_error("subst_affine: unreachable");
}

template <class R>
Cx<R> eval_expr(const Expr& e, const R& t) {
    switch (e->kind) {
        case CoeffExpr::Kind::Const:
            return to_cx<R>(e->value);
        case CoeffExpr::Kind::T:
            return Cx<R>{t};
        case CoeffExpr::Kind::ExpPi:
            return unit_phase(pi_const<R>() * (rat_to<R>(e->q) * t + rat_to<R>(e->r)));
        case CoeffExpr::Kind::Conj:
            return conj(eval_expr(e->kids[0], t));
        case CoeffExpr::Kind::Sum: {
            Cx<R> acc{};
            for (const auto& k : e->kids) acc += eval_expr(k, t);
            return acc;
        }
        case CoeffExpr::Kind::Product: {
            Cx<R> acc{R(1)};
            for (const auto& k : e->kids) acc *= eval_expr(k, t);
            return acc;
        }
        case CoeffExpr::Kind::IntPower: {
            Cx<R> base = eval_expr(e->kids[0], t);
            Cx<R> acc{R(1)};
            for (int j = 0; j < e->power; ++j) acc *= base;
            return acc;
        }
        case CoeffExpr::Kind::CbrtBranch: {
            Cx<R> one_plus = Cx<R>{R(1)} + eval_expr(e->kids[0], t);
            if (!(one_plus.re > R(0)))
                throw std::domain_error("CbrtBranch: Re(1 + argument) > 0 violated");
            return ccbrt(one_plus);
        }
        case CoeffExpr::Kind::RatFrac: {
            Cx<R> den = eval_expr(e->kids[1], t);
            if (den == Cx<R>{}) throw std::domain_error("RatFrac: denominator vanished");
            return eval_expr(e->kids[0], t) / den;
        }
    }
    throw std::logic_error("eval_expr: unreachable");
}
template Cx<double> eval_expr<double>(const Expr&, const double&);
template Cx<Quad> eval_expr<Quad>(const Expr&, const Quad&);

std::optional<ExactComplex> eval_expr_exact(const Expr& e, const Rat& t) {
    switch (e->kind) {
        case CoeffExpr::Kind::Const:
            return e->value;
        case CoeffExpr::Kind::T:
            return ExactComplex{t};
        case CoeffExpr::Kind::ExpPi: {
            Rat arg = e->q * t + e->r;  // phase in units of pi
            Rat four = 4 * arg;
            if (denominator(four) != 1) return std::nullopt;
            Int k = numerator(four) % 8;
            if (k < 0) k += 8;
            switch (static_cast<long>(k)) {
                case 0: return ExactComplex{Rat(1)};
                case 2: return ExactComplex{Rat(0), Rat(1)};
                case 4: return ExactComplex{Rat(-1)};
                case 6: return ExactComplex{Rat(0), Rat(-1)};
                default: return std::nullopt;
            }
        }
        case CoeffExpr::Kind::Conj: {
            auto k = eval_expr_exact(e->kids[0], t);
            if (!k) return std::nullopt;
            return conj(*k);
        }
        case CoeffExpr::Kind::Sum: {
            ExactComplex acc;
            for (const auto& kid : e->kids) {
                auto k = eval_expr_exact(kid, t);
                if (!k) return std::nullopt;
                acc += *k;
            }
            return acc;
        }
        case CoeffExpr::Kind::Product: {
            ExactComplex acc{Rat(1)};
            for (const auto& kid : e->kids) {
                auto k = eval_expr_exact(kid, t);
                if (!k) return std::nullopt;
                acc *= *k;
            }
            return acc;
        }
        case CoeffExpr::Kind::IntPower: {
            auto k = eval_expr_exact(e->kids[0], t);
            if (!k) return std::nullopt;
            ExactComplex acc{Rat(1)};
            for (int j = 0; j < e->power; ++j) acc *= *k;
            return acc;
        }
        case CoeffExpr::Kind::CbrtBranch: {
            auto k = eval_expr_exact(e->kids[0], t);
            if (k && k->is_zero()) return ExactComplex{Rat(1)};
            return std::nullopt;
        }
        case CoeffExpr::Kind::RatFrac: {
            auto num = eval_expr_exact(e->kids[0], t);
            auto den = eval_expr_exact(e->kids[1], t);
            if (!num || !den || den->is_zero()) return std::nullopt;
            return *num / *den;
        }
    }
    return std::nullopt;
}

namespace {

// precedence: 0 sum, 1 product, 2 power/atom
void render(const Expr& e, std::ostringstream& os, int context) {
    switch (e->kind) {
        case CoeffExpr::Kind::Const: {
            const ExactComplex& v = e->value;
            bool atomic = v.im == 0 && v.re >= 0;
            if (atomic && context <= 2) {
                os << rat_to_string(v.re);
            } else {
                os << '(' << to_string(v) << ')';
            }
            return;
        }
        case CoeffExpr::Kind::T:
            os << 't';
            return;
        case CoeffExpr::Kind::ExpPi: {
            os << "E(";
            bool wrote = false;
            if (e->q != 0) {
                if (e->q == -1)
                    os << '-';
                else if (e->q != 1)
                    os << rat_to_string(e->q) << '*';
                os << 't';
                wrote = true;
            }
            if (e->r != 0 || !wrote) {
                if (wrote && e->r >= 0) os << '+';
                os << rat_to_string(e->r);
            }
            os << ')';
            return;
        }
        case CoeffExpr::Kind::Conj:
            os << "conj(";
            render(e->kids[0], os, 0);
            os << ')';
            return;
        case CoeffExpr::Kind::Sum: {
            if (context > 0) os << '(';
            for (size_t k = 0; k < e->kids.size(); ++k) {
                if (k) os << " + ";
                render(e->kids[k], os, 0);
            }
            if (context > 0) os << ')';
            return;
        }
        case CoeffExpr::Kind::Product: {
            if (context > 1) os << '(';
            for (size_t k = 0; k < e->kids.size(); ++k) {
                if (k) os << '*';
                render(e->kids[k], os, 1);
            }
            if (context > 1) os << ')';
            return;
        }
        case CoeffExpr::Kind::IntPower:
            render(e->kids[0], os, 2);
            os << '^' << e->power;
            return;
        case CoeffExpr::Kind::CbrtBranch:
            os << "cbrt1p(";
            render(e->kids[0], os, 0);
            os << ')';
            return;
        case CoeffExpr::Kind::RatFrac:
            os << "ratfrac(";
            render(e->kids[0], os, 0);
            os << ", ";
            render(e->kids[1], os, 0);
            os << ')';
            return;
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    render(e, os, 0);
    return os.str();
}

std::string to_string_factor(const Expr& e) {
    std::ostringstream os;
    render(e, os, 1);
    return os.str();
}

bool expr_is_zero(const Expr& e) {
    return e->kind == CoeffExpr::Kind::Const && e->value.is_zero();
}

}  // namespace rcs
