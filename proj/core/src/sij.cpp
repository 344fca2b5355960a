#include "rcs/sij.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rcs {

MultiPoly MultiPoly::constant(int nv, Rat v) {
    MultiPoly p(nv);
    if (v != 0) p.terms[std::vector<int>(nv, 0)] = std::move(v);
    return p;
}

MultiPoly MultiPoly::var(int nv, int index) {
    MultiPoly p(nv);
    std::vector<int> e(nv, 0);
    e[index] = 1;
    p.terms[std::move(e)] = 1;
    return p;
}

void MultiPoly::add_term(std::vector<int> expo, const Rat& coef) {
    if (coef == 0) return;
    auto it = terms.find(expo);
    if (it == terms.end()) {
        terms.emplace(std::move(expo), coef);
    } else {
        it->second += coef;
        if (it->second == 0) terms.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms) out.add_term(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(a.nvars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::vector<int> e = ea;
            for (int k = 0; k < out.nvars; ++k) e[k] += eb[k];
            out.add_term(std::move(e), ca * cb);
        }
    return out;
}

MultiPoly operator*(const Rat& s, const MultiPoly& a) {
    MultiPoly out(a.nvars);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms) out.terms[e] = s * c;
    return out;
}

ExactComplex MultiPoly::eval(const std::vector<ExactComplex>& pt) const {
    ExactComplex acc;
    for (const auto& [e, c] : terms) {
        ExactComplex term{c};
        for (int k = 0; k < nvars; ++k)
            for (int p = 0; p < e[k]; ++p) term *= pt[k];
        acc += term;
    }
    return acc;
}

template <class R>
Cx<R> MultiPoly::eval(const std::vector<Cx<R>>& pt) const {
    Cx<R> acc{};
    for (const auto& [e, c] : terms) {
        Cx<R> term{rat_to<R>(c)};
        for (int k = 0; k < nvars; ++k)
            for (int p = 0; p < e[k]; ++p) term *= pt[k];
        acc += term;
    }
    return acc;
}
template Cx<double> MultiPoly::eval<double>(const std::vector<Cx<double>>&) const;
template Cx<Quad> MultiPoly::eval<Quad>(const std::vector<Cx<Quad>>&) const;

std::string MultiPoly::to_string(const std::string& stem) const {
    if (terms.empty()) return "0";
    // sort descending graded lex (z1 most significant)
    std::vector<const std::pair<const std::vector<int>, Rat>*> order;
    for (const auto& t : terms) order.push_back(&t);
    auto grade = [](const std::vector<int>& e) {
        int g = 0;
        for (int v : e) g += v;
        return g;
    };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int ga = grade(a->first), gb = grade(b->first);
        if (ga != gb) return ga > gb;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        Rat c = t->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat mag = neg ? Rat(-c) : c;
        bool has_vars = grade(t->first) > 0;
        if (mag != 1 || !has_vars) os << rat_to_string(mag);
        bool star = mag != 1 || !has_vars;
        for (int k = 0; k < nvars; ++k) {
            if (t->first[k] == 0) continue;
            if (star) os << "*";
            star = true;
            os << stem << (k + 1);
            if (t->first[k] > 1) os << "^" << t->first[k];
        }
    }
    return os.str();
}

ExactComplex ATable::eval_entry(int m, const ExactComplex& u, const ExactComplex& v) const {
    ExactComplex acc;
    const auto& row = entries[m];
    for (int j = 0; j <= m; ++j) {
        ExactComplex term{row[j]};
        for (int p = 0; p < m - j; ++p) term *= u;
        for (int p = 0; p < j; ++p) term *= v;
        acc += term;
    }
    return acc;
}

template <class R>
Cx<R> ATable::eval_entry(int m, const Cx<R>& u, const Cx<R>& v) const {
    Cx<R> acc{};
    const auto& row = entries[m];
    for (int j = 0; j <= m; ++j) {
        Cx<R> term{rat_to<R>(row[j])};
        for (int p = 0; p < m - j; ++p) term *= u;
        for (int p = 0; p < j; ++p) term *= v;
        acc += term;
    }
    return acc;
}
template Cx<double> ATable::eval_entry<double>(int, const Cx<double>&, const Cx<double>&) const;
template Cx<Quad> ATable::eval_entry<Quad>(int, const Cx<Quad>&, const Cx<Quad>&) const;

ATable a_table(int n) {
    if (n < 3) throw std::invalid_argument("a_table: n must be >= 3");
    ATable t;
    t.n = 3;
    t.entries = {{Rat(1)}};  // A_0^{(3)} = 1
    for (int lvl = 4; lvl <= n; ++lvl) {
        ATable next;
        next.n = lvl;
        next.entries.resize(lvl - 2);
        Rat scale = Rat(-lvl) / Rat(lvl - 3);
        for (int m = 0; m <= lvl - 4; ++m) {
            next.entries[m].resize(m + 1);
            for (int j = 0; j <= m; ++j) next.entries[m][j] = scale * t.entries[m][j];
        }
        int top = lvl - 3;
        next.entries[top].resize(top + 1);
        for (int j = 0; j <= top; ++j)
            next.entries[top][j] = Rat((j + 1) * (lvl - 2 - j));
        t = std::move(next);
    }
    return t;
}

namespace {

// the tables are tiny but rebuilt hot in the exact membership loops
const ATable& a_table_cached(int n) {
    static std::mutex mu;
    static std::map<int, ATable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, a_table(n)).first;
    return it->second;
}

}  // namespace

SijPoly sij_poly(int m, int i, int j) {
    if (m < 3) throw std::invalid_argument("sij_poly: base size must be >= 3");
    if (i < 1 || j < 1 || i > m || j > m || i == j)
        throw std::invalid_argument("sij_poly: need distinct indices in 1..m");
    ATable t = a_table(m + 1);
    int top = m - 2;
    MultiPoly zi = MultiPoly::var(m, i - 1);
    MultiPoly zj = MultiPoly::var(m, j - 1);

    auto entry_poly = [&](int deg) {
        MultiPoly acc(m);
        for (int k = 0; k <= deg; ++k) {
            MultiPoly term = MultiPoly::constant(m, t.entries[deg][k]);
            for (int p = 0; p < deg - k; ++p) term = term * zi;
            for (int p = 0; p < k; ++p) term = term * zj;
            acc = acc + term;
        }
        return acc;
    };

    std::vector<int> rest;
    for (int k = 1; k <= m; ++k)
        if (k != i && k != j) rest.push_back(k - 1);

    // sigma_k of the remaining variables via the generating product
    std::vector<MultiPoly> sigma(rest.size() + 1, MultiPoly(m));
    sigma[0] = MultiPoly::constant(m, 1);
    for (size_t r = 0; r < rest.size(); ++r) {
        MultiPoly zr = MultiPoly::var(m, rest[r]);
        for (size_t k = std::min(r + 1, sigma.size() - 1); k >= 1; --k)
            sigma[k] = sigma[k] + zr * sigma[k - 1];
    }

    MultiPoly expr = entry_poly(top);
    for (int k = 1; k <= top; ++k) expr = expr + sigma[k] * entry_poly(top - k);

    return SijPoly{m, i, j, std::move(expr)};
}

namespace {

inline ExactComplex num_from_rat(const Rat& c, const ExactComplex*) { return ExactComplex{c}; }
template <class R>
inline Cx<R> num_from_rat(const Rat& c, const Cx<R>*) {
    return Cx<R>{rat_to<R>(c)};
}

template <class CNum, class Pt>
CNum sij_value_impl(const ATable& t, const std::vector<Pt>& pts, int i, int j) {
    int m = static_cast<int>(pts.size());
    int top = m - 2;
    const Pt& u = pts[i - 1];
    const Pt& v = pts[j - 1];
    std::vector<Pt> rest;
    for (int k = 1; k <= m; ++k)
        if (k != i && k != j) rest.push_back(pts[k - 1]);

    // power tables make the two-variable entries linear to evaluate
    std::vector<Pt> up(top + 1, Pt{1}), vp(top + 1, Pt{1});
    for (int k = 1; k <= top; ++k) {
        up[k] = up[k - 1] * u;
        vp[k] = vp[k - 1] * v;
    }
    auto entry = [&](int deg) {
        CNum acc{};
        for (int jj = 0; jj <= deg; ++jj)
            acc += num_from_rat(t.entries[deg][jj], static_cast<const CNum*>(nullptr)) *
                   up[deg - jj] * vp[jj];
        return acc;
    };

    CNum acc = entry(top);
    // sigma_k of rest, incremental
    std::vector<CNum> e(top + 1);
    e[0] = CNum{1};
    for (size_t r = 0; r < rest.size(); ++r)
        for (size_t k = std::min(r + 1, e.size() - 1); k >= 1; --k)
            e[k] = e[k] + rest[r] * e[k - 1];
    for (int k = 1; k <= top; ++k) acc += e[k] * entry(top - k);
    return acc;
}

}  // namespace

ExactComplex sij_value(const std::vector<ExactComplex>& pts, int i, int j) {
    int m = static_cast<int>(pts.size());
    if (m < 3) throw std::invalid_argument("sij_value: base size must be >= 3");
    return sij_value_impl<ExactComplex>(a_table_cached(m + 1), pts, i, j);
}

template <class R>
Cx<R> sij_value(const std::vector<Cx<R>>& pts, int i, int j) {
    int m = static_cast<int>(pts.size());
    if (m < 3) throw std::invalid_argument("sij_value: base size must be >= 3");
    return sij_value_impl<Cx<R>>(a_table_cached(m + 1), pts, i, j);
}
template Cx<double> sij_value<double>(const std::vector<Cx<double>>&, int, int);
template Cx<Quad> sij_value<Quad>(const std::vector<Cx<Quad>>&, int, int);

std::string QfWitness::to_string() const {
    std::string stem = kind == Kind::Hyperplane ? "H" : "S";
    return stem + "_{" + std::to_string(i) + std::to_string(j) + "}";
}

QfVerdict in_qf(const std::vector<ExactComplex>& pts) {
    int m = static_cast<int>(pts.size());
    QfVerdict v;
    const ATable* table = m >= 3 ? &a_table_cached(m + 1) : nullptr;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            if (pts[i - 1] == pts[j - 1]) {
                v.witness = QfWitness{QfWitness::Kind::Hyperplane, i, j, ExactComplex{}};
                return v;
            }
            if (m >= 3) {
                ExactComplex s = sij_value_impl<ExactComplex>(*table, pts, i, j);
                if (s.is_zero()) {
                    v.witness = QfWitness{QfWitness::Kind::Hypersurface, i, j, s};
                    return v;
                }
            }
        }
    v.in_qf = true;
    return v;
}

QfMargins qf_margins(const std::vector<C64>& pts) {
    int m = static_cast<int>(pts.size());
    QfMargins out;
    out.min_pair_distance = HUGE_VAL;
    out.min_abs_s = HUGE_VAL;
    const ATable* table = m >= 3 ? &a_table_cached(m + 1) : nullptr;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            out.min_pair_distance =
                std::min(out.min_pair_distance, cabs(pts[i - 1] - pts[j - 1]));
            if (m >= 3)
                out.min_abs_s =
                    std::min(out.min_abs_s, cabs(sij_value_impl<C64>(*table, pts, i, j)));
        }
    out.distinct = out.min_pair_distance > 0;
    return out;
}

}  // namespace rcs
