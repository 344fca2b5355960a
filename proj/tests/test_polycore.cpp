#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rcs/poly.hpp"
#include "rcs/rng.hpp"
#include "rcs/roots.hpp"

using namespace rcs;

namespace {

Poly parse(const std::string& s) { return parse_poly(s); }

Poly random_poly(Rng& rng, int deg, bool monic) {
    std::vector<ExactComplex> c;
    for (int k = 0; k < deg; ++k) c.push_back(rng.complex_rational());
    c.push_back(monic ? ExactComplex{Rat(1)} : rng.complex_rational() + ExactComplex{Rat(1)});
    return Poly(std::move(c));
}

}  // namespace

TEST_CASE("derive: the reference cubic and quartic") {
    // X^4 - 16/3 X^3 + 6 X^2 - 1/3  ->  4X^3 - 16X^2 + 12X
    CHECK(derive(parse("[-1/3, 0, 6, -16/3, 1]")) == parse("[0, 12, -16, 4]"));
    // X^3 - 3X -> 3X^2 - 3
    CHECK(derive(parse("[0, -3, 0, 1]")) == parse("[-3, 0, 3]"));
    CHECK(derive(Poly::constant(ExactComplex{Rat(7)})).is_zero());
}

TEST_CASE("primitive: exact antiderivative") {
    CHECK(primitive(parse("[-3, 0, 3]")) == parse("[0, -3, 0, 1]"));
    CHECK(primitive(Poly::zero()).is_zero());
    // term-by-term: 4X^3 - 16X^2 + 12X -> X^4 - 16/3 X^3 + 6 X^2
    CHECK(primitive(parse("[0, 12, -16, 4]")) == parse("[0, 0, 6, -16/3, 1]"));
}

TEST_CASE("derive(primitive(q)) == q for random rational q") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Poly q = random_poly(rng, static_cast<int>(rng.range(0, 10)), false);
        CHECK(derive(primitive(q)) == q);
    }
}

TEST_CASE("eval examples") {
    CHECK(eval(parse("[0, -3, 0, 1]"), ExactComplex{Rat(1)}) == ExactComplex{Rat(-2)});
    CHECK(eval(parse("[5, 1]"), ExactComplex{Rat(0)}) == ExactComplex{Rat(5)});
    // (X^4 - 16/3 X^3 + 6 X^2)(3) = 81 - 144 + 54 = -9
    CHECK(eval(parse("[0, 0, 6, -16/3, 1]"), ExactComplex{Rat(3)}) == ExactComplex{Rat(-9)});
}

TEST_CASE("discriminant: anchors") {
    // X^3 - 3X: depressed-cubic formula -4p^3 - 27q^2 with p = -3, q = 0 gives 108;
    // oracle: product of squared differences of {-sqrt3, 0, sqrt3} = 3*12*3
    CHECK(discriminant(parse("[0, -3, 0, 1]")) == ExactComplex{Rat(108)});
    CHECK(discriminant(parse("[-1, 0, 1]")) == ExactComplex{Rat(4)});
    // (X-1)^2
    CHECK(discriminant(parse("[1, -2, 1]")) == ExactComplex{Rat(0)});
    CHECK_THROWS(discriminant(Poly::constant(ExactComplex{Rat(3)})));
}

TEST_CASE("discriminant: cubic formula, exact, random p q") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        ExactComplex p = rng.complex_rational(), q = rng.complex_rational();
        Poly cubic({q, p, ExactComplex{}, ExactComplex{Rat(1)}});
        ExactComplex expected =
            ExactComplex{Rat(-4)} * p * p * p - ExactComplex{Rat(27)} * q * q;
        CHECK(discriminant(cubic) == expected);
    }
}

TEST_CASE("discriminant vs oracle on random monic polynomials") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = static_cast<int>(rng.range(2, 8));
        Poly p = random_poly(rng, deg, true);
        double disc = cabs(to_c64(discriminant(p)));
        double oracle = cabs(discriminant_oracle(roots(p)));
        CHECK(std::abs(disc - oracle) / std::max(1.0, disc) < 1e-9);
    }
}

TEST_CASE("roots: the reference configurations") {
    std::vector<C64> r = roots(parse("[0, -3, 0, 1]"));
    std::sort(r.begin(), r.end(), [](C64 a, C64 b) { return a.re < b.re; });
    double s3 = std::sqrt(3.0);
    CHECK(cabs(r[0] - C64{-s3}) < 1e-12);
    CHECK(cabs(r[1]) < 1e-12);
    CHECK(cabs(r[2] - C64{s3}) < 1e-12);

    // base point of the quartic level: {(2-sqrt7)/3, 2-sqrt3, (2+sqrt7)/3, 2+sqrt3}
    std::vector<C64> q = roots(parse("[-1/3, 0, 6, -16/3, 1]"));
    std::sort(q.begin(), q.end(), [](C64 a, C64 b) { return a.re < b.re; });
    double s7 = std::sqrt(7.0);
    CHECK(cabs(q[0] - C64{(2 - s7) / 3}) < 1e-10);
    CHECK(cabs(q[1] - C64{2 - s3}) < 1e-10);
    CHECK(cabs(q[2] - C64{(2 + s7) / 3}) < 1e-10);
    CHECK(cabs(q[3] - C64{2 + s3}) < 1e-10);

    std::vector<C64> two = roots(parse("[-1, 0, 1]"));
    CHECK(cabs(discriminant_oracle(two) - C64{4}) < 1e-12);
}

TEST_CASE("roots: residuals below scaled tolerance, deterministic start") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int deg = static_cast<int>(rng.range(1, 8));
        Poly p = random_poly(rng, deg, true);
        std::vector<C64> r1 = roots(p);
        std::vector<C64> r2 = roots(p);
        REQUIRE(r1.size() == size_t(deg));
        for (size_t k = 0; k < r1.size(); ++k) CHECK(r1[k] == r2[k]);  // same start, same result
        for (const auto& z : r1) CHECK(cabs(eval(p, z)) < 1e-8);
    }
}

TEST_CASE("roots: stability under precision doubling") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int deg = static_cast<int>(rng.range(2, 6));
        Poly p = random_poly(rng, deg, true);
        std::vector<C64> rd = roots(p);
        if (min_separation(rd) <= 1e-6) continue;
        auto rq = aberth_roots<Quad>(to_cxpoly<Quad>(p));
        // match and compare
        for (const auto& zq : rq) {
            double best = 1e9;
            C64 z64 = to_c64(zq);
            for (const auto& zd : rd) best = std::min(best, cabs(zd - z64));
            CHECK(best < 1e-10);
        }
    }
}

TEST_CASE("roots: non-convergence carries best iterate") {
    // (X - 1)^6 converges slowly; with a tiny iteration budget the error
    // path reports the best iterate
    Poly p = parse("[1, -6, 15, -20, 15, -6, 1]");
    RootOptions<double> opts;
    opts.max_iterations = 1;
    opts.residual_factor = 1e-6;
    try {
        aberth_roots<double>(to_cxpoly<double>(p), opts);
        CHECK(false);
    } catch (const RootsError& e) {
        CHECK(e.best.size() == 6);
    }
}

TEST_CASE("min_separation") {
    CHECK(min_separation(std::vector<C64>{{-1, 0}, {1, 0}}) == doctest::Approx(2));
    double s3 = std::sqrt(3.0);
    CHECK(min_separation(std::vector<C64>{{-s3, 0}, {0, 0}, {s3, 0}}) == doctest::Approx(s3));
    CHECK(min_separation(std::vector<C64>{{0, 0}, {1, 0}, {3, 0}}) == doctest::Approx(1));
    CHECK_THROWS(min_separation(std::vector<C64>{{1, 0}}));
}

TEST_CASE("discriminant_oracle small cases") {
    CHECK(cabs(discriminant_oracle(std::vector<C64>{{-1, 0}, {1, 0}}) - C64{4}) < 1e-15);
    CHECK(discriminant_oracle(std::vector<C64>{{5, 2}}) == C64{1});  // empty product
    double s3 = std::sqrt(3.0);
    CHECK(cabs(discriminant_oracle(std::vector<C64>{{-s3, 0}, {0, 0}, {s3, 0}}) - C64{108}) <
          1e-12);
}

TEST_CASE("elem_symmetric") {
    std::vector<ExactComplex> pts{ExactComplex{Rat(0)}, ExactComplex{Rat(1)}, ExactComplex{Rat(3)}};
    CHECK(elem_symmetric(pts, 0) == ExactComplex{Rat(1)});
    CHECK(elem_symmetric(pts, 1) == ExactComplex{Rat(4)});
    CHECK(elem_symmetric(pts, 2) == ExactComplex{Rat(3)});
    CHECK(elem_symmetric(pts, 3) == ExactComplex{Rat(0)});
    CHECK_THROWS(elem_symmetric(pts, 4));
}

TEST_CASE("resultant: product formula against numeric roots") {
    Rng rng(555);
    for (int trial = 0; trial < 150; ++trial) {
        int df = 1 + static_cast<int>(rng.below(5));
        int dg = 1 + static_cast<int>(rng.below(5));
        std::vector<ExactComplex> cf, cg;
        for (int k = 0; k <= df; ++k) cf.push_back(rng.complex_rational(4, 3));
        for (int k = 0; k <= dg; ++k) cg.push_back(rng.complex_rational(4, 3));
        Poly f(cf), g(cg);
        if (f.degree() < 1 || g.degree() < 1) continue;
        // res(f, g) = lc(f)^deg(g) prod_i g(root_i(f))
        C64 expect{1};
        for (int k = 0; k < g.degree(); ++k) expect *= to_c64(f.leading());
        for (const auto& z : roots(f)) expect *= eval(g, z);
        double err = cabs(to_c64(resultant(f, g)) - expect) / std::max(1.0, cabs(expect));
        CHECK(err < 1e-9);
    }
}

TEST_CASE("polynomial text round trip") {
    std::string text = "[-1/3, 0, 6, -16/3, 1]";
    CHECK(to_string(parse(text)) == text);
    Poly with_i = parse("[1/2+3/4*i, -i, 1]");
    CHECK(parse(to_string(with_i)) == with_i);
}
