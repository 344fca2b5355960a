#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rcs/membership.hpp"
#include "rcs/realfib.hpp"
#include "rcs/rng.hpp"
#include "rcs/roots.hpp"

using namespace rcs;

namespace {

bool all_real_distinct(const RPoly& p, int expected, double gap = 1e-9) {
    try {
        std::vector<double> r = real_roots_sorted(p);
        if (static_cast<int>(r.size()) != expected) return false;
        for (size_t k = 0; k + 1 < r.size(); ++k)
            if (r[k + 1] - r[k] < gap) return false;
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

RPoly random_real_rooted(Rng& rng, int deg) {
    std::vector<double> roots;
    while (true) {
        roots.clear();
        for (int k = 0; k < deg; ++k) roots.push_back(rng.uniform(-3, 3));
        std::sort(roots.begin(), roots.end());
        bool ok = true;
        for (int k = 0; k + 1 < deg; ++k)
            if (roots[k + 1] - roots[k] < 0.05) ok = false;
        if (ok) break;
    }
    return RPoly::from_roots(deg + 1, roots);
}

}  // namespace

TEST_CASE("minmax anchors") {
    SUBCASE("3(X^2 - 1): (m, M) = (-2, 2), exactly") {
        RealFiberData d = minmax(parse_poly("[-3, 0, 3]"));
        REQUIRE(d.m_exact.has_value());
        REQUIRE(d.M_exact.has_value());
        CHECK(*d.m_exact == Rat(-2));
        CHECK(*d.M_exact == Rat(2));
        CHECK(d.m == doctest::Approx(-2));
        CHECK(d.M == doctest::Approx(2));
    }
    SUBCASE("2(X - b): (-b^2, infinity)") {
        RealFiberData d = minmax(parse_poly("[-6, 2]"));  // b = 3
        CHECK(d.M_unbounded);
        REQUIRE(d.m_exact.has_value());
        CHECK(*d.m_exact == Rat(-9));
    }
    SUBCASE("the pi-quartic: m = P(pi) > 0 = M") {
        RPoly q = RPoly::from_roots(5, {0, 1, 3, M_PI});
        RealFiberData d = minmax(q);
        RPoly P = q.primitive();
        CHECK(d.m == doctest::Approx(P.eval(M_PI)));
        CHECK(d.M == doctest::Approx(0.0));
        CHECK(d.m > 0);
    }
    SUBCASE("rejects repeated or complex roots") {
        CHECK_THROWS(minmax(RPoly({1, 0, 1})));   // X^2 + 1
        CHECK_THROWS(minmax(RPoly({0, 0, 1})));   // X^2
    }
}

TEST_CASE("in_qc_real: cubic always inside, quartic can fail") {
    Rng rng(201);
    for (int trial = 0; trial < 200; ++trial) {
        RPoly q = random_real_rooted(rng, static_cast<int>(rng.range(2, 3)));
        // quadratic and cubic Q with distinct real roots always satisfy m < M
        CHECK(in_qc_real(q));
    }
    CHECK_FALSE(in_qc_real(RPoly::from_roots(5, {0, 1, 3, M_PI})));
}

TEST_CASE("real versus complex base-space membership") {
    SUBCASE("4(X+5)X(X-5): real in, complex out") {
        Poly q = parse_poly("[0, -100, 0, 4]");
        CHECK(in_qc_real(RPoly::from_exact(q)));
        CHECK_FALSE(in_qc_exact(q));  // P4(-5) = P4(5)
    }
    SUBCASE("5X(X-1)(X-3)(X-pi): real out, complex in") {
        RPoly q = RPoly::from_roots(5, {0, 1, 3, M_PI});
        CHECK_FALSE(in_qc_real(q));
        // complex membership: the four critical values are distinct
        RPoly P = q.primitive();
        std::vector<double> cv;
        for (double b : {0.0, 1.0, 3.0, M_PI}) cv.push_back(P.eval(b));
        std::sort(cv.begin(), cv.end());
        for (size_t k = 0; k + 1 < cv.size(); ++k) CHECK(cv[k + 1] - cv[k] > 1e-3);
    }
}

TEST_CASE("ev0 anchors and range") {
    RPoly p = RPoly::from_exact(parse_poly("[0, -3, 0, 1]"));  // X^3 - 3X
    CHECK(ev0(p) == doctest::Approx(0.5));

    // n = 2: X^2 - 2bX (roots 0 and 2b) lands in (0,1)
    for (double b : {-2.0, 0.5, 3.0}) {
        RPoly p2({0.0, -2 * b, 1.0});
        double v = ev0(p2);
        CHECK(v > 0);
        CHECK(v < 1);
    }
    CHECK_THROWS(ev0(RPoly({1, 0, 1})));      // no real roots
    CHECK_THROWS(ev0(RPoly({0, -3, 0, 2})));  // not monic
}

TEST_CASE("fiber_inverse: anchors and round trips") {
    RPoly q = RPoly::from_exact(parse_poly("[-3, 0, 3]"));
    RPoly back = fiber_inverse(q, 0.5);
    REQUIRE(back.degree() == 3);
    CHECK(back.c[0] == doctest::Approx(0.0));
    CHECK(back.c[1] == doctest::Approx(-3.0));
    CHECK(back.c[3] == doctest::Approx(1.0));

    CHECK_THROWS(fiber_inverse(q, 0.0));
    CHECK_THROWS(fiber_inverse(q, 1.0));
    CHECK_THROWS(fiber_inverse(RPoly::from_roots(5, {0, 1, 3, M_PI}), 0.5));

    Rng rng(207);
    for (int trial = 0; trial < 100; ++trial) {
        int deg = static_cast<int>(rng.range(2, 5));
        RPoly p = random_real_rooted(rng, deg + 1);
        // normalize monic
        double lead = p.c.back();
        for (auto& c : p.c) c /= lead;
        RPoly pd = p.derive();
        double c = ev0(p);
        CHECK(c > 0);
        CHECK(c < 1);
        RPoly rt = fiber_inverse(pd, c);
        REQUIRE(rt.c.size() == p.c.size());
        double scale = 0;
        for (double v : p.c) scale = std::max(scale, std::abs(v));
        for (size_t k = 0; k < p.c.size(); ++k)
            CHECK(std::abs(rt.c[k] - p.c[k]) < 1e-10 * std::max(1.0, scale));
    }
}

TEST_CASE("image characterization: derivatives of all-real polynomials") {
    Rng rng(211);
    for (int trial = 0; trial < 150; ++trial) {
        int deg = static_cast<int>(rng.range(2, 7));
        RPoly p = random_real_rooted(rng, deg);
        double lead = p.c.back();
        for (auto& c : p.c) c /= lead;  // monic
        RPoly q = p.derive();
        CHECK(in_qc_real(q));
        RealFiberData d = minmax(q);
        double P0 = p.c[0];
        // strict alternation: m(P') < -P(0) < M(P')
        CHECK(d.m < -P0);
        if (!d.M_unbounded) CHECK(-P0 < d.M);
    }
}

TEST_CASE("converse sampling oracle") {
    Rng rng(213);
    int inside_checked = 0, outside_checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int deg = static_cast<int>(rng.range(3, 4));
        RPoly q = random_real_rooted(rng, deg);
        RealFiberData d = minmax(q);
        if (d.m < d.M) {
            ++inside_checked;
            for (int k = 1; k <= 11; ++k) {
                double c = d.m + (d.M - d.m) * k / 12.0;
                RPoly P = q.primitive();
                P.c[0] -= c;
                CHECK(all_real_distinct(P, deg + 1, 1e-12));
            }
        }
    }
    // engineered m >= M cases: no c on a wide grid yields all-real roots
    for (RPoly q : {RPoly::from_roots(5, {0, 1, 3, M_PI}), counterexample(5)}) {
        ++outside_checked;
        RealFiberData d = minmax(q);
        double lo = *std::min_element(d.critical_values.begin(), d.critical_values.end()) - 1;
        double hi = *std::max_element(d.critical_values.begin(), d.critical_values.end()) + 1;
        for (int k = 0; k <= 100; ++k) {
            double c = lo + (hi - lo) * k / 100.0;
            RPoly P = q.primitive();
            P.c[0] -= c;
            CHECK_FALSE(all_real_distinct(P, q.degree() + 1, 1e-12));
        }
    }
    CHECK(inside_checked > 50);
    CHECK(outside_checked == 2);
}

TEST_CASE("counterexamples: d = 4, 5, 6") {
    SUBCASE("d = 4 is the pi-quartic with margin above pi^3/4") {
        RPoly q = counterexample(4);
        RPoly expect = RPoly::from_roots(5, {0, 1, 3, M_PI});
        REQUIRE(q.c.size() == expect.c.size());
        for (size_t k = 0; k < q.c.size(); ++k) CHECK(q.c[k] == doctest::Approx(expect.c[k]));
        RealFiberData d = minmax(q);
        CHECK(d.m - d.M > std::pow(M_PI, 3) / 4 - 0.01);
    }
    SUBCASE("inductive degrees verify m >= M with all-real distinct roots") {
        for (int deg : {5, 6}) {
            RPoly q = counterexample(deg);
            CHECK(all_real_distinct(q, deg));
            RealFiberData d = minmax(q);
            CHECK(d.m >= d.M);
        }
    }
    SUBCASE("no counterexample below quartic") {
        CHECK_THROWS(counterexample(3));
    }
}

TEST_CASE("pi margin unchanged at 128-bit precision") {
    using Q = boost::multiprecision::cpp_bin_float_quad;
    const Q pi = atan(Q(1)) * 4;
    // primitive of 5X(X-1)(X-3)(X-pi), evaluated in quad:
    // X^5 - (5 pi/4 + 5) X^4 + (20 pi/3 + 5) X^3 - (15 pi/2) X^2
    auto P = [&](const Q& x) {
        Q x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x;
        return x5 - (Q(5) * pi / 4 + 5) * x4 + (Q(20) * pi / 3 + 5) * x3 - (Q(15) * pi / 2) * x2;
    };
    Q m = P(pi) > P(Q(1)) ? P(pi) : P(Q(1));
    Q M = P(Q(3)) < P(Q(0)) ? P(Q(3)) : P(Q(0));
    Q margin128 = m - M;
    CHECK(margin128 > 1);

    RPoly q4 = counterexample(4);
    RealFiberData d = minmax(q4);
    double margin64 = d.m - d.M;
    CHECK(margin64 > 1);
    CHECK(abs(margin128 - Q(margin64)) < 1e-9);
}
