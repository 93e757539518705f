#include <doctest.h>

#include <cmath>
#include <random>

#include "tonelli/qc.hpp"
#include "tonelli/tietze.hpp"

using namespace tonelli;

namespace {

ClosedComplementDomain unit_gap(Rational a, Rational b) {
    ClosedComplementDomain dom;
    dom.box = Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
    dom.removed.add(Rectangle::from_interval(Interval::open(std::move(a), std::move(b))));
    return dom;
}

}  // namespace

TEST_CASE("extend_1d: linear interpolation across a gap") {
    // f = 2 on [0,3/8], f = 5 on [5/8,1]
    ClosedComplementDomain dom = unit_gap(Rational(3, 8), Rational(5, 8));
    Extension1D ext(dom, [](const Rational& x) {
        return Value::exact(x <= Rational(3, 8) ? Rational(2) : Rational(5));
    });
    CHECK(ext.at(Rational(1, 2)).rat() == Rational(7, 2));
    CHECK(ext.at(Rational(1, 4)).rat() == 2);
    CHECK(ext.at(Rational(3, 4)).rat() == 5);
    // interpolation formula x = lambda a + (1-lambda) b
    CHECK(ext.at(Rational(7, 16)).rat() == Rational(2) * Rational(3, 4) + Rational(5) * Rational(1, 4));
    CHECK(ext.at(0.5) == doctest::Approx(3.5));
}

TEST_CASE("extend_1d: constant restrictions extend uniquely") {
    ClosedComplementDomain dom = unit_gap(Rational(1, 4), Rational(3, 4));
    Extension1D ext(dom, [](const Rational&) { return Value::exact(Rational(7)); });
    for (long n = 0; n <= 16; ++n) CHECK(ext.at(Rational(n, 16)).rat() == 7);
}

TEST_CASE("extend_1d: dirichlet restriction is identically zero") {
    QCFunction d = catalog("dirichlet");
    WitnessCover w = d.witness(Rational(1, 16));
    ClosedComplementDomain dom{Rectangle::from_interval(Interval::closed(Rational(0), Rational(1))),
                               w.cover};
    auto re = w.restricted_eval;
    Extension1D ext(dom, [re](const Rational& x) { return re(point1(x)); });
    for (long n = 0; n <= 32; ++n) CHECK(ext.at(Rational(n, 32)).rat() == 0);
}

TEST_CASE("extend_1d: boundary half-gaps are constant tails") {
    ClosedComplementDomain dom;
    dom.box = Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
    dom.removed.add(Rectangle::from_interval(Interval::open(Rational(-1), Rational(1, 4))));
    Extension1D ext(dom, [](const Rational& x) { return Value::exact(x); });
    CHECK(ext.at(Rational(0)).rat() == Rational(1, 4));     // left tail constant f(1/4)
    CHECK(ext.at(Rational(1, 8)).rat() == Rational(1, 4));
    CHECK(ext.at(Rational(1, 2)).rat() == Rational(1, 2));  // inside K
}

TEST_CASE("extend_1d throws EmptyK when the cover swallows the box") {
    ClosedComplementDomain dom = unit_gap(Rational(-1), Rational(2));
    CHECK_THROWS_AS(Extension1D(dom, [](const Rational&) { return Value::exact(Rational(0)); }),
                    std::domain_error);
}

TEST_CASE("rho: exact distances to box complements") {
    SUBCASE("point in K") {
        ClosedComplementDomain dom = unit_gap(Rational(1, 4), Rational(1, 2));
        BoxComplementK k(dom);
        CHECK(rho(k, point1(Rational(1, 8))).dist == 0.0);
        CHECK(*rho(k, point1(Rational(1, 8))).dist2 == 0);
    }
    SUBCASE("K = [1,2], x = 0 -> distance 1") {
        ClosedComplementDomain dom;
        dom.box = Rectangle::from_interval(Interval::closed(Rational(1), Rational(2)));
        BoxComplementK k(dom);
        DistResult d = rho(k, point1(Rational(0)));
        REQUIRE(d.dist2.has_value());
        CHECK(*d.dist2 == 1);
        CHECK(d.dist == doctest::Approx(1.0));
    }
    SUBCASE("K = [0,1]^2, x = (2,0) -> distance 1") {
        ClosedComplementDomain dom;
        dom.box = Rectangle({Interval::closed(Rational(0), Rational(1)),
                             Interval::closed(Rational(0), Rational(1))});
        BoxComplementK k(dom);
        DistResult d = rho(k, point2(Rational(2), Rational(0)));
        REQUIRE(d.dist2.has_value());
        CHECK(*d.dist2 == 1);
    }
}

TEST_CASE("extend_nd: values on K are exact, constants stay constant") {
    ClosedComplementDomain dom;
    dom.box = Rectangle({Interval::closed(Rational(0), Rational(1)),
                         Interval::closed(Rational(0), Rational(1))});
    dom.removed.add(Rectangle({Interval::open(Rational(1, 4), Rational(1, 2)),
                               Interval::open(Rational(1, 4), Rational(1, 2))}));
    BoxComplementK k(dom);
    auto f = [](const Point& p) {
        return Value::sampled(p[0].dbl() + 2 * p[1].dbl());
    };
    SUBCASE("on K") {
        Point x = point2(Rational(1, 8), Rational(7, 8));
        for (int n = 0; n <= 5; ++n) {
            ExtendNdResult r = extend_nd(k, f, x, n);
            CHECK(r.on_k);
            CHECK(r.value == doctest::Approx(1.0 / 8 + 2 * 7.0 / 8));
        }
    }
    SUBCASE("constant function") {
        auto c = [](const Point&) { return Value::sampled(5.0); };
        Point x = point2(Rational(3, 8), Rational(3, 8));  // inside the removed square
        for (int n = 0; n <= 6; ++n) CHECK(extend_nd(k, c, x, n).value == doctest::Approx(5.0));
    }
    SUBCASE("F_{n+1} >= F_n and bound preservation") {
        Point x = point2(Rational(3, 8), Rational(3, 8));
        double prev = -1e300;
        for (int n = 0; n <= 8; ++n) {
            ExtendNdResult r = extend_nd(k, f, x, n);
            CHECK(r.value >= prev - 1e-12);
            prev = r.value;
            CHECK(r.value <= 3.0 + 1e-9);   // max of f over K
            CHECK(r.value >= 0.0 - 1e-9);   // min of f over K
        }
    }
    SUBCASE("monotone comparison") {
        auto g = [](const Point& p) {
            return Value::sampled(p[0].dbl() + 2 * p[1].dbl() + 1.0);
        };
        Point x = point2(Rational(3, 8), Rational(3, 8));
        for (int n = 0; n <= 6; ++n)
            CHECK(extend_nd(k, g, x, n).value >= extend_nd(k, f, x, n).value - 1e-12);
    }
}

TEST_CASE("circle negative control: F_n(0,0) pins the maximum") {
    CircleK k(2048);
    const double pi = 3.14159265358979323846;
    // the oscillating family: even members carry a travelling bump of height 1
    auto member = [&](long j) {
        return [j, pi](const Point& p) {
            if (j % 2 == 1) return Value::sampled(0.0);
            long nu = j / 2;
            double th = std::atan2(p[1].dbl(), p[0].dbl());
            if (th < 0) th += 2 * pi;
            double v = 0;
            double a = 1.0 / nu, b = 2.0 / nu;
            if (th > 0 && th <= a)
                v = nu * th;
            else if (th > a && th < b)
                v = 2 - nu * th;
            return Value::sampled(v);
        };
    };
    Point origin = point2(Rational(0), Rational(0));
    for (long j = 2; j <= 6; ++j) {
        auto f = member(j);
        double grid_max = 0;  // max of f over the sampled K
        for (const auto& s : k.samples()) {
            Point ps{Value::sampled(s[0]), Value::sampled(s[1])};
            grid_max = std::max(grid_max, f(ps).dbl());
        }
        double true_max = j % 2 == 0 ? 1.0 : 0.0;
        double sampler_tol = (j / 2) * k.covering_gap();  // slope of the bump in theta
        for (int n = 0; n <= 6; ++n) {
            ExtendNdResult r = extend_nd(k, f, origin, n);
            // every averaging radius covers the whole circle, so F_n(0,0)
            // is the maximum of f over K at machine precision on the samples
            CHECK(r.value == doctest::Approx(grid_max).epsilon(1e-12));
            CHECK(std::abs(r.value - true_max) <= sampler_tol + 1e-12);
        }
    }
    // so the sequence of extensions oscillates at the origin although the
    // members converge pointwise to zero on K
}

TEST_CASE("1-D extension property trials: bounds and monotone comparison") {
    std::mt19937_64 rng(20250101);
    for (int trial = 0; trial < 500; ++trial) {
        // random gap structure and two random piecewise-linear restrictions
        long a = 1 + static_cast<long>(rng() % 6), b = a + 1 + static_cast<long>(rng() % 6);
        ClosedComplementDomain dom = unit_gap(Rational(a, 16), Rational(b, 16));
        long c0 = static_cast<long>(rng() % 9) - 4, c1 = static_cast<long>(rng() % 9) - 4;
        long d0 = c0 + static_cast<long>(rng() % 4), d1 = c1 + static_cast<long>(rng() % 4);
        auto f = [&](const Rational& x) { return Value::exact(Rational(c0) + Rational(c1) * x); };
        auto g = [&](const Rational& x) { return Value::exact(Rational(d0) + Rational(d1) * x); };
        Extension1D ef(dom, f), eg(dom, g);
        // min/max of f over K
        Rational fmin, fmax;
        bool first = true;
        for (const auto& iv : ef.k_intervals()) {
            for (const Rational& x : {iv.lo(), iv.hi()}) {
                Rational v = f(x).rat();
                if (first || v < fmin) fmin = v;
                if (first || v > fmax) fmax = v;
                first = false;
            }
        }
        bool g_dominates = d0 >= c0 && d1 >= c1;
        for (int s = 0; s <= 8; ++s) {
            Rational x(s, 8);
            Rational vf = ef.at(x).rat();
            CHECK(vf >= fmin);
            CHECK(vf <= fmax);
            if (g_dominates) CHECK(eg.at(x).rat() >= vf);
        }
    }
}

TEST_CASE("1-D extensions preserve increasing sequences and pointwise limits") {
    ClosedComplementDomain dom = unit_gap(Rational(1, 4), Rational(3, 4));
    // f_n = x * (1 - 1/n) on K: increasing in n, convergent to x
    auto make = [&](long n) {
        return Extension1D(dom, [n](const Rational& x) {
            return Value::exact(x * (Rational(1) - Rational(1, n)));
        });
    };
    for (int s = 0; s <= 16; ++s) {
        Rational x(s, 16);
        Rational prev(-1000);
        for (long n = 1; n <= 6; ++n) {
            Rational v = make(n).at(x).rat();
            CHECK(v >= prev);
            prev = v;
        }
        // pointwise limit exists and equals the extension of the limit
        Extension1D limit(dom, [](const Rational& t) { return Value::exact(t); });
        Rational v64 = make(64).at(x).rat();
        CHECK(rat_abs(v64 - limit.at(x).rat()) <= Rational(1, 32));
    }
}

TEST_CASE("continuity probe: finite differences shrink near gap endpoints") {
    ClosedComplementDomain dom = unit_gap(Rational(1, 4), Rational(1, 2));
    Extension1D ext(dom, [](const Rational& x) { return Value::exact(x * x); });
    Rational a(1, 4);
    Rational prev_diff(1000);
    for (int k = 3; k <= 10; ++k) {
        Rational h = rat_pow2(-k);
        Rational diff = rat_abs(ext.at(a + h).rat() - ext.at(a - h).rat());
        CHECK(diff <= prev_diff);
        prev_diff = diff;
    }
    CHECK(prev_diff < Rational(1, 64));
}

TEST_CASE("sampler certification") {
    ClosedComplementDomain dom;
    dom.box = Rectangle({Interval::closed(Rational(0), Rational(1)),
                         Interval::closed(Rational(0), Rational(1))});
    dom.removed.add(Rectangle({Interval::open(Rational(1, 4), Rational(3, 4)),
                               Interval::open(Rational(1, 4), Rational(3, 4))}));
    BoxComplementK k(dom, 32);
    auto f = [](const Point& p) { return Value::sampled(p[0].dbl()); };
    Point x = point2(Rational(1, 2), Rational(1, 2));
    // Lipschitz hint present: a tolerance comes back
    ExtendNdResult ok = extend_nd(k, f, x, 2, 1.0, 1.0);
    CHECK(ok.tolerance.has_value());
    // demanding an impossible tolerance trips SamplerTooCoarse
    CHECK_THROWS_AS(extend_nd(k, f, x, 2, 1.0, 1.0, 1e-12), std::runtime_error);
    // no modulus hint: bracketing only, tolerance-not-met is reported
    CHECK_THROWS_AS(extend_nd(k, f, x, 2, std::nullopt, std::nullopt, 1e-3),
                    std::runtime_error);
    CHECK_FALSE(extend_nd(k, f, x, 2).tolerance.has_value());
}
