#include <doctest.h>

#include "tonelli/riemann.hpp"

using namespace tonelli;

namespace {
const Interval UNIT = Interval::closed(Rational(0), Rational(1));
}

TEST_CASE("darboux sums: anchor values") {
    SUBCASE("constants collapse the bracket") {
        DarbouxPair d = darboux(catalog("const:3"), UNIT, 7);
        CHECK(d.lower.rat() == 3);
        CHECK(d.upper.rat() == 3);
        CHECK(d.certified);
    }
    SUBCASE("f = x at N = 4") {
        DarbouxPair d = darboux(catalog("poly:0,1"), UNIT, 4);
        CHECK(d.lower.rat() == Rational(3, 8));
        CHECK(d.upper.rat() == Rational(5, 8));
    }
    SUBCASE("dirichlet brackets [0,1] at every N") {
        for (long n : {1L, 2L, 16L, 100L}) {
            DarbouxPair d = darboux(catalog("dirichlet"), UNIT, n);
            CHECK(d.lower.rat() == 0);
            CHECK(d.upper.rat() == 1);
        }
    }
}

TEST_CASE("darboux bracket is monotone under dyadic refinement") {
    for (const char* name : {"poly:0,1", "power:2", "power:5", "thomae", "spike:4"}) {
        QCFunction f = catalog(name);
        DarbouxPair prev = darboux(f, UNIT, 2);
        for (long n = 4; n <= 256; n *= 2) {
            DarbouxPair cur = darboux(f, UNIT, n);
            CHECK(cur.lower.rat() >= prev.lower.rat());
            CHECK(cur.upper.rat() <= prev.upper.rat());
            prev = cur;
        }
    }
}

TEST_CASE("riemann_integrate: convergent cases") {
    SUBCASE("x^2 -> 1/3") {
        RiemannResult r = riemann_integrate(catalog("power:2"), UNIT, 1e-6);
        CHECK(r.converged);
        CHECK(std::abs(r.value.dbl() - 1.0 / 3) <= 1e-6);
    }
    SUBCASE("dyadic step integrates exactly at depth 1") {
        RiemannResult r = riemann_integrate(catalog("step:0,1/2,1,2,5"), UNIT, 1e-8);
        CHECK(r.converged);
        CHECK(r.value.is_exact());
        CHECK(r.value.rat() == Rational(7, 2));
        CHECK(r.cells <= 4);
    }
    SUBCASE("piecewise-constant spike with dyadic breakpoints") {
        RiemannResult r = riemann_integrate(catalog("spike:4"), UNIT, 1e-8);
        CHECK(r.converged);
        CHECK(r.value.rat() == 1);
    }
}

TEST_CASE("riemann_integrate: dirichlet is rejected with a stalled gap") {
    RiemannResult r = riemann_integrate(catalog("dirichlet"), UNIT, 1e-3, 8);
    CHECK_FALSE(r.converged);
    CHECK(r.achieved_gap == doctest::Approx(1.0));
}

TEST_CASE("oscillation estimates") {
    std::vector<Rational> radii{Rational(1, 4), Rational(1, 8), Rational(1, 16), Rational(1, 64),
                                Rational(1, 256)};
    SUBCASE("smooth poly: last estimate under the Lipschitz bound") {
        QCFunction f = catalog("poly:1,2,3");  // |f'| <= 2 + 6 = 8 on [0,1]
        auto est = oscillation_at(f, Rational(1, 2), radii);
        CHECK(est.back().dbl() <= 8.0 * 2 * rat_to_double(radii.back()) + 1e-9);
        for (std::size_t i = 1; i < est.size(); ++i) CHECK(est[i].dbl() <= est[i - 1].dbl() + 1e-12);
    }
    SUBCASE("dirichlet oscillates 1 at every radius") {
        auto est = oscillation_at(catalog("dirichlet"), Rational(1, 3), radii);
        for (const auto& v : est) CHECK(v.rat() == 1);
    }
    SUBCASE("thomae at p/q approaches 1/q") {
        auto est = oscillation_at(catalog("thomae"), Rational(3, 4), radii);
        CHECK(est.back().rat() == Rational(1, 4));  // nearby rationals have bigger denominators
        for (std::size_t i = 1; i < est.size(); ++i) CHECK(est[i].rat() <= est[i - 1].rat());
    }
}

TEST_CASE("dini test") {
    SUBCASE("thomae passes the spec grid of (alpha, eps)") {
        for (const Rational& alpha : {Rational(1, 5), Rational(1, 10)}) {
            for (const Rational& eps : {Rational(1, 10), Rational(1, 100)}) {
                DiniResult r = dini_test(catalog("thomae"), UNIT, alpha, eps, 1 << 14);
                CHECK(r.pass);
                CHECK(r.heavy_length < eps);
                CHECK(!r.witness.points.empty());
            }
        }
    }
    SUBCASE("dirichlet fails with heavy length one") {
        DiniResult r = dini_test(catalog("dirichlet"), UNIT, Rational(1, 2), Rational(1, 2), 256);
        CHECK_FALSE(r.pass);
        CHECK(r.heavy_length == 1);
    }
    SUBCASE("continuous functions pass with an empty heavy set") {
        DiniResult r = dini_test(catalog("power:2"), UNIT, Rational(1, 10), Rational(1, 100), 1 << 12);
        CHECK(r.pass);
        CHECK(r.heavy_length == 0);
    }
}

TEST_CASE("riemann_zero_bound") {
    Multirectangle delta;
    delta.add(Rectangle::from_interval(Interval::open(Rational(0), Rational(1, 8))));
    CHECK(riemann_zero_bound(delta, Rational(1)) == Rational(1, 8));
    // a ramp of height 1 supported there integrates to 1/16 <= the bound
    Piecewise1D ramp({LinearPiece{Rational(0), Rational(1, 8), Rational(0), Rational(8)}});
    CHECK(ramp.integral() == Rational(1, 16));
    CHECK(ramp.integral() <= riemann_zero_bound(delta, Rational(1)));
}

TEST_CASE("2-D darboux on the separable product") {
    QCFunction xy = parse_function("prod(poly:0,1;poly:0,1)");
    Rectangle sq({Interval::closed(Rational(0), Rational(1)), Interval::closed(Rational(0), Rational(1))});
    DarbouxPair d = darboux_nd(xy, sq, 8);
    CHECK(d.lower.dbl() <= 0.25);
    CHECK(d.upper.dbl() >= 0.25);
    RiemannResult r = riemann_integrate_nd(xy, sq, 5e-3, 12);
    CHECK(r.converged);
    CHECK(std::abs(r.value.dbl() - 0.25) <= 1e-5);
}
