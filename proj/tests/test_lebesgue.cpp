#include <doctest.h>

#include <random>

#include "oracle_helpers.hpp"
#include "tonelli/cantor.hpp"
#include "tonelli/lebesgue.hpp"

using namespace tonelli;
using tonelli::testing::random_multiinterval;
using tonelli::testing::sweep_line_measure;

namespace {
const Rectangle UNIT = Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
}

TEST_CASE("dirichlet integrates to exactly zero with zero error") {
    IntegralResult r = integrate_bounded(catalog("dirichlet"), UNIT, 16);
    CHECK(r.value.is_exact());
    CHECK(r.value.rat() == 0);
    CHECK(r.error_bound == 0);
    CHECK(r.exact);
    REQUIRE(r.trace.size() == 16);
    for (const auto& row : r.trace) {
        CHECK(row.riemann_value.rat() == 0);
        CHECK(row.riemann_tol == 0);
        CHECK(row.witness_length < Rational(1, row.n));
    }
}

TEST_CASE("constants and steps integrate exactly") {
    Rectangle box = Rectangle::from_interval(Interval::closed(Rational(-1), Rational(3)));
    IntegralResult c = integrate_bounded(catalog("const:5"), box, 8);
    CHECK(c.value.rat() == 20);
    CHECK(c.error_bound == 0);

    IntegralResult s = integrate_bounded(catalog("step:0,1/2,1,2,5"), UNIT, 8);
    CHECK(s.value.is_exact());
    CHECK(s.value.rat() == Rational(7, 2));
    // every stage already hits the limit: symmetric covers + linear gaps
    for (const auto& row : s.trace) CHECK(row.riemann_value.rat() == Rational(7, 2));
}

TEST_CASE("thomae and qn-indicators vanish; a.e.-equal functions share the trace") {
    IntegralResult t = integrate_bounded(catalog("thomae"), UNIT, 8);
    CHECK(t.value.rat() == 0);
    CHECK(t.error_bound == 0);

    QCFunction f = catalog("spike:4");
    QCFunction g = combine(CombineOp::sum, f, catalog("qn-indicator:5"));
    IntegralResult rf = integrate_bounded(f, UNIT, 8);
    IntegralResult rg = integrate_bounded(g, UNIT, 8);
    REQUIRE(rf.trace.size() == rg.trace.size());
    CHECK(rf.value.rat() == rg.value.rat());
    for (std::size_t i = 0; i < rf.trace.size(); ++i)
        CHECK(rf.trace[i].riemann_value.rat() == rg.trace[i].riemann_value.rat());
}

TEST_CASE("linearity within combined error bounds") {
    std::vector<const char*> names{"spike:3", "step:0,1/2,1,2,5", "poly:0,1", "qn-indicator:4"};
    for (const char* fa : names) {
        for (const char* fb : names) {
            QCFunction f = catalog(fa), g = catalog(fb);
            QCFunction lin =
                combine(CombineOp::sum, combine(CombineOp::product, catalog("const:2"), f),
                        combine(CombineOp::product, catalog("const:-3"), g));
            IntegralResult rl = integrate_bounded(lin, UNIT, 8);
            IntegralResult rf = integrate_bounded(f, UNIT, 8);
            IntegralResult rg = integrate_bounded(g, UNIT, 8);
            double lhs = rl.value.dbl();
            double rhs = 2 * rf.value.dbl() - 3 * rg.value.dbl();
            double budget = rat_to_double(rl.error_bound + 2 * rf.error_bound + 3 * rg.error_bound);
            CHECK(std::abs(lhs - rhs) <= budget + 1e-12);
        }
    }
}

TEST_CASE("monotonicity and the absolute-value inequality") {
    QCFunction f = catalog("spike:4");                    // 0..4
    QCFunction g = catalog("const:5");                    // dominates f
    IntegralResult rf = integrate_bounded(f, UNIT, 8);
    IntegralResult rg = integrate_bounded(g, UNIT, 8);
    CHECK(rf.value.dbl() <=
          rg.value.dbl() + rat_to_double(rf.error_bound + rg.error_bound));

    QCFunction h = combine(CombineOp::sum, catalog("poly:-1,2"), catalog("qn-indicator:3"));
    IntegralResult rh = integrate_bounded(h, UNIT, 8);
    IntegralResult rabs = integrate_bounded(qc_abs(h), UNIT, 8);
    CHECK(std::abs(rh.value.dbl()) <=
          rabs.value.dbl() + rat_to_double(rh.error_bound + rabs.error_bound) + 1e-12);
}

TEST_CASE("additivity over split intervals and translation invariance") {
    QCFunction f = catalog("step:0,1/2,1,2,5");
    Rectangle left = Rectangle::from_interval(Interval::closed(Rational(0), Rational(3, 4)));
    Rectangle right = Rectangle::from_interval(Interval::closed(Rational(3, 4), Rational(1)));
    IntegralResult whole = integrate_bounded(f, UNIT, 8);
    IntegralResult a = integrate_bounded(f, left, 8);
    IntegralResult b = integrate_bounded(f, right, 8);
    CHECK(whole.value.rat() == a.value.rat() + b.value.rat());

    // translation: spike translated by 1 integrates the same over the shifted box
    QCFunction s = catalog("spike:4");
    Multirectangle support;
    support.add(Rectangle::from_interval(Interval::open(Rational(5, 4), Rational(3, 2))));
    QCFunction shifted = combine(CombineOp::product, catalog("const:4"), indicator_of(support));
    Rectangle sbox = Rectangle::from_interval(Interval::closed(Rational(1), Rational(2)));
    IntegralResult rs = integrate_bounded(s, UNIT, 8);
    IntegralResult rt = integrate_bounded(shifted, sbox, 8);
    CHECK(rs.value.rat() == rt.value.rat());
}

TEST_CASE("riemann and lebesgue agree on riemann-integrable catalog functions") {
    for (const char* name : {"power:2", "power:3", "poly:1,2,3", "step:0,1/2,1,2,5", "spike:4",
                             "const:2", "poly:0,1"}) {
        QCFunction f = catalog(name);
        IntegralResult leb = integrate_bounded(f, UNIT, 64, 1e-8);
        RiemannResult rie = riemann_integrate(f, UNIT.side(0), 1e-8, 28);
        REQUIRE(rie.converged);
        double budget = rat_to_double(leb.error_bound) + 1e-8;
        CHECK(std::abs(leb.value.dbl() - rie.value.dbl()) <= budget);
    }
}

TEST_CASE("general integration: truncation schedules") {
    SUBCASE("compact support equals the bounded value") {
        QCFunction f = catalog("spike:4");
        IntegralResult gen = integrate_general(f);
        IntegralResult bnd = integrate_bounded(f, UNIT, 8);
        CHECK(gen.verdict == IntegralVerdict::number);
        CHECK(std::abs(gen.value.dbl() - bnd.value.dbl()) <= 1e-9);
    }
    SUBCASE("wide spike integrates to one") {
        IntegralResult r = integrate_general(catalog("wide-spike:5"));
        CHECK(r.verdict == IntegralVerdict::number);
        CHECK(r.value.is_exact());
        CHECK(r.value.rat() == 1);
    }
    SUBCASE("f(x) = x on the line is not integrable") {
        IntegralResult r = integrate_general(catalog("poly:0,1"));
        CHECK(r.verdict == IntegralVerdict::not_integrable);
    }
    SUBCASE("x_+ alone diverges to +inf") {
        QCFunction fplus = truncate(catalog("poly:0,1"), TruncateMode::plus, Rational(0));
        IntegralResult r = integrate_general(fplus);
        CHECK(r.verdict == IntegralVerdict::plus_infinity);
    }
}

TEST_CASE("integration over sets") {
    QCFunction one = catalog("const:1");
    SUBCASE("two unit gaps") {
        Multirectangle a;
        a.add(Rectangle::from_interval(Interval::open(Rational(0), Rational(1))));
        a.add(Rectangle::from_interval(Interval::open(Rational(2), Rational(3))));
        IntegralResult r = integrate_over_set(one, indicator_of(a));
        CHECK(r.verdict == IntegralVerdict::number);
        CHECK(r.value.rat() == 2);
    }
    SUBCASE("SVC removed set at stage 6") {
        CantorStage st = build_stage(CantorKind::smith_volterra, 6);
        IntegralResult r = integrate_over_set(one, indicator_of(st.removed));
        CHECK(r.value.rat() == Rational(1, 2) * (Rational(1) - rat_pow2(-6)));
    }
    SUBCASE("empty set") {
        IntegralResult r = integrate_over_set(one, indicator_of(Multirectangle()));
        CHECK(r.value.rat() == 0);
    }
    SUBCASE("NotCharacteristic is rejected") {
        CHECK_THROWS_AS(integrate_over_set(one, catalog("poly:0,1")), std::invalid_argument);
    }
}

TEST_CASE("measure: exact path, characteristic path, limits") {
    SUBCASE("duplicates collapse in the point set") {
        Multirectangle dup;
        dup.add(Rectangle::from_interval(Interval::open(Rational(0), Rational(1))));
        dup.add(Rectangle::from_interval(Interval::open(Rational(0), Rational(1))));
        CHECK(measure(dup) == 1);
        CHECK(length(dup) == 2);
    }
    SUBCASE("rectangle volume") {
        Multirectangle box;
        box.add(Rectangle({Interval::closed(Rational(0), Rational(2)),
                           Interval::closed(Rational(0), Rational(3, 2))}));
        CHECK(measure(box) == 3);
    }
    SUBCASE("SVC retained limit via the removed series") {
        CHECK(Rational(1) - limit_removed_measure(CantorKind::smith_volterra) == Rational(1, 2));
    }
    SUBCASE("characteristic path agrees exactly with the disjointified L") {
        std::mt19937_64 rng(424242);
        Rectangle window = Rectangle::from_interval(Interval::closed(Rational(-1), Rational(2)));
        for (int t = 0; t < 100; ++t) {
            Multirectangle m = random_multiinterval(rng, Rational(0), Rational(1));
            IntegralResult via = measure_via_integral(indicator_of(m), window);
            REQUIRE(via.value.is_exact());
            CHECK(via.value.rat() == measure(m));
            CHECK(via.value.rat() == sweep_line_measure(m));
        }
    }
}

TEST_CASE("summability verdicts") {
    SUBCASE("bounded on bounded is summable with the M lambda(R) bound") {
        QCFunction f = catalog("step:0,1/2,1,2,5");
        SummabilityVerdict v = is_summable(f);
        CHECK(v.summable);
        CHECK(v.bound <= rat_to_double(*f.bound) * 1.0 + 1e-9);
    }
    SUBCASE("spike member is summable with integral one") {
        SummabilityVerdict v = is_summable(catalog("spike:8"));
        CHECK(v.summable);
        CHECK(v.bound == doctest::Approx(1.0));
    }
    SUBCASE("exp(-|y|) on the plane is not summable") {
        TruncationSchedule sched;
        sched.stages = 6;
        SummabilityVerdict v = is_summable(catalog("exp-abs-y"), sched, 4, 2e-2);
        CHECK_FALSE(v.summable);
        CHECK(v.truncated.back() > v.truncated[v.truncated.size() - 2] + 1);
    }
}

TEST_CASE("absolute continuity probe") {
    Interval window = Interval::closed(Rational(0), Rational(1));
    SUBCASE("f = 1: the integral equals lambda(O) exactly") {
        auto rows = abs_continuity_probe(catalog("const:1"), window, 10, 7);
        REQUIRE(!rows.empty());
        for (const auto& row : rows) {
            REQUIRE(row.integral.is_exact());
            CHECK(row.integral.rat() == row.lambda_o);
            CHECK(row.within_m_bound);
        }
    }
    SUBCASE("bounded f: |integral| <= M lambda(O) exactly on every trial") {
        for (const char* name : {"step:0,1/2,1,2,5", "poly:0,1", "spike:3"}) {
            auto rows = abs_continuity_probe(catalog(name), window, 12, 11);
            for (const auto& row : rows) CHECK(row.within_m_bound);
        }
    }
    SUBCASE("inverse-sqrt-like stack: values vanish with lambda(O)") {
        // f = 2^k on (4^-(k+1), 4^-k], a summable unbounded-ish staircase
        QCFunction stack = catalog("const:0");
        for (long k = 0; k < 8; ++k) {
            Multirectangle band;
            band.add(Rectangle::from_interval(
                Interval::open(rat_pow2(-2 * (k + 1)), rat_pow2(-2 * k))));
            QCFunction layer = combine(CombineOp::product, catalog("const:" + rat_str(rat_pow2(k))),
                                       indicator_of(band));
            stack = combine(CombineOp::sum, stack, layer);
        }
        stack.bound = rat_pow2(8);
        stack.tags.bounded = true;
        auto rows = abs_continuity_probe(stack, window, 10, 13);
        REQUIRE(rows.size() >= 4);
        // vanishing but allowed to be sub-linear in lambda
        CHECK(std::abs(rows.back().integral.dbl()) <
              std::abs(rows.front().integral.dbl()) + 1e-9);
    }
}

TEST_CASE("exterior and interior measure brackets") {
    Rectangle box = Rectangle::from_interval(Interval::closed(Rational(-1), Rational(2)));
    SUBCASE("unit interval") {
        Multirectangle e;
        e.add(Rectangle::from_interval(Interval::closed(Rational(0), Rational(1))));
        auto [outer, inner] = exterior_interior_measure(e, box, Rational(1, 100));
        CHECK(outer.lo == 1);
        CHECK(outer.hi <= Rational(1) + Rational(1, 100));
        CHECK(inner.hi == 1);
        CHECK(inner.lo >= Rational(1) - Rational(1, 100));
    }
    SUBCASE("SVC retained stage 3 has measure 9/16") {
        CantorStage st = build_stage(CantorKind::smith_volterra, 3);
        Rectangle unit_box = Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
        auto [outer, inner] = exterior_interior_measure(st.retained, unit_box, Rational(1, 64));
        CHECK(outer.lo == Rational(9, 16));
        CHECK(outer.hi - outer.lo <= Rational(1, 64));
        CHECK(inner.hi == Rational(9, 16));
        CHECK(inner.hi - inner.lo <= Rational(1, 64));
    }
    SUBCASE("empty set") {
        auto [outer, inner] = exterior_interior_measure(Multirectangle(), box, Rational(1, 8));
        CHECK(outer.lo == 0);
        CHECK(outer.hi == 0);
        CHECK(inner.hi == 0);
    }
    SUBCASE("random unions: brackets straddle the sweep-line oracle") {
        std::mt19937_64 rng(500);
        Rectangle window = Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
        for (int t = 0; t < 40; ++t) {
            Multirectangle m = random_multiinterval(rng, Rational(0), Rational(1));
            Rational truth = sweep_line_measure(m);
            auto [outer, inner] = exterior_interior_measure(m, window, Rational(1, 128));
            CHECK(outer.lo <= truth);
            CHECK(outer.hi >= truth);
            CHECK(inner.lo <= truth);
            CHECK(inner.hi >= truth);
        }
    }
}
