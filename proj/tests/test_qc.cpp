#include <doctest.h>

#include "tonelli/qc.hpp"

using namespace tonelli;

namespace {
Value ev(const QCFunction& f, const Rational& x) { return f.eval(point1(x)); }
}

TEST_CASE("catalog evaluators hit the anchor values") {
    QCFunction d = catalog("dirichlet");
    CHECK(ev(d, Rational(2, 3)).rat() == 1);
    CHECK(d.eval(point1(0.70710678)).rat() == 0);  // sampled-real counts as irrational

    QCFunction t = catalog("thomae");
    CHECK(ev(t, Rational(3, 4)).rat() == Rational(1, 4));
    CHECK(ev(t, Rational(0)).rat() == 1);
    CHECK(t.eval(point1(0.5773502691)).rat() == 0);

    QCFunction s = catalog("spike:4");
    CHECK(ev(s, Rational(3, 8)).rat() == 4);
    CHECK(ev(s, Rational(1, 8)).rat() == 0);
    CHECK(ev(s, Rational(1, 4)).rat() == 0);   // left endpoint excluded
    CHECK(ev(s, Rational(1, 2)).rat() == 4);   // right endpoint included

    QCFunction q = catalog("qn-indicator:3");
    int nonzero = 0;
    for (const auto& p : {Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4),
                          Rational(3, 4), Rational(1, 5)})
        if (ev(q, p).rat() == 1) ++nonzero;
    CHECK(nonzero == 3);

    QCFunction st = catalog("step:0,1/2,1,2,5");
    CHECK(ev(st, Rational(1, 4)).rat() == 2);
    CHECK(ev(st, Rational(3, 4)).rat() == 5);

    QCFunction w = catalog("wide-spike:4");
    CHECK(ev(w, Rational(6)).rat() == Rational(1, 4));
    CHECK(ev(w, Rational(20)).rat() == 0);

    QCFunction pw = catalog("power:3");
    CHECK(ev(pw, Rational(1, 2)).rat() == Rational(1, 8));

    QCFunction cp = catalog("cos-power:2,3");  // [cos(2! pi x)]^6
    CHECK(cp.eval(point1(Rational(1, 2))).dbl() == doctest::Approx(1.0));
    CHECK(cp.eval(point1(Rational(1, 8))).dbl() == doctest::Approx(std::pow(std::cos(2 * 3.14159265358979323846 / 8), 6)));
}

TEST_CASE("witness budgets: L(witness(eps)) < eps for the whole catalog") {
    std::vector<QCFunction> fs;
    for (const char* name :
         {"dirichlet", "thomae", "qn-indicator:5", "spike:3", "wide-spike:4", "trapezoid:6",
          "step:0,1/2,1,2,5", "poly:1,2,3", "power:4", "cos-power:2,2", "const:7",
          "indicator:(0,1/2)+(3/4,1)"})
        fs.push_back(catalog(name));
    fs.push_back(catalog("exp-abs-y"));
    for (const auto& f : fs) {
        for (int k = 1; k <= 20; ++k) {
            Rational eps = rat_pow2(-k);
            WitnessCover w = f.witness(eps);
            Rational materialized = w.cover.empty() ? Rational(0) : length(w.cover);
            CHECK(materialized < eps);
            Rational bound = w.truncated ? w.total_bound : materialized;
            CHECK(bound < eps);
            CHECK(w.cover.is_open());
        }
    }
}

TEST_CASE("combine: evaluator algebra on rational points") {
    QCFunction d = catalog("dirichlet");
    QCFunction x = catalog("poly:0,1");
    QCFunction c3 = catalog("const:3");

    QCFunction sum_dx = combine(CombineOp::sum, d, x);
    CHECK(ev(sum_dx, Rational(1, 2)).rat() == Rational(3, 2));

    // cancellation: sum(dirichlet, -dirichlet) is zero everywhere
    QCFunction cancel = combine(CombineOp::sum, d, qc_negate(d));
    CHECK(ev(cancel, Rational(1, 3)).rat() == 0);
    CHECK(cancel.eval(point1(0.123456789)).dbl() == 0.0);

    // max(const 1, const 2) = const 2, empty witness
    QCFunction mx = combine(CombineOp::max, catalog("const:1"), catalog("const:2"));
    CHECK(ev(mx, Rational(0)).rat() == 2);
    CHECK(mx.witness(Rational(1, 8)).cover.empty());
    CHECK(mx.ae_constant.has_value());
    CHECK(*mx.ae_constant == 2);

    // product(dirichlet, const 3)
    QCFunction pd = combine(CombineOp::product, d, c3);
    CHECK(ev(pd, Rational(1, 2)).rat() == 3);
    CHECK(pd.eval(point1(0.7071067811865476)).rat() == 0);

    // commutativity and associativity on rational probes
    QCFunction ab = combine(CombineOp::sum, d, x), ba = combine(CombineOp::sum, x, d);
    for (long n = 0; n <= 16; ++n) {
        Rational p(n, 16);
        CHECK(ev(ab, p).rat() == ev(ba, p).rat());
    }
    QCFunction abc1 = combine(CombineOp::max, combine(CombineOp::max, d, x), c3);
    QCFunction abc2 = combine(CombineOp::max, d, combine(CombineOp::max, x, c3));
    for (long n = 0; n <= 16; ++n) {
        Rational p(n, 16);
        CHECK(ev(abc1, p).rat() == ev(abc2, p).rat());
    }
}

TEST_CASE("combined witnesses stay within the summed budgets") {
    QCFunction d = catalog("dirichlet");
    QCFunction s = catalog("spike:3");
    QCFunction f = combine(CombineOp::sum, d, s);
    for (int k = 1; k <= 12; ++k) {
        Rational eps = rat_pow2(-k);
        WitnessCover w = f.witness(eps);
        Rational bound = w.truncated ? w.total_bound : length(w.cover);
        CHECK(bound < eps);
    }
    // truncate keeps the witness
    QCFunction tr = truncate(f, TruncateMode::plus, Rational(1));
    WitnessCover a = f.witness(Rational(1, 64)), b = tr.witness(Rational(1, 64));
    CHECK(a.cover.size() == b.cover.size());
}

TEST_CASE("truncate: pointwise clipping and identity sentinel") {
    QCFunction id2 = catalog("poly:0,1");
    QCFunction tr = truncate(id2, TruncateMode::plus, Rational(1));
    CHECK(ev(tr, Rational(0)).rat() == 1);
    CHECK(ev(tr, Rational(2)).rat() == 2);

    QCFunction d0 = truncate(catalog("dirichlet"), TruncateMode::minus, Rational(0));
    for (long n = 0; n <= 8; ++n) CHECK(ev(d0, Rational(n, 8)).rat() == 0);

    QCFunction same = truncate(catalog("spike:2"), TruncateMode::plus, std::nullopt);
    CHECK(ev(same, Rational(3, 4)).rat() == 2);
}

TEST_CASE("restrict_to_set") {
    Multirectangle unit;
    unit.add(Rectangle::from_interval(Interval::open(Rational(0), Rational(1))));
    QCFunction ind = indicator_of(unit);
    QCFunction one = catalog("const:1");
    QCFunction r = restrict_to_set(one, ind);
    CHECK(ev(r, Rational(1, 2)).rat() == 1);
    CHECK(ev(r, Rational(2)).rat() == 0);
    CHECK_THROWS_AS(restrict_to_set(one, catalog("poly:0,1")), std::invalid_argument);

    // f = id restricted to the SVC-retained-like pair of intervals
    Multirectangle two;
    two.add(Rectangle::from_interval(Interval::closed(Rational(0), Rational(1, 4))));
    two.add(Rectangle::from_interval(Interval::closed(Rational(3, 4), Rational(1))));
    QCFunction idr = restrict_to_set(catalog("poly:0,1"), indicator_of(two));
    CHECK(ev(idr, Rational(1, 8)).rat() == Rational(1, 8));
    CHECK(ev(idr, Rational(1, 2)).rat() == 0);
}

TEST_CASE("cos-power pointwise limit in n: one on finitely many rationals") {
    // m = 2: [cos(2 pi x)]^(2n) -> 1 exactly when 2x is an integer
    for (long num = 0; num <= 8; ++num) {
        Rational x(num, 8);
        double v_small = catalog("cos-power:2,4").eval(point1(x)).dbl();
        double v_large = catalog("cos-power:2,64").eval(point1(x)).dbl();
        Rational t = Rational(2) * x;
        if (rat_den(t) == 1) {
            CHECK(v_large == doctest::Approx(1.0));
        } else {
            CHECK(v_large <= v_small + 1e-12);
            CHECK(v_large < 0.5);
        }
    }
}

TEST_CASE("DSL parser round trips the grammar") {
    CHECK(ev(parse_function("sum(dirichlet,poly:0,1)"), Rational(1, 2)).rat() == Rational(3, 2));
    CHECK(ev(parse_function("truncate(poly:0,1,plus,1/2)"), Rational(0)).rat() == Rational(1, 2));
    CHECK(ev(parse_function("restrict(const:1,indicator:(0,1))"), Rational(2)).rat() == 0);
    QCFunction xy = parse_function("prod(poly:0,1;poly:0,1)");
    CHECK(xy.dim == 2);
    CHECK(xy.eval(point2(Rational(1, 2), Rational(1, 3))).rat() == Rational(1, 6));
    CHECK_THROWS_AS(parse_function("unknown-name"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("spike:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_function("sum(dirichlet)"), std::invalid_argument);
}

TEST_CASE("piecewise representations integrate exactly") {
    QCFunction s = catalog("spike:4");
    auto pw = s.piecewise_on(Rational(0), Rational(1));
    REQUIRE(pw.has_value());
    CHECK(pw->integral() == Rational(1));  // 4 * (1/4)

    QCFunction st = catalog("step:0,1/2,1,2,5");
    auto pw2 = st.piecewise_on(Rational(0), Rational(1));
    REQUIRE(pw2.has_value());
    CHECK(pw2->integral() == Rational(7, 2));

    QCFunction tz = catalog("trapezoid:4");
    auto pw3 = tz.piecewise_on(Rational(0), Rational(8));
    REQUIRE(pw3.has_value());
    CHECK(pw3->integral() == Rational(3));  // trapezoid of bases 4 and 2, height 1

    // piecewise max with crossings stays exact
    auto sum = Piecewise1D::combine(Piecewise1D::Op::max,
                                    Piecewise1D({LinearPiece{Rational(0), Rational(1), Rational(0), Rational(1)}}),
                                    Piecewise1D({LinearPiece{Rational(0), Rational(1), Rational(1), Rational(-1)}}));
    REQUIRE(sum.has_value());
    CHECK(sum->integral() == Rational(3, 4));
}

TEST_CASE("sequence catalog members and limits") {
    QCSequence xp = catalog_sequence("xpow-seq");
    CHECK(ev(xp.member(3), Rational(1, 2)).rat() == Rational(1, 8));
    CHECK(ev(*xp.limit, Rational(1)).rat() == 1);
    CHECK(ev(*xp.limit, Rational(1, 2)).rat() == 0);

    QCSequence sp = catalog_sequence("spike-seq");
    CHECK(ev(sp.member(4), Rational(3, 8)).rat() == 4);
    CHECK(ev(*sp.limit, Rational(3, 8)).rat() == 0);

    QCSequence qn = catalog_sequence("qn-seq");
    CHECK(ev(*qn.limit, Rational(1, 2)).rat() == 1);

    QCSequence tz = catalog_sequence("trapezoid-seq");
    CHECK(ev(tz.member(5), Rational(5)).rat() == 1);
    CHECK_FALSE(tz.domain.bounded());

    QCSequence ti = catalog_sequence("tail-indicator-seq");
    CHECK(ev(ti.member(3), Rational(5)).rat() == 1);
    CHECK(ev(ti.member(3), Rational(2)).rat() == 0);
}
