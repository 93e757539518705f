#include <doctest.h>

#include "tonelli/cantor.hpp"

using namespace tonelli;

TEST_CASE("first stages match the construction tables") {
    CantorStage t1 = build_stage(CantorKind::ternary, 1);
    REQUIRE(t1.removed.size() == 1);
    CHECK(t1.removed.component(0).side(0) == Interval::open(Rational(1, 3), Rational(2, 3)));
    CHECK(t1.removed_length == Rational(1, 3));
    CHECK(t1.retained_length == Rational(2, 3));

    CantorStage s1 = build_stage(CantorKind::smith_volterra, 1);
    REQUIRE(s1.removed.size() == 1);
    CHECK(s1.removed.component(0).side(0) == Interval::open(Rational(3, 8), Rational(5, 8)));
    CHECK(s1.removed_length == Rational(1, 4));
    CHECK(s1.retained_length == Rational(3, 4));
}

TEST_CASE("stage invariants: counts, partition of [0,1], nesting") {
    for (CantorKind kind : {CantorKind::ternary, CantorKind::smith_volterra}) {
        CantorStage prev = build_stage(kind, 1);
        for (int j = 1; j <= 8; ++j) {
            CantorStage st = build_stage(kind, j);
            CHECK(st.retained.size() == (1u << j));
            CHECK(st.removed_length + st.retained_length == Rational(1));
            CHECK(st.removed.is_disjoint());
            CHECK(st.retained.is_disjoint());
            CHECK(st.removed.is_open());
            CHECK(st.retained.is_closed());
            CHECK(st.removed_length == removed_measure(kind, j));
            if (j > 1) {
                for (const auto& comp : st.retained.components()) {
                    bool inside = false;
                    for (const auto& big : prev.retained.components())
                        inside = inside || big.contains_rect(comp);
                    CHECK(inside);
                }
                prev = st;
            }
        }
    }
}

TEST_CASE("removed measures: geometric sums against the closed forms") {
    for (int j = 1; j <= 20; ++j) {
        Rational svc = removed_measure(CantorKind::smith_volterra, j);
        CHECK(svc == Rational(1, 2) * (Rational(1) - rat_pow2(-j)));
        CHECK(Rational(1, 2) - svc == rat_pow2(-j - 1));
        Rational ternary = removed_measure(CantorKind::ternary, j);
        CHECK(ternary == Rational(1) - rat_pow(Rational(2, 3), static_cast<unsigned long>(j)));
    }
    CHECK(limit_removed_measure(CantorKind::ternary) == Rational(1));
    CHECK(limit_removed_measure(CantorKind::smith_volterra) == Rational(1, 2));
}

TEST_CASE("every retained component eventually splits (no interval survives)") {
    for (CantorKind kind : {CantorKind::ternary, CantorKind::smith_volterra}) {
        CantorStage st = build_stage(kind, 5);
        CantorStage next = build_stage(kind, 6);
        for (const auto& comp : st.retained.components()) {
            int children = 0;
            for (const auto& small : next.retained.components())
                if (comp.contains_rect(small)) ++children;
            CHECK(children == 2);
        }
    }
}

TEST_CASE("digit membership: spec anchor points") {
    CHECK(membership(CantorKind::ternary, Rational(1, 3)).verdict == Membership::in_limit_set);
    CHECK(membership(CantorKind::ternary, Rational(2, 3)).verdict == Membership::in_limit_set);
    CHECK(membership(CantorKind::ternary, Rational(1, 2)).verdict ==
          Membership::in_complement_open_set);
    CHECK(membership(CantorKind::ternary, Rational(1, 2)).forbidden_position == 1);
    CHECK(membership(CantorKind::ternary, Rational(0)).verdict == Membership::in_limit_set);
    CHECK(membership(CantorKind::ternary, Rational(1)).verdict == Membership::in_limit_set);
    CHECK(membership(CantorKind::ternary, Rational(1, 4)).verdict ==
          Membership::in_limit_set);  // 0.020202...
    CHECK(membership(CantorKind::smith_volterra, Rational(1, 2)).verdict ==
          Membership::in_complement_open_set);
    CHECK(membership(CantorKind::smith_volterra, Rational(5, 8)).verdict ==
          Membership::in_limit_set);
    CHECK(membership(CantorKind::smith_volterra, Rational(3, 8)).verdict ==
          Membership::in_limit_set);
    CHECK_THROWS_AS(membership(CantorKind::ternary, Rational(3, 2)), std::domain_error);
    CHECK_THROWS_AS(membership(CantorKind::ternary, Rational(-1, 2)), std::domain_error);
}

TEST_CASE("ternary membership agrees with interval containment at every stage") {
    CantorStage deep = build_stage(CantorKind::ternary, 9);
    for (long num = 0; num <= 243; ++num) {
        Rational x(num, 243);
        bool removed = deep.removed.contains(std::vector<Rational>{x});
        MembershipResult m = membership(CantorKind::ternary, x);
        if (removed) {
            CHECK(m.verdict == Membership::in_complement_open_set);
            CHECK(m.forbidden_position <= 9);
        }
        if (m.verdict == Membership::in_complement_open_set && m.forbidden_position <= 9)
            CHECK(removed);
    }
    for (long q : {7, 11, 13}) {
        for (long p = 1; p < q; ++p) {
            Rational x(p, q);
            MembershipResult m = membership(CantorKind::ternary, x);
            if (m.verdict == Membership::in_complement_open_set && m.forbidden_position <= 9) {
                CHECK(deep.removed.contains(std::vector<Rational>{x}));
            } else {
                CHECK_FALSE(deep.removed.contains(std::vector<Rational>{x}));
            }
        }
    }
}

TEST_CASE("smith-volterra digit test matches the geometry at stage 1") {
    CantorStage st = build_stage(CantorKind::smith_volterra, 1);
    for (long num = 0; num <= 64; ++num) {
        Rational x(num, 64);
        bool removed = st.removed.contains(std::vector<Rational>{x});
        MembershipResult m = membership(CantorKind::smith_volterra, x);
        if (removed) CHECK(m.verdict == Membership::in_complement_open_set);
        if (m.verdict == Membership::in_complement_open_set && m.forbidden_position == 1)
            CHECK(removed);
    }
}

TEST_CASE("cover_countable stays under budget") {
    SUBCASE("single point") {
        Multirectangle c = cover_countable({Rational(1, 2)}, Rational(1, 10));
        REQUIRE(c.size() == 1);
        CHECK(c.component(0).side(0) ==
              Interval::open(Rational(1, 2) - Rational(1, 80), Rational(1, 2) + Rational(1, 80)));
        CHECK(length(c) == Rational(1, 40));
    }
    SUBCASE("empty") { CHECK(cover_countable({}, Rational(1)).empty()); }
    SUBCASE("first four rationals") {
        auto pts = enumerate_unit_rationals(4);
        Multirectangle c = cover_countable(pts, Rational(1, 10));
        CHECK(length(c) == Rational(15, 32) * Rational(1, 10));
        for (std::size_t i = 0; i < pts.size(); ++i)
            CHECK(c.contains(std::vector<Rational>{pts[i]}));
    }
    SUBCASE("budget strictly below eps for many points") {
        auto pts = enumerate_unit_rationals(64);
        for (int k = 1; k <= 20; ++k) {
            Rational eps = rat_pow2(-k);
            CHECK(length(cover_countable(pts, eps)) < eps);
        }
    }
}

TEST_CASE("enumeration of unit rationals is canonical") {
    auto pts = enumerate_unit_rationals(5);
    REQUIRE(pts.size() == 5);
    CHECK(pts[0] == Rational(1, 2));
    CHECK(pts[1] == Rational(1, 3));
    CHECK(pts[2] == Rational(2, 3));
    CHECK(pts[3] == Rational(1, 4));
    CHECK(pts[4] == Rational(3, 4));
}
