#include "tonelli/lebesgue.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

namespace tonelli {

namespace {

Rational rationalize_upper(double x) {
    // exact rational >= x, compact enough for reports
    if (x <= 0) return Rational(0);
    double scaled = std::ceil(x * 1e12);
    return Rational(BigInt(scaled), BigInt("1000000000000"));
}

bool covers_equal(const Multirectangle& a, const Multirectangle& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a.component(i) == b.component(i))) return false;
    return true;
}

// Associated-extension evaluator for a 1-D stage with certified extrema
// assembled from the restriction's extrema on K and the interpolation values
// on the gaps.
QCFunction make_stage_function(const QCFunction& f, const WitnessCover& w, const Rectangle& box) {
    ClosedComplementDomain dom{box, w.cover};
    auto re = w.restricted_eval;
    auto ext = std::make_shared<Extension1D>(
        dom, [re](const Rational& x) { return re(point1(x)); });
    QCFunction g;
    g.name = "stage(" + f.name + ")";
    g.dim = 1;
    g.domain = box;
    g.eval = [ext](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact()) return ext->at(x.rat());
        return Value::sampled(ext->at(x.dbl()));
    };
    g.bound = f.bound;
    g.tags.bounded = f.tags.bounded;
    g.tags.continuous = true;
    if (w.restricted_extrema) {
        auto rx = w.restricted_extrema;
        g.extrema = [ext, rx](const Rectangle& cell) {
            const Interval& iv = cell.side(0);
            bool first = true;
            CellBounds out;
            out.certified = true;
            auto accumulate = [&](const CellBounds& b) {
                if (first) {
                    out.lo = b.lo;
                    out.hi = b.hi;
                    first = false;
                } else {
                    out.lo = vmin(out.lo, b.lo);
                    out.hi = vmax(out.hi, b.hi);
                }
                out.certified = out.certified && b.certified;
            };
            const auto& ks = ext->k_intervals();
            Rational cursor = iv.lo();
            for (std::size_t i = 0; i < ks.size(); ++i) {
                auto [ok, overlap] = ks[i].intersect(Interval::closed(iv.lo(), iv.hi()));
                if (ok && !overlap.degenerate())
                    accumulate(rx(Rectangle({overlap})));
                else if (ok)
                    accumulate(CellBounds{ext->at(overlap.lo()), ext->at(overlap.lo()), true});
            }
            // gap parts are linear: endpoint values of the clipped gap
            auto gap_part = [&](const Rational& a, const Rational& b) {
                Rational lo = std::max(a, iv.lo()), hi = std::min(b, iv.hi());
                if (lo > hi) return;
                accumulate(CellBounds{ext->at(lo), ext->at(lo), true});
                accumulate(CellBounds{ext->at(hi), ext->at(hi), true});
            };
            if (!ks.empty()) {
                gap_part(iv.lo(), ks.front().lo());
                for (std::size_t i = 0; i + 1 < ks.size(); ++i)
                    gap_part(ks[i].hi(), ks[i + 1].lo());
                gap_part(ks.back().hi(), iv.hi());
            }
            (void)cursor;
            if (first) {  // cell fell entirely outside everything tracked
                out.lo = out.hi = ext->at(iv.lo());
                out.certified = true;
            }
            return out;
        };
    } else if (f.bound) {
        Rational m = *f.bound;
        g.extrema = [m](const Rectangle&) {
            return CellBounds{Value::exact(-m), Value::exact(m), true};
        };
    }
    return g;
}

struct StageOutcome {
    Value value;
    Rational tol;
    bool exact;
};

StageOutcome run_stage_1d(const QCFunction& f, const WitnessCover& w, const Rectangle& box,
                          double riemann_tol) {
    const Interval& side = box.side(0);
    // restriction constant c: the unique Tietze extension is the constant
    if (w.restriction == WitnessCover::Restriction::constant)
        return {Value::exact(w.constant_value * side.length()), Rational(0), true};
    // exact piecewise-linear path
    if (w.restricted_piecewise) {
        ClosedComplementDomain dom{box, w.cover};
        auto re = w.restricted_eval;
        Extension1D ext(dom, [re](const Rational& x) { return re(point1(x)); });
        auto pw = ext.piecewise(w.restricted_piecewise);
        if (pw) return {Value::exact(pw->integral(side.lo(), side.hi())), Rational(0), true};
    }
    // numeric path: Darboux on the associated extension
    if (w.cover.empty()) {
        RiemannResult r = riemann_integrate(f, side, riemann_tol, 26);
        return {r.value, rationalize_upper(r.achieved_gap), false};
    }
    QCFunction g = make_stage_function(f, w, box);
    RiemannResult r = riemann_integrate(g, side, riemann_tol, 18);
    return {r.value, rationalize_upper(r.achieved_gap), false};
}

StageOutcome run_stage_nd(const QCFunction& f, const WitnessCover& w, const Rectangle& box,
                          double riemann_tol) {
    if (w.restriction == WitnessCover::Restriction::constant)
        return {Value::exact(w.constant_value * box.volume()), Rational(0), true};
    if (w.cover.empty()) {
        RiemannResult r = riemann_integrate_nd(f, box, riemann_tol, 11);
        return {r.value, rationalize_upper(r.achieved_gap), false};
    }
    if (f.indicator_set) {
        // characteristic of a multirectangle: exact measure of the clipped set
        Multirectangle clipped;
        for (const auto& comp : f.indicator_set->components()) {
            auto [ok, x] = comp.intersect(box);
            if (ok) clipped.add(std::move(x));
        }
        return {Value::exact(lambda_measure(clipped)), Rational(0), true};
    }
    // honest but slow: Tonelli averaging extension per evaluation point
    ClosedComplementDomain dom{box, w.cover};
    auto k = std::make_shared<BoxComplementK>(dom, 8);
    auto re = w.restricted_eval;
    QCFunction g;
    g.dim = f.dim;
    g.domain = box;
    g.eval = [k, re](const Point& p) {
        return Value::sampled(extend_nd(*k, re, p, 4).value);
    };
    g.bound = f.bound;
    DarbouxPair d = darboux_nd(g, box, 8);
    // coarse midpoint estimate with the bracket as tolerance
    Value mid = (d.lower + d.upper) * Value::exact(Rational(1, 2));
    return {mid, rationalize_upper(d.upper.dbl() - d.lower.dbl()), false};
}

// Once the cover intervals around distinct points are pairwise disjoint,
// every later stage of a piecewise restriction integrates to the same exact
// value (symmetric covers interpolate to the limit). Probing the cover once
// gives an order below which that holds; a witness of a finer order is a
// witness of every coarser one.
std::optional<Rational> witness_separation_floor(const QCFunction& f) {
    WitnessCover probe = f.witness(Rational(1, 4));
    if (probe.truncated || probe.cover.empty() || probe.cover.dim() != 1) return std::nullopt;
    std::vector<Rational> centers;
    for (const auto& comp : probe.cover.components())
        centers.push_back((comp.side(0).lo() + comp.side(0).hi()) / 2);
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    if (centers.size() <= 1) return std::nullopt;
    Rational sep = centers[1] - centers[0];
    for (std::size_t i = 2; i < centers.size(); ++i)
        sep = std::min(sep, Rational(centers[i] - centers[i - 1]));
    return sep / 2;
}

}  // namespace

IntegralResult integrate_bounded(const QCFunction& f, const Rectangle& box, int stages,
                                 double riemann_tol) {
    if (box.dim() != f.dim) throw std::invalid_argument("integrate_bounded: dimension mismatch");
    if (!box.bounded()) throw std::invalid_argument("integrate_bounded: bounded box required");
    if (stages < 1) throw std::invalid_argument("integrate_bounded: stages >= 1 required");
    // bound certificate: explicit, a.e.-constant, or certified box extrema
    Rational m(0);
    bool have_m = false;
    if (f.bound) {
        m = *f.bound;
        have_m = true;
    } else if (f.has_extrema()) {
        CellBounds b = f.extrema(box);
        if (b.certified && b.lo.is_exact() && b.hi.is_exact()) {
            m = std::max(rat_abs(b.lo.rat()), rat_abs(b.hi.rat()));
            have_m = true;
        }
    }
    if (!have_m && f.ae_constant) {
        m = rat_abs(*f.ae_constant);
        have_m = true;
    }
    if (!have_m)
        throw std::invalid_argument("MissingBound: integrate_bounded needs |f| <= M");

    std::optional<Rational> floor_eps =
        f.dim == 1 && !f.ae_constant ? witness_separation_floor(f) : std::nullopt;

    IntegralResult res;
    res.exact = true;
    Multirectangle prev_cover;
    StageOutcome last{Value::exact(Rational(0)), Rational(0), true};
    bool have_last = false;
    for (long n = 1; n <= stages; ++n) {
        Rational order(1, n);
        if (floor_eps && *floor_eps < order) order = *floor_eps;
        WitnessCover w = f.witness(order);
        Rational wlen = w.truncated ? w.total_bound : length(w.cover);
        if (wlen >= Rational(1, n))
            throw std::runtime_error("WitnessBudgetExceeded: cover of order 1/" +
                                     std::to_string(n) + " too long");
        if (!have_last || !covers_equal(w.cover, prev_cover)) {
            last = f.dim == 1 ? run_stage_1d(f, w, box, riemann_tol)
                              : run_stage_nd(f, w, box, riemann_tol);
            have_last = true;
            prev_cover = w.cover;
        }
        res.trace.push_back(StageRow{n, wlen, last.value, last.tol});
        res.exact = res.exact && last.exact;
    }
    res.value = last.value;
    // Cauchy estimate: |I - I_n| <= 2 M / n, plus the stage quadrature slack.
    if (f.ae_constant) {
        // the restriction is the same constant at every order; the defining
        // limit is attained at every stage
        bool all_const_stages = true;
        for (const auto& row : res.trace)
            if (!(row.riemann_tol == 0)) all_const_stages = false;
        if (all_const_stages && res.exact)
            res.error_bound = Rational(0);
        else
            res.error_bound = 2 * m * Rational(1, stages) + last.tol;
    } else {
        res.error_bound = 2 * m * Rational(1, stages) + last.tol;
    }
    res.verdict = IntegralVerdict::number;
    return res;
}

namespace {

Rectangle clip_domain_to_radius(const Rectangle& domain, const Rational& r) {
    std::vector<Interval> sides;
    for (const auto& s : domain.sides()) {
        Rational lo = s.lo_infinite() ? Rational(-r) : std::max(s.lo(), Rational(-r));
        Rational hi = s.hi_infinite() ? r : std::min(s.hi(), r);
        if (lo > hi) return Rectangle();  // empty marker
        sides.push_back(Interval::closed(lo, hi));
    }
    return Rectangle(std::move(sides));
}

// Non-contracting increments over the tail of a monotone sequence.
bool looks_divergent(const std::vector<double>& t) {
    if (t.size() < 3) return false;
    double d1 = t[t.size() - 1] - t[t.size() - 2];
    double d2 = t[t.size() - 2] - t[t.size() - 3];
    double scale = std::max(1.0, std::abs(t.back()));
    return d1 > 1e-9 * scale && d1 >= 0.5 * d2 && d2 > 1e-9 * scale;
}

}  // namespace

IntegralResult integrate_general(const QCFunction& f, const TruncationSchedule& schedule,
                                 int stages, double riemann_tol) {
    QCFunction f_plus = truncate(f, TruncateMode::plus, Rational(0));
    QCFunction f_minus = truncate(f, TruncateMode::minus, Rational(0));
    std::vector<double> t_plus, t_minus;
    IntegralResult res;
    Value last_plus = Value::exact(Rational(0)), last_minus = Value::exact(Rational(0));
    Rational tol_acc(0);
    bool exact = true;
    for (int j = 0; j <= schedule.stages; ++j) {
        Rectangle box = clip_domain_to_radius(f.domain, schedule.radius(j));
        if (box.dim() == 0 || box.degenerate()) {
            t_plus.push_back(0);
            t_minus.push_back(0);
            continue;
        }
        QCFunction plus_trunc = truncate(f_plus, TruncateMode::minus, schedule.height(j));
        plus_trunc.bound = schedule.height(j);
        plus_trunc.tags.bounded = true;
        QCFunction minus_trunc = truncate(f_minus, TruncateMode::plus, -schedule.height(j));
        minus_trunc.bound = schedule.height(j);
        minus_trunc.tags.bounded = true;
        IntegralResult p = integrate_bounded(plus_trunc, box, stages, riemann_tol);
        IntegralResult q = integrate_bounded(minus_trunc, box, stages, riemann_tol);
        t_plus.push_back(p.value.dbl());
        t_minus.push_back(-q.value.dbl());
        last_plus = p.value;
        last_minus = q.value;
        tol_acc = p.error_bound + q.error_bound;
        exact = exact && p.exact && q.exact;
        res.trace.push_back(
            StageRow{j, schedule.radius(j), p.value + q.value, p.error_bound + q.error_bound});
    }
    bool plus_div = looks_divergent(t_plus);
    bool minus_div = looks_divergent(t_minus);
    if (plus_div && minus_div) {
        res.verdict = IntegralVerdict::not_integrable;
        res.value = Value::sampled(std::nan(""));
        return res;
    }
    if (plus_div) {
        res.verdict = IntegralVerdict::plus_infinity;
        res.value = Value::sampled(std::numeric_limits<double>::infinity());
        return res;
    }
    if (minus_div) {
        res.verdict = IntegralVerdict::minus_infinity;
        res.value = Value::sampled(-std::numeric_limits<double>::infinity());
        return res;
    }
    res.verdict = IntegralVerdict::number;
    res.value = last_plus + last_minus;
    // inner bounds plus a geometric tail estimate from the last increments
    double tail = 0;
    if (t_plus.size() >= 2) tail += 2 * std::abs(t_plus.back() - t_plus[t_plus.size() - 2]);
    if (t_minus.size() >= 2) tail += 2 * std::abs(t_minus.back() - t_minus[t_minus.size() - 2]);
    res.error_bound = tol_acc + rationalize_upper(tail);
    res.exact = exact && tail == 0;
    return res;
}

IntegralResult integrate_over_set(const QCFunction& f, const QCFunction& a,
                                  const TruncationSchedule& schedule, int stages,
                                  double riemann_tol) {
    return integrate_general(restrict_to_set(f, a), schedule, stages, riemann_tol);
}

Rational measure(const Multirectangle& a) { return lambda_measure(a); }

IntegralResult measure_via_integral(const QCFunction& indicator, const Rectangle& window) {
    if (!indicator.tags.characteristic)
        throw std::invalid_argument("NotCharacteristic: measure needs a characteristic descriptor");
    return integrate_bounded(indicator, window, 16, 1e-8);
}

SummabilityVerdict is_summable(const QCFunction& f, const TruncationSchedule& schedule,
                               int stages, double riemann_tol) {
    QCFunction g = qc_abs(f);
    SummabilityVerdict v;
    for (int j = 0; j <= schedule.stages; ++j) {
        Rectangle box = clip_domain_to_radius(f.domain, schedule.radius(j));
        if (box.dim() == 0 || box.degenerate()) {
            v.truncated.push_back(0);
            continue;
        }
        QCFunction trunc = truncate(g, TruncateMode::minus, schedule.height(j));
        trunc.bound = schedule.height(j);
        trunc.tags.bounded = true;
        IntegralResult r = integrate_bounded(trunc, box, stages, riemann_tol);
        v.truncated.push_back(r.value.dbl());
    }
    v.summable = !looks_divergent(v.truncated);
    if (v.summable && !v.truncated.empty()) v.bound = v.truncated.back();
    return v;
}

std::vector<AbsContRow> abs_continuity_probe(const QCFunction& f, const Interval& window,
                                             int trials, unsigned long seed) {
    if (!window.bounded()) throw std::invalid_argument("abs_continuity_probe: bounded window");
    std::mt19937_64 rng(seed);
    std::vector<AbsContRow> rows;
    const long denom = 1 << 12;
    for (int t = 0; t < trials; ++t) {
        // random disjoint multiinterval with lambda about |window| / 2^(t+1)
        Rational target = window.length() * rat_pow2(-(t + 1));
        int pieces = 1 + static_cast<int>(rng() % 3);
        Multirectangle o;
        Rational piece_len = target / pieces;
        for (int i = 0; i < pieces; ++i) {
            Rational start = window.lo() +
                             window.length() * Rational(static_cast<long>(rng() % denom), denom);
            Rational end = std::min(Rational(start + piece_len), window.hi());
            if (start < end) o.add(Rectangle::from_interval(Interval::open(start, end)));
        }
        if (o.empty()) continue;
        Rational lam = lambda_measure(o);
        QCFunction fo = restrict_to_set(f, indicator_of(o));
        IntegralResult r = integrate_bounded(
            fo, Rectangle::from_interval(Interval::closed(window.lo(), window.hi())), 8, 1e-9);
        AbsContRow row;
        row.lambda_o = lam;
        row.integral = r.value;
        if (f.bound) {
            if (r.value.is_exact())
                row.within_m_bound = rat_abs(r.value.rat()) <= *f.bound * lam;
            else
                row.within_m_bound =
                    std::abs(r.value.dbl()) <= rat_to_double(*f.bound * lam) + 1e-12;
        } else {
            row.within_m_bound = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::pair<MeasureBracket, MeasureBracket> exterior_interior_measure(const Multirectangle& e,
                                                                    const Rectangle& box,
                                                                    const Rational& eps) {
    Rational lam_e = e.empty() ? Rational(0) : lambda_measure(e);
    MeasureBracket outer;
    outer.lo = lam_e;
    outer.hi = e.empty() ? Rational(0) : length(outer_measure_bound(e, eps));
    if (outer.hi < outer.lo) outer.hi = outer.lo;  // inflation cannot undershoot the set
    // complement within the box (interiors suffice measure-wise)
    Multirectangle open_e;
    for (const auto& comp : e.components())
        if (!comp.interior().degenerate()) open_e.add(comp.interior());
    Multirectangle comp = box_minus_open(box.closure(), open_e);
    Rational lam_box = box.volume();
    Rational lam_comp = comp.empty() ? Rational(0) : lambda_measure(comp);
    MeasureBracket inner;
    inner.hi = lam_box - lam_comp;
    Rational comp_outer = comp.empty() ? Rational(0) : length(outer_measure_bound(comp, eps));
    inner.lo = lam_box - comp_outer;
    if (inner.lo > inner.hi) inner.lo = inner.hi;
    return {outer, inner};
}

}  // namespace tonelli
