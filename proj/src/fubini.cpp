#include "tonelli/fubini.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tonelli {

namespace {

Rational rationalize_upper(double x) {
    if (x <= 0) return Rational(0);
    double scaled = std::ceil(x * 1e12);
    return Rational(BigInt(scaled), BigInt("1000000000000"));
}

// Section of f along the outer axis at x0: a 1-D function of the remaining
// coordinate, inheriting certified extrema through degenerate cells.
QCFunction section_function(const QCFunction& f, int outer_axis, const Rational& x0) {
    QCFunction g;
    g.name = f.name + "@" + rat_str(x0);
    g.dim = 1;
    g.domain = Rectangle({f.domain.side(1 - outer_axis)});
    auto fe = f.eval;
    g.eval = [fe, outer_axis, x0](const Point& p) {
        Point q(2, Value::exact(Rational(0)));
        q[static_cast<std::size_t>(outer_axis)] = Value::exact(x0);
        q[static_cast<std::size_t>(1 - outer_axis)] = p.at(0);
        return fe(q);
    };
    g.bound = f.bound;
    g.tags.bounded = f.tags.bounded;
    g.tags.continuous = f.tags.continuous;
    g.tags.nonnegative = f.tags.nonnegative;
    if (f.extrema) {
        auto fx = f.extrema;
        g.extrema = [fx, outer_axis, x0](const Rectangle& cell) {
            std::vector<Interval> sides(2, Interval::point(x0));
            sides[static_cast<std::size_t>(1 - outer_axis)] = cell.side(0);
            return fx(Rectangle(std::move(sides)));
        };
    }
    return g;
}

// Exact iterated integral of a multirectangle indicator: the section measure
// is piecewise constant between the face coordinates of the components.
IntegralResult iterated_indicator(const Multirectangle& set, const Rectangle& rect,
                                  int outer_axis) {
    std::vector<Rational> cuts{rect.side(outer_axis).lo(), rect.side(outer_axis).hi()};
    for (const auto& comp : set.components()) {
        for (const Rational& c : {comp.side(outer_axis).lo(), comp.side(outer_axis).hi()})
            if (c > cuts[0] && c < cuts[1]) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    Rational total(0);
    const Interval& inner_side = rect.side(1 - outer_axis);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        SectionResult sec = section(set, outer_axis, mid);
        Multirectangle clipped;
        for (const auto& comp : sec.slice.components()) {
            auto [ok, x] = comp.intersect(Rectangle({inner_side}));
            if (ok) clipped.add(std::move(x));
        }
        Rational lam = clipped.empty() ? Rational(0) : lambda_measure(clipped);
        total += lam * (cuts[i + 1] - cuts[i]);
    }
    IntegralResult res;
    res.value = Value::exact(total);
    res.exact = true;
    return res;
}

}  // namespace

IntegralResult iterated_integrate(const QCFunction& f, const Rectangle& rect, int outer_axis,
                                  double tol) {
    if (f.dim != 2 || rect.dim() != 2)
        throw std::invalid_argument("iterated_integrate: two dimensions expected");
    if (outer_axis != 0 && outer_axis != 1)
        throw std::invalid_argument("iterated_integrate: outer axis must be 0 or 1");
    if (!rect.bounded()) throw std::invalid_argument("iterated_integrate: bounded rectangle");
    if (f.indicator_set) {
        Multirectangle clipped;
        for (const auto& comp : f.indicator_set->components()) {
            auto [ok, x] = comp.intersect(rect);
            if (ok) clipped.add(std::move(x));
        }
        return iterated_indicator(clipped, rect, outer_axis);
    }
    const Interval& outer_side = rect.side(outer_axis);
    const Interval& inner_side = rect.side(1 - outer_axis);
    const long cells = 512;
    double inner_tol = tol / 4;
    // trapezoid over the sampled outer function
    std::vector<double> values(static_cast<std::size_t>(cells) + 1);
    double inner_err_acc = 0;
    for (long i = 0; i <= cells; ++i) {
        Rational x = outer_side.lo() + outer_side.length() * Rational(i, cells);
        QCFunction g = section_function(f, outer_axis, x);
        RiemannResult inner = riemann_integrate(g, inner_side, inner_tol, 16);
        if (!inner.converged)
            throw std::runtime_error("InnerNotIntegrable: section at " + rat_str(x));
        values[static_cast<std::size_t>(i)] = inner.value.dbl();
        inner_err_acc = std::max(inner_err_acc, inner.achieved_gap);
    }
    double w = rat_to_double(outer_side.length()) / cells;
    double total = 0;
    for (long i = 0; i < cells; ++i)
        total += 0.5 * (values[static_cast<std::size_t>(i)] + values[static_cast<std::size_t>(i) + 1]) * w;
    IntegralResult res;
    res.value = Value::sampled(total);
    // outer discretization: the sampled function is Lipschitz with constant
    // L * |inner side| when f is
    double outer_err = 0;
    if (f.lipschitz) {
        double li = rat_to_double(*f.lipschitz) * rat_to_double(inner_side.length());
        outer_err = li * w * rat_to_double(outer_side.length()) / 2;
    } else {
        outer_err = tol;  // uncertified; reported as the requested tolerance
    }
    res.error_bound =
        rationalize_upper(outer_err + inner_err_acc * rat_to_double(outer_side.length()));
    return res;
}

ReductionReport fubini_check(const QCFunction& f, const Rectangle& rect, double tol) {
    ReductionReport rep;
    // Tonelli gate first
    bool gate_ok;
    if (rect.bounded() && f.bound) {
        gate_ok = true;  // bounded function on a bounded rectangle
    } else {
        QCFunction g = f;
        g.domain = rect;
        SummabilityVerdict s = is_summable(qc_abs(g));
        gate_ok = s.summable;
    }
    if (!gate_ok) {
        rep.not_summable = true;
        rep.pass = false;
        return rep;
    }
    rep.direct = integrate_bounded(f, rect, 8, tol);
    rep.iterated_outer_x = iterated_integrate(f, rect, 0, tol);
    rep.iterated_outer_y = iterated_integrate(f, rect, 1, tol);
    rep.gap_x = std::abs(rep.direct.value.dbl() - rep.iterated_outer_x.value.dbl());
    rep.gap_y = std::abs(rep.direct.value.dbl() - rep.iterated_outer_y.value.dbl());
    double budget_x = rat_to_double(rep.direct.error_bound + rep.iterated_outer_x.error_bound);
    double budget_y = rat_to_double(rep.direct.error_bound + rep.iterated_outer_y.error_bound);
    rep.pass = rep.gap_x <= budget_x + tol && rep.gap_y <= budget_y + tol;
    return rep;
}

TonelliVerdict tonelli_gate(const QCFunction& f, const TruncationSchedule& schedule, double tol) {
    if (!f.tags.nonnegative)
        throw std::invalid_argument("tonelli_gate: nonnegative integrand required");
    TonelliVerdict v;
    for (int j = 0; j <= schedule.stages; ++j) {
        Rational r = schedule.radius(j);
        std::vector<Interval> sides;
        bool empty = false;
        for (const auto& s : f.domain.sides()) {
            Rational lo = s.lo_infinite() ? Rational(-r) : std::max(s.lo(), Rational(-r));
            Rational hi = s.hi_infinite() ? r : std::min(s.hi(), r);
            if (lo >= hi) empty = true;
            sides.push_back(Interval::closed(lo, hi));
        }
        if (empty) {
            v.outer_truncated.push_back(0);
            continue;
        }
        Rectangle box(std::move(sides));
        QCFunction trunc = truncate(f, TruncateMode::minus, schedule.height(j));
        trunc.bound = schedule.height(j);
        trunc.tags.bounded = true;
        IntegralResult it = iterated_integrate(trunc, box, 0, tol);
        v.outer_truncated.push_back(it.value.dbl());
    }
    // monotone sequence: non-contracting increments flag divergence
    bool divergent = false;
    if (v.outer_truncated.size() >= 3) {
        double d1 = v.outer_truncated[v.outer_truncated.size() - 1] -
                    v.outer_truncated[v.outer_truncated.size() - 2];
        double d2 = v.outer_truncated[v.outer_truncated.size() - 2] -
                    v.outer_truncated[v.outer_truncated.size() - 3];
        double scale = std::max(1.0, std::abs(v.outer_truncated.back()));
        divergent = d1 > 1e-6 * scale && d1 >= 0.5 * d2 && d2 > 1e-6 * scale;
    }
    v.summable = !divergent;
    return v;
}

SectionIdentityReport section_identity_check(const Multirectangle& a, int axis) {
    if (a.empty()) {
        SectionIdentityReport rep;
        rep.volume = rep.iterated = Rational(0);
        rep.exact_match = true;
        return rep;
    }
    if (!a.bounded())
        throw std::invalid_argument("section_identity_check: bounded set required");
    SectionIdentityReport rep;
    rep.volume = lambda_measure(a);
    std::vector<Rational> cuts;
    for (const auto& comp : a.components()) {
        cuts.push_back(comp.side(axis).lo());
        cuts.push_back(comp.side(axis).hi());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    rep.skipped_faces = cuts;  // the a.e. exception set of the lemma
    Rational total(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational mid = (cuts[i] + cuts[i + 1]) / 2;
        SectionResult sec = section(a, axis, mid);
        Rational lam = sec.slice.empty() ? Rational(0) : lambda_measure(sec.slice);
        total += lam * (cuts[i + 1] - cuts[i]);
    }
    rep.iterated = total;
    rep.exact_match = rep.iterated == rep.volume;
    return rep;
}

}  // namespace tonelli
