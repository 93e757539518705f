#include "tonelli/riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace tonelli {

Partition Partition::equispaced(const Rational& lo, const Rational& hi, long n) {
    if (n < 1) throw std::invalid_argument("partition: N >= 1 required");
    if (lo >= hi) throw std::invalid_argument("partition: lo < hi required");
    Partition p;
    p.points.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) p.points.push_back(lo + (hi - lo) * Rational(i, n));
    return p;
}

Rational Partition::mesh() const {
    Rational m(0);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        m = std::max(m, Rational(points[i + 1] - points[i]));
    return m;
}

namespace {

// Interval of cell i in an equispaced partition; half-open except the last.
Interval cell_interval(const Rational& lo, const Rational& hi, long n, long i) {
    Rational a = lo + (hi - lo) * Rational(i, n);
    Rational b = lo + (hi - lo) * Rational(i + 1, n);
    return i + 1 == n ? Interval::closed(a, b)
                      : Interval(a, b, Topology::half_open_hi);
}

CellBounds sampled_cell_bounds(const QCFunction& f, const Interval& iv) {
    // 3-point sampling with one bisection level; conservative widening by 2.
    Rational w = iv.length();
    double mn = 0, mx = 0;
    bool first = true;
    for (int i = 0; i <= 4; ++i) {
        Rational x = iv.lo() + w * Rational(i, 4);
        double v = f.eval(point1(x)).dbl();
        if (first) {
            mn = mx = v;
            first = false;
        } else {
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
    }
    double spread = mx - mn;
    CellBounds b;
    b.lo = Value::sampled(mn - spread);
    b.hi = Value::sampled(mx + spread);
    b.certified = false;
    return b;
}

DarbouxPair darboux_fast(const QCFunction& f, const Interval& interval, long n) {
    const double lo = rat_to_double(interval.lo()), hi = rat_to_double(interval.hi());
    const double w = (hi - lo) / static_cast<double>(n);
    double sum_lo = 0, sum_hi = 0;
    double prev = lo;
    for (long i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
        auto [cl, ch] = f.extrema_fast1(prev, x);
        sum_lo += cl;
        sum_hi += ch;
        prev = x;
    }
    DarbouxPair out;
    out.lower = Value::sampled(sum_lo * w);
    out.upper = Value::sampled(sum_hi * w);
    out.certified = true;  // up to floating-point rounding
    return out;
}

}  // namespace

DarbouxPair darboux(const QCFunction& f, const Interval& interval, long n) {
    if (n < 1) throw std::invalid_argument("darboux: N >= 1 required");
    if (f.extrema_fast1 && n > 4096) return darboux_fast(f, interval, n);
    if (!f.has_extrema() && !f.bound)
        throw std::domain_error("UnboundedFunction: no bound or extrema path for Darboux sums");
    Value sum_lo = Value::exact(Rational(0)), sum_hi = Value::exact(Rational(0));
    bool certified = true;
    Rational w = interval.length() / n;
    Value wv = Value::exact(w);
    for (long i = 0; i < n; ++i) {
        Interval cell = cell_interval(interval.lo(), interval.hi(), n, i);
        CellBounds b = f.has_extrema() ? f.extrema(Rectangle({cell}))
                                       : sampled_cell_bounds(f, cell);
        certified = certified && b.certified;
        sum_lo = sum_lo + b.lo * wv;
        sum_hi = sum_hi + b.hi * wv;
    }
    DarbouxPair out;
    out.lower = sum_lo;
    out.upper = sum_hi;
    out.certified = certified;
    return out;
}

RiemannResult riemann_integrate(const QCFunction& f, const Interval& interval, double tol,
                                int max_levels) {
    RiemannResult res;
    double prev_gap = -1;
    int prev_level = -1;
    int stall = 0;
    int level = 0;
    while (level <= max_levels) {
        long n = 1L << level;
        DarbouxPair d = darboux(f, interval, n);
        double gap = d.upper.dbl() - d.lower.dbl();
        res.value = (d.lower + d.upper) * Value::exact(Rational(1, 2));
        res.achieved_gap = gap;
        res.cells = n;
        res.levels = level;
        if (gap <= tol) {
            res.converged = true;
            return res;
        }
        if (prev_gap >= 0 && gap > 0.9 * prev_gap) {
            if (++stall >= 3) break;  // the bracket has stopped shrinking
        } else {
            stall = 0;
        }
        int next = level + 1;
        if (prev_gap > 0 && gap > 0 && level > prev_level) {
            // certified brackets contract at a steady per-level rate; jump to
            // the predicted level instead of walking every refinement
            double per_level = std::log2(prev_gap / gap) / (level - prev_level);
            if (per_level > 0.5) {
                int predicted = level + static_cast<int>(std::ceil(std::log2(gap / tol) / per_level));
                next = std::min(std::max(next, predicted), max_levels);
            }
        }
        prev_gap = gap;
        prev_level = level;
        level = next;
    }
    res.converged = false;
    return res;
}

std::vector<Value> oscillation_at(const QCFunction& f, const Rational& x0,
                                  const std::vector<Rational>& radii) {
    if (!f.has_extrema())
        throw std::domain_error("oscillation_at: certified extrema required");
    const Interval& dom = f.domain.side(0);
    std::vector<Value> out;
    std::optional<double> running;
    for (const auto& r : radii) {
        if (r <= 0) throw std::invalid_argument("oscillation_at: radii must be positive");
        Rational lo = x0 - r, hi = x0 + r;
        if (!dom.lo_infinite()) lo = std::max(lo, dom.lo());
        if (!dom.hi_infinite()) hi = std::min(hi, dom.hi());
        CellBounds b = f.extrema(Rectangle({Interval::open(lo, hi)}));
        Value omega = b.hi - b.lo;
        // estimates of nested balls may only shrink
        if (running && omega.dbl() > *running) {
            out.push_back(out.back());
        } else {
            running = omega.dbl();
            out.push_back(omega);
        }
    }
    return out;
}

DiniResult dini_test(const QCFunction& f, const Interval& interval, const Rational& alpha,
                     const Rational& eps, long max_n) {
    if (alpha <= 0 || eps <= 0)
        throw std::invalid_argument("dini_test: alpha > 0 and eps > 0 required");
    if (!f.has_extrema()) throw std::domain_error("dini_test: certified extrema required");
    DiniResult res;
    bool first = true;
    for (long n = 2; n <= max_n; n *= 2) {
        Rational heavy(0);
        Rational w = interval.length() / n;
        for (long i = 0; i < n; ++i) {
            Interval cell = cell_interval(interval.lo(), interval.hi(), n, i);
            CellBounds b = f.extrema(Rectangle({cell}));
            Value omega = b.hi - b.lo;
            bool is_heavy = omega.is_exact() ? omega.rat() >= alpha
                                             : omega.dbl() >= rat_to_double(alpha);
            if (is_heavy) heavy += w;
        }
        if (first || heavy < res.heavy_length) {
            res.heavy_length = heavy;
            res.cells = n;
            first = false;
        }
        if (heavy < eps) {
            res.pass = true;
            res.witness = Partition::equispaced(interval.lo(), interval.hi(), n);
            res.heavy_length = heavy;
            res.cells = n;
            return res;
        }
    }
    res.pass = false;
    return res;
}

Rational riemann_zero_bound(const Multirectangle& delta, const Rational& m_bound) {
    return m_bound * length(delta);
}

DarbouxPair darboux_nd(const QCFunction& f, const Rectangle& rect, long n) {
    const int d = f.dim;
    if (rect.dim() != d) throw std::invalid_argument("darboux_nd: rectangle dimension mismatch");
    if (d == 2 && f.extrema_fast2 && n >= 128) {
        double x0 = rat_to_double(rect.side(0).lo()), x1 = rat_to_double(rect.side(0).hi());
        double y0 = rat_to_double(rect.side(1).lo()), y1 = rat_to_double(rect.side(1).hi());
        double dx = (x1 - x0) / n, dy = (y1 - y0) / n;
        double sum_lo = 0, sum_hi = 0;
        for (long i = 0; i < n; ++i) {
            double cx0 = x0 + dx * i, cx1 = x0 + dx * (i + 1);
            for (long j = 0; j < n; ++j) {
                double cy0 = y0 + dy * j, cy1 = y0 + dy * (j + 1);
                auto [lo, hi] = f.extrema_fast2(cx0, cx1, cy0, cy1);
                sum_lo += lo;
                sum_hi += hi;
            }
        }
        DarbouxPair out;
        out.lower = Value::sampled(sum_lo * dx * dy);
        out.upper = Value::sampled(sum_hi * dx * dy);
        out.certified = true;
        return out;
    }
    if (!f.has_extrema()) throw std::domain_error("darboux_nd: certified extrema required");
    std::vector<long> idx(static_cast<std::size_t>(d), 0);
    Value sum_lo = Value::exact(Rational(0)), sum_hi = Value::exact(Rational(0));
    bool certified = true;
    Rational cell_vol(1);
    for (int k = 0; k < d; ++k) cell_vol *= rect.side(k).length() / n;
    Value vol = Value::exact(cell_vol);
    while (true) {
        std::vector<Interval> sides;
        sides.reserve(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            sides.push_back(cell_interval(rect.side(k).lo(), rect.side(k).hi(), n,
                                          idx[static_cast<std::size_t>(k)]));
        CellBounds b = f.extrema(Rectangle(std::move(sides)));
        certified = certified && b.certified;
        sum_lo = sum_lo + b.lo * vol;
        sum_hi = sum_hi + b.hi * vol;
        int k = 0;
        for (; k < d; ++k) {
            auto kk = static_cast<std::size_t>(k);
            if (idx[kk] + 1 < n) {
                ++idx[kk];
                break;
            }
            idx[kk] = 0;
        }
        if (k == d) break;
    }
    DarbouxPair out;
    out.lower = sum_lo;
    out.upper = sum_hi;
    out.certified = certified;
    return out;
}

RiemannResult riemann_integrate_nd(const QCFunction& f, const Rectangle& rect, double tol,
                                   int max_levels) {
    RiemannResult res;
    double prev_gap = -1;
    int stall = 0;
    for (int level = 0; level <= max_levels; ++level) {
        long n = 1L << level;
        DarbouxPair d = darboux_nd(f, rect, n);
        double gap = d.upper.dbl() - d.lower.dbl();
        res.value = (d.lower + d.upper) * Value::exact(Rational(1, 2));
        res.achieved_gap = gap;
        res.cells = n;
        res.levels = level;
        if (gap <= tol) {
            res.converged = true;
            return res;
        }
        if (prev_gap >= 0 && gap > 0.9 * prev_gap) {
            if (++stall >= 3) break;
        } else {
            stall = 0;
        }
        prev_gap = gap;
    }
    res.converged = false;
    return res;
}

}  // namespace tonelli
