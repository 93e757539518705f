#include <cmath>
#include <stdexcept>

#include "tonelli/cantor.hpp"
#include "tonelli/qc.hpp"
#include "tonelli/stern_brocot.hpp"

namespace tonelli {

namespace {

Rectangle unit_interval_domain() {
    return Rectangle::from_interval(Interval::closed(Rational(0), Rational(1)));
}
Rectangle line_domain() { return Rectangle::from_interval(Interval::whole_line()); }
Rectangle ray_domain() { return Rectangle::from_interval(Interval::ray_from(Rational(0), true)); }

WitnessCover empty_witness(const QCFunction& f) {
    WitnessCover w;
    w.restricted_eval = f.eval;
    w.restricted_piecewise = f.piecewise_on;
    return w;
}

void attach_empty_witness(QCFunction& f) {
    auto fe = f.eval;
    auto fp = f.piecewise_on;
    auto fx = f.extrema;
    f.witness = [fe, fp, fx](const Rational&) {
        WitnessCover w;
        w.restricted_eval = fe;
        w.restricted_piecewise = fp;
        w.restricted_extrema = fx;
        return w;
    };
}

// Finite point cover with the geometric budget; restriction keeps the raw
// evaluator (the points carry all discontinuities of the caller).
void attach_point_cover_witness(QCFunction& f, std::vector<Rational> pts) {
    auto fe = f.eval;
    auto fp = f.piecewise_on;
    auto fx = f.extrema;
    f.witness = [fe, fp, fx, pts](const Rational& eps) {
        WitnessCover w;
        w.cover = cover_countable(pts, eps);
        w.total_bound = length(w.cover);
        w.restricted_eval = fe;
        w.restricted_piecewise = fp;
        w.restricted_extrema = fx;
        return w;
    };
}

// Truncated cover of all rationals of [0,1]; the restriction to the full
// complement is identically `c`.
void attach_rational_cover_witness(QCFunction& f, Rational c, std::size_t shown = 32) {
    f.witness = [c, shown](const Rational& eps) {
        std::vector<Rational> pts{Rational(0), Rational(1)};
        auto inner = enumerate_unit_rationals(shown);
        pts.insert(pts.end(), inner.begin(), inner.end());
        WitnessCover w;
        w.cover = cover_countable(pts, eps);
        w.truncated = true;
        w.total_bound = eps / 2;
        w.restriction = WitnessCover::Restriction::constant;
        w.constant_value = c;
        Value cv = Value::exact(c);
        w.restricted_eval = [cv](const Point&) { return cv; };
        w.restricted_piecewise = [c](const Rational& lo,
                                     const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D::constant(lo, hi, c);
        };
        w.restricted_extrema = [cv](const Rectangle&) {
            CellBounds b;
            b.lo = b.hi = cv;
            b.certified = true;
            return b;
        };
        return w;
    };
}

void attach_piecewise_extrema(QCFunction& f) {
    auto pw = f.piecewise_on;
    auto fe = f.eval;
    f.extrema = [pw, fe](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        CellBounds b;
        if (iv.degenerate()) {
            Value v = fe(point1(iv.lo()));
            b.lo = b.hi = v;
            b.certified = true;
            return b;
        }
        auto p = pw(iv.lo(), iv.hi());
        if (!p || p->empty()) {
            b.lo = b.hi = Value::exact(Rational(0));
            b.certified = true;
            return b;
        }
        auto [mn, mx] = p->extrema();
        b.lo = Value::exact(mn);
        b.hi = Value::exact(mx);
        b.certified = true;
        return b;
    };
}

// Lipschitz-certified sampled extrema over a 1-D cell: true sup within
// L*w/(2(m-1)) of the sampled sup.
void attach_lipschitz_extrema(QCFunction& f, const Rational& lip, int samples = 9) {
    auto fe = f.eval;
    f.extrema = [fe, lip, samples](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        CellBounds b;
        if (iv.degenerate()) {
            Value v = fe(point1(iv.lo()));
            b.lo = b.hi = v;
            b.certified = true;
            return b;
        }
        Rational w = iv.length();
        Rational slack = lip * w / (2 * (samples - 1));
        Value mn, mx;
        for (int i = 0; i < samples; ++i) {
            Rational x = iv.lo() + w * Rational(i, samples - 1);
            Value v = fe(point1(x));
            if (i == 0) {
                mn = mx = v;
            } else {
                mn = vmin(mn, v);
                mx = vmax(mx, v);
            }
        }
        b.lo = mn - Value::exact(slack);
        b.hi = mx + Value::exact(slack);
        b.certified = true;
        return b;
    };
}

void attach_monotone_extrema(QCFunction& f) {
    auto fe = f.eval;
    f.extrema = [fe](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        Value a = fe(point1(iv.lo())), b = fe(point1(iv.hi()));
        CellBounds out;
        out.lo = vmin(a, b);
        out.hi = vmax(a, b);
        out.certified = true;
        return out;
    };
}

QCFunction make_const(Rational c, Rectangle domain, int dim) {
    QCFunction f;
    f.name = "const:" + rat_str(c);
    f.dim = dim;
    f.domain = std::move(domain);
    Value cv = Value::exact(c);
    f.eval = [cv](const Point&) { return cv; };
    f.bound = rat_abs(c);
    f.ae_constant = c;
    f.tags.bounded = true;
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    f.tags.nonnegative = c >= 0;
    f.tags.characteristic = c == 0 || c == 1;
    if (dim == 1) {
        Rational cc = c;
        f.piecewise_on = [cc](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D::constant(lo, hi, cc);
        };
        double cd = rat_to_double(c);
        f.eval_fast1 = [cd](double) { return cd; };
        f.monotone1 = true;
    }
    f.lipschitz = Rational(0);
    CellBounds cb{cv, cv, true};
    f.extrema = [cb](const Rectangle&) { return cb; };
    double cd2 = rat_to_double(c);
    f.extrema_fast1 = [cd2](double, double) { return std::make_pair(cd2, cd2); };
    attach_empty_witness(f);
    return f;
}

QCFunction make_poly(std::vector<Rational> coeffs) {
    if (coeffs.empty()) coeffs.push_back(Rational(0));
    QCFunction f;
    f.name = "poly";
    f.dim = 1;
    f.domain = line_domain();
    f.eval = [coeffs](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact()) {
            Rational acc(0);
            for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x.rat() + coeffs[i];
            return Value::exact(acc);
        }
        double acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x.dbl() + rat_to_double(coeffs[i]);
        return Value::sampled(acc);
    };
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    const std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return make_const(coeffs[0], line_domain(), 1);
    if (deg == 1) {
        Rational a = coeffs[0], b = coeffs[1];
        f.piecewise_on = [a, b](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D({LinearPiece{lo, hi, a, b}});
        };
        attach_monotone_extrema(f);
        f.monotone1 = true;
    } else {
        // per-cell Lipschitz widening, derived from a coefficient bound
        auto fe = f.eval;
        f.extrema = [fe, coeffs](const Rectangle& cell) {
            const Interval& iv = cell.side(0);
            CellBounds b;
            if (iv.degenerate()) {
                b.lo = b.hi = fe(point1(iv.lo()));
                b.certified = true;
                return b;
            }
            Rational reach = std::max(rat_abs(iv.lo()), rat_abs(iv.hi()));
            if (reach < 1) reach = Rational(1);
            Rational lip(0);
            Rational pow_r(1);
            for (std::size_t i = 1; i < coeffs.size(); ++i) {
                lip += Rational(static_cast<long>(i)) * rat_abs(coeffs[i]) * pow_r;
                pow_r *= reach;
            }
            const int samples = 9;
            Rational w = iv.length();
            Rational slack = lip * w / (2 * (samples - 1));
            Value mn, mx;
            for (int i = 0; i < samples; ++i) {
                Rational x = iv.lo() + w * Rational(i, samples - 1);
                Value v = fe(point1(x));
                if (i == 0) {
                    mn = mx = v;
                } else {
                    mn = vmin(mn, v);
                    mx = vmax(mx, v);
                }
            }
            b.lo = mn - Value::exact(slack);
            b.hi = mx + Value::exact(slack);
            b.certified = true;
            return b;
        };
    }
    std::vector<double> cd;
    cd.reserve(coeffs.size());
    for (const auto& c : coeffs) cd.push_back(rat_to_double(c));
    f.eval_fast1 = [cd](double x) {
        double acc = 0;
        for (std::size_t i = cd.size(); i-- > 0;) acc = acc * x + cd[i];
        return acc;
    };
    auto horner = f.eval_fast1;
    if (deg == 1) {
        f.extrema_fast1 = [horner](double a, double b) {
            double va = horner(a), vb = horner(b);
            return std::make_pair(std::min(va, vb), std::max(va, vb));
        };
    } else if (deg == 2) {
        // exact cell extrema: endpoints plus the vertex when inside
        double c1 = cd[1], c2 = cd[2];
        f.extrema_fast1 = [horner, c1, c2](double a, double b) {
            double lo = horner(a), hi = horner(a);
            double vb = horner(b);
            lo = std::min(lo, vb);
            hi = std::max(hi, vb);
            double vx = -c1 / (2 * c2);
            if (vx > a && vx < b) {
                double vv = horner(vx);
                lo = std::min(lo, vv);
                hi = std::max(hi, vv);
            }
            return std::make_pair(lo, hi);
        };
    } else {
        f.extrema_fast1 = [horner, cd](double a, double b) {
            double reach = std::max({1.0, std::abs(a), std::abs(b)});
            double lip = 0, pow_r = 1;
            for (std::size_t i = 1; i < cd.size(); ++i) {
                lip += static_cast<double>(i) * std::abs(cd[i]) * pow_r;
                pow_r *= reach;
            }
            double mid = horner((a + b) / 2);
            double slack = lip * (b - a) / 2;
            return std::make_pair(mid - slack, mid + slack);
        };
    }
    attach_empty_witness(f);
    return f;
}

QCFunction make_power(long n) {
    if (n < 0) throw std::invalid_argument("power: nonnegative exponent required");
    QCFunction f;
    f.name = "power:" + std::to_string(n);
    f.dim = 1;
    f.domain = unit_interval_domain();
    f.eval = [n](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact()) {
            if (x.rat() == 0) return Value::exact(Rational(n == 0 ? 1 : 0));
            if (x.rat() == 1) return Value::exact(Rational(1));
            if (n <= 64) return Value::exact(rat_pow(x.rat(), static_cast<unsigned long>(n)));
            return Value::sampled(std::pow(rat_to_double(x.rat()), static_cast<double>(n)));
        }
        return Value::sampled(std::pow(x.dbl(), static_cast<double>(n)));
    };
    f.bound = Rational(1);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    f.monotone1 = true;
    f.eval_fast1 = [n](double x) { return std::pow(x, static_cast<double>(n)); };
    f.extrema_fast1 = [n](double a, double b) {
        return std::make_pair(std::pow(a, static_cast<double>(n)),
                              std::pow(b, static_cast<double>(n)));
    };
    if (n <= 1) {
        Rational b(n);  // x^0 = 1, x^1 = x
        f.piecewise_on = [n, b](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D({LinearPiece{lo, hi, Rational(n == 0 ? 1 : 0), b}});
        };
    }
    attach_monotone_extrema(f);
    attach_empty_witness(f);
    return f;
}

QCFunction make_step(Rational h, Rational hh, Rational k, Rational f1, Rational f2) {
    if (!(h < hh && hh < k)) throw std::invalid_argument("step: need h < hhat < k");
    QCFunction f;
    f.name = "step";
    f.dim = 1;
    f.domain = Rectangle::from_interval(Interval::closed(h, k));
    f.eval = [hh, f1, f2](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact()) {
            if (x.rat() < hh) return Value::exact(f1);
            if (x.rat() > hh) return Value::exact(f2);
            return Value::exact((f1 + f2) / 2);
        }
        return Value::sampled(x.dbl() < rat_to_double(hh) ? rat_to_double(f1) : rat_to_double(f2));
    };
    f.bound = std::max(rat_abs(f1), rat_abs(f2));
    f.tags.bounded = true;
    f.tags.ae_continuous = true;
    f.tags.nonnegative = f1 >= 0 && f2 >= 0;
    f.piecewise_on = [h, hh, k, f1, f2](const Rational& lo,
                                        const Rational& hi) -> std::optional<Piecewise1D> {
        Piecewise1D left = Piecewise1D::constant(std::max(lo, h), std::min(hi, hh), f1);
        Piecewise1D out = left;
        Piecewise1D right = Piecewise1D::constant(std::max(lo, hh), std::min(hi, k), f2);
        for (const auto& p : right.pieces()) out.append(p);
        return out;
    };
    double hhd = rat_to_double(hh), f1d = rat_to_double(f1), f2d = rat_to_double(f2);
    f.eval_fast1 = [hhd, f1d, f2d](double x) { return x < hhd ? f1d : f2d; };
    attach_piecewise_extrema(f);
    attach_point_cover_witness(f, {hh});
    return f;
}

QCFunction make_spike(long n) {
    if (n < 1) throw std::invalid_argument("spike: n >= 1 required");
    QCFunction f;
    f.name = "spike:" + std::to_string(n);
    f.dim = 1;
    f.domain = unit_interval_domain();
    Rational a(1, n), b(2, n), height(n);
    f.eval = [a, b, height](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact())
            return Value::exact(x.rat() > a && x.rat() <= b ? height : Rational(0));
        double xd = x.dbl();
        return Value::sampled(xd > rat_to_double(a) && xd <= rat_to_double(b)
                                  ? rat_to_double(height)
                                  : 0.0);
    };
    f.bound = height;
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.ae_continuous = true;
    f.piecewise_on = [a, b, height](const Rational& lo,
                                    const Rational& hi) -> std::optional<Piecewise1D> {
        Piecewise1D out = Piecewise1D::constant(lo, std::min(hi, a), Rational(0));
        Piecewise1D mid = Piecewise1D::constant(std::max(lo, a), std::min(hi, b), height);
        for (const auto& p : mid.pieces()) out.append(p);
        Piecewise1D tail = Piecewise1D::constant(std::max(lo, b), hi, Rational(0));
        for (const auto& p : tail.pieces()) out.append(p);
        return out;
    };
    attach_piecewise_extrema(f);
    attach_point_cover_witness(f, {a, b});
    return f;
}

QCFunction make_wide_spike(long n) {
    if (n < 1) throw std::invalid_argument("wide-spike: n >= 1 required");
    QCFunction f;
    f.name = "wide-spike:" + std::to_string(n);
    f.dim = 1;
    f.domain = ray_domain();
    Rational a(n), b(2 * n), height(1, n);
    f.eval = [a, b, height](const Point& p) {
        const Value& x = p.at(0);
        if (x.is_exact())
            return Value::exact(x.rat() > a && x.rat() <= b ? height : Rational(0));
        double xd = x.dbl();
        return Value::sampled(xd > rat_to_double(a) && xd <= rat_to_double(b)
                                  ? rat_to_double(height)
                                  : 0.0);
    };
    f.bound = height;
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.ae_continuous = true;
    f.piecewise_on = [a, b, height](const Rational& lo,
                                    const Rational& hi) -> std::optional<Piecewise1D> {
        Piecewise1D out = Piecewise1D::constant(lo, std::min(hi, a), Rational(0));
        Piecewise1D mid = Piecewise1D::constant(std::max(lo, a), std::min(hi, b), height);
        for (const auto& p : mid.pieces()) out.append(p);
        Piecewise1D tail = Piecewise1D::constant(std::max(lo, b), hi, Rational(0));
        for (const auto& p : tail.pieces()) out.append(p);
        return out;
    };
    attach_piecewise_extrema(f);
    attach_point_cover_witness(f, {a, b});
    return f;
}

QCFunction make_trapezoid(long n) {
    if (n < 1) throw std::invalid_argument("trapezoid: n >= 1 required");
    QCFunction f;
    f.name = "trapezoid:" + std::to_string(n);
    f.dim = 1;
    f.domain = ray_domain();
    Rational p0(n - 2), p1(n - 1), p2(n + 1), p3(n + 2);
    f.eval = [p0, p1, p2, p3](const Point& p) {
        const Value& x = p.at(0);
        Rational xr = x.is_exact() ? x.rat() : Rational(0);
        if (!x.is_exact()) {
            double xd = x.dbl();
            double a = rat_to_double(p0), b = rat_to_double(p1), c = rat_to_double(p2),
                   d = rat_to_double(p3);
            double v = 0;
            if (xd > a && xd < b)
                v = xd - a;
            else if (xd >= b && xd <= c)
                v = 1;
            else if (xd > c && xd < d)
                v = d - xd;
            return Value::sampled(v);
        }
        Rational v(0);
        if (xr > p0 && xr < p1)
            v = xr - p0;
        else if (xr >= p1 && xr <= p2)
            v = Rational(1);
        else if (xr > p2 && xr < p3)
            v = p3 - xr;
        if (v < 0) v = Rational(0);
        return Value::exact(v);
    };
    f.bound = Rational(1);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    f.piecewise_on = [p0, p1, p2, p3](const Rational& lo,
                                      const Rational& hi) -> std::optional<Piecewise1D> {
        std::vector<LinearPiece> ps;
        ps.push_back({lo, std::min(hi, std::max(lo, p0)), Rational(0), Rational(0)});
        ps.push_back({std::max(lo, p0), std::min(hi, p1), -p0, Rational(1)});
        ps.push_back({std::max(lo, p1), std::min(hi, p2), Rational(1), Rational(0)});
        ps.push_back({std::max(lo, p2), std::min(hi, p3), p3, Rational(-1)});
        ps.push_back({std::max(lo, std::min(hi, p3)), hi, Rational(0), Rational(0)});
        return Piecewise1D(std::move(ps));
    };
    attach_piecewise_extrema(f);
    attach_empty_witness(f);
    return f;
}

QCFunction make_dirichlet() {
    QCFunction f;
    f.name = "dirichlet";
    f.dim = 1;
    f.domain = unit_interval_domain();
    f.eval = [](const Point& p) {
        const Value& x = p.at(0);
        return Value::exact(Rational(x.is_exact() ? 1 : 0));
    };
    f.bound = Rational(1);
    f.ae_constant = Rational(0);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.characteristic = true;
    auto fe = f.eval;
    f.extrema = [fe](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        CellBounds b;
        if (iv.degenerate()) {
            b.lo = b.hi = fe(point1(iv.lo()));
        } else {  // rationals and irrationals are both dense
            b.lo = Value::exact(Rational(0));
            b.hi = Value::exact(Rational(1));
        }
        b.certified = true;
        return b;
    };
    attach_rational_cover_witness(f, Rational(0));
    return f;
}

QCFunction make_thomae() {
    QCFunction f;
    f.name = "thomae";
    f.dim = 1;
    f.domain = unit_interval_domain();
    f.eval = [](const Point& p) {
        const Value& x = p.at(0);
        if (!x.is_exact()) return Value::exact(Rational(0));
        if (x.rat() == 0) return Value::exact(Rational(1));
        return Value::exact(Rational(BigInt(1), rat_den(x.rat())));
    };
    f.bound = Rational(1);
    f.ae_constant = Rational(0);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.ae_continuous = true;  // continuous exactly at the irrationals
    f.extrema = [](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        CellBounds b;
        b.certified = true;
        if (iv.degenerate()) {
            Rational v = iv.lo() == 0 ? Rational(1) : Rational(BigInt(1), rat_den(iv.lo()));
            b.lo = b.hi = Value::exact(v);
            return b;
        }
        auto best = simplest_rational_in(iv);
        Rational sup(0);
        if (best) sup = *best == 0 ? Rational(1) : Rational(BigInt(1), rat_den(*best));
        b.lo = Value::exact(Rational(0));
        b.hi = Value::exact(sup);
        return b;
    };
    attach_rational_cover_witness(f, Rational(0));
    return f;
}

QCFunction make_qn_indicator(long n) {
    if (n < 1) throw std::invalid_argument("qn-indicator: n >= 1 required");
    auto pts = enumerate_unit_rationals(static_cast<std::size_t>(n));
    QCFunction f;
    f.name = "qn-indicator:" + std::to_string(n);
    f.dim = 1;
    f.domain = unit_interval_domain();
    f.eval = [pts](const Point& p) {
        const Value& x = p.at(0);
        if (!x.is_exact()) return Value::exact(Rational(0));
        for (const auto& q : pts)
            if (q == x.rat()) return Value::exact(Rational(1));
        return Value::exact(Rational(0));
    };
    f.bound = Rational(1);
    f.ae_constant = Rational(0);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.characteristic = true;
    f.tags.ae_continuous = true;
    f.piecewise_on = [](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
        return Piecewise1D::constant(lo, hi, Rational(0));  // a.e. representation
    };
    f.extrema = [pts](const Rectangle& cell) {
        const Interval& iv = cell.side(0);
        CellBounds b;
        b.certified = true;
        bool hit = false;
        for (const auto& q : pts)
            if (iv.contains(q)) {
                hit = true;
                break;
            }
        if (iv.degenerate()) {
            b.lo = b.hi = Value::exact(Rational(hit ? 1 : 0));
        } else {
            b.lo = Value::exact(Rational(0));
            b.hi = Value::exact(Rational(hit ? 1 : 0));
        }
        return b;
    };
    attach_point_cover_witness(f, pts);
    return f;
}

QCFunction make_cos_power(long m, long n) {
    if (m < 1 || m > 18) throw std::invalid_argument("cos-power: 1 <= m <= 18 required");
    if (n < 1) throw std::invalid_argument("cos-power: n >= 1 required");
    double fact = 1;
    BigInt fact_i(1);
    for (long i = 2; i <= m; ++i) {
        fact *= static_cast<double>(i);
        fact_i *= i;
    }
    QCFunction f;
    f.name = "cos-power:" + std::to_string(m) + "," + std::to_string(n);
    f.dim = 1;
    f.domain = unit_interval_domain();
    const double pi = 3.14159265358979323846;
    f.eval = [fact, n, pi](const Point& p) {
        double c = std::cos(fact * pi * p.at(0).dbl());
        return Value::sampled(std::pow(c * c, static_cast<double>(n)));
    };
    f.eval_fast1 = [fact, n, pi](double x) {
        double c = std::cos(fact * pi * x);
        return std::pow(c * c, static_cast<double>(n));
    };
    f.bound = Rational(1);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    // |d/dx cos^{2n}| <= 2 n m! pi < 2 n m! * 355/113
    f.lipschitz = Rational(2 * n) * Rational(fact_i) * Rational(355, 113);
    attach_lipschitz_extrema(f, *f.lipschitz);
    double lip_d = rat_to_double(*f.lipschitz);
    auto ef = f.eval_fast1;
    f.extrema_fast1 = [ef, lip_d](double a, double b) {
        double mid = ef((a + b) / 2);
        double slack = lip_d * (b - a) / 2;
        return std::make_pair(mid - slack, mid + slack);
    };
    attach_empty_witness(f);
    return f;
}

QCFunction make_exp_abs_y() {
    QCFunction f;
    f.name = "exp-abs-y";
    f.dim = 2;
    f.domain = Rectangle({Interval::whole_line(), Interval::whole_line()});
    f.eval = [](const Point& p) { return Value::sampled(std::exp(-std::abs(p.at(1).dbl()))); };
    f.bound = Rational(1);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.continuous = true;
    f.tags.ae_continuous = true;
    f.lipschitz = Rational(1);
    f.extrema = [](const Rectangle& cell) {
        const Interval& ys = cell.side(1);
        double lo_y = rat_to_double(ys.lo()), hi_y = rat_to_double(ys.hi());
        double near = (lo_y <= 0 && 0 <= hi_y) ? 0.0 : std::min(std::abs(lo_y), std::abs(hi_y));
        double far = std::max(std::abs(lo_y), std::abs(hi_y));
        CellBounds b;
        b.lo = Value::sampled(std::exp(-far));
        b.hi = Value::sampled(std::exp(-near));
        b.certified = true;
        return b;
    };
    f.extrema_fast2 = [](double, double, double y0, double y1) {
        double near = (y0 <= 0 && 0 <= y1) ? 0.0 : std::min(std::abs(y0), std::abs(y1));
        double far = std::max(std::abs(y0), std::abs(y1));
        return std::make_pair(std::exp(-far), std::exp(-near));
    };
    attach_empty_witness(f);
    return f;
}

}  // namespace

QCFunction indicator_of(const Multirectangle& set, std::string name) {
    QCFunction f;
    f.name = name.empty() ? "indicator:" + multirectangle_str(set) : std::move(name);
    f.dim = set.empty() ? 1 : set.dim();
    std::vector<Interval> whole(static_cast<std::size_t>(f.dim), Interval::whole_line());
    f.domain = Rectangle(std::move(whole));
    Multirectangle s = set;
    f.eval = [s](const Point& p) { return Value::exact(Rational(s.contains(p) ? 1 : 0)); };
    f.bound = Rational(1);
    f.tags.bounded = true;
    f.tags.nonnegative = true;
    f.tags.characteristic = true;
    f.tags.ae_continuous = true;
    f.indicator_set = set;
    if (f.dim == 1) {
        f.piecewise_on = [s](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            // union of the component intervals, clipped; 1 on covered
            // segments, 0 on the rest
            std::vector<std::pair<Rational, Rational>> segs;
            for (const auto& iv : s.intervals()) {
                Rational a = iv.lo_infinite() ? lo : std::max(lo, iv.lo());
                Rational b = iv.hi_infinite() ? hi : std::min(hi, iv.hi());
                if (a < b) segs.emplace_back(a, b);
            }
            std::sort(segs.begin(), segs.end());
            Piecewise1D out;
            Rational cursor = lo;
            for (const auto& [a, b] : segs) {
                if (a > cursor) out.append({cursor, a, Rational(0), Rational(0)});
                Rational from = std::max(cursor, a);
                if (from < b) out.append({from, b, Rational(1), Rational(0)});
                if (b > cursor) cursor = b;
            }
            if (cursor < hi) out.append({cursor, hi, Rational(0), Rational(0)});
            return out;
        };
        attach_piecewise_extrema(f);
    } else {
        f.extrema = [s](const Rectangle& cell) {
            CellBounds b;
            b.certified = true;
            bool meets = false, inside = false;
            for (const auto& comp : s.components()) {
                if (comp.closure().intersects(cell)) meets = true;
                if (comp.contains_rect(cell)) inside = true;
            }
            b.hi = Value::exact(Rational(meets ? 1 : 0));
            b.lo = Value::exact(Rational(inside ? 1 : 0));
            return b;
        };
    }
    // Witness: thin open boxes over every finite face.
    f.witness = [s, dim = f.dim](const Rational& eps) {
        WitnessCover w;
        Rational budget = eps / 4;
        for (const auto& comp : s.components()) {
            for (int k = 0; k < dim; ++k) {
                for (int side = 0; side < 2; ++side) {
                    const Interval& iv = comp.side(k);
                    if (side == 0 ? iv.lo_infinite() : iv.hi_infinite()) continue;
                    Rational at = side == 0 ? iv.lo() : iv.hi();
                    Rational delta = budget / 4;
                    for (int iter = 0; iter < 256; ++iter) {
                        Rational vol = 2 * delta;
                        for (int j = 0; j < dim; ++j) {
                            if (j == k) continue;
                            const Interval& js = comp.side(j);
                            if (js.lo_infinite() || js.hi_infinite()) {
                                vol = budget + 1;  // cannot build a finite face box
                                break;
                            }
                            vol *= js.length() + 2 * delta;
                        }
                        if (vol < budget) break;
                        delta /= 2;
                    }
                    std::vector<Interval> sides;
                    bool ok = true;
                    for (int j = 0; j < dim; ++j) {
                        const Interval& js = comp.side(j);
                        if (j == k) {
                            sides.push_back(Interval::open(at - delta, at + delta));
                        } else if (js.lo_infinite() || js.hi_infinite()) {
                            ok = false;
                            break;
                        } else {
                            sides.push_back(Interval::open(js.lo() - delta, js.hi() + delta));
                        }
                    }
                    if (ok) {
                        w.cover.add(Rectangle(std::move(sides)));
                        budget /= 2;
                    }
                }
            }
        }
        w.total_bound = w.cover.empty() ? Rational(0) : length(w.cover);
        Multirectangle ss = s;
        w.restricted_eval = [ss](const Point& p) {
            return Value::exact(Rational(ss.contains(p) ? 1 : 0));
        };
        return w;
    };
    // restricted_piecewise for the 1-D case mirrors piecewise_on
    if (f.dim == 1) {
        auto base_witness = f.witness;
        auto pw = f.piecewise_on;
        f.witness = [base_witness, pw](const Rational& eps) {
            WitnessCover w = base_witness(eps);
            w.restricted_piecewise = pw;
            return w;
        };
    }
    return f;
}

QCFunction separable_product(const QCFunction& u, const QCFunction& v) {
    if (u.dim != 1 || v.dim != 1)
        throw std::invalid_argument("prod(u;v): both factors must be one-dimensional");
    QCFunction f;
    f.name = "prod(" + u.name + ";" + v.name + ")";
    f.dim = 2;
    f.domain = Rectangle({u.domain.side(0), v.domain.side(0)});
    auto ue = u.eval, ve = v.eval;
    f.eval = [ue, ve](const Point& p) {
        return ue({p.at(0)}) * ve({p.at(1)});
    };
    if (u.bound && v.bound) f.bound = *u.bound * *v.bound;
    f.tags.bounded = u.tags.bounded && v.tags.bounded;
    f.tags.nonnegative = u.tags.nonnegative && v.tags.nonnegative;
    f.tags.continuous = u.tags.continuous && v.tags.continuous;
    f.tags.ae_continuous = u.tags.ae_continuous && v.tags.ae_continuous;
    f.tags.characteristic = u.tags.characteristic && v.tags.characteristic;
    if (u.extrema && v.extrema) {
        auto xu = u.extrema, xv = v.extrema;
        f.extrema = [xu, xv](const Rectangle& cell) {
            CellBounds a = xu(Rectangle({cell.side(0)}));
            CellBounds b = xv(Rectangle({cell.side(1)}));
            CellBounds out;
            out.certified = a.certified && b.certified;
            Value c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
            out.lo = vmin(vmin(c1, c2), vmin(c3, c4));
            out.hi = vmax(vmax(c1, c2), vmax(c3, c4));
            return out;
        };
    }
    if (u.lipschitz && v.lipschitz && u.bound && v.bound)
        f.lipschitz = *u.lipschitz * *v.bound + *v.lipschitz * *u.bound;
    if (u.monotone1 && v.monotone1 && u.eval_fast1 && v.eval_fast1) {
        auto uf = u.eval_fast1, vf = v.eval_fast1;
        f.extrema_fast2 = [uf, vf](double x0, double x1, double y0, double y1) {
            double cs[4] = {uf(x0) * vf(y0), uf(x0) * vf(y1), uf(x1) * vf(y0), uf(x1) * vf(y1)};
            double lo = cs[0], hi = cs[0];
            for (double c : cs) {
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            return std::make_pair(lo, hi);
        };
    }
    if (u.tags.continuous && v.tags.continuous) {
        attach_empty_witness(f);
    } else {
        // Strip witness over a bounded domain: covers of the factors crossed
        // with the (slightly inflated) other side.
        QCFunction uc = u, vc = v;
        Rectangle dom = f.domain;
        auto fe = f.eval;
        f.witness = [uc, vc, dom, fe](const Rational& eps) {
            if (!dom.bounded())
                throw std::domain_error("separable witness needs a bounded domain");
            Rational wx = dom.side(0).length() + 2, wy = dom.side(1).length() + 2;
            WitnessCover a = uc.witness(eps / (2 * wy));
            WitnessCover b = vc.witness(eps / (2 * wx));
            WitnessCover w;
            for (const auto& r : a.cover.components())
                w.cover.add(Rectangle({r.side(0), Interval::open(dom.side(1).lo() - 1,
                                                                 dom.side(1).hi() + 1)}));
            for (const auto& r : b.cover.components())
                w.cover.add(Rectangle({Interval::open(dom.side(0).lo() - 1, dom.side(0).hi() + 1),
                                       r.side(0)}));
            w.total_bound = a.total_bound * wy + b.total_bound * wx;
            w.truncated = a.truncated || b.truncated;
            auto ra = a.restricted_eval, rb = b.restricted_eval;
            w.restricted_eval = [ra, rb](const Point& p) { return ra({p.at(0)}) * rb({p.at(1)}); };
            return w;
        };
    }
    return f;
}

namespace {

std::vector<Rational> parse_params(const std::string& s) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto comma = s.find(',', start);
        std::string tok =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        if (!tok.empty()) out.push_back(parse_rational(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

long param_long(const Rational& r, const char* what) {
    if (rat_den(r) != 1) throw std::invalid_argument(std::string(what) + ": integer expected");
    return rat_num(r).convert_to<long>();
}

Multirectangle parse_plus_intervals(const std::string& s) {
    Multirectangle out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == '+' && depth == 0) {
            out.add(Rectangle::from_interval(Interval::parse(cur)));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.add(Rectangle::from_interval(Interval::parse(cur)));
    return out;
}

}  // namespace

QCFunction catalog(const std::string& name_and_params) {
    auto colon = name_and_params.find(':');
    std::string name =
        colon == std::string::npos ? name_and_params : name_and_params.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : name_and_params.substr(colon + 1);

    if (name == "dirichlet") return make_dirichlet();
    if (name == "thomae") return make_thomae();
    if (name == "exp-abs-y") return make_exp_abs_y();
    if (name == "indicator") return indicator_of(parse_plus_intervals(params), name_and_params);
    if (name == "const") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: const:c");
        return make_const(ps[0], line_domain(), 1);
    }
    if (name == "poly") {
        auto ps = parse_params(params);
        if (ps.empty()) throw std::invalid_argument("BadParams: poly:c0,...,cm");
        return make_poly(std::move(ps));
    }
    if (name == "power") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: power:n");
        return make_power(param_long(ps[0], "power"));
    }
    if (name == "step") {
        auto ps = parse_params(params);
        if (ps.size() != 5) throw std::invalid_argument("BadParams: step:h,hhat,k,f1,f2");
        return make_step(ps[0], ps[1], ps[2], ps[3], ps[4]);
    }
    if (name == "spike") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: spike:n");
        return make_spike(param_long(ps[0], "spike"));
    }
    if (name == "wide-spike") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: wide-spike:n");
        return make_wide_spike(param_long(ps[0], "wide-spike"));
    }
    if (name == "trapezoid") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: trapezoid:n");
        return make_trapezoid(param_long(ps[0], "trapezoid"));
    }
    if (name == "qn-indicator") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: qn-indicator:n");
        return make_qn_indicator(param_long(ps[0], "qn-indicator"));
    }
    if (name == "cos-power") {
        auto ps = parse_params(params);
        if (ps.size() != 2) throw std::invalid_argument("BadParams: cos-power:m,n");
        return make_cos_power(param_long(ps[0], "cos-power"), param_long(ps[1], "cos-power"));
    }
    throw std::invalid_argument("UnknownName: '" + name + "'");
}

QCSequence catalog_sequence(const std::string& name_and_params) {
    auto colon = name_and_params.find(':');
    std::string name =
        colon == std::string::npos ? name_and_params : name_and_params.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : name_and_params.substr(colon + 1);

    QCSequence seq;
    seq.name = name_and_params;

    if (name == "xpow-seq") {
        seq.domain = unit_interval_domain();
        seq.member = [](long n) { return make_power(n); };
        auto limit = std::make_shared<QCFunction>();
        limit->name = "xpow-limit";
        limit->dim = 1;
        limit->domain = unit_interval_domain();
        limit->eval = [](const Point& p) {
            const Value& x = p.at(0);
            if (x.is_exact()) return Value::exact(Rational(x.rat() == 1 ? 1 : 0));
            return Value::sampled(x.dbl() >= 1.0 ? 1.0 : 0.0);
        };
        limit->bound = Rational(1);
        limit->ae_constant = Rational(0);
        limit->tags.bounded = true;
        limit->tags.nonnegative = true;
        limit->tags.characteristic = true;
        limit->tags.ae_continuous = true;
        limit->piecewise_on = [](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D::constant(lo, hi, Rational(0));
        };
        attach_piecewise_extrema(*limit);
        attach_point_cover_witness(*limit, {Rational(1)});
        seq.limit = limit;
        seq.nonnegative = true;
        QCFunction probe = make_power(1);
        seq.shared_witness = [probe](const Rational&) { return empty_witness(probe); };
        return seq;
    }
    if (name == "spike-seq" || name == "wide-spike-seq") {
        bool wide = name == "wide-spike-seq";
        seq.domain = wide ? ray_domain() : unit_interval_domain();
        seq.member = [wide](long n) { return wide ? make_wide_spike(n) : make_spike(n); };
        auto limit = std::make_shared<QCFunction>(make_const(Rational(0), seq.domain, 1));
        seq.limit = limit;
        seq.nonnegative = true;
        bool w = wide;
        seq.shared_witness = [w](const Rational& eps) {
            std::vector<Rational> pts;
            for (long n = 1; n <= 16; ++n) {
                pts.push_back(w ? Rational(n) : Rational(1, n));
                pts.push_back(w ? Rational(2 * n) : Rational(2, n));
            }
            WitnessCover cover;
            cover.cover = cover_countable(pts, eps);
            cover.truncated = true;
            cover.total_bound = eps / 2;
            cover.restricted_eval = [](const Point&) { return Value::exact(Rational(0)); };
            return cover;
        };
        return seq;
    }
    if (name == "qn-seq") {
        seq.domain = unit_interval_domain();
        seq.member = [](long n) { return make_qn_indicator(n); };
        seq.limit = std::make_shared<QCFunction>(make_dirichlet());
        seq.nonnegative = true;
        seq.increasing = true;
        seq.shared_witness = [](const Rational& eps) {
            // the full rational cover works for every member and the limit
            std::vector<Rational> pts{Rational(0), Rational(1)};
            auto inner = enumerate_unit_rationals(32);
            pts.insert(pts.end(), inner.begin(), inner.end());
            WitnessCover w;
            w.cover = cover_countable(pts, eps);
            w.truncated = true;
            w.total_bound = eps / 2;
            w.restriction = WitnessCover::Restriction::constant;
            w.constant_value = Rational(0);
            w.restricted_eval = [](const Point&) { return Value::exact(Rational(0)); };
            w.restricted_piecewise = [](const Rational& lo,
                                        const Rational& hi) -> std::optional<Piecewise1D> {
                return Piecewise1D::constant(lo, hi, Rational(0));
            };
            return w;
        };
        return seq;
    }
    if (name == "trapezoid-seq") {
        seq.domain = ray_domain();
        seq.member = [](long n) { return make_trapezoid(n); };
        seq.limit = std::make_shared<QCFunction>(make_const(Rational(0), ray_domain(), 1));
        seq.nonnegative = true;
        QCFunction probe = make_trapezoid(1);
        seq.shared_witness = [probe](const Rational&) { return empty_witness(probe); };
        return seq;
    }
    if (name == "tail-indicator-seq") {
        seq.domain = ray_domain();
        seq.member = [](long n) {
            Multirectangle tail;
            tail.add(Rectangle::from_interval(Interval::ray_from(Rational(n), true)));
            return indicator_of(tail, "tail-indicator:" + std::to_string(n));
        };
        seq.limit = std::make_shared<QCFunction>(make_const(Rational(0), ray_domain(), 1));
        seq.nonnegative = true;
        QCFunction probe = make_const(Rational(0), ray_domain(), 1);
        seq.shared_witness = [probe](const Rational& eps) {
            std::vector<Rational> pts;
            for (long n = 1; n <= 16; ++n) pts.push_back(Rational(n));
            WitnessCover w;
            w.cover = cover_countable(pts, eps);
            w.truncated = true;
            w.total_bound = eps / 2;
            w.restricted_eval = probe.eval;
            return w;
        };
        return seq;
    }
    if (name == "cospower-seq") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: cospower-seq:m");
        long m = param_long(ps[0], "cospower-seq");
        seq.domain = unit_interval_domain();
        seq.member = [m](long n) { return make_cos_power(m, n); };
        BigInt fact(1);
        for (long i = 2; i <= m; ++i) fact *= i;
        auto limit = std::make_shared<QCFunction>();
        limit->name = "cospower-limit:" + std::to_string(m);
        limit->dim = 1;
        limit->domain = unit_interval_domain();
        limit->eval = [fact](const Point& p) {
            const Value& x = p.at(0);
            if (!x.is_exact()) return Value::exact(Rational(0));
            // 1 exactly when q divides p * m!, i.e. m! x is an integer
            Rational t = Rational(fact) * x.rat();
            return Value::exact(Rational(rat_den(t) == 1 ? 1 : 0));
        };
        limit->bound = Rational(1);
        limit->ae_constant = Rational(0);
        limit->tags.bounded = true;
        limit->tags.nonnegative = true;
        limit->tags.characteristic = true;
        limit->tags.ae_continuous = true;
        std::vector<Rational> pts;
        for (BigInt j = 0; j <= fact; ++j) pts.emplace_back(j, fact);
        attach_point_cover_witness(*limit, pts);
        seq.limit = limit;
        seq.nonnegative = true;
        QCFunction probe = make_cos_power(m, 1);
        seq.shared_witness = [probe](const Rational&) { return empty_witness(probe); };
        return seq;
    }
    if (name == "const-seq") {
        auto ps = parse_params(params);
        if (ps.size() != 1) throw std::invalid_argument("BadParams: const-seq:c");
        Rational c = ps[0];
        seq.domain = unit_interval_domain();
        seq.member = [c](long) {
            return make_const(c, Rectangle::from_interval(Interval::closed(Rational(0), Rational(1))), 1);
        };
        seq.limit = std::make_shared<QCFunction>(
            make_const(c, Rectangle::from_interval(Interval::closed(Rational(0), Rational(1))), 1));
        seq.nonnegative = c >= 0;
        seq.increasing = true;
        QCFunction probe = *seq.limit;
        seq.shared_witness = [probe](const Rational&) { return empty_witness(probe); };
        return seq;
    }
    if (name == "alternate-halves-seq") {
        seq.domain = unit_interval_domain();
        seq.member = [](long n) {
            Multirectangle half;
            half.add(Rectangle::from_interval(
                n % 2 == 0 ? Interval::closed(Rational(0), Rational(1, 2))
                           : Interval::closed(Rational(1, 2), Rational(1))));
            return indicator_of(half, "half:" + std::to_string(n % 2));
        };
        auto limit = std::make_shared<QCFunction>();  // pointwise liminf: 1 only at 1/2
        limit->name = "alternate-liminf";
        limit->dim = 1;
        limit->domain = unit_interval_domain();
        limit->eval = [](const Point& p) {
            const Value& x = p.at(0);
            if (x.is_exact()) return Value::exact(Rational(x.rat() == Rational(1, 2) ? 1 : 0));
            return Value::sampled(0.0);
        };
        limit->bound = Rational(1);
        limit->ae_constant = Rational(0);
        limit->tags.bounded = true;
        limit->tags.nonnegative = true;
        limit->tags.characteristic = true;
        limit->tags.ae_continuous = true;
        limit->piecewise_on = [](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D::constant(lo, hi, Rational(0));
        };
        attach_piecewise_extrema(*limit);
        attach_point_cover_witness(*limit, {Rational(1, 2)});
        seq.limit = limit;
        seq.nonnegative = true;
        seq.shared_witness = [](const Rational& eps) {
            WitnessCover w;
            w.cover = cover_countable({Rational(0), Rational(1, 2), Rational(1)}, eps);
            w.total_bound = length(w.cover);
            w.restricted_eval = [](const Point&) { return Value::exact(Rational(0)); };
            return w;
        };
        return seq;
    }
    if (name == "ramp-seq") {
        seq.domain = unit_interval_domain();
        seq.member = [](long n) {
            Multirectangle support;
            support.add(Rectangle::from_interval(
                Interval::closed(Rational(0), Rational(1) - Rational(1, n))));
            QCFunction x = make_poly({Rational(0), Rational(1)});
            QCFunction f = restrict_to_set(x, indicator_of(support));
            f.name = "ramp:" + std::to_string(n);
            f.bound = Rational(1);
            f.tags.bounded = true;
            f.tags.nonnegative = true;
            return f;
        };
        auto limit = std::make_shared<QCFunction>();
        limit->name = "ramp-limit";
        limit->dim = 1;
        limit->domain = unit_interval_domain();
        limit->eval = [](const Point& p) {
            const Value& x = p.at(0);
            if (x.is_exact()) return x.rat() == 1 ? Value::exact(Rational(0)) : x;
            return x.dbl() >= 1.0 ? Value::sampled(0.0) : x;
        };
        limit->bound = Rational(1);
        limit->tags.bounded = true;
        limit->tags.nonnegative = true;
        limit->tags.ae_continuous = true;
        limit->piecewise_on = [](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            return Piecewise1D({LinearPiece{lo, hi, Rational(0), Rational(1)}});
        };
        attach_piecewise_extrema(*limit);
        attach_point_cover_witness(*limit, {Rational(1)});
        seq.limit = limit;
        seq.nonnegative = true;
        seq.increasing = true;
        seq.shared_witness = [](const Rational& eps) {
            std::vector<Rational> pts;
            for (long n = 1; n <= 16; ++n) pts.push_back(Rational(1) - Rational(1, n));
            WitnessCover w;
            w.cover = cover_countable(pts, eps);
            w.truncated = true;
            w.total_bound = eps / 2;
            w.restricted_eval = [](const Point& p) { return p.at(0); };
            return w;
        };
        return seq;
    }
    throw std::invalid_argument("UnknownName: sequence '" + name + "'");
}

}  // namespace tonelli
