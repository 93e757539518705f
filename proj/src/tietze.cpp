#include "tonelli/tietze.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tonelli {

Extension1D::Extension1D(const ClosedComplementDomain& dom,
                         std::function<Value(const Rational&)> f_on_k)
    : f_(std::move(f_on_k)) {
    if (dom.box.dim() != 1) throw std::invalid_argument("Extension1D: 1-D box required");
    if (!dom.box.bounded()) throw std::domain_error("Extension1D: bounded box required");
    box_lo_ = dom.box.side(0).lo();
    box_hi_ = dom.box.side(0).hi();
    Multirectangle k = box_minus_open(dom.box.closure(), dom.removed);
    if (k.empty()) throw std::domain_error("EmptyK: the cover swallows the whole box");
    k_ = k.intervals();
    std::sort(k_.begin(), k_.end(),
              [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
    for (const auto& iv : k_) {
        k_lo_d_.push_back(rat_to_double(iv.lo()));
        k_hi_d_.push_back(rat_to_double(iv.hi()));
        f_lo_d_.push_back(f_(iv.lo()).dbl());
        f_hi_d_.push_back(f_(iv.hi()).dbl());
    }
}

Value Extension1D::at(const Rational& x) const {
    // locate the last K interval with lo <= x
    std::size_t idx = std::upper_bound(k_.begin(), k_.end(), x,
                                       [](const Rational& v, const Interval& iv) {
                                           return v < iv.lo();
                                       }) -
                      k_.begin();
    if (idx == 0) return f_(k_.front().lo());  // left tail: constant
    const Interval& left = k_[idx - 1];
    if (x <= left.hi()) return f_(x);  // inside K
    if (idx == k_.size()) return f_(left.hi());  // right tail: constant
    const Interval& right = k_[idx];
    // gap (a,b) with a,b in K: linear interpolation
    const Rational &a = left.hi(), &b = right.lo();
    Rational lambda = (b - x) / (b - a);  // x = lambda a + (1-lambda) b
    Value fa = f_(a), fb = f_(b);
    return Value::exact(lambda) * fa + Value::exact(Rational(1) - lambda) * fb;
}

double Extension1D::at(double x) const {
    std::size_t idx =
        std::upper_bound(k_lo_d_.begin(), k_lo_d_.end(), x) - k_lo_d_.begin();
    if (idx == 0) return f_lo_d_.front();
    if (x <= k_hi_d_[idx - 1]) {
        // inside K: exact lookup through the rational evaluator
        return f_(Rational(x)).dbl();
    }
    if (idx == k_lo_d_.size()) return f_hi_d_.back();
    double a = k_hi_d_[idx - 1], b = k_lo_d_[idx];
    double lambda = (b - x) / (b - a);
    return lambda * f_hi_d_[idx - 1] + (1 - lambda) * f_lo_d_[idx];
}

std::optional<Piecewise1D> Extension1D::piecewise(
    const std::function<std::optional<Piecewise1D>(const Rational&, const Rational&)>&
        f_piecewise_on_k) const {
    if (!f_piecewise_on_k) return std::nullopt;
    Piecewise1D out;
    // left tail
    if (box_lo_ < k_.front().lo()) {
        Value v = f_(k_.front().lo());
        if (!v.is_exact()) return std::nullopt;
        out.append({box_lo_, k_.front().lo(), v.rat(), Rational(0)});
    }
    for (std::size_t i = 0; i < k_.size(); ++i) {
        const Interval& iv = k_[i];
        if (!iv.degenerate()) {
            auto pw = f_piecewise_on_k(iv.lo(), iv.hi());
            if (!pw) return std::nullopt;
            for (const auto& p : pw->pieces()) out.append(p);
        }
        if (i + 1 < k_.size()) {
            const Rational &a = iv.hi(), &b = k_[i + 1].lo();
            Value fa = f_(a), fb = f_(b);
            if (!fa.is_exact() || !fb.is_exact()) return std::nullopt;
            Rational slope = (fb.rat() - fa.rat()) / (b - a);
            out.append({a, b, fa.rat() - slope * a, slope});
        }
    }
    // right tail
    if (k_.back().hi() < box_hi_) {
        Value v = f_(k_.back().hi());
        if (!v.is_exact()) return std::nullopt;
        out.append({k_.back().hi(), box_hi_, v.rat(), Rational(0)});
    }
    return out;
}

BoxComplementK::BoxComplementK(const ClosedComplementDomain& dom, int samples_per_unit)
    : dim_(dom.box.dim()), box_(dom.box.closure()), removed_(dom.removed) {
    if (!box_.bounded()) throw std::domain_error("BoxComplementK: bounded box required");
    cells_ = box_minus_open(box_, removed_);
    if (cells_.empty()) throw std::domain_error("EmptyK: the cover swallows the whole box");
    double step = 1.0 / samples_per_unit;
    for (const auto& cell : cells_.components()) {
        std::vector<std::vector<double>> axes;
        for (int k = 0; k < dim_; ++k) {
            double lo = rat_to_double(cell.side(k).lo()), hi = rat_to_double(cell.side(k).hi());
            std::vector<double> xs;
            int count = std::max(1, static_cast<int>(std::ceil((hi - lo) / step)));
            for (int i = 0; i <= count; ++i)
                xs.push_back(lo + (hi - lo) * static_cast<double>(i) / count);
            axes.push_back(std::move(xs));
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(dim_), 0);
        while (true) {
            std::vector<double> p(static_cast<std::size_t>(dim_));
            for (int k = 0; k < dim_; ++k)
                p[static_cast<std::size_t>(k)] = axes[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
            samples_.push_back(std::move(p));
            int k = 0;
            for (; k < dim_; ++k) {
                auto kk = static_cast<std::size_t>(k);
                if (idx[kk] + 1 < axes[kk].size()) {
                    ++idx[kk];
                    break;
                }
                idx[kk] = 0;
            }
            if (k == dim_) break;
        }
    }
    gap_ = step * std::sqrt(static_cast<double>(dim_)) / 2.0;
}

bool BoxComplementK::contains(const Point& x) const {
    if (!box_.contains(x)) return false;
    for (const auto& r : removed_.components())
        if (r.contains(x)) return false;
    return true;
}

std::optional<Rational> BoxComplementK::dist2(const std::vector<Rational>& x) const {
    std::optional<Rational> best;
    for (const auto& cell : cells_.components()) {
        Rational d2(0);
        for (int k = 0; k < dim_; ++k) {
            const Interval& s = cell.side(k);
            const Rational& v = x[static_cast<std::size_t>(k)];
            if (v < s.lo())
                d2 += (s.lo() - v) * (s.lo() - v);
            else if (v > s.hi())
                d2 += (v - s.hi()) * (v - s.hi());
        }
        if (!best || d2 < *best) best = d2;
    }
    return best;
}

CircleK::CircleK(int n_samples) {
    const double pi = 3.14159265358979323846;
    samples_.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        double th = 2 * pi * i / n_samples;
        samples_.push_back({std::cos(th), std::sin(th)});
    }
    gap_ = pi / n_samples;  // half the arc step
}

bool CircleK::contains(const Point& x) const {
    if (x.size() != 2) return false;
    if (x[0].is_exact() && x[1].is_exact()) {
        Rational n2 = x[0].rat() * x[0].rat() + x[1].rat() * x[1].rat();
        return n2 == 1;
    }
    double n2 = x[0].dbl() * x[0].dbl() + x[1].dbl() * x[1].dbl();
    return std::abs(n2 - 1.0) < 1e-12;
}

namespace {

std::vector<double> to_doubles(const Point& x) {
    std::vector<double> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.dbl());
    return out;
}

double dist2_d(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

// Deterministic pairwise summation of the averaging terms.
double pairwise_sum(std::vector<double>& v, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return v[lo];
    std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

DistResult rho(const CompactSampled& k, const Point& x) {
    if (k.contains(x)) return {0.0, Rational(0)};
    bool all_exact = true;
    std::vector<Rational> xr;
    for (const auto& v : x) {
        if (!v.is_exact()) {
            all_exact = false;
            break;
        }
        xr.push_back(v.rat());
    }
    if (all_exact) {
        auto d2 = k.dist2(xr);
        if (d2) return {std::sqrt(rat_to_double(*d2)), d2};
    }
    std::vector<double> xd = to_doubles(x);
    double best = dist2_d(xd, k.samples().front());
    for (const auto& s : k.samples()) best = std::min(best, dist2_d(xd, s));
    return {std::sqrt(best), std::nullopt};
}

ExtendNdResult extend_nd(const CompactSampled& k, const std::function<Value(const Point&)>& f,
                         const Point& x, int n, std::optional<double> lipschitz,
                         std::optional<double> value_spread,
                         std::optional<double> required_tolerance) {
    if (n < 0) throw std::invalid_argument("extend_nd: n >= 0 required");
    ExtendNdResult res;
    if (k.contains(x)) {
        res.value = f(x).dbl();
        res.tolerance = 0.0;
        res.on_k = true;
        return res;
    }
    DistResult d = rho(k, x);
    double r0 = d.dist;
    std::vector<double> xd = to_doubles(x);

    // Distance-sorted prefix maxima give M(x, r) monotone in r.
    const auto& pts = k.samples();
    std::vector<std::pair<double, double>> by_dist;  // (dist, f value)
    by_dist.reserve(pts.size());
    for (const auto& s : pts) {
        Point ps;
        ps.reserve(s.size());
        for (double c : s) ps.push_back(Value::sampled(c));
        by_dist.emplace_back(std::sqrt(dist2_d(xd, s)), f(ps).dbl());
    }
    std::sort(by_dist.begin(), by_dist.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<double> prefix_max(by_dist.size());
    double run = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < by_dist.size(); ++i) {
        run = std::max(run, by_dist[i].second);
        prefix_max[i] = run;
    }
    auto m_at = [&](double r) {
        // include boundary samples with a relative slack against fp jitter
        double rr = r * (1 + 1e-12) + 1e-300;
        std::size_t cnt = std::upper_bound(by_dist.begin(), by_dist.end(), rr,
                                           [](double v, const auto& p) { return v < p.first; }) -
                          by_dist.begin();
        return cnt == 0 ? 0.0 : prefix_max[cnt - 1];
    };

    const double scale = std::pow(2.0, n);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(scale));
    for (double kk = 0; kk < scale; ++kk) terms.push_back(m_at((1.0 + kk / scale) * r0));
    res.value = pairwise_sum(terms, 0, terms.size()) / scale;

    if (lipschitz && value_spread && k.covering_gap() <= r0 / scale) {
        // shifting every radius by one sample gap costs at most one term of
        // the mean plus the Lipschitz slack of the sampled maxima
        res.tolerance = *value_spread / scale + *lipschitz * k.covering_gap();
    }
    if (required_tolerance && (!res.tolerance || *res.tolerance > *required_tolerance))
        throw std::runtime_error("SamplerTooCoarse: cannot certify the requested tolerance");
    return res;
}

}  // namespace tonelli
