#include "tonelli/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tonelli {

std::vector<Rational> default_grid(const Interval& domain, long cells) {
    if (!domain.bounded()) throw std::domain_error("UnboundedDomain: grid needs a bounded interval");
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(cells) + 1);
    for (long i = 0; i <= cells; ++i)
        grid.push_back(domain.lo() + domain.length() * Rational(i, cells));
    return grid;
}

WmGrid wm_grid(const QCSequence& seq, long m, long n_cap, const std::vector<Rational>& grid) {
    WmGrid out;
    out.grid = grid;
    out.m = m;
    out.n_cap = n_cap;
    out.values.assign(grid.size(), 0.0);
    std::vector<double> mins(grid.size()), maxs(grid.size());
    bool first = true;
    for (long r = 1; r <= n_cap; ++r) {
        QCFunction f = seq.member(m + r);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double v = f.eval(point1(grid[i])).dbl();
            if (first) {
                mins[i] = maxs[i] = v;
            } else {
                mins[i] = std::min(mins[i], v);
                maxs[i] = std::max(maxs[i], v);
            }
        }
        first = false;
    }
    for (std::size_t i = 0; i < grid.size(); ++i) out.values[i] = maxs[i] - mins[i];
    return out;
}

namespace {

// Maximal grid runs above the threshold, inflated by one grid cell each side.
Multirectangle runs_to_multiinterval(const std::vector<Rational>& grid,
                                     const std::vector<double>& w, double threshold) {
    Multirectangle out;
    std::size_t i = 0;
    while (i < grid.size()) {
        if (w[i] > threshold) {
            std::size_t j = i;
            while (j + 1 < grid.size() && w[j + 1] > threshold) ++j;
            Rational lo = i > 0 ? grid[i - 1] : grid[i] - (grid[1] - grid[0]);
            Rational hi = j + 1 < grid.size() ? grid[j + 1] : grid[j] + (grid[1] - grid[0]);
            out.add(Rectangle::from_interval(Interval::open(lo, hi)));
            i = j + 1;
        } else {
            ++i;
        }
    }
    return out.empty() ? out : disjointify_1d(out);
}

double sup_gap_off_cover(const QCSequence& seq, const QCFunction& limit,
                         const std::vector<Rational>& grid, const Multirectangle& excluded,
                         long n) {
    QCFunction f = seq.member(n);
    double sup = 0;
    for (const auto& x : grid) {
        if (!excluded.empty() && excluded.contains(std::vector<Rational>{x})) continue;
        double d = std::abs(f.eval(point1(x)).dbl() - limit.eval(point1(x)).dbl());
        sup = std::max(sup, d);
    }
    return sup;
}

}  // namespace

EgorovWitness egorov_witness(const QCSequence& seq, const Rational& eps,
                             const std::vector<Rational>& sigmas, long n_cap, long grid_cells,
                             long m_budget) {
    if (!seq.domain.bounded())
        throw std::domain_error("UnboundedDomain: Egorov-Severini needs a bounded domain");
    if (eps <= 0) throw std::invalid_argument("egorov_witness: eps > 0 required");
    if (!seq.limit) throw std::invalid_argument("egorov_witness: sequence carries no limit");
    std::vector<Rational> grid = default_grid(seq.domain.side(0), grid_cells);

    EgorovWitness wit;
    wit.eps = eps;
    Multirectangle o;
    Rational used(0);

    // Seed with the shared witness when the members are discontinuous: their
    // own covers belong in O by the two-main-lemmas construction.
    WitnessCover shared = seq.shared_witness(eps / 2);
    if (!shared.cover.empty()) {
        o = shared.cover;
        used = shared.truncated ? shared.total_bound : length(shared.cover);
    }

    long max_level = 1;
    for (const auto& s : sigmas) {
        if (s <= 0) throw std::invalid_argument("egorov_witness: sigmas must be positive");
        long lvl = rat_floor(Rational(1) / s).convert_to<long>() + 1;
        max_level = std::max(max_level, lvl);
    }

    std::vector<long> stage_for_level(static_cast<std::size_t>(max_level) + 1, 1);
    for (long lvl = 1; lvl <= max_level; ++lvl) {
        Rational budget = eps * rat_pow2(-(static_cast<long>(lvl) + 1));
        double eta = 1.0 / static_cast<double>(lvl);
        long m = 4;
        bool placed = false;
        while (m <= m_budget) {
            WmGrid wm = wm_grid(seq, m, std::min(n_cap, 64L), grid);
            Multirectangle a = runs_to_multiinterval(grid, wm.values, eta / 2);
            Rational alen = a.empty() ? Rational(0) : length(a);
            if (alen < budget) {
                for (const auto& r : a.components()) o.add(r);
                used += alen;
                stage_for_level[static_cast<std::size_t>(lvl)] = m;
                placed = true;
                break;
            }
            m *= 2;
        }
        if (!placed)
            throw std::runtime_error("BudgetExceeded: no stage fits the level budget");
    }
    wit.excluded = o.empty() ? o : disjointify_1d(o);
    if (!wit.excluded.empty() && length(wit.excluded) >= eps)
        throw std::runtime_error("BudgetExceeded: assembled witness too long");

    // Verify the uniform table on grid \ O; M may be raised per sigma (it
    // depends on sigma and on the fixed O), the set O is reused as is.
    wit.pass = true;
    for (const auto& sigma : sigmas) {
        long lvl = rat_floor(Rational(1) / sigma).convert_to<long>() + 1;
        long m = stage_for_level[static_cast<std::size_t>(std::min(lvl, max_level))];
        double sd = rat_to_double(sigma);
        UniformRow row;
        row.sigma = sigma;
        row.pass = false;
        while (m <= m_budget) {
            double sup = 0;
            bool ok = true;
            for (long step = 1; step <= 8 && ok; ++step) {
                long n = m + step * std::max(1L, m / 4);
                double s = sup_gap_off_cover(seq, *seq.limit, grid, wit.excluded, n);
                sup = std::max(sup, s);
                if (s >= sd) ok = false;
            }
            row.sup = sup;
            if (ok) {
                row.stage = m;
                row.pass = true;
                break;
            }
            m *= 2;
        }
        if (!row.pass) row.stage = m_budget;
        wit.pass = wit.pass && row.pass;
        wit.table.push_back(row);
    }
    return wit;
}

namespace {

double stage_integral(const QCFunction& f, double tol) {
    if (f.domain.bounded()) {
        IntegralResult r = integrate_bounded(f, f.domain.closure(), 4, tol);
        return r.value.dbl();
    }
    IntegralResult r = integrate_general(f, TruncationSchedule{}, 4, tol);
    if (r.verdict == IntegralVerdict::plus_infinity)
        return std::numeric_limits<double>::infinity();
    if (r.verdict == IntegralVerdict::minus_infinity)
        return -std::numeric_limits<double>::infinity();
    if (r.verdict == IntegralVerdict::not_integrable) return std::nan("");
    return r.value.dbl();
}

std::vector<long> hypothesis_sample_indices() { return {1, 2, 3, 4, 6, 8, 12, 16, 24, 32}; }

std::vector<Rational> hypothesis_grid(const QCSequence& seq) {
    if (seq.domain.bounded()) return default_grid(seq.domain.side(0), 256);
    Interval window = Interval::closed(
        seq.domain.side(0).lo_infinite() ? Rational(-64) : seq.domain.side(0).lo(),
        Rational(64));
    return default_grid(window, 256);
}

void run_stages(const QCSequence& seq, int stages, double tol, ConvergenceReport& rep) {
    for (int j = 0; j <= stages; ++j) {
        long n = 1L << j;
        double stage_tol = j == stages ? tol / 10 : tol;
        rep.stages.push_back({n, stage_integral(seq.member(n), stage_tol)});
    }
    rep.limit_integral = seq.limit ? stage_integral(*seq.limit, tol / 10) : 0.0;
}

}  // namespace

ConvergenceReport check_monotone(const QCSequence& seq, int stages, double tol) {
    ConvergenceReport rep;
    rep.law = ConvergenceLaw::monotone;
    auto grid = hypothesis_grid(seq);
    for (long n : hypothesis_sample_indices()) {
        QCFunction f = seq.member(n), g = seq.member(n + 1);
        for (const auto& x : grid) {
            double a = f.eval(point1(x)).dbl(), b = g.eval(point1(x)).dbl();
            if (a < -1e-12) {
                rep.hypothesis_violated = true;
                rep.violation = "nonnegativity fails at n=" + std::to_string(n);
                break;
            }
            if (b < a - 1e-12) {
                rep.hypothesis_violated = true;
                rep.violation = "monotone-increasing hypothesis fails between n=" +
                                std::to_string(n) + " and n=" + std::to_string(n + 1);
                break;
            }
        }
        if (rep.hypothesis_violated) break;
    }
    run_stages(seq, stages, tol, rep);
    rep.sequence_limit = rep.stages.back().integral;
    rep.gap = std::abs(rep.sequence_limit - rep.limit_integral);
    rep.pass = !rep.hypothesis_violated && std::isfinite(rep.gap) && rep.gap <= tol;
    return rep;
}

ConvergenceReport check_dominated(const QCSequence& seq, const QCFunction& g, int stages,
                                  double tol) {
    ConvergenceReport rep;
    rep.law = ConvergenceLaw::dominated;
    auto grid = hypothesis_grid(seq);
    for (long n : hypothesis_sample_indices()) {
        QCFunction f = seq.member(n);
        for (const auto& x : grid) {
            double a = std::abs(f.eval(point1(x)).dbl());
            double b = g.eval(point1(x)).dbl();
            if (a > b + 1e-12) {
                rep.hypothesis_violated = true;
                rep.violation = "domination |f_n| <= g fails at n=" + std::to_string(n) +
                                ", x=" + rat_str(x);
                break;
            }
        }
        if (rep.hypothesis_violated) break;
    }
    if (!rep.hypothesis_violated) {
        SummabilityVerdict s = is_summable(g);
        if (!s.summable) {
            rep.hypothesis_violated = true;
            rep.violation = "dominator is not summable";
        }
    }
    run_stages(seq, stages, tol, rep);
    rep.sequence_limit = rep.stages.back().integral;
    rep.gap = std::abs(rep.sequence_limit - rep.limit_integral);
    rep.pass = !rep.hypothesis_violated && std::isfinite(rep.gap) && rep.gap <= tol;
    return rep;
}

ConvergenceReport fatou_gap(const QCSequence& seq, int stages, double tol) {
    ConvergenceReport rep;
    rep.law = ConvergenceLaw::fatou;
    auto grid = hypothesis_grid(seq);
    for (long n : hypothesis_sample_indices()) {
        QCFunction f = seq.member(n);
        for (const auto& x : grid) {
            if (f.eval(point1(x)).dbl() < -1e-12) {
                rep.hypothesis_violated = true;
                rep.violation = "nonnegativity fails at n=" + std::to_string(n);
                break;
            }
        }
        if (rep.hypothesis_violated) break;
    }
    run_stages(seq, stages, tol, rep);
    // liminf over the computed stages: minimum over the tail half
    double liminf = rep.stages.back().integral;
    for (std::size_t i = rep.stages.size() / 2; i < rep.stages.size(); ++i)
        liminf = std::min(liminf, rep.stages[i].integral);
    rep.sequence_limit = liminf;
    rep.gap = liminf - rep.limit_integral;
    rep.pass = !rep.hypothesis_violated && rep.gap >= -tol;
    return rep;
}

bool nested_multiinterval_nonempty(const std::vector<Multirectangle>& chain) {
    if (chain.empty()) return false;
    for (const auto& m : chain) {
        if (!m.bounded())
            throw std::domain_error("nested chain: bounded multiintervals required");
        if (m.dim() != 1) throw std::domain_error("nested chain: dimension 1 required");
    }
    // running intersection of the point-set closures
    std::vector<Interval> current;
    for (const auto& iv : chain.front().intervals()) current.push_back(iv);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        std::vector<Interval> next;
        for (const auto& a : current)
            for (const auto& b : chain[k].intervals()) {
                auto [ok, x] = a.intersect(b);
                if (ok) next.push_back(std::move(x));
            }
        current = std::move(next);
        if (current.empty()) return false;
    }
    return !current.empty();
}

}  // namespace tonelli
