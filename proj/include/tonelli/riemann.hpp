#pragma once

#include <optional>
#include <vector>

#include "tonelli/qc.hpp"

namespace tonelli {

// Finite set h = h_0 < h_1 < ... < h_N = k.
struct Partition {
    std::vector<Rational> points;
    static Partition equispaced(const Rational& lo, const Rational& hi, long n);
    long cells() const { return static_cast<long>(points.size()) - 1; }
    Rational mesh() const;
};

// Darboux bracket I_- <= integral <= I_+ from per-cell extrema.
struct DarbouxPair {
    Value lower, upper;
    bool certified = false;  // every cell carried a certified bracket
};

// Per-cell inf/sup via the function's certified extrema when present,
// otherwise 3-point sampling with one bisection level, widened by a factor
// of 2 and marked uncertified. Throws std::domain_error (UnboundedFunction)
// when no bound or extrema path exists.
DarbouxPair darboux(const QCFunction& f, const Interval& interval, long n);

struct RiemannResult {
    bool converged = false;  // false: NotRiemannIntegrable within the budget
    Value value;             // midpoint of the final bracket
    double achieved_gap = 0;
    long cells = 0;
    int levels = 0;
};

// Equispaced refinement N = 2^k until I_+ - I_- <= tol, budgeted.
RiemannResult riemann_integrate(const QCFunction& f, const Interval& interval, double tol,
                                int max_levels = 20);

// Decreasing estimates of the oscillation of f at x0, one per radius.
std::vector<Value> oscillation_at(const QCFunction& f, const Rational& x0,
                                  const std::vector<Rational>& radii);

struct DiniResult {
    bool pass = false;
    Partition witness;          // partition satisfying the test when pass
    Rational heavy_length;      // minimal achieved total length of heavy cells
    long cells = 0;
};

// Searches equispaced partitions N = 2^k <= maxN for one where the cells of
// oscillation >= alpha have total length < eps.
DiniResult dini_test(const QCFunction& f, const Interval& interval, const Rational& alpha,
                     const Rational& eps, long max_n);

// |integral of f| <= M * L(Delta) for f vanishing outside the cover.
Rational riemann_zero_bound(const Multirectangle& delta, const Rational& m_bound);

// Equispaced Darboux over a bounded rectangle in d dimensions (certified
// cell extrema required); n cells per axis.
DarbouxPair darboux_nd(const QCFunction& f, const Rectangle& rect, long n);

RiemannResult riemann_integrate_nd(const QCFunction& f, const Rectangle& rect, double tol,
                                   int max_levels = 10);

}  // namespace tonelli
