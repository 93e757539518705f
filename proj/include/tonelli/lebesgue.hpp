#pragma once

#include "tonelli/qc.hpp"
#include "tonelli/riemann.hpp"
#include "tonelli/tietze.hpp"

namespace tonelli {

enum class IntegralVerdict { number, plus_infinity, minus_infinity, not_integrable };

struct StageRow {
    long n;                   // order 1/n of the stage witness
    Rational witness_length;  // L of the materialized cover
    Value riemann_value;      // stage integral of the associated extension
    Rational riemann_tol;     // certified stage tolerance (0 on the exact path)
};

struct IntegralResult {
    Value value;
    Rational error_bound = Rational(0);  // |value - integral| <= error_bound when verdict==number
    std::vector<StageRow> trace;
    IntegralVerdict verdict = IntegralVerdict::number;
    bool exact = false;  // the pipeline stayed in rationals end to end
};

// Double-truncation schedule R_j = N_j = 2^j, both diverging.
struct TruncationSchedule {
    int stages = 10;
    Rational radius(int j) const { return rat_pow2(j); }
    Rational height(int j) const { return rat_pow2(j); }
};

// Bounded quasicontinuous f over a bounded rectangle: per stage n the
// associated extension of order 1/n is integrated (exactly when the
// restriction is piecewise linear with rational breakpoints), and the
// certified bound is 2 M / n_final + the final Riemann tolerance. Throws
// std::invalid_argument (MissingBound) without a bound certificate and
// std::runtime_error (WitnessBudgetExceeded) if a cover overruns its order.
IntegralResult integrate_bounded(const QCFunction& f, const Rectangle& box, int stages = 64,
                                 double riemann_tol = 1e-8);

// Signed integral over the function's (possibly unbounded) domain via the
// double truncation of f_+ and f_-; the limits are monotone so divergence is
// detected from non-contracting increments (budgeted verdict).
IntegralResult integrate_general(const QCFunction& f, const TruncationSchedule& schedule = {},
                                 int stages = 8, double riemann_tol = 1e-8);

// integrate_general(f * 1_A). Throws std::invalid_argument (NotCharacteristic).
IntegralResult integrate_over_set(const QCFunction& f, const QCFunction& a,
                                  const TruncationSchedule& schedule = {}, int stages = 8,
                                  double riemann_tol = 1e-8);

// Point-set measure of a multirectangle (exact, disjointified).
Rational measure(const Multirectangle& a);

// lambda(A) via the characteristic-function integral over a window box; the
// window must contain the set. Exact for rational multirectangle indicators.
IntegralResult measure_via_integral(const QCFunction& indicator, const Rectangle& window);

struct SummabilityVerdict {
    bool summable = false;
    double bound = 0;                  // sup of the truncated integrals when summable
    std::vector<double> truncated;     // the monotone sequence examined
};

// Monotone truncated integrals of |f| checked for boundedness across the
// schedule; budgeted verdict.
SummabilityVerdict is_summable(const QCFunction& f, const TruncationSchedule& schedule = {},
                               int stages = 8, double riemann_tol = 1e-6);

struct AbsContRow {
    Rational lambda_o;
    Value integral;
    bool within_m_bound;  // |integral| <= M * lambda(O), exact when possible
};

// Shrinking random rational multiintervals O inside the window; reports
// (lambda(O), integral over O) rows and the exact M-bound check for bounded f.
std::vector<AbsContRow> abs_continuity_probe(const QCFunction& f, const Interval& window,
                                             int trials, unsigned long seed);

struct MeasureBracket {
    Rational lo, hi;
};

// Exterior measure bracket via open covers; interior via the complement:
// m_i(E) = lambda(R) - m_e(R \ E). Both brackets are eps-tight for
// multirectangle sets.
std::pair<MeasureBracket, MeasureBracket> exterior_interior_measure(const Multirectangle& e,
                                                                    const Rectangle& box,
                                                                    const Rational& eps);

}  // namespace tonelli
