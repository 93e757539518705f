#pragma once

#include "tonelli/lebesgue.hpp"
#include "tonelli/qc.hpp"

namespace tonelli {

// Per-point tail oscillation data: v_{n,m}(x) is the spread of
// {f_{m+r}(x) : 1 <= r <= nCap}; w_m is its sup over n, estimated by the
// finite cap and declared a lower bound of the true sup.
struct WmGrid {
    std::vector<Rational> grid;
    long m = 0;
    long n_cap = 0;
    std::vector<double> values;  // v_{nCap,m} per grid point
};

WmGrid wm_grid(const QCSequence& seq, long m, long n_cap, const std::vector<Rational>& grid);

// Default evaluation grid: equispaced rationals plus the endpoints.
std::vector<Rational> default_grid(const Interval& domain, long cells = 1024);

struct UniformRow {
    Rational sigma;
    long stage;    // M such that sup over grid minus O of |f_n - f| < sigma for sampled n > M
    double sup;    // achieved sup over the sampled tail
    bool pass;
};

struct EgorovWitness {
    Rational eps;
    Multirectangle excluded;  // open, L < eps, independent of sigma
    std::vector<UniformRow> table;
    bool pass = false;
};

// Finite-stage Egorov-Severini witness: per level n the open set
// {w_m > (1/n)/2} is assembled from maximal grid runs (inflated by one grid
// cell each side) under the budget eps/2^n, and the union O is verified
// uniformly for every requested sigma. Throws std::domain_error
// (UnboundedDomain) on unbounded domains and std::runtime_error
// (BudgetExceeded) when no stage fits a level budget.
EgorovWitness egorov_witness(const QCSequence& seq, const Rational& eps,
                             const std::vector<Rational>& sigmas, long n_cap = 256,
                             long grid_cells = 1024, long m_budget = 1 << 15);

enum class ConvergenceLaw { monotone, dominated, fatou };

struct ConvergenceStageRow {
    long n;
    double integral;
};

struct ConvergenceReport {
    ConvergenceLaw law;
    std::vector<ConvergenceStageRow> stages;
    double limit_integral = 0;     // integral of the limit integrand
    double sequence_limit = 0;     // estimated limit (or liminf) of the stage integrals
    double gap = 0;
    bool pass = false;
    bool hypothesis_violated = false;
    std::string violation;
};

// Beppo Levi checker: nonnegative increasing sequence, geometric stage
// schedule n = 2^j. Hypothesis violations are reported, not thrown.
ConvergenceReport check_monotone(const QCSequence& seq, int stages = 16, double tol = 1e-6);

// Dominated-convergence checker against the dominator g.
ConvergenceReport check_dominated(const QCSequence& seq, const QCFunction& g, int stages = 16,
                                  double tol = 1e-6);

// liminf of the stage integrals minus the integral of the liminf integrand;
// must be >= -tolerance for nonnegative sequences.
ConvergenceReport fatou_gap(const QCSequence& seq, int stages = 16, double tol = 1e-6);

// Sanity check behind the Egorov machinery: a decreasing sequence of
// disjoint multiintervals in a bounded interval with L > l > 0 has nonempty
// intersection. Throws std::domain_error on unbounded families.
bool nested_multiinterval_nonempty(const std::vector<Multirectangle>& chain);

}  // namespace tonelli
