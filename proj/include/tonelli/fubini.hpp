#pragma once

#include "tonelli/lebesgue.hpp"

namespace tonelli {

struct ReductionReport {
    IntegralResult direct;
    IntegralResult iterated_outer_x;  // outer integral along axis 0
    IntegralResult iterated_outer_y;  // outer integral along axis 1
    double gap_x = 0, gap_y = 0;
    bool pass = false;
    bool not_summable = false;  // Tonelli gate tripped; nothing else computed
};

// Inner 1-D integrals per outer sample, outer integral over the sampled
// grid function. order is the outer axis (0 or 1). Exact for multirectangle
// indicators (outer samples aligned with the section breakpoints). Throws
// std::runtime_error (InnerNotIntegrable) with the offending coordinate.
IntegralResult iterated_integrate(const QCFunction& f, const Rectangle& rect, int outer_axis,
                                  double tol);

// Summability gate first, then direct vs both iterated orders.
ReductionReport fubini_check(const QCFunction& f, const Rectangle& rect, double tol);

struct TonelliVerdict {
    bool summable = false;
    std::vector<double> outer_truncated;  // iterated integrals over the schedule
};

// Nonnegative f: summable iff the truncated iterated integrals stay bounded
// across the schedule (budgeted verdict).
TonelliVerdict tonelli_gate(const QCFunction& f, const TruncationSchedule& schedule = {},
                            double tol = 1e-6);

struct SectionIdentityReport {
    Rational volume;            // lambda_{d+1}(A)
    Rational iterated;          // integral of x -> lambda_d(A_x), exact
    bool exact_match = false;
    std::vector<Rational> skipped_faces;  // the countably many bad section values
};

// lambda_{d+1}(A) = integral of lambda_d(A_x) dx for a bounded almost-
// disjoint multirectangle set; the section-measure function is piecewise
// constant between face coordinates and is integrated exactly.
SectionIdentityReport section_identity_check(const Multirectangle& a, int axis = 0);

}  // namespace tonelli
