#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "tonelli/multirectangle.hpp"
#include "tonelli/piecewise.hpp"
#include "tonelli/value.hpp"

namespace tonelli {

struct CellBounds {
    Value lo, hi;
    bool certified = false;  // valid bracket of inf/sup over the cell
};

// One associated multirectangle of order eps, together with what is known
// about the restriction of the function to its complement. Countable covers
// (the rational covers behind Dirichlet and Thomae) are materialized as a
// finite truncation; total_bound is the analytic L bound of the full cover
// and the restriction model describes the full complement, not just the
// truncated one.
struct WitnessCover {
    Multirectangle cover;  // finite, open components
    Rational total_bound = Rational(0);
    bool truncated = false;
    enum class Restriction { continuous_eval, constant };
    Restriction restriction = Restriction::continuous_eval;
    Rational constant_value = Rational(0);
    // Evaluator of the restriction to the full complement of the (possibly
    // countable) cover. For a truncated cover this is NOT the raw eval: the
    // Dirichlet restriction is identically 0 although uncovered rationals
    // evaluate to 1. Associated extensions must be built from these.
    std::function<Value(const Point&)> restricted_eval;
    std::function<std::optional<Piecewise1D>(const Rational&, const Rational&)>
        restricted_piecewise;
    // Certified cell extrema of the restriction (tighter than the raw
    // function's where the cover removes the wild part).
    std::function<CellBounds(const Rectangle&)> restricted_extrema;
};

// A quasicontinuous function: an evaluator plus the witness map
// eps -> associated multirectangle of order eps, correct by construction.
class QCFunction {
public:
    std::string name;
    int dim = 1;
    Rectangle domain;  // sides may carry infinite sentinels
    std::function<Value(const Point&)> eval;
    std::function<WitnessCover(const Rational&)> witness;
    std::optional<Rational> bound;        // |f| <= bound
    std::optional<Rational> ae_constant;  // f == c a.e. on the domain

    struct Tags {
        bool bounded = false;
        bool nonnegative = false;
        bool characteristic = false;  // values in {0,1}
        bool continuous = false;
        bool ae_continuous = false;
    } tags;

    // Exact a.e. piecewise-linear representation over a bounded window, when
    // the function has one; keeps the integration pipeline in rationals.
    std::function<std::optional<Piecewise1D>(const Rational&, const Rational&)> piecewise_on;

    // Certified inf/sup bracket over a cell. Exact for the catalog's
    // piecewise / monotone / dense entries, Lipschitz-widened samples
    // otherwise.
    std::function<CellBounds(const Rectangle&)> extrema;

    // Fast plain-double path for large equispaced Darboux runs (1-D only).
    std::function<double(double)> eval_fast1;
    // Fast certified cell extrema for large 1-D grids: (x0,x1) -> (lo,hi).
    std::function<std::pair<double, double>(double, double)> extrema_fast1;
    // Fast certified cell extrema for large 2-D grids: (x0,x1,y0,y1) -> (lo,hi).
    std::function<std::pair<double, double>(double, double, double, double)> extrema_fast2;
    bool monotone1 = false;               // monotone on the (1-D) domain
    std::optional<Rational> lipschitz;    // |f(x)-f(y)| <= L |x-y| on the domain

    // Set behind a characteristic function built from a multirectangle.
    std::optional<Multirectangle> indicator_set;

    Value operator()(const Point& p) const { return eval(p); }

    bool has_piecewise() const { return static_cast<bool>(piecewise_on); }
    bool has_extrema() const { return static_cast<bool>(extrema); }
};

// A sequence of quasicontinuous functions on a common domain with the
// shared witness of the union construction, plus the pointwise limit
// descriptor when the family has a known one.
struct QCSequence {
    std::string name;
    int dim = 1;
    Rectangle domain;
    std::function<QCFunction(long)> member;  // n >= 1
    std::function<WitnessCover(const Rational&)> shared_witness;
    std::shared_ptr<QCFunction> limit;
    bool nonnegative = false;
    bool increasing = false;
};

enum class CombineOp { sum, product, max, min };

// Pointwise combination on the common domain (intersection). The combined
// witness is the union of the two witnesses at eps/2 each. Throws
// std::invalid_argument (DomainMismatch) on dimension mismatch or empty
// intersection.
QCFunction combine(CombineOp op, const QCFunction& f, const QCFunction& g);

enum class TruncateMode { plus, minus };

// plus: max{f, c}; minus: min{f, c}; same witness as f. Absent c is the
// infinity sentinel of the respective sign and returns f unchanged.
QCFunction truncate(const QCFunction& f, TruncateMode mode, std::optional<Rational> c);

// f * 1_A, the characteristic-function product. Throws std::invalid_argument
// (NotCharacteristic) when A is not a characteristic descriptor.
QCFunction restrict_to_set(const QCFunction& f, const QCFunction& a);

// Indicator of a multirectangle (any dimension), with the boundary cover as
// its witness.
QCFunction indicator_of(const Multirectangle& set, std::string name = "");

// u(x) * v(y): the separable 2-D product of two 1-D functions.
QCFunction separable_product(const QCFunction& u, const QCFunction& v);

// -f and |f|; both keep f's witness covers (the same multiinterval works).
QCFunction qc_negate(const QCFunction& f);
QCFunction qc_abs(const QCFunction& f);

// Built-in function catalog; throws std::invalid_argument on unknown names
// or bad parameters. See the README for the DSL grammar.
QCFunction catalog(const std::string& name_and_params);
QCSequence catalog_sequence(const std::string& name_and_params);

// Recursive-descent parser over the full expression grammar:
//   expr := sum(e,e) | product(e,e) | max(e,e) | min(e,e)
//         | prod(e;e)                       separable 2-D product u(x)v(y)
//         | truncate(e,plus|minus,c)
//         | restrict(e,e)
//         | name[:params]
QCFunction parse_function(const std::string& text);

}  // namespace tonelli
