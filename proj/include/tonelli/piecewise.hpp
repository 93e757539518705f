#pragma once

#include <optional>
#include <vector>

#include "tonelli/interval.hpp"
#include "tonelli/value.hpp"

namespace tonelli {

// value(x) = a + b*x on the open segment (x0, x1).
struct LinearPiece {
    Rational x0, x1;
    Rational a, b;
};

// Exact a.e. representation of a 1-D piecewise-linear function: finitely
// many linear pieces with rational breakpoints, covering the window up to
// finitely many points. Point values do not matter for integration.
class Piecewise1D {
public:
    Piecewise1D() = default;
    explicit Piecewise1D(std::vector<LinearPiece> pieces);
    static Piecewise1D constant(Rational lo, Rational hi, Rational c);

    const std::vector<LinearPiece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    Rational lo() const { return pieces_.front().x0; }
    Rational hi() const { return pieces_.back().x1; }

    Rational integral() const;
    Rational integral(const Rational& lo, const Rational& hi) const;
    Piecewise1D clipped(const Rational& lo, const Rational& hi) const;

    // Exact inf/sup over the a.e. representation restricted to [lo,hi].
    std::pair<Rational, Rational> extrema(const Rational& lo, const Rational& hi) const;
    std::pair<Rational, Rational> extrema() const;

    void append(LinearPiece p);

    enum class Op { sum, product, max, min };
    // Pointwise combination; product of two pieces that are both genuinely
    // linear is quadratic and not representable, signalled with nullopt.
    static std::optional<Piecewise1D> combine(Op op, const Piecewise1D& f, const Piecewise1D& g);
    Piecewise1D truncated(bool take_max, const Rational& c) const;
    Piecewise1D scaled(const Rational& factor) const;

private:
    std::vector<LinearPiece> pieces_;  // sorted by x0, non-overlapping interiors
};

}  // namespace tonelli
