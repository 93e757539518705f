#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "tonelli/multirectangle.hpp"
#include "tonelli/piecewise.hpp"
#include "tonelli/value.hpp"

namespace tonelli {

// K = box \ union(removed); box bounded and closed, removed open.
struct ClosedComplementDomain {
    Rectangle box;
    Multirectangle removed;
};

// 1-D extension by linear interpolation across the gaps of K, constant on
// the half-gaps at the box edges. Agrees with f on K; min/max over the box
// equal min/max of f over K.
class Extension1D {
public:
    // Throws std::domain_error (EmptyK) when the cover swallows the box.
    Extension1D(const ClosedComplementDomain& dom, std::function<Value(const Rational&)> f_on_k);

    Value at(const Rational& x) const;
    double at(double x) const;

    // K as sorted disjoint closed intervals (isolated points included).
    const std::vector<Interval>& k_intervals() const { return k_; }

    // Exact extension when the restriction is piecewise linear; nullopt when
    // the window generator cannot represent it.
    std::optional<Piecewise1D> piecewise(
        const std::function<std::optional<Piecewise1D>(const Rational&, const Rational&)>&
            f_piecewise_on_k) const;

private:
    Rational box_lo_, box_hi_;
    std::vector<Interval> k_;              // sorted closed components of K
    std::function<Value(const Rational&)> f_;
    // flattened doubles for the fast path
    std::vector<double> k_lo_d_, k_hi_d_, f_lo_d_, f_hi_d_;
};

// Abstract compact set sampled for the averaging extension: exact membership
// where possible, a finite sample cloud, and its covering gap (every point
// of K lies within `gap` of some sample).
class CompactSampled {
public:
    virtual ~CompactSampled() = default;
    virtual int dim() const = 0;
    virtual bool contains(const Point& x) const = 0;
    virtual const std::vector<std::vector<double>>& samples() const = 0;
    virtual double covering_gap() const = 0;
    // Exact squared distance for exact query points, when the geometry allows.
    virtual std::optional<Rational> dist2(const std::vector<Rational>& x) const { return std::nullopt; }
};

// K = box \ union(open rectangles): cells from the face grid, lattice samples
// per cell, exact squared distances.
class BoxComplementK : public CompactSampled {
public:
    // Throws std::domain_error (EmptyK) when nothing survives.
    BoxComplementK(const ClosedComplementDomain& dom, int samples_per_unit = 16);
    int dim() const override { return dim_; }
    bool contains(const Point& x) const override;
    const std::vector<std::vector<double>>& samples() const override { return samples_; }
    double covering_gap() const override { return gap_; }
    std::optional<Rational> dist2(const std::vector<Rational>& x) const override;
    const Multirectangle& cells() const { return cells_; }

private:
    int dim_;
    Rectangle box_;
    Multirectangle removed_;
    Multirectangle cells_;
    std::vector<std::vector<double>> samples_;
    double gap_;
};

// The unit circle in the plane, sampled at equal angles. The negative
// control for pointwise-convergence preservation lives on it.
class CircleK : public CompactSampled {
public:
    explicit CircleK(int n_samples = 4096);
    int dim() const override { return 2; }
    bool contains(const Point& x) const override;
    const std::vector<std::vector<double>>& samples() const override { return samples_; }
    double covering_gap() const override { return gap_; }

private:
    std::vector<std::vector<double>> samples_;
    double gap_;
};

struct DistResult {
    double dist;
    std::optional<Rational> dist2;  // exact when the set supports it
};

// rho(x) = dist(x, K); exact squared distance on the box-complement path.
DistResult rho(const CompactSampled& k, const Point& x);

struct ExtendNdResult {
    double value;                      // F_n(x)
    std::optional<double> tolerance;   // |F_n - computed| bound when certifiable
    bool on_k = false;                 // x in K: value is f(x) exactly
};

// Tonelli averaging extension F_n(x) = 2^-n sum_k M(x, (1+k/2^n) rho(x)).
// M maximizes f over the fixed sample cloud filtered by distance, so M is
// monotone in r by construction and F_{n+1} >= F_n holds for the computed
// values. Certification needs a Lipschitz hint and the sample gap below
// rho(x)/2^n; if a required tolerance cannot be met the call throws
// std::runtime_error (SamplerTooCoarse).
ExtendNdResult extend_nd(const CompactSampled& k,
                         const std::function<Value(const Point&)>& f, const Point& x, int n,
                         std::optional<double> lipschitz = std::nullopt,
                         std::optional<double> value_spread = std::nullopt,
                         std::optional<double> required_tolerance = std::nullopt);

}  // namespace tonelli
