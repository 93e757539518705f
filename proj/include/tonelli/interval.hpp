#pragma once

#include <string>

#include "tonelli/rational.hpp"
#include "tonelli/value.hpp"

namespace tonelli {

// Endpoint membership. half_open_lo excludes lo, half_open_hi excludes hi.
enum class Topology { open, closed, half_open_lo, half_open_hi };

inline bool topology_has_lo(Topology t) {
    return t == Topology::closed || t == Topology::half_open_hi;
}
inline bool topology_has_hi(Topology t) {
    return t == Topology::closed || t == Topology::half_open_lo;
}

// An interval with exact rational endpoints. Infinite endpoints (sentinels)
// are legal only inside function domains, never in multirectangle components
// that contribute to L.
class Interval {
public:
    Interval() : lo_(0), hi_(0), topo_(Topology::closed) {}
    Interval(Rational lo, Rational hi, Topology topo);

    static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), Topology::open}; }
    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), Topology::closed}; }
    static Interval point(Rational x) { return closed(x, x); }
    static Interval whole_line();
    static Interval ray_from(Rational lo, bool closed_lo);  // [lo,+inf) or (lo,+inf)
    static Interval ray_to(Rational hi, bool closed_hi);    // (-inf,hi] or (-inf,hi)

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Topology topology() const { return topo_; }
    bool lo_infinite() const { return lo_inf_; }
    bool hi_infinite() const { return hi_inf_; }
    bool bounded() const { return !lo_inf_ && !hi_inf_; }
    bool has_lo() const { return !lo_inf_ && topology_has_lo(topo_); }
    bool has_hi() const { return !hi_inf_ && topology_has_hi(topo_); }

    // hi - lo, independent of the topology tag. Requires bounded().
    Rational length() const;
    bool degenerate() const { return bounded() && lo_ == hi_; }

    bool contains(const Rational& x) const;
    // A sampled-real coordinate is tested against the numeric endpoints only.
    bool contains(const Value& x) const;

    bool intersects(const Interval& other) const;
    // Topology-exact intersection; empty result reported through the bool.
    std::pair<bool, Interval> intersect(const Interval& other) const;

    Interval closure() const;
    Interval interior() const;  // degenerate intervals yield an empty marker (lo>hi is never built; callers test degenerate())

    Interval translated(const Rational& offset) const;

    // "(a,b)", "[a,b]", "[a,b)", "(a,b]"  with rational literals inside.
    static Interval parse(const std::string& text);
    std::string str() const;

private:
    Rational lo_, hi_;
    Topology topo_;
    bool lo_inf_ = false, hi_inf_ = false;
};

bool operator==(const Interval& a, const Interval& b);

}  // namespace tonelli
