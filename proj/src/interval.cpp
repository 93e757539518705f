#include "tonelli/interval.hpp"

#include <stdexcept>

namespace tonelli {

Interval::Interval(Rational lo, Rational hi, Topology topo)
    : lo_(std::move(lo)), hi_(std::move(hi)), topo_(topo) {
    if (lo_ > hi_) throw std::invalid_argument("interval: lo > hi");
}

Interval Interval::whole_line() {
    Interval i;
    i.topo_ = Topology::open;
    i.lo_inf_ = i.hi_inf_ = true;
    return i;
}

Interval Interval::ray_from(Rational lo, bool closed_lo) {
    Interval i;
    i.lo_ = std::move(lo);
    i.topo_ = closed_lo ? Topology::half_open_hi : Topology::open;
    i.hi_inf_ = true;
    return i;
}

Interval Interval::ray_to(Rational hi, bool closed_hi) {
    Interval i;
    i.hi_ = std::move(hi);
    i.topo_ = closed_hi ? Topology::half_open_lo : Topology::open;
    i.lo_inf_ = true;
    return i;
}

Rational Interval::length() const {
    if (!bounded()) throw std::domain_error("interval: length of unbounded interval");
    return hi_ - lo_;
}

bool Interval::contains(const Rational& x) const {
    if (!lo_inf_) {
        if (x < lo_) return false;
        if (x == lo_ && !topology_has_lo(topo_)) return false;
    }
    if (!hi_inf_) {
        if (x > hi_) return false;
        if (x == hi_ && !topology_has_hi(topo_)) return false;
    }
    return true;
}

bool Interval::contains(const Value& x) const {
    if (x.is_exact()) return contains(x.rat());
    double d = x.dbl();
    if (!lo_inf_ && d < rat_to_double(lo_)) return false;
    if (!hi_inf_ && d > rat_to_double(hi_)) return false;
    return true;
}

bool Interval::intersects(const Interval& other) const { return intersect(other).first; }

std::pair<bool, Interval> Interval::intersect(const Interval& other) const {
    // Resolve each endpoint of the intersection together with its openness.
    bool lo_inf = lo_inf_ && other.lo_inf_;
    bool hi_inf = hi_inf_ && other.hi_inf_;
    Rational lo, hi;
    bool lo_closed = true, hi_closed = true;
    if (!lo_inf) {
        if (lo_inf_ || (!other.lo_inf_ && other.lo_ > lo_)) {
            lo = other.lo_;
            lo_closed = topology_has_lo(other.topo_);
            if (!lo_inf_ && lo_ == other.lo_) lo_closed = lo_closed && topology_has_lo(topo_);
        } else if (other.lo_inf_ || lo_ > other.lo_) {
            lo = lo_;
            lo_closed = topology_has_lo(topo_);
        } else {  // equal
            lo = lo_;
            lo_closed = topology_has_lo(topo_) && topology_has_lo(other.topo_);
        }
    }
    if (!hi_inf) {
        if (hi_inf_ || (!other.hi_inf_ && other.hi_ < hi_)) {
            hi = other.hi_;
            hi_closed = topology_has_hi(other.topo_);
            if (!hi_inf_ && hi_ == other.hi_) hi_closed = hi_closed && topology_has_hi(topo_);
        } else if (other.hi_inf_ || hi_ < other.hi_) {
            hi = hi_;
            hi_closed = topology_has_hi(topo_);
        } else {
            hi = hi_;
            hi_closed = topology_has_hi(topo_) && topology_has_hi(other.topo_);
        }
    }
    if (!lo_inf && !hi_inf) {
        if (lo > hi) return {false, Interval()};
        if (lo == hi && !(lo_closed && hi_closed)) return {false, Interval()};
        Topology t = lo_closed ? (hi_closed ? Topology::closed : Topology::half_open_hi)
                               : (hi_closed ? Topology::half_open_lo : Topology::open);
        return {true, Interval(lo, hi, t)};
    }
    Interval out;
    out.lo_ = lo;
    out.hi_ = hi;
    out.lo_inf_ = lo_inf;
    out.hi_inf_ = hi_inf;
    out.topo_ = lo_closed ? (hi_closed ? Topology::closed : Topology::half_open_hi)
                          : (hi_closed ? Topology::half_open_lo : Topology::open);
    return {true, out};
}

Interval Interval::closure() const {
    Interval i = *this;
    i.topo_ = Topology::closed;
    return i;
}

Interval Interval::interior() const {
    Interval i = *this;
    i.topo_ = Topology::open;
    return i;
}

Interval Interval::translated(const Rational& offset) const {
    Interval i = *this;
    if (!i.lo_inf_) i.lo_ += offset;
    if (!i.hi_inf_) i.hi_ += offset;
    return i;
}

Interval Interval::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 5) throw std::invalid_argument("interval: bad literal '" + text + "'");
    char open_c = s.front(), close_c = s.back();
    if ((open_c != '(' && open_c != '[') || (close_c != ')' && close_c != ']'))
        throw std::invalid_argument("interval: bad literal '" + text + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("interval: bad literal '" + text + "'");
    Rational lo = parse_rational(s.substr(1, comma - 1));
    Rational hi = parse_rational(s.substr(comma + 1, s.size() - comma - 2));
    bool lc = open_c == '[', hc = close_c == ']';
    Topology t = lc ? (hc ? Topology::closed : Topology::half_open_hi)
                    : (hc ? Topology::half_open_lo : Topology::open);
    return Interval(std::move(lo), std::move(hi), t);
}

std::string Interval::str() const {
    std::string s;
    s += has_lo() ? '[' : '(';
    s += lo_inf_ ? std::string("-inf") : rat_str(lo_);
    s += ',';
    s += hi_inf_ ? std::string("+inf") : rat_str(hi_);
    s += has_hi() ? ']' : ')';
    return s;
}

bool operator==(const Interval& a, const Interval& b) {
    if (a.lo_infinite() != b.lo_infinite() || a.hi_infinite() != b.hi_infinite()) return false;
    if (!a.lo_infinite() && a.lo() != b.lo()) return false;
    if (!a.hi_infinite() && a.hi() != b.hi()) return false;
    return a.topology() == b.topology();
}

}  // namespace tonelli
