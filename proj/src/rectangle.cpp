#include "tonelli/rectangle.hpp"

#include <stdexcept>

namespace tonelli {

bool Rectangle::bounded() const {
    for (const auto& s : sides_)
        if (!s.bounded()) return false;
    return true;
}

Rational Rectangle::volume() const {
    if (sides_.empty()) throw std::domain_error("rectangle: volume of 0-dim rectangle");
    Rational v(1);
    for (const auto& s : sides_) v *= s.length();
    return v;
}

bool Rectangle::degenerate() const {
    for (const auto& s : sides_)
        if (s.degenerate()) return true;
    return false;
}

bool Rectangle::contains(const std::vector<Rational>& p) const {
    if (p.size() != sides_.size()) return false;
    for (std::size_t k = 0; k < sides_.size(); ++k)
        if (!sides_[k].contains(p[k])) return false;
    return true;
}

bool Rectangle::contains(const Point& p) const {
    if (p.size() != sides_.size()) return false;
    for (std::size_t k = 0; k < sides_.size(); ++k)
        if (!sides_[k].contains(p[k])) return false;
    return true;
}

namespace {
bool side_contains_side(const Interval& outer, const Interval& inner) {
    if (!outer.lo_infinite()) {
        if (inner.lo_infinite()) return false;
        if (inner.lo() < outer.lo()) return false;
        if (inner.lo() == outer.lo() && inner.has_lo() && !outer.has_lo()) return false;
    }
    if (!outer.hi_infinite()) {
        if (inner.hi_infinite()) return false;
        if (inner.hi() > outer.hi()) return false;
        if (inner.hi() == outer.hi() && inner.has_hi() && !outer.has_hi()) return false;
    }
    return true;
}
}  // namespace

bool Rectangle::contains_rect(const Rectangle& other) const {
    if (dim() != other.dim()) return false;
    for (int k = 0; k < dim(); ++k)
        if (!side_contains_side(side(k), other.side(k))) return false;
    return true;
}

bool Rectangle::intersects(const Rectangle& other) const { return intersect(other).first; }

std::pair<bool, Rectangle> Rectangle::intersect(const Rectangle& other) const {
    if (dim() != other.dim()) return {false, Rectangle()};
    std::vector<Interval> out;
    out.reserve(sides_.size());
    for (int k = 0; k < dim(); ++k) {
        auto [ok, iv] = side(k).intersect(other.side(k));
        if (!ok) return {false, Rectangle()};
        out.push_back(std::move(iv));
    }
    return {true, Rectangle(std::move(out))};
}

bool Rectangle::interiors_overlap(const Rectangle& other) const {
    if (dim() != other.dim()) return false;
    for (int k = 0; k < dim(); ++k) {
        const Interval &a = side(k), &b = other.side(k);
        if (a.lo_infinite() || a.hi_infinite() || b.lo_infinite() || b.hi_infinite()) {
            auto [ok, iv] = a.interior().intersect(b.interior());
            if (!ok || iv.degenerate()) return false;
            continue;
        }
        Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
        Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
        if (lo >= hi) return false;
    }
    return true;
}

Rectangle Rectangle::closure() const {
    std::vector<Interval> out;
    out.reserve(sides_.size());
    for (const auto& s : sides_) out.push_back(s.closure());
    return Rectangle(std::move(out));
}

Rectangle Rectangle::interior() const {
    std::vector<Interval> out;
    out.reserve(sides_.size());
    for (const auto& s : sides_) out.push_back(s.interior());
    return Rectangle(std::move(out));
}

Rectangle Rectangle::translated(const std::vector<Rational>& offset) const {
    if (offset.size() != sides_.size())
        throw std::invalid_argument("rectangle: translation dimension mismatch");
    std::vector<Interval> out;
    out.reserve(sides_.size());
    for (std::size_t k = 0; k < sides_.size(); ++k) out.push_back(sides_[k].translated(offset[k]));
    return Rectangle(std::move(out));
}

std::string Rectangle::str() const {
    std::string s;
    for (std::size_t k = 0; k < sides_.size(); ++k) {
        if (k) s += "x";
        s += sides_[k].str();
    }
    return s;
}

bool operator==(const Rectangle& a, const Rectangle& b) {
    if (a.dim() != b.dim()) return false;
    for (int k = 0; k < a.dim(); ++k)
        if (!(a.side(k) == b.side(k))) return false;
    return true;
}

}  // namespace tonelli
