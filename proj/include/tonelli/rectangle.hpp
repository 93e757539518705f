#pragma once

#include <vector>

#include "tonelli/interval.hpp"

namespace tonelli {

// Axis-aligned rectangle: the cartesian product of d intervals.
class Rectangle {
public:
    Rectangle() = default;
    explicit Rectangle(std::vector<Interval> sides) : sides_(std::move(sides)) {}
    static Rectangle from_interval(Interval i) { return Rectangle({std::move(i)}); }

    int dim() const { return static_cast<int>(sides_.size()); }
    const std::vector<Interval>& sides() const { return sides_; }
    const Interval& side(int k) const { return sides_[static_cast<std::size_t>(k)]; }
    Interval& side(int k) { return sides_[static_cast<std::size_t>(k)]; }

    bool bounded() const;
    // Product of side lengths; zero iff some side is degenerate.
    Rational volume() const;
    bool degenerate() const;

    bool contains(const std::vector<Rational>& p) const;
    bool contains(const Point& p) const;
    bool contains_rect(const Rectangle& other) const;  // componentwise, topology-exact

    bool intersects(const Rectangle& other) const;
    std::pair<bool, Rectangle> intersect(const Rectangle& other) const;

    // The intersection has interior points in both rectangles.
    bool interiors_overlap(const Rectangle& other) const;

    Rectangle closure() const;
    Rectangle interior() const;
    Rectangle translated(const std::vector<Rational>& offset) const;

    std::string str() const;

private:
    std::vector<Interval> sides_;
};

bool operator==(const Rectangle& a, const Rectangle& b);

}  // namespace tonelli
