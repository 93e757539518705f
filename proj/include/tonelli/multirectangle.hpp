#pragma once

#include <optional>
#include <vector>

#include "tonelli/rectangle.hpp"

namespace tonelli {

struct MultirectangleFlags {
    bool disjoint = false;
    bool almost_disjoint = false;
    bool open = false;
    bool closed = false;
};

// A finite sequence of rectangles, carrying the number L (sum of component
// volumes, duplicates counted) and the point set I (their union). Countable
// families enter only as finite truncations; the catalog constructors that
// need them carry analytic tail bounds alongside.
class Multirectangle {
public:
    Multirectangle() = default;
    explicit Multirectangle(std::vector<Rectangle> comps) : comps_(std::move(comps)) {}
    static Multirectangle from_intervals(std::vector<Interval> ivs);

    bool empty() const { return comps_.empty(); }
    std::size_t size() const { return comps_.size(); }
    int dim() const { return comps_.empty() ? 0 : comps_.front().dim(); }
    const std::vector<Rectangle>& components() const { return comps_; }
    const Rectangle& component(std::size_t k) const { return comps_[k]; }
    void add(Rectangle r) { comps_.push_back(std::move(r)); }

    bool contains(const std::vector<Rational>& p) const;
    bool contains(const Point& p) const;

    MultirectangleFlags flags() const;
    bool is_disjoint() const;
    bool is_almost_disjoint() const;
    bool is_open() const;
    bool is_closed() const;
    bool bounded() const;

    // Intervals of a 1-D instance.
    std::vector<Interval> intervals() const;

    std::string str() const;

private:
    std::vector<Rectangle> comps_;
};

// L(Delta): exact sum of component volumes, order-independent, duplicates
// counted. Throws std::domain_error on unbounded components.
Rational length(const Multirectangle& m);

// Union of two component sequences (concatenation).
Multirectangle merge(const Multirectangle& a, const Multirectangle& b);

// 1-D only, all components open: pairwise-disjoint open multiinterval with
// the same point set. Overlapping intervals merge; touching open intervals
// (a,b),(b,c) do not, since b belongs to neither.
Multirectangle disjointify_1d(const Multirectangle& m);

// Exact point-set measure lambda(I_Delta) for a bounded multirectangle of
// any dimension (topology tags do not matter). 1-D goes through
// disjointify-style sweeping, higher dimensions through the face grid.
Rational lambda_measure(const Multirectangle& m);

// Open-cover of I_A with L <= L(A) + eps; per-component inflation budget
// eps/2^(k+1). Pre: L(A) finite.
Multirectangle outer_measure_bound(const Multirectangle& a, const Rational& eps);

// Disjoint multirectangle with closed components, each closure inside the
// corresponding component of A, with L >= L(A) - eps. Degenerate components
// contribute singleton rectangles of length 0.
Multirectangle inner_measure_bound(const Multirectangle& a, const Rational& eps);

struct SectionResult {
    Multirectangle slice;      // rectangles of dimension d-1
    bool almost_disjoint;      // verified on the slice
    bool face_value;           // c hits a face coordinate of some component
};

// Section {y : (.. c ..) in R_n} along the given axis. Pre: m almost-disjoint.
SectionResult section(const Multirectangle& m, int axis, const Rational& c);

// A bounded open set presented as a finite union of open rectangles.
class OpenSetDescriptor {
public:
    OpenSetDescriptor() = default;
    explicit OpenSetDescriptor(Multirectangle rects);
    const Multirectangle& rects() const { return rects_; }
    int dim() const { return rects_.dim(); }
    bool contains(const std::vector<Rational>& p) const { return rects_.contains(p); }
    bool empty() const { return rects_.empty(); }
    Rational measure() const { return lambda_measure(rects_); }

private:
    Multirectangle rects_;
};

// Breadth-first dyadic decomposition of a bounded open set: level-0 cubes on
// the integer lattice, cubes meeting the set but not contained in it split
// into 2^d children, down to side 1/2^maxDepth. Result is a closed,
// almost-disjoint multirectangle inside the set. Throws std::domain_error
// (UnboundedSet) on unbounded input.
Multirectangle dyadic_decompose(const OpenSetDescriptor& open_set, int max_depth);

// Exact test used by dyadic_decompose and exposed for the oracles: is the
// closed cube covered by the finite union of open rectangles?
bool cube_inside_union(const Rectangle& cube, const Multirectangle& open_rects);

// R \ union(removed) as an almost-disjoint closed multirectangle, via the
// face grid of the removed components. Cells of every dimension (faces
// included) survive when no single open rectangle covers them.
Multirectangle box_minus_open(const Rectangle& box, const Multirectangle& removed);

// Wire format: JSON-ish array of arrays of interval literals.
Multirectangle parse_multirectangle(const std::string& text);
std::string multirectangle_str(const Multirectangle& m);

}  // namespace tonelli
