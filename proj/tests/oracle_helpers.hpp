#pragma once

#include <random>
#include <vector>

#include "tonelli/multirectangle.hpp"

namespace tonelli::testing {

// Independent sweep-line measure of a union of 1-D intervals: sort the
// endpoints, walk the coverage count. Deliberately separate from the
// library's disjointify path.
inline Rational sweep_line_measure(const Multirectangle& m) {
    struct Event {
        Rational x;
        int delta;
    };
    std::vector<Event> events;
    for (const auto& r : m.components()) {
        const Interval& iv = r.side(0);
        if (iv.lo() == iv.hi()) continue;
        events.push_back({iv.lo(), +1});
        events.push_back({iv.hi(), -1});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.delta > b.delta;  // opens before closes at the same point
    });
    Rational total(0);
    int depth = 0;
    Rational open_at(0);
    for (const auto& e : events) {
        if (depth > 0 && e.delta == -1 && depth + e.delta == 0) total += e.x - open_at;
        if (depth == 0 && e.delta == +1) open_at = e.x;
        depth += e.delta;
    }
    return total;
}

// Random finite union of rational-endpoint open intervals inside [lo, hi].
inline Multirectangle random_multiinterval(std::mt19937_64& rng, const Rational& lo,
                                           const Rational& hi, int max_pieces = 6,
                                           long denom = 1 << 10) {
    Multirectangle out;
    int pieces = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_pieces));
    Rational width = hi - lo;
    for (int i = 0; i < pieces; ++i) {
        long a = static_cast<long>(rng() % static_cast<unsigned long>(denom));
        long b = static_cast<long>(rng() % static_cast<unsigned long>(denom));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        out.add(Rectangle::from_interval(Interval::open(lo + width * Rational(a, denom),
                                                        lo + width * Rational(b, denom))));
    }
    if (out.empty())
        out.add(Rectangle::from_interval(
            Interval::open(lo, lo + width * Rational(1, denom))));
    return out;
}

// Random almost-disjoint union of closed rational boxes in [0,1]^d built on
// a coarse grid (cells chosen without replacement).
inline Multirectangle random_grid_boxes(std::mt19937_64& rng, int dim, int grid = 4,
                                        int count = 5) {
    Multirectangle out;
    std::vector<long> chosen;
    for (int c = 0; c < count; ++c) {
        long cell = static_cast<long>(rng() % static_cast<unsigned long>(
                                          std::pow(grid, dim)));
        bool dup = false;
        for (long prev : chosen) dup = dup || prev == cell;
        if (dup) continue;
        chosen.push_back(cell);
        std::vector<Interval> sides;
        long rest = cell;
        for (int k = 0; k < dim; ++k) {
            long idx = rest % grid;
            rest /= grid;
            sides.push_back(Interval::closed(Rational(idx, grid), Rational(idx + 1, grid)));
        }
        out.add(Rectangle(std::move(sides)));
    }
    return out;
}

// Brute-force dyadic retained length: enumerate every cube of level <= depth
// over the integer bounding lattice; a cube is retained iff it lies in the
// open set and its parent does not.
inline Rational brute_force_dyadic_length(const OpenSetDescriptor& o, int depth) {
    const int d = o.dim();
    std::vector<long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        Rational a = o.rects().component(0).side(k).lo();
        Rational b = o.rects().component(0).side(k).hi();
        for (const auto& r : o.rects().components()) {
            a = std::min(a, r.side(k).lo());
            b = std::max(b, r.side(k).hi());
        }
        lo[static_cast<std::size_t>(k)] = rat_floor(a).convert_to<long>();
        hi[static_cast<std::size_t>(k)] = rat_ceil(b).convert_to<long>();
    }
    auto cube_at = [&](int level, const std::vector<long>& idx) {
        std::vector<Interval> sides;
        Rational scale = rat_pow2(-level);
        for (long k : idx)
            sides.push_back(Interval::closed(Rational(k) * scale, Rational(k + 1) * scale));
        return Rectangle(std::move(sides));
    };
    Rational total(0);
    for (int level = 0; level <= depth; ++level) {
        std::vector<long> idx(static_cast<std::size_t>(d));
        std::vector<long> base_lo(static_cast<std::size_t>(d)), base_hi(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            base_lo[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)] * (1L << level);
            base_hi[static_cast<std::size_t>(k)] = hi[static_cast<std::size_t>(k)] * (1L << level);
        }
        idx = base_lo;
        while (true) {
            Rectangle cube = cube_at(level, idx);
            if (cube_inside_union(cube, o.rects())) {
                bool parent_inside = false;
                if (level > 0) {
                    std::vector<long> pidx(idx.size());
                    for (std::size_t k = 0; k < idx.size(); ++k)
                        pidx[k] = idx[k] >= 0 ? idx[k] / 2 : (idx[k] - 1) / 2;
                    parent_inside = cube_inside_union(cube_at(level - 1, pidx), o.rects());
                }
                if (!parent_inside) total += cube.volume();
            }
            int k = 0;
            for (; k < d; ++k) {
                auto kk = static_cast<std::size_t>(k);
                if (idx[kk] + 1 < base_hi[kk]) {
                    ++idx[kk];
                    break;
                }
                idx[kk] = base_lo[kk];
            }
            if (k == d) break;
        }
    }
    return total;
}

}  // namespace tonelli::testing
