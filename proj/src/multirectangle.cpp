#include "tonelli/multirectangle.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace tonelli {

Multirectangle Multirectangle::from_intervals(std::vector<Interval> ivs) {
    std::vector<Rectangle> comps;
    comps.reserve(ivs.size());
    for (auto& iv : ivs) comps.push_back(Rectangle::from_interval(std::move(iv)));
    return Multirectangle(std::move(comps));
}

bool Multirectangle::contains(const std::vector<Rational>& p) const {
    for (const auto& r : comps_)
        if (r.contains(p)) return true;
    return false;
}

bool Multirectangle::contains(const Point& p) const {
    for (const auto& r : comps_)
        if (r.contains(p)) return true;
    return false;
}

namespace {

bool pair_almost_disjoint(const Rectangle& a, const Rectangle& b) {
    auto [ok, x] = a.intersect(b);
    if (!ok) return true;
    return !x.intersects(a.interior()) && !x.intersects(b.interior());
}

}  // namespace

bool Multirectangle::is_disjoint() const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (std::size_t j = i + 1; j < comps_.size(); ++j)
            if (comps_[i].intersects(comps_[j])) return false;
    return true;
}

bool Multirectangle::is_almost_disjoint() const {
    for (std::size_t i = 0; i < comps_.size(); ++i)
        for (std::size_t j = i + 1; j < comps_.size(); ++j)
            if (!pair_almost_disjoint(comps_[i], comps_[j])) return false;
    return true;
}

bool Multirectangle::is_open() const {
    for (const auto& r : comps_)
        for (const auto& s : r.sides())
            if (s.has_lo() || s.has_hi()) return false;
    return true;
}

bool Multirectangle::is_closed() const {
    for (const auto& r : comps_)
        for (const auto& s : r.sides())
            if (!s.bounded() || s.topology() != Topology::closed) return false;
    return true;
}

bool Multirectangle::bounded() const {
    for (const auto& r : comps_)
        if (!r.bounded()) return false;
    return true;
}

MultirectangleFlags Multirectangle::flags() const {
    return {is_disjoint(), is_almost_disjoint(), is_open(), is_closed()};
}

std::vector<Interval> Multirectangle::intervals() const {
    if (dim() > 1) throw std::domain_error("multirectangle: intervals() needs dimension 1");
    std::vector<Interval> out;
    out.reserve(comps_.size());
    for (const auto& r : comps_) out.push_back(r.side(0));
    return out;
}

std::string Multirectangle::str() const { return multirectangle_str(*this); }

Rational length(const Multirectangle& m) {
    Rational total(0);
    for (const auto& r : m.components()) {
        if (!r.bounded()) throw std::domain_error("multirectangle: L of unbounded component");
        total += r.volume();
    }
    return total;
}

Multirectangle merge(const Multirectangle& a, const Multirectangle& b) {
    std::vector<Rectangle> comps = a.components();
    comps.insert(comps.end(), b.components().begin(), b.components().end());
    return Multirectangle(std::move(comps));
}

Multirectangle disjointify_1d(const Multirectangle& m) {
    if (m.empty()) return m;
    if (m.dim() != 1) throw std::domain_error("disjointify_1d: dimension 1 required");
    std::vector<Interval> ivs = m.intervals();
    for (const auto& iv : ivs) {
        if (iv.has_lo() || iv.has_hi())
            throw std::domain_error("disjointify_1d: open components required");
        if (!iv.bounded()) throw std::domain_error("disjointify_1d: bounded components required");
    }
    std::sort(ivs.begin(), ivs.end(), [](const Interval& a, const Interval& b) {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return a.hi() < b.hi();
    });
    std::vector<Interval> out;
    Rational lo = ivs.front().lo(), hi = ivs.front().hi();
    for (std::size_t k = 1; k < ivs.size(); ++k) {
        if (ivs[k].lo() < hi) {
            if (ivs[k].hi() > hi) hi = ivs[k].hi();
        } else {
            out.push_back(Interval::open(lo, hi));
            lo = ivs[k].lo();
            hi = ivs[k].hi();
        }
    }
    out.push_back(Interval::open(lo, hi));
    return Multirectangle::from_intervals(std::move(out));
}

namespace {

// Sorted unique grid coordinates along one axis, from component endpoints.
std::vector<Rational> axis_coords(const Multirectangle& m, int axis) {
    std::vector<Rational> cs;
    for (const auto& r : m.components()) {
        cs.push_back(r.side(axis).lo());
        cs.push_back(r.side(axis).hi());
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return cs;
}

}  // namespace

Rational lambda_measure(const Multirectangle& m) {
    if (m.empty()) return Rational(0);
    if (!m.bounded()) throw std::domain_error("lambda: unbounded multirectangle");
    const int d = m.dim();
    if (d == 1) {
        std::vector<std::pair<Rational, Rational>> segs;
        for (const auto& r : m.components()) {
            const Interval& iv = r.side(0);
            if (iv.lo() < iv.hi()) segs.emplace_back(iv.lo(), iv.hi());
        }
        if (segs.empty()) return Rational(0);
        std::sort(segs.begin(), segs.end());
        Rational total(0), lo = segs.front().first, hi = segs.front().second;
        for (std::size_t k = 1; k < segs.size(); ++k) {
            if (segs[k].first <= hi) {
                if (segs[k].second > hi) hi = segs[k].second;
            } else {
                total += hi - lo;
                lo = segs[k].first;
                hi = segs[k].second;
            }
        }
        total += hi - lo;
        return total;
    }
    std::vector<std::vector<Rational>> grid;
    grid.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) grid.push_back(axis_coords(m, k));
    std::vector<std::size_t> cell(static_cast<std::size_t>(d), 0);
    Rational total(0);
    while (true) {
        bool valid = true;
        for (int k = 0; k < d; ++k)
            if (cell[static_cast<std::size_t>(k)] + 1 >= grid[static_cast<std::size_t>(k)].size()) valid = false;
        if (valid) {
            std::vector<Rational> mid(static_cast<std::size_t>(d));
            Rational vol(1);
            for (int k = 0; k < d; ++k) {
                const auto& g = grid[static_cast<std::size_t>(k)];
                const Rational& a = g[cell[static_cast<std::size_t>(k)]];
                const Rational& b = g[cell[static_cast<std::size_t>(k)] + 1];
                mid[static_cast<std::size_t>(k)] = (a + b) / 2;
                vol *= b - a;
            }
            for (const auto& r : m.components()) {
                if (r.closure().contains(mid)) {
                    total += vol;
                    break;
                }
            }
        }
        // advance the cell index
        int k = 0;
        for (; k < d; ++k) {
            auto& ck = cell[static_cast<std::size_t>(k)];
            if (ck + 2 < grid[static_cast<std::size_t>(k)].size()) {
                ++ck;
                break;
            }
            ck = 0;
        }
        if (k == d) break;
    }
    return total;
}

namespace {

// Largest sigma of the form budget/2^t that keeps the inflated/deflated
// volume within budget; exact rational checks.
Rational pick_inflation_sigma(const Rectangle& r, const Rational& budget) {
    Rational sigma = budget / 4;
    for (int iter = 0; iter < 512; ++iter) {
        Rational inflated(1);
        for (const auto& s : r.sides()) inflated *= s.length() + 2 * sigma;
        if (inflated - r.volume() < budget && sigma > 0) return sigma;
        sigma /= 2;
    }
    throw std::runtime_error("outer_measure_bound: sigma search failed");
}

}  // namespace

Multirectangle outer_measure_bound(const Multirectangle& a, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("outer_measure_bound: eps must be positive");
    Multirectangle out;
    Rational budget = eps / 4;  // component k gets eps/2^(k+2); total eps/2 < eps
    for (const auto& r : a.components()) {
        if (!r.bounded()) throw std::domain_error("outer_measure_bound: unbounded component");
        Rational sigma = pick_inflation_sigma(r, budget);
        std::vector<Interval> sides;
        sides.reserve(static_cast<std::size_t>(r.dim()));
        for (const auto& s : r.sides())
            sides.push_back(Interval::open(s.lo() - sigma, s.hi() + sigma));
        out.add(Rectangle(std::move(sides)));
        budget /= 2;
    }
    return out;
}

Multirectangle inner_measure_bound(const Multirectangle& a, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("inner_measure_bound: eps must be positive");
    Multirectangle out;
    Rational budget = eps / 4;
    for (const auto& r : a.components()) {
        if (!r.bounded()) throw std::domain_error("inner_measure_bound: unbounded component");
        if (r.degenerate()) {
            out.add(r.closure());
            continue;
        }
        Rational min_side = r.side(0).length();
        for (const auto& s : r.sides()) min_side = std::min(min_side, s.length());
        Rational sigma = pick_inflation_sigma(r, budget);
        while (2 * sigma >= min_side) sigma /= 2;
        std::vector<Interval> sides;
        sides.reserve(static_cast<std::size_t>(r.dim()));
        for (const auto& s : r.sides())
            sides.push_back(Interval::closed(s.lo() + sigma, s.hi() - sigma));
        out.add(Rectangle(std::move(sides)));
        budget /= 2;
    }
    return out;
}

SectionResult section(const Multirectangle& m, int axis, const Rational& c) {
    if (m.dim() < 2) throw std::domain_error("section: dimension >= 2 required");
    if (axis < 0 || axis >= m.dim()) throw std::invalid_argument("section: bad axis");
    SectionResult res;
    res.face_value = false;
    for (const auto& r : m.components()) {
        const Interval& s = r.side(axis);
        if (s.bounded() && (c == s.lo() || c == s.hi())) res.face_value = true;
        if (!s.contains(c)) continue;
        std::vector<Interval> rest;
        for (int k = 0; k < r.dim(); ++k)
            if (k != axis) rest.push_back(r.side(k));
        res.slice.add(Rectangle(std::move(rest)));
    }
    res.almost_disjoint = res.slice.is_almost_disjoint();
    return res;
}

OpenSetDescriptor::OpenSetDescriptor(Multirectangle rects) : rects_(std::move(rects)) {
    if (!rects_.is_open())
        throw std::invalid_argument("open set descriptor: components must be open rectangles");
}

namespace {

// Mixed grid cell: per axis either a gap (c_j, c_{j+1}) or a point {c_j}.
// Its relative interior never crosses a grid plane, so a finite union of
// open rectangles with faces on the grid either contains it or misses it.
struct MixedCellWalker {
    const std::vector<std::vector<Rational>>& grid;  // per-axis coords
    std::vector<std::size_t> pos;                    // 0..2*n-2; even = point, odd = gap
    bool done = false;

    explicit MixedCellWalker(const std::vector<std::vector<Rational>>& g)
        : grid(g), pos(g.size(), 0) {}

    bool axis_is_point(int k) const { return pos[static_cast<std::size_t>(k)] % 2 == 0; }
    // For points: the coordinate. For gaps: (coord(k,0), coord(k,1)) open.
    const Rational& coord(int k, int side) const {
        std::size_t p = pos[static_cast<std::size_t>(k)];
        return grid[static_cast<std::size_t>(k)][p / 2 + static_cast<std::size_t>(side)];
    }
    bool advance() {
        for (std::size_t k = 0; k < pos.size(); ++k) {
            if (pos[k] + 1 < 2 * grid[k].size() - 1) {
                ++pos[k];
                return true;
            }
            pos[k] = 0;
        }
        return false;
    }
};

bool cell_inside_open_rect(const MixedCellWalker& w, const Rectangle& rect) {
    for (int k = 0; k < rect.dim(); ++k) {
        const Interval& s = rect.side(k);
        if (w.axis_is_point(k)) {
            const Rational& c = w.coord(k, 0);
            if (!(!s.lo_infinite() ? s.lo() < c : true) || !(!s.hi_infinite() ? c < s.hi() : true))
                return false;
        } else {
            if (!s.lo_infinite() && s.lo() > w.coord(k, 0)) return false;
            if (!s.hi_infinite() && s.hi() < w.coord(k, 1)) return false;
        }
    }
    return true;
}

bool cell_inside_closed_rect(const MixedCellWalker& w, const Rectangle& rect) {
    for (int k = 0; k < rect.dim(); ++k) {
        const Interval& s = rect.side(k);
        const Rational& lo = w.coord(k, 0);
        const Rational& hi = w.coord(k, w.axis_is_point(k) ? 0 : 1);
        if (s.lo() > lo || s.hi() < hi) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> clipped_grid(const Rectangle& box, const Multirectangle& rects) {
    std::vector<std::vector<Rational>> grid;
    for (int k = 0; k < box.dim(); ++k) {
        std::vector<Rational> cs{box.side(k).lo(), box.side(k).hi()};
        for (const auto& r : rects.components()) {
            for (const Rational& c : {r.side(k).lo(), r.side(k).hi()})
                if (c > box.side(k).lo() && c < box.side(k).hi()) cs.push_back(c);
        }
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        grid.push_back(std::move(cs));
    }
    return grid;
}

}  // namespace

bool cube_inside_union(const Rectangle& cube, const Multirectangle& open_rects) {
    if (open_rects.empty()) return false;
    auto grid = clipped_grid(cube, open_rects);
    MixedCellWalker w(grid);
    while (true) {
        bool covered = false;
        for (const auto& r : open_rects.components()) {
            if (cell_inside_open_rect(w, r)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
        if (!w.advance()) return true;
    }
}

Multirectangle box_minus_open(const Rectangle& box, const Multirectangle& removed) {
    if (!box.bounded()) throw std::domain_error("box_minus_open: bounded box required");
    if (removed.empty()) {
        Multirectangle out;
        out.add(box.closure());
        return out;
    }
    auto grid = clipped_grid(box, removed);
    const int d = box.dim();
    std::vector<Rectangle> kept;      // full-dimensional survivors first
    std::vector<Rectangle> kept_low;  // lower-dimensional survivors
    MixedCellWalker w(grid);
    // Pass over all mixed cells, recording survivors as closed rectangles.
    while (true) {
        bool inside_removed = false;
        for (const auto& r : removed.components()) {
            if (cell_inside_open_rect(w, r)) {
                inside_removed = true;
                break;
            }
        }
        if (!inside_removed) {
            std::vector<Interval> sides;
            bool full = true;
            for (int k = 0; k < d; ++k) {
                if (w.axis_is_point(k)) {
                    full = false;
                    sides.push_back(Interval::point(w.coord(k, 0)));
                } else {
                    sides.push_back(Interval::closed(w.coord(k, 0), w.coord(k, 1)));
                }
            }
            (full ? kept : kept_low).push_back(Rectangle(std::move(sides)));
        }
        if (!w.advance()) break;
    }
    // Lower-dimensional cells already lying on a kept full cell are redundant.
    Multirectangle out(std::move(kept));
    for (const auto& cell : kept_low) {
        bool redundant = false;
        for (const auto& big : out.components()) {
            if (big.contains_rect(cell)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.add(cell);
    }
    return out;
}

namespace {

struct DyadicCube {
    int level;
    std::vector<long long> idx;  // cube = prod [idx/2^level, (idx+1)/2^level]
};

Rectangle cube_rect(const DyadicCube& c) {
    std::vector<Interval> sides;
    sides.reserve(c.idx.size());
    Rational scale = rat_pow2(-c.level);
    for (long long k : c.idx)
        sides.push_back(Interval::closed(Rational(k) * scale, Rational(k + 1) * scale));
    return Rectangle(std::move(sides));
}

bool cube_meets_open(const Rectangle& cube, const Multirectangle& open_rects) {
    for (const auto& r : open_rects.components())
        if (cube.intersects(r)) return true;
    return false;
}

}  // namespace

Multirectangle dyadic_decompose(const OpenSetDescriptor& open_set, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("dyadic_decompose: maxDepth >= 0 required");
    if (open_set.empty()) return Multirectangle();
    if (!open_set.rects().bounded())
        throw std::domain_error("UnboundedSet: dyadic decomposition needs a bounded open set");
    const int d = open_set.dim();
    // Integer-lattice seed covering the bounding box.
    std::vector<long long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        Rational a = open_set.rects().component(0).side(k).lo();
        Rational b = open_set.rects().component(0).side(k).hi();
        for (const auto& r : open_set.rects().components()) {
            a = std::min(a, r.side(k).lo());
            b = std::max(b, r.side(k).hi());
        }
        lo[static_cast<std::size_t>(k)] = rat_floor(a).convert_to<long long>();
        hi[static_cast<std::size_t>(k)] = rat_ceil(b).convert_to<long long>();
    }
    std::deque<DyadicCube> queue;
    std::vector<long long> idx = lo;
    while (true) {
        queue.push_back({0, idx});
        int k = 0;
        for (; k < d; ++k) {
            auto kk = static_cast<std::size_t>(k);
            if (idx[kk] + 1 < hi[kk]) {
                ++idx[kk];
                break;
            }
            idx[kk] = lo[kk];
        }
        if (k == d) break;
    }
    Multirectangle retained;
    while (!queue.empty()) {
        DyadicCube c = std::move(queue.front());
        queue.pop_front();
        Rectangle rect = cube_rect(c);
        if (cube_inside_union(rect, open_set.rects())) {
            retained.add(std::move(rect));
            continue;
        }
        if (c.level >= max_depth) continue;
        if (!cube_meets_open(rect, open_set.rects())) continue;
        // Split into 2^d children at the next dyadic level.
        std::vector<long long> child(c.idx.size());
        for (unsigned mask = 0; mask < (1u << d); ++mask) {
            for (int k = 0; k < d; ++k)
                child[static_cast<std::size_t>(k)] =
                    2 * c.idx[static_cast<std::size_t>(k)] + ((mask >> k) & 1u);
            queue.push_back({c.level + 1, child});
        }
    }
    return retained;
}

Multirectangle parse_multirectangle(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::invalid_argument("multirectangle: JSON array expected");
    Multirectangle out;
    for (const auto& rect : j) {
        if (!rect.is_array()) throw std::invalid_argument("multirectangle: array of arrays expected");
        std::vector<Interval> sides;
        for (const auto& iv : rect) sides.push_back(Interval::parse(iv.get<std::string>()));
        out.add(Rectangle(std::move(sides)));
    }
    return out;
}

std::string multirectangle_str(const Multirectangle& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : m.components()) {
        nlohmann::json rect = nlohmann::json::array();
        for (const auto& s : r.sides()) rect.push_back(s.str());
        j.push_back(rect);
    }
    return j.dump();
}

}  // namespace tonelli
