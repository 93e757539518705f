#include "tonelli/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace tonelli {

Piecewise1D::Piecewise1D(std::vector<LinearPiece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const LinearPiece& a, const LinearPiece& b) { return a.x0 < b.x0; });
    pieces_.erase(std::remove_if(pieces_.begin(), pieces_.end(),
                                 [](const LinearPiece& p) { return p.x0 >= p.x1; }),
                  pieces_.end());
}

Piecewise1D Piecewise1D::constant(Rational lo, Rational hi, Rational c) {
    if (lo >= hi) return Piecewise1D();
    return Piecewise1D({LinearPiece{std::move(lo), std::move(hi), std::move(c), Rational(0)}});
}

void Piecewise1D::append(LinearPiece p) {
    if (p.x0 >= p.x1) return;
    pieces_.push_back(std::move(p));
    std::sort(pieces_.begin(), pieces_.end(),
              [](const LinearPiece& a, const LinearPiece& b) { return a.x0 < b.x0; });
}

Rational Piecewise1D::integral() const {
    Rational total(0);
    for (const auto& p : pieces_)
        total += p.a * (p.x1 - p.x0) + p.b * (p.x1 * p.x1 - p.x0 * p.x0) / 2;
    return total;
}

Rational Piecewise1D::integral(const Rational& lo, const Rational& hi) const {
    return clipped(lo, hi).integral();
}

Piecewise1D Piecewise1D::clipped(const Rational& lo, const Rational& hi) const {
    std::vector<LinearPiece> out;
    for (const auto& p : pieces_) {
        Rational a = std::max(p.x0, lo), b = std::min(p.x1, hi);
        if (a < b) out.push_back(LinearPiece{a, b, p.a, p.b});
    }
    return Piecewise1D(std::move(out));
}

std::pair<Rational, Rational> Piecewise1D::extrema(const Rational& lo, const Rational& hi) const {
    return clipped(lo, hi).extrema();
}

std::pair<Rational, Rational> Piecewise1D::extrema() const {
    if (pieces_.empty()) throw std::domain_error("piecewise: extrema of empty function");
    bool first = true;
    Rational mn(0), mx(0);
    for (const auto& p : pieces_) {
        for (const Rational& x : {p.x0, p.x1}) {
            Rational v = p.a + p.b * x;
            if (first || v < mn) mn = v;
            if (first || v > mx) mx = v;
            first = false;
        }
    }
    return {mn, mx};
}

namespace {

std::vector<Rational> refined_breakpoints(const Piecewise1D& f, const Piecewise1D& g) {
    std::vector<Rational> cuts;
    for (const auto& p : f.pieces()) {
        cuts.push_back(p.x0);
        cuts.push_back(p.x1);
    }
    for (const auto& p : g.pieces()) {
        cuts.push_back(p.x0);
        cuts.push_back(p.x1);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

const LinearPiece* piece_covering(const Piecewise1D& f, const Rational& a, const Rational& b) {
    for (const auto& p : f.pieces())
        if (p.x0 <= a && b <= p.x1) return &p;
    return nullptr;
}

}  // namespace

std::optional<Piecewise1D> Piecewise1D::combine(Op op, const Piecewise1D& f,
                                                const Piecewise1D& g) {
    std::vector<Rational> cuts = refined_breakpoints(f, g);
    std::vector<LinearPiece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational &a = cuts[i], &b = cuts[i + 1];
        const LinearPiece* pf = piece_covering(f, a, b);
        const LinearPiece* pg = piece_covering(g, a, b);
        if (!pf || !pg) continue;  // outside one of the supports
        switch (op) {
            case Op::sum:
                out.push_back({a, b, pf->a + pg->a, pf->b + pg->b});
                break;
            case Op::product:
                if (pf->b == 0)
                    out.push_back({a, b, pf->a * pg->a, pf->a * pg->b});
                else if (pg->b == 0)
                    out.push_back({a, b, pg->a * pf->a, pg->a * pf->b});
                else
                    return std::nullopt;  // quadratic
                break;
            case Op::max:
            case Op::min: {
                bool want_max = op == Op::max;
                auto emit = [&](const Rational& s, const Rational& t) {
                    if (s >= t) return;
                    Rational mid = (s + t) / 2;
                    Rational vf = pf->a + pf->b * mid, vg = pg->a + pg->b * mid;
                    const LinearPiece* win =
                        (want_max ? vf >= vg : vf <= vg) ? pf : pg;
                    out.push_back({s, t, win->a, win->b});
                };
                if (pf->b == pg->b) {
                    emit(a, b);
                } else {
                    Rational cross = (pg->a - pf->a) / (pf->b - pg->b);
                    if (cross > a && cross < b) {
                        emit(a, cross);
                        emit(cross, b);
                    } else {
                        emit(a, b);
                    }
                }
                break;
            }
        }
    }
    return Piecewise1D(std::move(out));
}

Piecewise1D Piecewise1D::truncated(bool take_max, const Rational& c) const {
    Piecewise1D constant_fn;
    std::vector<LinearPiece> cs;
    for (const auto& p : pieces_) cs.push_back({p.x0, p.x1, c, Rational(0)});
    constant_fn = Piecewise1D(std::move(cs));
    auto res = combine(take_max ? Op::max : Op::min, *this, constant_fn);
    return *res;  // max/min of linear pieces is always representable
}

Piecewise1D Piecewise1D::scaled(const Rational& factor) const {
    std::vector<LinearPiece> out = pieces_;
    for (auto& p : out) {
        p.a *= factor;
        p.b *= factor;
    }
    return Piecewise1D(std::move(out));
}

}  // namespace tonelli
