#include "tonelli/qc.hpp"

#include <cmath>
#include <stdexcept>

namespace tonelli {

namespace {

Rectangle domain_intersection(const QCFunction& f, const QCFunction& g) {
    if (f.dim != g.dim)
        throw std::invalid_argument("DomainMismatch: dimensions " + std::to_string(f.dim) +
                                    " vs " + std::to_string(g.dim));
    auto [ok, dom] = f.domain.intersect(g.domain);
    if (!ok) throw std::invalid_argument("DomainMismatch: empty domain intersection");
    return dom;
}

Value apply_op(CombineOp op, const Value& a, const Value& b) {
    switch (op) {
        case CombineOp::sum: return a + b;
        case CombineOp::product: return a * b;
        case CombineOp::max: return vmax(a, b);
        case CombineOp::min: return vmin(a, b);
    }
    return a;
}

Rational apply_op(CombineOp op, const Rational& a, const Rational& b) {
    switch (op) {
        case CombineOp::sum: return a + b;
        case CombineOp::product: return a * b;
        case CombineOp::max: return std::max(a, b);
        case CombineOp::min: return std::min(a, b);
    }
    return a;
}

Piecewise1D::Op to_pw_op(CombineOp op) {
    switch (op) {
        case CombineOp::sum: return Piecewise1D::Op::sum;
        case CombineOp::product: return Piecewise1D::Op::product;
        case CombineOp::max: return Piecewise1D::Op::max;
        case CombineOp::min: return Piecewise1D::Op::min;
    }
    return Piecewise1D::Op::sum;
}

CellBounds combine_bounds(CombineOp op, const CellBounds& a, const CellBounds& b) {
    CellBounds out;
    out.certified = a.certified && b.certified;
    switch (op) {
        case CombineOp::sum:
            out.lo = a.lo + b.lo;
            out.hi = a.hi + b.hi;
            break;
        case CombineOp::product: {
            Value c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
            out.lo = vmin(vmin(c1, c2), vmin(c3, c4));
            out.hi = vmax(vmax(c1, c2), vmax(c3, c4));
            break;
        }
        case CombineOp::max:
            out.lo = vmax(a.lo, b.lo);
            out.hi = vmax(a.hi, b.hi);
            break;
        case CombineOp::min:
            out.lo = vmin(a.lo, b.lo);
            out.hi = vmin(a.hi, b.hi);
            break;
    }
    return out;
}

const char* op_name(CombineOp op) {
    switch (op) {
        case CombineOp::sum: return "sum";
        case CombineOp::product: return "product";
        case CombineOp::max: return "max";
        case CombineOp::min: return "min";
    }
    return "?";
}

}  // namespace

QCFunction combine(CombineOp op, const QCFunction& f, const QCFunction& g) {
    QCFunction out;
    out.dim = f.dim;
    out.domain = domain_intersection(f, g);
    out.name = std::string(op_name(op)) + "(" + f.name + "," + g.name + ")";
    auto fe = f.eval, ge = g.eval;
    out.eval = [op, fe, ge](const Point& p) { return apply_op(op, fe(p), ge(p)); };

    auto fw = f.witness, gw = g.witness;
    out.witness = [op, fw, gw](const Rational& eps) {
        WitnessCover a = fw(eps / 2), b = gw(eps / 2);
        WitnessCover w;
        w.cover = merge(a.cover, b.cover);
        w.total_bound = a.total_bound + b.total_bound;
        w.truncated = a.truncated || b.truncated;
        if (a.restriction == WitnessCover::Restriction::constant &&
            b.restriction == WitnessCover::Restriction::constant) {
            w.restriction = WitnessCover::Restriction::constant;
            w.constant_value = apply_op(op, a.constant_value, b.constant_value);
        }
        auto ra = a.restricted_eval, rb = b.restricted_eval;
        w.restricted_eval = [op, ra, rb](const Point& p) {
            return apply_op(op, ra(p), rb(p));
        };
        if (a.restricted_piecewise && b.restricted_piecewise) {
            auto pa = a.restricted_piecewise, pb = b.restricted_piecewise;
            w.restricted_piecewise =
                [op, pa, pb](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
                auto x = pa(lo, hi), y = pb(lo, hi);
                if (!x || !y) return std::nullopt;
                return Piecewise1D::combine(to_pw_op(op), *x, *y);
            };
        }
        if (a.restricted_extrema && b.restricted_extrema) {
            auto xa = a.restricted_extrema, xb = b.restricted_extrema;
            w.restricted_extrema = [op, xa, xb](const Rectangle& cell) {
                return combine_bounds(op, xa(cell), xb(cell));
            };
        }
        return w;
    };

    if (f.bound && g.bound) {
        switch (op) {
            case CombineOp::sum: out.bound = *f.bound + *g.bound; break;
            case CombineOp::product: out.bound = *f.bound * *g.bound; break;
            case CombineOp::max:
            case CombineOp::min: out.bound = std::max(*f.bound, *g.bound); break;
        }
    }
    if (f.ae_constant && g.ae_constant)
        out.ae_constant = apply_op(op, *f.ae_constant, *g.ae_constant);

    out.tags.bounded = f.tags.bounded && g.tags.bounded;
    out.tags.continuous = f.tags.continuous && g.tags.continuous;
    out.tags.ae_continuous = f.tags.ae_continuous && g.tags.ae_continuous;
    out.tags.nonnegative = f.tags.nonnegative && g.tags.nonnegative;
    if (op != CombineOp::sum)
        out.tags.characteristic = f.tags.characteristic && g.tags.characteristic;

    if (f.piecewise_on && g.piecewise_on) {
        auto pf = f.piecewise_on, pg = g.piecewise_on;
        out.piecewise_on =
            [op, pf, pg](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            auto x = pf(lo, hi), y = pg(lo, hi);
            if (!x || !y) return std::nullopt;
            return Piecewise1D::combine(to_pw_op(op), *x, *y);
        };
    }
    if (f.extrema && g.extrema) {
        auto xf = f.extrema, xg = g.extrema;
        out.extrema = [op, xf, xg](const Rectangle& cell) {
            return combine_bounds(op, xf(cell), xg(cell));
        };
    }
    if (f.eval_fast1 && g.eval_fast1) {
        auto ff = f.eval_fast1, gf = g.eval_fast1;
        out.eval_fast1 = [op, ff, gf](double x) {
            double a = ff(x), b = gf(x);
            switch (op) {
                case CombineOp::sum: return a + b;
                case CombineOp::product: return a * b;
                case CombineOp::max: return std::max(a, b);
                case CombineOp::min: return std::min(a, b);
            }
            return a;
        };
    }
    if (f.extrema_fast1 && g.extrema_fast1) {
        auto xf = f.extrema_fast1, xg = g.extrema_fast1;
        out.extrema_fast1 = [op, xf, xg](double a, double b) {
            auto [fl, fh] = xf(a, b);
            auto [gl, gh] = xg(a, b);
            switch (op) {
                case CombineOp::sum: return std::make_pair(fl + gl, fh + gh);
                case CombineOp::product: {
                    double cs[4] = {fl * gl, fl * gh, fh * gl, fh * gh};
                    double lo = cs[0], hi = cs[0];
                    for (double c : cs) {
                        lo = std::min(lo, c);
                        hi = std::max(hi, c);
                    }
                    return std::make_pair(lo, hi);
                }
                case CombineOp::max: return std::make_pair(std::max(fl, gl), std::max(fh, gh));
                case CombineOp::min: return std::make_pair(std::min(fl, gl), std::min(fh, gh));
            }
            return std::make_pair(fl, fh);
        };
    }
    if (f.lipschitz && g.lipschitz) {
        switch (op) {
            case CombineOp::sum: out.lipschitz = *f.lipschitz + *g.lipschitz; break;
            case CombineOp::max:
            case CombineOp::min: out.lipschitz = std::max(*f.lipschitz, *g.lipschitz); break;
            case CombineOp::product:
                if (f.bound && g.bound)
                    out.lipschitz = *f.lipschitz * *g.bound + *g.lipschitz * *f.bound;
                break;
        }
    }
    if (f.indicator_set && g.indicator_set) {
        if (op == CombineOp::product || op == CombineOp::min) {
            Multirectangle inter;
            for (const auto& a : f.indicator_set->components())
                for (const auto& b : g.indicator_set->components()) {
                    auto [ok, x] = a.intersect(b);
                    if (ok) inter.add(std::move(x));
                }
            out.indicator_set = std::move(inter);
        } else if (op == CombineOp::max) {
            out.indicator_set = merge(*f.indicator_set, *g.indicator_set);
        }
    }
    return out;
}

QCFunction truncate(const QCFunction& f, TruncateMode mode, std::optional<Rational> c) {
    if (!c) return f;  // infinity sentinel: identity
    const Rational level = *c;
    const bool take_max = mode == TruncateMode::plus;
    QCFunction out = f;
    out.name = std::string("truncate(") + f.name + "," + (take_max ? "plus" : "minus") + "," +
               rat_str(level) + ")";
    auto fe = f.eval;
    Value lv = Value::exact(level);
    out.eval = [fe, lv, take_max](const Point& p) {
        Value v = fe(p);
        return take_max ? vmax(v, lv) : vmin(v, lv);
    };
    auto fw = f.witness;
    out.witness = [fw, level, take_max](const Rational& eps) {
        WitnessCover w = fw(eps);  // the same multiinterval works
        if (w.restriction == WitnessCover::Restriction::constant)
            w.constant_value = take_max ? std::max(w.constant_value, level)
                                        : std::min(w.constant_value, level);
        auto re = w.restricted_eval;
        Value lv = Value::exact(level);
        w.restricted_eval = [re, lv, take_max](const Point& p) {
            Value v = re(p);
            return take_max ? vmax(v, lv) : vmin(v, lv);
        };
        if (w.restricted_piecewise) {
            auto rp = w.restricted_piecewise;
            w.restricted_piecewise =
                [rp, level, take_max](const Rational& lo,
                                      const Rational& hi) -> std::optional<Piecewise1D> {
                auto x = rp(lo, hi);
                if (!x) return std::nullopt;
                return x->truncated(take_max, level);
            };
        }
        if (w.restricted_extrema) {
            auto rx = w.restricted_extrema;
            Value rl = Value::exact(level);
            w.restricted_extrema = [rx, rl, take_max](const Rectangle& cell) {
                CellBounds b = rx(cell);
                if (take_max) {
                    b.lo = vmax(b.lo, rl);
                    b.hi = vmax(b.hi, rl);
                } else {
                    b.lo = vmin(b.lo, rl);
                    b.hi = vmin(b.hi, rl);
                }
                return b;
            };
        }
        return w;
    };
    if (f.bound) out.bound = std::max(*f.bound, rat_abs(level));
    if (f.ae_constant)
        out.ae_constant = take_max ? std::max(*f.ae_constant, level) : std::min(*f.ae_constant, level);
    if (take_max && level >= 0) out.tags.nonnegative = true;
    out.tags.characteristic = false;
    if (f.piecewise_on) {
        auto pf = f.piecewise_on;
        out.piecewise_on =
            [pf, level, take_max](const Rational& lo, const Rational& hi) -> std::optional<Piecewise1D> {
            auto x = pf(lo, hi);
            if (!x) return std::nullopt;
            return x->truncated(take_max, level);
        };
    }
    if (f.extrema) {
        auto xf = f.extrema;
        Value lv = Value::exact(level);
        out.extrema = [xf, lv, take_max](const Rectangle& cell) {
            CellBounds b = xf(cell);
            if (take_max) {
                b.lo = vmax(b.lo, lv);
                b.hi = vmax(b.hi, lv);
            } else {
                b.lo = vmin(b.lo, lv);
                b.hi = vmin(b.hi, lv);
            }
            return b;
        };
    }
    if (f.eval_fast1) {
        auto ff = f.eval_fast1;
        double ld = rat_to_double(level);
        out.eval_fast1 = [ff, ld, take_max](double x) {
            double v = ff(x);
            return take_max ? std::max(v, ld) : std::min(v, ld);
        };
    }
    if (f.extrema_fast1) {
        auto xf = f.extrema_fast1;
        double ld = rat_to_double(level);
        out.extrema_fast1 = [xf, ld, take_max](double a, double b) {
            auto [lo, hi] = xf(a, b);
            if (take_max) return std::make_pair(std::max(lo, ld), std::max(hi, ld));
            return std::make_pair(std::min(lo, ld), std::min(hi, ld));
        };
    }
    return out;
}

QCFunction qc_negate(const QCFunction& f) {
    QCFunction out = f;
    out.name = "neg(" + f.name + ")";
    auto fe = f.eval;
    out.eval = [fe](const Point& p) { return -fe(p); };
    auto fw = f.witness;
    out.witness = [fw](const Rational& eps) {
        WitnessCover w = fw(eps);
        if (w.restriction == WitnessCover::Restriction::constant)
            w.constant_value = -w.constant_value;
        auto re = w.restricted_eval;
        w.restricted_eval = [re](const Point& p) { return -re(p); };
        if (w.restricted_piecewise) {
            auto rp = w.restricted_piecewise;
            w.restricted_piecewise = [rp](const Rational& lo,
                                          const Rational& hi) -> std::optional<Piecewise1D> {
                auto x = rp(lo, hi);
                if (!x) return std::nullopt;
                return x->scaled(Rational(-1));
            };
        }
        if (w.restricted_extrema) {
            auto rx = w.restricted_extrema;
            w.restricted_extrema = [rx](const Rectangle& cell) {
                CellBounds b = rx(cell);
                CellBounds out{-b.hi, -b.lo, b.certified};
                return out;
            };
        }
        return w;
    };
    if (f.ae_constant) out.ae_constant = -*f.ae_constant;
    out.tags.nonnegative = false;
    out.tags.characteristic = false;
    if (f.piecewise_on) {
        auto pf = f.piecewise_on;
        out.piecewise_on = [pf](const Rational& lo,
                                const Rational& hi) -> std::optional<Piecewise1D> {
            auto x = pf(lo, hi);
            if (!x) return std::nullopt;
            return x->scaled(Rational(-1));
        };
    }
    if (f.extrema) {
        auto xf = f.extrema;
        out.extrema = [xf](const Rectangle& cell) {
            CellBounds b = xf(cell);
            return CellBounds{-b.hi, -b.lo, b.certified};
        };
    }
    if (f.eval_fast1) {
        auto ff = f.eval_fast1;
        out.eval_fast1 = [ff](double x) { return -ff(x); };
    }
    out.extrema_fast1 = nullptr;
    if (f.extrema_fast1) {
        auto xf = f.extrema_fast1;
        out.extrema_fast1 = [xf](double a, double b) {
            auto [lo, hi] = xf(a, b);
            return std::make_pair(-hi, -lo);
        };
    }
    out.extrema_fast2 = nullptr;
    if (f.extrema_fast2) {
        auto xf = f.extrema_fast2;
        out.extrema_fast2 = [xf](double a, double b, double c, double d) {
            auto [lo, hi] = xf(a, b, c, d);
            return std::make_pair(-hi, -lo);
        };
    }
    out.indicator_set.reset();
    return out;
}

QCFunction qc_abs(const QCFunction& f) {
    if (f.tags.nonnegative) return f;
    QCFunction out = combine(CombineOp::max, f, qc_negate(f));
    out.name = "abs(" + f.name + ")";
    out.bound = f.bound;
    out.tags.nonnegative = true;
    return out;
}

QCFunction restrict_to_set(const QCFunction& f, const QCFunction& a) {
    if (!a.tags.characteristic)
        throw std::invalid_argument("NotCharacteristic: restrict_to_set needs a {0,1}-valued descriptor");
    QCFunction out = combine(CombineOp::product, f, a);
    out.name = "restrict(" + f.name + "," + a.name + ")";
    return out;
}

namespace {

// Splits "a,b,c" at top-level occurrences of the delimiter (parentheses and
// brackets nest).
std::vector<std::string> split_top_level(const std::string& s, char delim) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(' || ch == '[') ++depth;
        if (ch == ')' || ch == ']') --depth;
        if (ch == delim && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

namespace {

// Catalog parameters carry bare commas ("poly:0,1"), so binary-combinator
// bodies are split by trying every top-level comma until both halves parse.
std::pair<QCFunction, QCFunction> parse_two(const std::string& head, const std::string& body) {
    auto parts = split_top_level(body, ',');
    if (parts.size() < 2)
        throw std::invalid_argument("function DSL: " + head + " expects two arguments");
    std::string last_error;
    for (std::size_t split = 1; split < parts.size(); ++split) {
        std::string left = parts[0], right;
        for (std::size_t i = 1; i < split; ++i) left += "," + parts[i];
        right = parts[split];
        for (std::size_t i = split + 1; i < parts.size(); ++i) right += "," + parts[i];
        try {
            QCFunction a = parse_function(left);
            QCFunction b = parse_function(right);
            return {std::move(a), std::move(b)};
        } catch (const std::invalid_argument& e) {
            last_error = e.what();
        }
    }
    throw std::invalid_argument("function DSL: cannot split arguments of " + head + ": " +
                                last_error);
}

}  // namespace

QCFunction parse_function(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("function DSL: empty expression");
    auto paren = s.find('(');
    bool combinator_shape = paren != std::string::npos && paren > 0 && s.back() == ')' &&
                            s.find(':') > paren;  // "indicator:(0,1)" is a catalog atom
    if (combinator_shape) {
        std::string head = s.substr(0, paren);
        std::string body = s.substr(paren + 1, s.size() - paren - 2);
        if (head == "sum" || head == "product" || head == "max" || head == "min") {
            CombineOp op = head == "sum"       ? CombineOp::sum
                           : head == "product" ? CombineOp::product
                           : head == "max"     ? CombineOp::max
                                               : CombineOp::min;
            auto [a, b] = parse_two(head, body);
            return combine(op, a, b);
        }
        if (head == "prod") {
            auto args = split_top_level(body, ';');
            if (args.size() != 2)
                throw std::invalid_argument("function DSL: prod expects u;v");
            return separable_product(parse_function(args[0]), parse_function(args[1]));
        }
        if (head == "truncate") {
            // f may carry commas: mode and level are the last two fields
            auto parts = split_top_level(body, ',');
            if (parts.size() < 3)
                throw std::invalid_argument("function DSL: truncate expects f,mode,c");
            std::string level = parts.back();
            std::string mode_s = parts[parts.size() - 2];
            std::string fn = parts[0];
            for (std::size_t i = 1; i + 2 < parts.size(); ++i) fn += "," + parts[i];
            TruncateMode mode;
            if (mode_s == "plus")
                mode = TruncateMode::plus;
            else if (mode_s == "minus")
                mode = TruncateMode::minus;
            else
                throw std::invalid_argument("function DSL: truncate mode must be plus|minus");
            return truncate(parse_function(fn), mode, parse_rational(level));
        }
        if (head == "restrict") {
            auto [a, b] = parse_two(head, body);
            return restrict_to_set(a, b);
        }
        throw std::invalid_argument("function DSL: unknown combinator '" + head + "'");
    }
    return catalog(s);
}

}  // namespace tonelli
