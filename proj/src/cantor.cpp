#include "tonelli/cantor.hpp"

#include <map>
#include <stdexcept>

namespace tonelli {

namespace {

Rational stage_gap_length(CantorKind kind, int j) {
    return kind == CantorKind::ternary ? rat_pow(Rational(1, 3), static_cast<unsigned long>(j))
                                       : rat_pow(Rational(1, 4), static_cast<unsigned long>(j));
}

}  // namespace

CantorStage build_stage(CantorKind kind, int stage) {
    if (stage < 1) throw std::invalid_argument("cantor: stage >= 1 required");
    std::vector<std::pair<Rational, Rational>> retained{{Rational(0), Rational(1)}};
    std::vector<Interval> removed;
    for (int j = 1; j <= stage; ++j) {
        Rational gap = stage_gap_length(kind, j);
        std::vector<std::pair<Rational, Rational>> next;
        next.reserve(retained.size() * 2);
        for (const auto& [a, b] : retained) {
            Rational mid = (a + b) / 2;
            Rational left = mid - gap / 2, right = mid + gap / 2;
            removed.push_back(Interval::open(left, right));
            next.emplace_back(a, left);
            next.emplace_back(right, b);
        }
        retained = std::move(next);
    }
    CantorStage out;
    out.kind = kind;
    out.stage = stage;
    out.removed = Multirectangle::from_intervals(std::move(removed));
    std::vector<Interval> kept;
    kept.reserve(retained.size());
    for (const auto& [a, b] : retained) kept.push_back(Interval::closed(a, b));
    out.retained = Multirectangle::from_intervals(std::move(kept));
    out.removed_length = length(out.removed);
    out.retained_length = length(out.retained);
    return out;
}

Rational removed_measure(CantorKind kind, int stage) {
    if (stage < 1) throw std::invalid_argument("cantor: stage >= 1 required");
    Rational total(0);
    Rational count(1);  // 2^(j-1) intervals removed at stage j
    for (int j = 1; j <= stage; ++j) {
        total += count * stage_gap_length(kind, j);
        count *= 2;
    }
    return total;
}

Rational limit_removed_measure(CantorKind kind) {
    return kind == CantorKind::ternary ? Rational(1) : Rational(1, 2);
}

namespace {

bool digit_forbidden(CantorKind kind, long d) {
    return kind == CantorKind::ternary ? d == 1 : (d == 3 || d == 4);
}

// First forbidden digit position of the unique non-terminating expansion of
// a non-terminating rational, or 0 if none appears in preperiod + period.
int scan_expansion(CantorKind kind, const Rational& x, long base) {
    BigInt p = rat_num(x), q = rat_den(x);
    std::map<BigInt, int> seen;
    int pos = 0;
    while (true) {
        auto it = seen.find(p);
        if (it != seen.end()) return 0;  // cycled with no forbidden digit
        seen.emplace(p, pos);
        ++pos;
        BigInt scaled = p * base;
        BigInt d = scaled / q;
        p = scaled % q;
        if (digit_forbidden(kind, d.convert_to<long>())) return pos;
    }
}

// Digits of the finite expansion of x = c / base^m (most significant first).
std::vector<long> terminating_digits(const Rational& x, long base) {
    std::vector<long> digits;
    Rational rest = x;
    while (rest != 0) {
        rest *= base;
        BigInt d = rat_floor(rest);
        digits.push_back(d.convert_to<long>());
        rest -= Rational(d);
    }
    return digits;
}

bool is_base_terminating(const Rational& x, long base) {
    BigInt q = rat_den(x);
    BigInt b(base);
    while (q != 1) {
        BigInt g = boost::multiprecision::gcd(q, b);
        if (g == 1) return false;
        while (q % g == 0) q /= g;
    }
    return true;
}

}  // namespace

MembershipResult membership(CantorKind kind, const Rational& x) {
    if (x < 0 || x > 1) throw std::domain_error("OutOfDomain: membership needs x in [0,1]");
    const long base = kind == CantorKind::ternary ? 3 : 8;
    if (x == 0 || x == 1) return {Membership::in_limit_set, 0};
    if (is_base_terminating(x, base)) {
        // Two representations: the finite one, and the canonical rewrite
        // with last digit lowered and a trailing (base-1) tail. The tail
        // digit is never forbidden, so only finite prefixes need scanning.
        std::vector<long> fin = terminating_digits(x, base);
        int first_fin = 0;
        for (std::size_t i = 0; i < fin.size(); ++i) {
            if (digit_forbidden(kind, fin[i])) {
                first_fin = static_cast<int>(i) + 1;
                break;
            }
        }
        std::vector<long> canon = fin;
        canon.back() -= 1;  // trailing (base-1) digits follow
        int first_canon = 0;
        for (std::size_t i = 0; i < canon.size(); ++i) {
            if (digit_forbidden(kind, canon[i])) {
                first_canon = static_cast<int>(i) + 1;
                break;
            }
        }
        if (first_fin == 0 || first_canon == 0) return {Membership::in_limit_set, 0};
        return {Membership::in_complement_open_set, std::min(first_fin, first_canon)};
    }
    int pos = scan_expansion(kind, x, base);
    if (pos == 0) return {Membership::in_limit_set, 0};
    return {Membership::in_complement_open_set, pos};
}

Multirectangle cover_countable(const std::vector<Rational>& points, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("cover_countable: eps must be positive");
    std::vector<Interval> ivs;
    ivs.reserve(points.size());
    Rational len = eps / 4;  // interval n has length eps/2^(n+1)
    for (const auto& q : points) {
        ivs.push_back(Interval::open(q - len / 2, q + len / 2));
        len /= 2;
    }
    return Multirectangle::from_intervals(std::move(ivs));
}

std::vector<Rational> enumerate_unit_rationals(std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (long q = 2; out.size() < count; ++q) {
        for (long p = 1; p < q && out.size() < count; ++p) {
            if (boost::multiprecision::gcd(BigInt(p), BigInt(q)) == 1)
                out.emplace_back(p, q);
        }
    }
    return out;
}

}  // namespace tonelli
