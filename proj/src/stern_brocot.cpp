#include "tonelli/stern_brocot.hpp"

namespace tonelli {

namespace {

// Minimal-denominator fraction in {x : lo <(=) x <(=) hi}, continued-fraction
// descent: strip the integer part, then recurse on reciprocals.
Rational simplest(Rational lo, bool lo_incl, Rational hi, bool hi_incl) {
    BigInt lo_int = rat_ceil(lo);
    if (Rational(lo_int) == lo && !lo_incl) ++lo_int;
    BigInt hi_int = rat_floor(hi);
    if (Rational(hi_int) == hi && !hi_incl) --hi_int;
    if (lo_int <= hi_int) {
        if (lo_int <= 0 && 0 <= hi_int) return Rational(0);
        return lo_int > 0 ? Rational(lo_int) : Rational(hi_int);
    }
    BigInt n = rat_floor(lo);
    Rational a = lo - Rational(n), b = hi - Rational(n);  // 0 <= a <= b <= 1, no integer inside
    if (a == 0) {
        // lo is the excluded integer n: range (n, n+b]. The minimal
        // denominator is the least q with 1/q inside (0, b].
        BigInt m = rat_ceil(Rational(1) / b);
        if (Rational(1) / b == Rational(m) && !hi_incl) ++m;
        return Rational(n) + Rational(BigInt(1), m);
    }
    // x in (a,b) <=> 1/x in (1/b, 1/a); inclusion flags swap sides.
    Rational inner = simplest(Rational(1) / b, hi_incl, Rational(1) / a, lo_incl);
    return Rational(n) + Rational(1) / inner;
}

}  // namespace

std::optional<Rational> simplest_rational_in(const Interval& iv) {
    if (!iv.bounded()) return std::nullopt;
    if (iv.degenerate()) {
        if (iv.topology() == Topology::closed) return iv.lo();
        return std::nullopt;
    }
    return simplest(iv.lo(), iv.has_lo(), iv.hi(), iv.has_hi());
}

}  // namespace tonelli
