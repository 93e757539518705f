#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace tonelli {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the canonical form (gcd = 1,
// positive denominator) after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    return Rational(std::move(num), std::move(den));
}

// 2^k for any sign of k.
Rational rat_pow2(long k);

// r^k, k >= 0.
Rational rat_pow(const Rational& r, unsigned long k);

BigInt rat_floor(const Rational& r);
BigInt rat_ceil(const Rational& r);

double rat_to_double(const Rational& r);

Rational rat_abs(const Rational& r);

// Always "p/q", matching the wire format (integers print as "p/1").
std::string rat_str(const Rational& r);

// Accepts "p/q", plain integers, decimal literals ("0.25") and scientific
// notation ("1e-8"), all parsed exactly.
Rational parse_rational(const std::string& text);

// sqrt(r) when r is a perfect square of a rational, nullopt otherwise.
std::optional<Rational> rat_exact_sqrt(const Rational& r);

}  // namespace tonelli
