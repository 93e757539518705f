#include "tonelli/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace tonelli {

Rational rat_pow2(long k) {
    BigInt p = BigInt(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational rat_pow(const Rational& r, unsigned long k) {
    Rational acc(1);
    Rational base = r;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

BigInt rat_floor(const Rational& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

BigInt rat_ceil(const Rational& r) { return -rat_floor(-r); }

double rat_to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rat_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::string rat_str(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string mantissa;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("rational: bad literal '" + text + "'");
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw std::invalid_argument("rational: bad literal '" + text + "'");
        }
    }
    long exp10 = 0;
    if (i < s.size()) {  // exponent part
        ++i;
        std::string e = s.substr(i);
        if (e.empty() || ((e[0] == '+' || e[0] == '-') && e.size() == 1))
            throw std::invalid_argument("rational: bad literal '" + text + "'");
        std::size_t j = (e[0] == '+' || e[0] == '-') ? 1 : 0;
        if (!all_digits(e.substr(j)))
            throw std::invalid_argument("rational: bad literal '" + text + "'");
        exp10 = std::strtol(e.c_str(), nullptr, 10);
    }
    if (!seen_digit) throw std::invalid_argument("rational: bad literal '" + text + "'");
    // strip leading zeros: cpp_int would read "025" as octal
    std::size_t nz = mantissa.find_first_not_of('0');
    mantissa = nz == std::string::npos ? "0" : mantissa.substr(nz);
    BigInt num(mantissa);
    Rational r(num);
    long shift = exp10 - frac_digits;
    BigInt ten(10);
    if (shift > 0) {
        BigInt p(1);
        for (long k = 0; k < shift; ++k) p *= ten;
        r *= Rational(p);
    } else if (shift < 0) {
        BigInt p(1);
        for (long k = 0; k < -shift; ++k) p *= ten;
        r /= Rational(p);
    }
    return neg ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational: empty literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        if (ns.empty() || ds.empty())
            throw std::invalid_argument("rational: bad literal '" + text + "'");
        BigInt n(ns), d(ds);
        return make_rational(std::move(n), std::move(d));
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return parse_decimal(s);
    return Rational(BigInt(s));
}

std::optional<Rational> rat_exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt sn = boost::multiprecision::sqrt(n);
    BigInt sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace tonelli
