#pragma once

#include <optional>
#include <vector>

#include "tonelli/rational.hpp"

namespace tonelli {

// A scalar that remembers whether it is exact. Function evaluators consume
// and produce these: exact-rational coordinates keep the exact pipeline
// alive, sampled-real coordinates (plain doubles) are treated as irrational
// by the catalog functions that branch on rationality.
class Value {
public:
    Value() : approx_(0.0) { exact_ = Rational(0); }
    static Value exact(Rational r) {
        Value v;
        v.approx_ = rat_to_double(r);
        v.exact_ = std::move(r);
        return v;
    }
    static Value sampled(double d) {
        Value v;
        v.approx_ = d;
        v.exact_.reset();
        return v;
    }

    bool is_exact() const { return exact_.has_value(); }
    const Rational& rat() const { return *exact_; }
    double dbl() const { return approx_; }

    Value operator-() const {
        return exact_ ? Value::exact(-*exact_) : Value::sampled(-approx_);
    }
    friend Value operator+(const Value& a, const Value& b) {
        if (a.exact_ && b.exact_) return Value::exact(*a.exact_ + *b.exact_);
        return Value::sampled(a.approx_ + b.approx_);
    }
    friend Value operator-(const Value& a, const Value& b) { return a + (-b); }
    friend Value operator*(const Value& a, const Value& b) {
        if (a.exact_ && b.exact_) return Value::exact(*a.exact_ * *b.exact_);
        return Value::sampled(a.approx_ * b.approx_);
    }

private:
    std::optional<Rational> exact_;
    double approx_;
};

inline Value vmax(const Value& a, const Value& b) {
    if (a.is_exact() && b.is_exact()) return a.rat() >= b.rat() ? a : b;
    return a.dbl() >= b.dbl() ? a : b;
}
inline Value vmin(const Value& a, const Value& b) {
    if (a.is_exact() && b.is_exact()) return a.rat() <= b.rat() ? a : b;
    return a.dbl() <= b.dbl() ? a : b;
}
inline Value vabs(const Value& a) {
    return a.is_exact() ? Value::exact(rat_abs(a.rat())) : Value::sampled(std::abs(a.dbl()));
}

using Point = std::vector<Value>;

inline Point point1(Rational x) { return {Value::exact(std::move(x))}; }
inline Point point1(double x) { return {Value::sampled(x)}; }
inline Point point2(Rational x, Rational y) {
    return {Value::exact(std::move(x)), Value::exact(std::move(y))};
}

}  // namespace tonelli
