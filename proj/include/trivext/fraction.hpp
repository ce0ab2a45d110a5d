#pragma once

#include <string>

#include "trivext/euclidean.hpp"

namespace trivext {

/// Element of the fraction field of a Euclidean ring, kept reduced with a
/// normalized denominator so that equal values have equal representations.
template <EuclideanRingTraits R>
class Fraction {
public:
    using Value = typename R::Value;

    Fraction() : num_(R::zero()), den_(R::one()) {}
    Fraction(Value num) : num_(std::move(num)), den_(R::one()) {}
    Fraction(long n) : Fraction(Value(n)) {}
    Fraction(Value num, Value den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    const Value& numerator() const noexcept { return num_; }
    const Value& denominator() const noexcept { return den_; }

    bool is_zero() const { return R::is_zero(num_); }
    bool is_integral() const { return den_ == R::one(); }

    Fraction inverse() const {
        if (is_zero())
            throw Error(Errc::InversionOfZero, "inverse of zero");
        return Fraction(den_, num_);
    }

    Fraction operator-() const {
        Fraction out = *this;
        out.num_ = R::zero() - out.num_;
        return out;
    }
    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero())
            throw Error(Errc::DivisionByZero, "fraction division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (is_integral())
            return R::format(num_);
        auto wrap = [](const Value& v) {
            return R::compound(v) ? "(" + R::format(v) + ")" : R::format(v);
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    void canonicalize() {
        if (R::is_zero(den_))
            throw Error(Errc::DivisionByZero, "zero denominator");
        if (R::is_zero(num_)) {
            den_ = R::one();
            return;
        }
        const Value g = R::gcd(num_, den_);
        num_ = R::divmod(num_, g).first;
        den_ = R::divmod(den_, g).first;
        const Value u = R::normalizing_unit(den_);
        num_ = num_ * u;
        den_ = den_ * u;
    }

    Value num_;
    Value den_;
};

} // namespace trivext
