#pragma once

#include <concepts>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "trivext/errors.hpp"
#include "trivext/polynomial.hpp"

namespace trivext {

template <typename Value>
struct BezoutTriple {
    Value gcd;
    Value s;
    Value t;
};

/// Ring traits: the rational integers.
struct IntegerRing {
    using Value = mpz_class;

    static Value zero() { return 0; }
    static Value one() { return 1; }
    static bool is_zero(const Value& v) { return v == 0; }
    static bool is_unit(const Value& v) { return v == 1 || v == -1; }
    /// Associate representative: the absolute value.
    static Value normal(const Value& v) { return abs(v); }
    /// The unit u with u * v == normal(v).
    static Value normalizing_unit(const Value& v) { return v < 0 ? Value(-1) : Value(1); }

    /// Floor division: for b > 0 the remainder lies in [0, b).
    static std::pair<Value, Value> divmod(const Value& a, const Value& b) {
        if (b == 0)
            throw Error(Errc::DivisionByZero, "integer division by zero");
        Value q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {q, r};
    }
    static Value gcd(const Value& a, const Value& b) {
        Value g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static BezoutTriple<Value> extended_gcd(const Value& a, const Value& b) {
        Value g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return {g, s, t};
    }
    static std::string format(const Value& v) { return v.get_str(); }
    /// True when the printed form needs parentheses inside a quotient.
    static bool compound(const Value&) { return false; }
};

/// Ring traits: univariate polynomials over Q in the variable t.
struct PolynomialRing {
    using Value = Polynomial;

    static Value zero() { return {}; }
    static Value one() { return Polynomial(1); }
    static bool is_zero(const Value& v) { return v.is_zero(); }
    static bool is_unit(const Value& v) { return v.degree() == 0; }
    static Value normal(const Value& v) { return v.monic(); }
    static Value normalizing_unit(const Value& v) {
        return v.is_zero() ? one() : Polynomial(mpq_class(1 / v.leading()));
    }

    static std::pair<Value, Value> divmod(const Value& a, const Value& b) { return Polynomial::divmod(a, b); }
    static Value gcd(const Value& a, const Value& b) { return Polynomial::gcd(a, b); }
    static BezoutTriple<Value> extended_gcd(const Value& a, const Value& b) {
        auto r = Polynomial::extended_gcd(a, b);
        return {r.gcd, r.s, r.t};
    }
    static std::string format(const Value& v) { return v.to_string(); }
    static bool compound(const Value& v) {
        if (v.is_zero())
            return false;
        int terms = 0;
        for (const auto& c : v.coefficients())
            terms += c != 0;
        // A lone monomial with a fractional or negative coefficient still needs grouping.
        return terms > 1 || (v.degree() > 0 && v.leading() != 1);
    }
};

template <typename R>
concept EuclideanRingTraits = requires(const typename R::Value& a, const typename R::Value& b) {
    { R::zero() } -> std::same_as<typename R::Value>;
    { R::one() } -> std::same_as<typename R::Value>;
    { R::is_zero(a) } -> std::same_as<bool>;
    { R::is_unit(a) } -> std::same_as<bool>;
    { R::normal(a) } -> std::same_as<typename R::Value>;
    { R::normalizing_unit(a) } -> std::same_as<typename R::Value>;
    { R::divmod(a, b) } -> std::same_as<std::pair<typename R::Value, typename R::Value>>;
    { R::gcd(a, b) } -> std::same_as<typename R::Value>;
    { R::extended_gcd(a, b) } -> std::same_as<BezoutTriple<typename R::Value>>;
    { R::format(a) } -> std::same_as<std::string>;
};

} // namespace trivext
