#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trivext/fraction.hpp"
#include "trivext/kinds.hpp"

namespace trivext {

template <EuclideanRingTraits R>
struct PidInfo;

template <>
struct PidInfo<IntegerRing> {
    static constexpr DomainKind kind = DomainKind::Integers;
    static constexpr const char* name = "Z";
};

template <>
struct PidInfo<PolynomialRing> {
    static constexpr DomainKind kind = DomainKind::RationalPolynomials;
    static constexpr const char* name = "Q[t]";
};

/// Fractional ideal of a Euclidean domain: always principal. The generator
/// has a normalized numerator, so equal ideals compare equal.
template <EuclideanRingTraits R>
struct PrincipalIdeal {
    Fraction<R> generator;

    friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

/// Z and Q[t]: Euclidean domains, so every f.g. fractional ideal is
/// principal and ideal arithmetic reduces to gcd/lcm of generators.
template <EuclideanRingTraits R>
class PidDomain {
public:
    using Ring = R;
    using Value = typename R::Value;
    using Element = Fraction<R>;
    using Ideal = PrincipalIdeal<R>;

    static constexpr DomainKind kind = PidInfo<R>::kind;

    std::string name() const { return PidInfo<R>::name; }
    bool operator==(const PidDomain&) const = default;

    // --- elements -------------------------------------------------------

    Element zero() const { return {}; }
    Element one() const { return Element(R::one()); }
    Element from_integer(long n) const { return Element(n); }
    Element from_ring(const Value& v) const { return Element(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const { return a.inverse(); }
    Element div(const Element& a, const Element& b) const { return a / b; }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_integral(const Element& a) const { return a.is_integral(); }
    bool is_unit(const Element& a) const { return a.is_integral() && R::is_unit(a.numerator()); }

    DivisionWitness<Element> divides(const Element& x, const Element& y) const {
        if (x.is_zero())
            throw Error(Errc::DivisionByZero, "divides: zero divisor");
        Element w = y / x;
        const bool integral = w.is_integral();
        return {std::move(w), integral};
    }

    /// Coefficients c_i in A with x = sum c_i * gens_i, via iterated extended gcd
    /// after clearing denominators.
    std::optional<std::vector<Element>> solve_generators(const Element& x, std::span<const Element> gens) const {
        if (gens.empty())
            throw Error(Errc::UnsupportedCombination, "solve_generators needs a generator");
        Value common = x.denominator();
        for (const auto& g : gens)
            common = lcm(common, g.denominator());
        const Value target = scaled(x, common);

        Value gcd = R::zero();
        std::vector<Value> coeffs;
        coeffs.reserve(gens.size());
        for (const auto& g : gens) {
            auto b = R::extended_gcd(gcd, scaled(g, common));
            for (auto& c : coeffs)
                c = c * b.s;
            coeffs.push_back(b.t);
            gcd = b.gcd;
        }
        if (R::is_zero(gcd)) {
            if (!R::is_zero(target))
                return std::nullopt;
            return std::vector<Element>(gens.size(), zero());
        }
        auto [q, r] = R::divmod(target, gcd);
        if (!R::is_zero(r))
            return std::nullopt;
        std::vector<Element> out;
        out.reserve(coeffs.size());
        for (const auto& c : coeffs)
            out.emplace_back(c * q);
        return out;
    }

    std::string format(const Element& a) const { return a.to_string(); }

    // --- fractional ideals -----------------------------------------------

    Ideal zero_ideal() const { return Ideal{zero()}; }
    Ideal unit_ideal() const { return Ideal{one()}; }

    Ideal principal(const Element& x) const {
        if (x.is_zero())
            return zero_ideal();
        const Value u = R::normalizing_unit(x.numerator());
        return Ideal{Element(x.numerator() * u, x.denominator())};
    }

    Ideal ideal(std::span<const Element> gens) const {
        Ideal acc = zero_ideal();
        for (const auto& g : gens)
            acc = sum(acc, principal(g));
        return acc;
    }

    bool is_zero(const Ideal& I) const { return I.generator.is_zero(); }
    std::vector<Element> generators(const Ideal& I) const {
        if (is_zero(I))
            return {};
        return {I.generator};
    }
    std::size_t generator_count(const Ideal& I) const { return is_zero(I) ? 0 : 1; }

    Ideal sum(const Ideal& I, const Ideal& J) const {
        if (is_zero(I))
            return J;
        if (is_zero(J))
            return I;
        const auto& a = I.generator;
        const auto& b = J.generator;
        return principal(Element(R::gcd(a.numerator() * b.denominator(), b.numerator() * a.denominator()),
                                 a.denominator() * b.denominator()));
    }

    Ideal product(const Ideal& I, const Ideal& J) const { return principal(I.generator * J.generator); }

    Ideal intersect(const Ideal& I, const Ideal& J) const {
        if (is_zero(I) || is_zero(J))
            return zero_ideal();
        const auto& a = I.generator;
        const auto& b = J.generator;
        return principal(Element(lcm(a.numerator() * b.denominator(), b.numerator() * a.denominator()),
                                 a.denominator() * b.denominator()));
    }

    /// (I : J) = {x : xJ ⊆ I}; for principal ideals the quotient of generators.
    Ideal colon(const Ideal& I, const Ideal& J) const {
        if (is_zero(J))
            throw Error(Errc::ColonByZeroIdeal, "(I : 0) is undefined");
        if (is_zero(I))
            return zero_ideal();
        return principal(I.generator / J.generator);
    }

    Ideal inverse(const Ideal& J) const { return colon(unit_ideal(), J); }
    Ideal scale(const Element& x, const Ideal& I) const { return principal(x * I.generator); }

    bool member(const Element& x, const Ideal& I) const {
        if (is_zero(I))
            return x.is_zero();
        return (x / I.generator).is_integral();
    }
    /// J ⊆ I.
    bool contains(const Ideal& I, const Ideal& J) const { return member(J.generator, I); }
    bool is_integral(const Ideal& I) const { return I.generator.is_integral(); }

    /// Canonical coset representative of x + I: I.gen * frac(x / I.gen), where
    /// frac keeps the remainder of numerator by denominator.
    Element reduce(const Element& x, const Ideal& I) const {
        if (is_zero(I))
            return x;
        const Element y = x / I.generator;
        auto rem = R::divmod(y.numerator(), y.denominator()).second;
        return I.generator * Element(std::move(rem), y.denominator());
    }

    IdealMethod combine_method() const { return IdealMethod::PrincipalGcd; }
    IdealMethod colon_method() const { return IdealMethod::PrincipalGcd; }

    /// Literal form accepted by the parser, e.g. "Z: 1/4".
    std::string format_ideal(const Ideal& I) const { return name() + ": " + I.generator.to_string(); }

    /// Human form, e.g. "Z", "2Z", "(1/4)Z", "(t)Q[t]".
    std::string pretty(const Ideal& I) const {
        if (is_zero(I))
            return "0";
        if (I.generator == one())
            return name();
        const std::string g = I.generator.to_string();
        if constexpr (kind == DomainKind::Integers) {
            if (I.generator.is_integral())
                return g + name();
        }
        return "(" + g + ")" + name();
    }

private:
    static Value lcm(const Value& a, const Value& b) {
        if (R::is_zero(a) || R::is_zero(b))
            return R::zero();
        return R::normal(R::divmod(a * b, R::gcd(a, b)).first);
    }
    static Value scaled(const Element& x, const Value& common) {
        return R::divmod(x.numerator() * common, x.denominator()).first;
    }
};

using IntegerDomain = PidDomain<IntegerRing>;
using PolynomialDomain = PidDomain<PolynomialRing>;

} // namespace trivext
