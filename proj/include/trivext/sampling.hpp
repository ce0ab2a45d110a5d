#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "trivext/idealization.hpp"

namespace trivext {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20170501;

inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Random inputs per domain. Bounds: numerators/denominators up to 50 over Z,
/// degree <= 4 over Q[t], coordinates up to 20 over OK, exponents in
/// [0, 2F+2] over a numerical semigroup. Ideals have 1-3 generators.
template <FractionalDomain D>
class Sampler;

template <>
class Sampler<IntegerDomain> {
public:
    using Element = IntegerDomain::Element;
    explicit Sampler(const IntegerDomain& dom) : dom_(dom) {}

    Element ring_element(Rng& rng) const { return Element(uniform(rng, -50, 50)); }
    Element element(Rng& rng) const { return Element(mpz_class(uniform(rng, -50, 50)), mpz_class(uniform(rng, 1, 50))); }
    Element ideal_generator(Rng& rng) const {
        return Element(mpz_class(uniform(rng, 1, 50) * (uniform(rng, 0, 1) ? 1 : -1)), mpz_class(uniform(rng, 1, 50)));
    }
    Element integral_generator(Rng& rng) const { return Element(uniform(rng, 1, 50)); }
    Element outside_probe(Rng& rng) const { return Element(mpz_class(1), mpz_class(uniform(rng, 2, 60))); }

    const IntegerDomain& domain() const { return dom_; }

private:
    IntegerDomain dom_;
};

template <>
class Sampler<PolynomialDomain> {
public:
    using Element = PolynomialDomain::Element;
    explicit Sampler(const PolynomialDomain& dom) : dom_(dom) {}

    Element ring_element(Rng& rng) const { return Element(poly(rng, uniform(rng, -1, 4))); }
    Element element(Rng& rng) const {
        Polynomial den = poly(rng, uniform(rng, 0, 2));
        if (den.is_zero())
            den = Polynomial(1);
        return Element(poly(rng, uniform(rng, -1, 4)), den);
    }
    Element ideal_generator(Rng& rng) const {
        Element e;
        while (e.is_zero())
            e = element(rng);
        return e;
    }
    Element integral_generator(Rng& rng) const {
        Polynomial p;
        while (p.is_zero())
            p = poly(rng, uniform(rng, 0, 4));
        return Element(p);
    }
    Element outside_probe(Rng& rng) const {
        return Element(Polynomial(1), Polynomial({mpq_class(uniform(rng, -5, 5)), mpq_class(1)}));
    }

    const PolynomialDomain& domain() const { return dom_; }

private:
    static Polynomial poly(Rng& rng, long degree) {
        if (degree < 0)
            return {};
        std::vector<mpq_class> c;
        for (long i = 0; i <= degree; ++i)
            c.emplace_back(uniform(rng, -5, 5), uniform(rng, 1, 3));
        if (c.back() == 0)
            c.back() = 1;
        return Polynomial(std::move(c));
    }
    PolynomialDomain dom_;
};

template <>
class Sampler<QuadraticDomain> {
public:
    using Element = QuadraticNumber;
    explicit Sampler(const QuadraticDomain& dom) : dom_(dom) {}

    Element ring_element(Rng& rng) const { return Element(uniform(rng, -20, 20), uniform(rng, -20, 20)); }
    Element element(Rng& rng) const {
        return Element(mpq_class(uniform(rng, -20, 20), uniform(rng, 1, 4)),
                       mpq_class(uniform(rng, -20, 20), uniform(rng, 1, 4)));
    }
    Element ideal_generator(Rng& rng) const {
        Element e;
        while (dom_.is_zero(e))
            e = element(rng);
        return e;
    }
    Element integral_generator(Rng& rng) const {
        Element e;
        while (dom_.is_zero(e))
            e = ring_element(rng);
        return e;
    }
    Element outside_probe(Rng& rng) const {
        return Element(mpq_class(1, uniform(rng, 2, 30)), mpq_class(uniform(rng, 0, 3), uniform(rng, 2, 7)));
    }

    const QuadraticDomain& domain() const { return dom_; }

private:
    QuadraticDomain dom_;
};

template <>
class Sampler<SemigroupDomain> {
public:
    using Element = SemigroupElement;
    explicit Sampler(const SemigroupDomain& dom) : dom_(dom), top_(2 * dom.semigroup().frobenius() + 2) {
        if (top_ < 2)
            top_ = 2;
    }

    Element ring_element(Rng& rng) const {
        if (uniform(rng, 0, 5) == 0)
            return {};
        Element out = integral_generator(rng);
        if (uniform(rng, 0, 3) == 0)
            out = dom_.add(out, integral_generator(rng));
        return out;
    }
    /// Monomial or zero: cosets over a semigroup carry monomial representatives.
    Element element(Rng& rng) const {
        if (uniform(rng, 0, 7) == 0)
            return {};
        return monomial(rng, -top_, top_);
    }
    Element ideal_generator(Rng& rng) const { return monomial(rng, 0, top_); }
    Element integral_generator(Rng& rng) const {
        for (;;) {
            Element m = monomial(rng, 0, top_);
            if (dom_.is_integral(m))
                return m;
        }
    }
    Element outside_probe(Rng& rng) const { return monomial(rng, -top_, top_); }

    const SemigroupDomain& domain() const { return dom_; }

private:
    Element monomial(Rng& rng, long lo, long hi) const {
        return dom_.monomial(uniform(rng, lo, hi), mpq_class(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1),
                                                             uniform(rng, 1, 3)));
    }
    SemigroupDomain dom_;
    long top_;
};

// --- generic draws built on the per-domain samplers -------------------------

template <FractionalDomain D>
std::vector<typename D::Element> random_ideal_generators(const Sampler<D>& s, Rng& rng) {
    std::vector<typename D::Element> gens;
    const long n = uniform(rng, 1, 3);
    for (long i = 0; i < n; ++i)
        gens.push_back(s.ideal_generator(rng));
    return gens;
}

template <FractionalDomain D>
typename D::Ideal random_ideal(const Sampler<D>& s, Rng& rng) {
    return s.domain().ideal(random_ideal_generators(s, rng));
}

template <FractionalDomain D>
typename D::Ideal random_integral_ideal(const Sampler<D>& s, Rng& rng) {
    std::vector<typename D::Element> gens;
    const long n = uniform(rng, 1, 3);
    for (long i = 0; i < n; ++i)
        gens.push_back(s.integral_generator(rng));
    return s.domain().ideal(gens);
}

template <FractionalDomain D>
typename D::Element random_nonzero_ring_element(const Sampler<D>& s, Rng& rng) {
    return s.integral_generator(rng);
}

/// A random A-combination of the generators of I.
template <FractionalDomain D>
typename D::Element random_element_of(const Sampler<D>& s, const typename D::Ideal& I, Rng& rng) {
    const auto& dom = s.domain();
    auto acc = dom.zero();
    for (const auto& g : dom.generators(I))
        acc = dom.add(acc, dom.mul(s.ring_element(rng), g));
    return acc;
}

template <FractionalDomain D>
IdealizationElement<D> random_ring_element(const TrivialExtension<D>& R, const Sampler<D>& s, Rng& rng) {
    return R.element(s.ring_element(rng), s.element(rng));
}

/// Random element of the ideal denoted by nf.
template <FractionalDomain D>
IdealizationElement<D> random_member(const TrivialExtension<D>& R, const Sampler<D>& s,
                                     const FgIdealNormalForm<D>& nf, Rng& rng) {
    if (const auto* ext = std::get_if<Extension<D>>(&nf))
        return R.element(random_element_of(s, ext->ideal, rng), s.element(rng));
    if (const auto* zp = std::get_if<ZeroPart<D>>(&nf))
        return R.element(s.domain().zero(), random_element_of(s, zp->submodule.carrier, rng));
    return R.zero();
}

/// Extension(integral ideal) or ZeroPart(I + random ideal), with equal odds.
template <FractionalDomain D>
FgIdealNormalForm<D> random_normal_form(const TrivialExtension<D>& R, const Sampler<D>& s, Rng& rng) {
    if (uniform(rng, 0, 1) == 0)
        return R.extension(random_integral_ideal(s, rng));
    return R.zero_part(s.domain().sum(R.modulus(), random_ideal(s, rng)));
}

/// 1-3 generators (x_i, e_i); each x_i is zero with probability 1/3.
template <FractionalDomain D>
GeneratorSet<D> random_generator_set(const TrivialExtension<D>& R, const Sampler<D>& s, Rng& rng) {
    GeneratorSet<D> gens;
    const long n = uniform(rng, 1, 3);
    for (long i = 0; i < n; ++i) {
        auto x = uniform(rng, 0, 2) == 0 ? s.domain().zero() : s.integral_generator(rng);
        gens.push_back(R.element(x, s.element(rng)));
    }
    return gens;
}

} // namespace trivext
