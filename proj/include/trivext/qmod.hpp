#pragma once

#include "trivext/domain.hpp"

namespace trivext {

/// A coset f + I in E = Q(A)/I, stored with its canonical representative.
template <FractionalDomain D>
struct QModElement {
    typename D::Element rep;
    typename D::Ideal modulus;

    friend bool operator==(const QModElement&, const QModElement&) = default;
};

/// The finitely generated submodule J/I of E, stored by its carrier J ⊇ I.
template <FractionalDomain D>
struct FgSubmodule {
    typename D::Ideal carrier;
    typename D::Ideal modulus;

    friend bool operator==(const FgSubmodule&, const FgSubmodule&) = default;
};

/// Module operations on E = Q(A)/I for a fixed nonzero f.g. fractional ideal I.
template <FractionalDomain D>
class QuotientModule {
public:
    using Element = typename D::Element;
    using Ideal = typename D::Ideal;
    using Coset = QModElement<D>;
    using Submodule = FgSubmodule<D>;

    QuotientModule(const D& dom, Ideal modulus) : dom_(dom), modulus_(std::move(modulus)) {
        if (dom_.is_zero(modulus_))
            throw Error(Errc::ZeroIdealI, "E = Q(A)/I needs I != 0");
    }

    const D& domain() const noexcept { return dom_; }
    const Ideal& modulus() const noexcept { return modulus_; }

    Coset coset(const Element& f) const { return {dom_.reduce(f, modulus_), modulus_}; }
    Coset zero() const { return coset(dom_.zero()); }
    bool is_zero(const Coset& e) const { return dom_.is_zero(e.rep); }

    // coset_ops
    Coset add(const Coset& e, const Coset& f) const { return coset(dom_.add(own(e).rep, own(f).rep)); }
    Coset sub(const Coset& e, const Coset& f) const { return coset(dom_.sub(own(e).rep, own(f).rep)); }
    Coset neg(const Coset& e) const { return coset(dom_.neg(own(e).rep)); }
    /// a·e for a in A (the module action; a need not be checked integral here).
    Coset scale(const Element& a, const Coset& e) const { return coset(dom_.mul(a, own(e).rep)); }
    bool equal(const Coset& e, const Coset& f) const { return dom_.member(dom_.sub(own(e).rep, own(f).rep), modulus_); }
    Coset reduce(const Coset& e) const { return coset(own(e).rep); }

    /// e' with x·e' = e; E is divisible, so this always exists for x != 0.
    Coset divide(const Coset& e, const Element& x) const {
        if (dom_.is_zero(x))
            throw Error(Errc::DivisionByZero, "divide_coset by zero");
        if (is_zero(own(e)))
            return zero();
        return coset(dom_.div(e.rep, x));
    }

    /// Ann_A(e) = A ∩ (I : rep·A); all of A for e = 0.
    Ideal ann_element(const Coset& e) const {
        if (is_zero(own(e)))
            return dom_.unit_ideal();
        return dom_.intersect(dom_.unit_ideal(), dom_.colon(modulus_, dom_.principal(e.rep)));
    }

    /// Ann_E(K) = (I : K)/I for a nonzero integral ideal K.
    Submodule ann_of_ideal(const Ideal& K) const {
        if (dom_.is_zero(K))
            throw Error(Errc::ColonByZeroIdeal, "Ann_E(0) is all of E, which is not finitely generated");
        if (!dom_.is_integral(K))
            throw Error(Errc::NotIntegral, "Ann_E(K) needs an ideal of A");
        return {dom_.colon(modulus_, K), modulus_};
    }

    /// Ann_E(x) = ((1/x)·I)/I.
    Submodule ann_of_scalar(const Element& x) const { return ann_of_ideal(dom_.principal(x)); }

    /// Ann_A(J/I) = A ∩ (I : J).
    Ideal ann_of_submodule(const Submodule& sub) const {
        own(sub);
        return dom_.intersect(dom_.unit_ideal(), dom_.colon(modulus_, sub.carrier));
    }

    /// Submodule J/I generated by the given cosets: J = Σ A·f_i + I.
    Submodule submodule(std::span<const Coset> gens) const {
        Ideal carrier = modulus_;
        for (const auto& g : gens)
            carrier = dom_.sum(carrier, dom_.principal(own(g).rep));
        return {carrier, modulus_};
    }

    Submodule submodule_from_carrier(const Ideal& J) const {
        if (!dom_.contains(J, modulus_))
            throw Error(Errc::MixedModulus, "submodule carrier must contain the modulus");
        return {J, modulus_};
    }

    bool contains(const Submodule& sub, const Coset& e) const { return dom_.member(own(e).rep, own(sub).carrier); }

private:
    const Coset& own(const Coset& e) const {
        if (!(e.modulus == modulus_))
            throw Error(Errc::MixedModulus, "coset belongs to a different quotient module");
        return e;
    }
    const Submodule& own(const Submodule& s) const {
        if (!(s.modulus == modulus_))
            throw Error(Errc::MixedModulus, "submodule belongs to a different quotient module");
        return s;
    }

    D dom_;
    Ideal modulus_;
};

} // namespace trivext
