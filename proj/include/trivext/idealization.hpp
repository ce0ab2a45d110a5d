#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "trivext/qmod.hpp"

namespace trivext {

/// (a, e) in R = A ⋉ E with a ∈ A and e ∈ E = Q(A)/I.
template <FractionalDomain D>
struct IdealizationElement {
    typename D::Element a;
    QModElement<D> e;

    friend bool operator==(const IdealizationElement&, const IdealizationElement&) = default;
};

template <FractionalDomain D>
using GeneratorSet = std::vector<IdealizationElement<D>>;

/// The zero ideal of R.
struct ZeroIdealMarker {
    friend bool operator==(const ZeroIdealMarker&, const ZeroIdealMarker&) = default;
};

/// K ⋉ E for a nonzero integral f.g. ideal K of A. K = A is the whole ring.
template <FractionalDomain D>
struct Extension {
    typename D::Ideal ideal;
    friend bool operator==(const Extension&, const Extension&) = default;
};

/// 0 ⋉ J/I for a f.g. submodule with carrier J ⊋ I.
template <FractionalDomain D>
struct ZeroPart {
    FgSubmodule<D> submodule;
    friend bool operator==(const ZeroPart&, const ZeroPart&) = default;
};

/// A finitely generated ideal of R: I'⋉E or 0⋉E' (or zero).
template <FractionalDomain D>
using FgIdealNormalForm = std::variant<ZeroIdealMarker, Extension<D>, ZeroPart<D>>;

/// R = A ⋉ Q(A)/I with multiplication (a,e)(b,f) = (ab, af + be).
template <FractionalDomain D>
class TrivialExtension {
public:
    using Element = typename D::Element;
    using Ideal = typename D::Ideal;
    using Coset = QModElement<D>;
    using RElement = IdealizationElement<D>;
    using NormalForm = FgIdealNormalForm<D>;

    TrivialExtension(const D& dom, Ideal modulus) : E_(dom, std::move(modulus)) {}

    const D& domain() const noexcept { return E_.domain(); }
    const QuotientModule<D>& module() const noexcept { return E_; }
    const Ideal& modulus() const noexcept { return E_.modulus(); }

    // --- elements ---------------------------------------------------------

    RElement element(const Element& a, const Element& f) const {
        if (!domain().is_integral(a))
            throw Error(Errc::NotIntegral, "first component must lie in A: " + domain().format(a));
        return {a, E_.coset(f)};
    }
    RElement zero() const { return {domain().zero(), E_.zero()}; }
    RElement one() const { return {domain().one(), E_.zero()}; }
    bool is_zero(const RElement& u) const { return domain().is_zero(u.a) && E_.is_zero(u.e); }

    RElement add(const RElement& u, const RElement& v) const { return {domain().add(u.a, v.a), E_.add(u.e, v.e)}; }
    RElement sub(const RElement& u, const RElement& v) const { return {domain().sub(u.a, v.a), E_.sub(u.e, v.e)}; }
    RElement neg(const RElement& u) const { return {domain().neg(u.a), E_.neg(u.e)}; }
    RElement mul(const RElement& u, const RElement& v) const {
        return {domain().mul(u.a, v.a), E_.add(E_.scale(u.a, v.e), E_.scale(v.a, u.e))};
    }

    // --- normal forms -----------------------------------------------------

    NormalForm whole_ring() const { return Extension<D>{domain().unit_ideal()}; }

    NormalForm extension(const Ideal& K) const {
        if (domain().is_zero(K))
            throw Error(Errc::UnsupportedCombination, "0 ⋉ E is not finitely generated");
        if (!domain().is_integral(K))
            throw Error(Errc::NotIntegral, "Extension needs an ideal of A");
        return Extension<D>{K};
    }

    /// 0 ⋉ J/I, collapsing to the zero marker when J = I.
    NormalForm zero_part(const FgSubmodule<D>& sub) const {
        if (!(sub.modulus == modulus()))
            throw Error(Errc::MixedModulus, "submodule belongs to a different quotient module");
        if (sub.carrier == modulus())
            return ZeroIdealMarker{};
        return ZeroPart<D>{sub};
    }
    NormalForm zero_part(const Ideal& carrier) const { return zero_part(E_.submodule_from_carrier(carrier)); }

    /// Normal form of the ideal generated by `gens`: Σ A·x_i ⋉ E when some
    /// x_i != 0, otherwise 0 ⋉ (Σ A·f_i + I)/I.
    NormalForm classify(std::span<const RElement> gens) const {
        std::vector<Element> xs;
        for (const auto& g : gens)
            if (!domain().is_zero(g.a))
                xs.push_back(g.a);
        if (!xs.empty())
            return Extension<D>{domain().ideal(xs)};
        std::vector<Coset> es;
        for (const auto& g : gens)
            es.push_back(g.e);
        return zero_part(E_.submodule(es));
    }

    /// Whether z lies in the ideal denoted by nf.
    bool contains(const NormalForm& nf, const RElement& z) const {
        return std::visit(
            [&](const auto& v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, ZeroIdealMarker>)
                    return is_zero(z);
                else if constexpr (std::is_same_v<T, Extension<D>>)
                    return domain().member(z.a, v.ideal);
                else
                    return domain().is_zero(z.a) && E_.contains(v.submodule, z.e);
            },
            nf);
    }

    /// outer ⊇ inner.
    bool contains(const NormalForm& outer, const NormalForm& inner) const {
        if (std::holds_alternative<ZeroIdealMarker>(inner))
            return true;
        if (std::holds_alternative<ZeroIdealMarker>(outer))
            return false;
        if (const auto* eo = std::get_if<Extension<D>>(&outer)) {
            if (const auto* ei = std::get_if<Extension<D>>(&inner))
                return domain().contains(eo->ideal, ei->ideal);
            return true;
        }
        if (std::holds_alternative<Extension<D>>(inner))
            return false;
        return domain().contains(std::get<ZeroPart<D>>(outer).submodule.carrier,
                                 std::get<ZeroPart<D>>(inner).submodule.carrier);
    }

    /// A finite generating set of the ideal denoted by nf.
    std::vector<RElement> generators(const NormalForm& nf) const {
        std::vector<RElement> out;
        if (const auto* ext = std::get_if<Extension<D>>(&nf)) {
            for (const auto& k : domain().generators(ext->ideal))
                out.push_back({k, E_.zero()});
        } else if (const auto* zp = std::get_if<ZeroPart<D>>(&nf)) {
            for (const auto& f : domain().generators(zp->submodule.carrier))
                out.push_back({domain().zero(), E_.coset(f)});
        } else {
            out.push_back(zero());
        }
        return out;
    }

    /// Σ coeffs_i · gens_i.
    RElement recombine(std::span<const RElement> coeffs, std::span<const RElement> gens) const {
        RElement acc = zero();
        for (std::size_t i = 0; i < gens.size(); ++i)
            acc = add(acc, mul(coeffs[i], gens[i]));
        return acc;
    }

    /// Coefficients r_i ∈ R with z = Σ r_i·gens_i, or nullopt when z is not in
    /// the ideal. Solves the A-part over the nonzero x_i, then absorbs the
    /// residual E-part by dividing it by one nonzero x_j.
    std::optional<std::vector<RElement>> membership(const RElement& z, std::span<const RElement> gens) const {
        const std::size_t n = gens.size();
        std::vector<RElement> coeffs(n, zero());
        std::vector<std::size_t> nonzero;
        for (std::size_t i = 0; i < n; ++i)
            if (!domain().is_zero(gens[i].a))
                nonzero.push_back(i);

        if (!nonzero.empty()) {
            std::vector<Element> xs;
            for (auto i : nonzero)
                xs.push_back(gens[i].a);
            auto c = domain().solve_generators(z.a, xs);
            if (!c)
                return std::nullopt;
            Coset residual = z.e;
            for (std::size_t k = 0; k < nonzero.size(); ++k) {
                const auto i = nonzero[k];
                coeffs[i].a = (*c)[k];
                residual = E_.sub(residual, E_.scale((*c)[k], gens[i].e));
            }
            const auto j = pick_divisor(gens, nonzero);
            coeffs[j].e = E_.divide(residual, gens[j].a);
            return verified(z, coeffs, gens);
        }

        if (!domain().is_zero(z.a))
            return std::nullopt;
        if (E_.is_zero(z.e))
            return coeffs;
        std::vector<Element> span_gens;
        for (const auto& g : gens)
            span_gens.push_back(g.e.rep);
        for (const auto& g : domain().generators(modulus()))
            span_gens.push_back(g);
        auto c = domain().solve_generators(z.e.rep, span_gens);
        if (!c)
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i)
            coeffs[i].a = (*c)[i];
        return verified(z, coeffs, gens);
    }

    // --- annihilators -----------------------------------------------------

    /// Ann_R(x, e) = 0 ⋉ Ann_E(x) for x != 0, Ann_A(e) ⋉ E for x = 0, e != 0.
    NormalForm ann_of_element(const RElement& u) const {
        if (is_zero(u))
            return whole_ring();
        if (!domain().is_zero(u.a))
            return zero_part(E_.ann_of_scalar(u.a));
        return Extension<D>{E_.ann_element(u.e)};
    }

    /// Ann_R(K ⋉ E) = 0 ⋉ Ann_E(K); Ann_R(0 ⋉ E') = Ann_A(E') ⋉ E.
    NormalForm ann_of_ideal(const NormalForm& nf) const {
        if (std::holds_alternative<ZeroIdealMarker>(nf))
            return whole_ring();
        if (const auto* ext = std::get_if<Extension<D>>(&nf))
            return zero_part(E_.ann_of_ideal(ext->ideal));
        return Extension<D>{E_.ann_of_submodule(std::get<ZeroPart<D>>(nf).submodule)};
    }

    /// (I1⋉E)∩(I2⋉E) = (I1∩I2)⋉E, (I1⋉E)∩(0⋉E1) = 0⋉E1, (0⋉E1)∩(0⋉E2) = 0⋉(E1∩E2).
    NormalForm intersect(const NormalForm& a, const NormalForm& b) const {
        if (std::holds_alternative<ZeroIdealMarker>(a) || std::holds_alternative<ZeroIdealMarker>(b))
            return ZeroIdealMarker{};
        const auto* ea = std::get_if<Extension<D>>(&a);
        const auto* eb = std::get_if<Extension<D>>(&b);
        if (ea && eb)
            return Extension<D>{domain().intersect(ea->ideal, eb->ideal)};
        if (ea)
            return b;
        if (eb)
            return a;
        return zero_part(domain().intersect(std::get<ZeroPart<D>>(a).submodule.carrier,
                                            std::get<ZeroPart<D>>(b).submodule.carrier));
    }

    // --- printing ---------------------------------------------------------

    std::string format(const RElement& u) const {
        return "(" + domain().format(u.a) + ", " + domain().format(u.e.rep) + ")";
    }

    std::string format(const NormalForm& nf) const {
        if (std::holds_alternative<ZeroIdealMarker>(nf))
            return "Zero";
        if (const auto* ext = std::get_if<Extension<D>>(&nf))
            return "Extension(" + domain().pretty(ext->ideal) + " ⋉ E)";
        const auto& sub = std::get<ZeroPart<D>>(nf).submodule;
        return "ZeroPart(0 ⋉ " + domain().pretty(sub.carrier) + "/" + domain().pretty(sub.modulus) + ")";
    }

private:
    std::size_t pick_divisor(std::span<const RElement> gens, const std::vector<std::size_t>& nonzero) const {
        if constexpr (D::kind == DomainKind::NumericalSemigroup) {
            for (auto i : nonzero)
                if (gens[i].a.is_monomial())
                    return i;
        }
        return nonzero.front();
    }

    std::optional<std::vector<RElement>> verified(const RElement& z, std::vector<RElement> coeffs,
                                                  std::span<const RElement> gens) const {
        if (!(recombine(coeffs, gens) == z))
            throw std::logic_error("membership coefficients failed to recombine");
        return coeffs;
    }

    QuotientModule<D> E_;
};

template <FractionalDomain D>
constexpr const char* normal_form_kind(const FgIdealNormalForm<D>& nf) {
    switch (nf.index()) {
    case 0: return "Zero";
    case 1: return "Extension";
    default: return "ZeroPart";
    }
}

} // namespace trivext
