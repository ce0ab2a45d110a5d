#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trivext/idealization.hpp"
#include "trivext/sampling.hpp"

namespace trivext {

struct OracleReport {
    std::size_t checked = 0;
    std::vector<std::string> mismatches;
    std::uint64_t seed = kDefaultSeed;

    bool ok() const noexcept { return mismatches.empty(); }
};

/// (I : J) by definition. Over a semigroup: scan z in [-radius, radius] for
/// z + J ⊆ I, certifying that nothing below the scan qualifies and everything
/// above does. Elsewhere: the intersection of g^{-1}·I over the generators g of J.
inline RelativeIdeal brute_colon(const SemigroupDomain& dom, const RelativeIdeal& I, const RelativeIdeal& J,
                                 std::int64_t radius) {
    if (dom.is_zero(J))
        throw Error(Errc::ColonByZeroIdeal, "(I : 0) is not a fractional ideal");
    if (dom.is_zero(I))
        return dom.zero_ideal();
    // z + J ⊆ I needs z + min J in I, and holds once z + min J >= conductor of I.
    const std::int64_t lo = -radius, hi = radius + 1;
    if (I.min() - J.min() < lo || I.conductor - J.min() > hi)
        throw Error(Errc::WindowTooSmall, "scan window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                              ") cannot certify the colon");
    auto shifted_in = [&](std::int64_t z) {
        for (auto j : J.below)
            if (!I.contains(z + j))
                return false;
        for (std::int64_t j = J.conductor; z + j < I.conductor; ++j)
            if (!I.contains(z + j))
                return false;
        return true;
    };
    return RelativeIdeal::from_window(lo, hi, shifted_in);
}

template <FractionalDomain D>
    requires(D::kind != DomainKind::NumericalSemigroup)
typename D::Ideal brute_colon(const D& dom, const typename D::Ideal& I, const typename D::Ideal& J) {
    if (dom.is_zero(J))
        throw Error(Errc::ColonByZeroIdeal, "(I : 0) is not a fractional ideal");
    if (dom.is_zero(I))
        return dom.zero_ideal();
    std::optional<typename D::Ideal> acc;
    for (const auto& g : dom.generators(J)) {
        auto part = dom.scale(dom.inv(g), I);
        acc = acc ? dom.intersect(*acc, part) : part;
    }
    return *acc;
}

/// Definitional checks that C = (I : J): C·J ⊆ I, and each probe p outside C
/// has p·J ⊄ I.
template <FractionalDomain D>
bool colon_certified(const D& dom, const typename D::Ideal& C, const typename D::Ideal& I,
                     const typename D::Ideal& J, std::span<const typename D::Element> probes) {
    if (!dom.contains(I, dom.product(C, J)))
        return false;
    for (const auto& p : probes) {
        if (dom.member(p, C))
            continue;
        bool escapes = false;
        for (const auto& g : dom.generators(J))
            escapes = escapes || !dom.member(dom.mul(p, g), I);
        if (!escapes)
            return false;
    }
    return true;
}

/// Ann_E(K) = {f : f·k ∈ I for all k ∈ K} straight from the definition.
template <FractionalDomain D>
typename D::Ideal brute_ann_E(const QuotientModule<D>& E, const typename D::Ideal& K, std::int64_t radius = 64) {
    if constexpr (D::kind == DomainKind::NumericalSemigroup)
        return brute_colon(E.domain(), E.modulus(), K, radius);
    else
        return brute_colon(E.domain(), E.modulus(), K);
}

/// Ann_A(J/I) = {a ∈ A : a·J ⊆ I}.
template <FractionalDomain D>
typename D::Ideal brute_ann_A(const QuotientModule<D>& E, const typename D::Ideal& J, std::int64_t radius = 64) {
    const auto& dom = E.domain();
    return dom.intersect(dom.unit_ideal(), brute_ann_E(E, J, radius));
}

namespace detail {

template <FractionalDomain D>
std::optional<IdealizationElement<D>> draw_outside(const TrivialExtension<D>& R, const Sampler<D>& s,
                                                  const FgIdealNormalForm<D>& nf, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto z = random_ring_element(R, s, rng);
        if (!R.contains(nf, z))
            return z;
    }
    return std::nullopt;
}

} // namespace detail

/// Verifies that `claimed` annihilates `nf` and that elements outside
/// `claimed` do not. Generator pairs are checked first, then n random draws.
template <FractionalDomain D>
OracleReport sampled_ann_check(const TrivialExtension<D>& R, const FgIdealNormalForm<D>& nf,
                               const FgIdealNormalForm<D>& claimed, std::size_t n,
                               std::uint64_t seed = kDefaultSeed) {
    OracleReport rep;
    rep.seed = seed;
    Rng rng(seed);
    Sampler<D> s(R.domain());
    const auto nf_gens = R.generators(nf);
    auto annihilates = [&](const IdealizationElement<D>& r, const IdealizationElement<D>& g) {
        ++rep.checked;
        if (!R.is_zero(R.mul(r, g)))
            rep.mismatches.push_back(R.format(r) + " * " + R.format(g) + " = " + R.format(R.mul(r, g)));
    };
    for (const auto& r : R.generators(claimed))
        for (const auto& g : nf_gens)
            annihilates(r, g);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = random_member(R, s, claimed, rng);
        const auto g = random_member(R, s, nf, rng);
        annihilates(r, g);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto z = detail::draw_outside(R, s, claimed, rng);
        if (!z)
            break;
        ++rep.checked;
        bool nonzero = false;
        for (const auto& g : nf_gens)
            nonzero = nonzero || !R.is_zero(R.mul(*z, g));
        if (!nonzero)
            rep.mismatches.push_back(R.format(*z) + " lies outside the claim but annihilates " + R.format(nf));
    }
    return rep;
}

/// Random R-combinations of `gens` must be found by membership and recombine
/// exactly; elements outside the classified ideal must be rejected.
template <FractionalDomain D>
OracleReport membership_roundtrip(const TrivialExtension<D>& R, const GeneratorSet<D>& gens, std::size_t n,
                                  std::uint64_t seed = kDefaultSeed) {
    OracleReport rep;
    rep.seed = seed;
    Rng rng(seed);
    Sampler<D> s(R.domain());
    const auto nf = R.classify(gens);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<IdealizationElement<D>> coeffs;
        for (std::size_t k = 0; k < gens.size(); ++k)
            coeffs.push_back(random_ring_element(R, s, rng));
        const auto z = R.recombine(coeffs, gens);
        ++rep.checked;
        try {
            if (!R.contains(nf, z))
                rep.mismatches.push_back("combination " + R.format(z) + " outside " + R.format(nf));
            else if (!R.membership(z, gens))
                rep.mismatches.push_back("membership rejected the combination " + R.format(z));
        } catch (const std::logic_error& e) {
            rep.mismatches.push_back(R.format(z) + ": " + e.what());
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto z = detail::draw_outside(R, s, nf, rng);
        if (!z)
            break;
        ++rep.checked;
        if (R.membership(*z, gens))
            rep.mismatches.push_back("membership accepted the non-member " + R.format(*z));
    }
    return rep;
}

} // namespace trivext
