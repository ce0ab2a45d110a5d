#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "trivext/kinds.hpp"

namespace trivext {

/// Cofinite submonoid of N given by coprime generators.
class NumericalSemigroup {
public:
    /// Throws InvalidDomain for an empty list, a nonpositive generator, or gcd != 1.
    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    bool contains(std::int64_t z) const;
    /// Largest integer not in S; -1 for S = N.
    std::int64_t frobenius() const noexcept { return conductor_ - 1; }
    std::int64_t conductor() const noexcept { return conductor_; }
    std::int64_t multiplicity() const noexcept { return minimal_.front(); }
    const std::vector<std::int64_t>& minimal_generators() const noexcept { return minimal_; }
    std::vector<std::int64_t> gaps() const;

    /// z in S iff F - z not in S, for every z in [0, F].
    bool is_symmetric() const;

    std::string to_string() const;
    bool operator==(const NumericalSemigroup& o) const { return minimal_ == o.minimal_; }

private:
    std::vector<std::int64_t> minimal_;
    std::vector<bool> below_conductor_;
    std::int64_t conductor_ = 0;
};

/// Relative ideal Λ ⊆ Z with Λ + S ⊆ Λ: the elements below the conductor bound
/// are listed; every z >= conductor is in Λ. The conductor bound is minimal.
struct RelativeIdeal {
    bool zero = true;
    std::int64_t conductor = 0;
    std::vector<std::int64_t> below;

    bool contains(std::int64_t z) const;
    /// Smallest element; precondition: nonzero.
    std::int64_t min() const { return below.empty() ? conductor : below.front(); }
    RelativeIdeal shifted(std::int64_t k) const;

    /// Members of [lo, hi) satisfying `pred`, plus everything >= hi. Callers
    /// guarantee that every z >= hi belongs to the ideal being built.
    static RelativeIdeal from_window(std::int64_t lo, std::int64_t hi,
                                     const std::function<bool(std::int64_t)>& pred);

    friend bool operator==(const RelativeIdeal&, const RelativeIdeal&) = default;
};

/// c_1 t^{e_1} + ... + c_k t^{e_k}: a finite Q-combination of monomials.
/// Terms are sorted by exponent with nonzero coefficients.
struct SemigroupElement {
    std::vector<std::pair<std::int64_t, mpq_class>> terms;

    SemigroupElement() = default;
    static SemigroupElement monomial(std::int64_t exponent, mpq_class coefficient = 1);

    bool is_zero() const noexcept { return terms.empty(); }
    bool is_monomial() const noexcept { return terms.size() == 1; }
    std::int64_t exponent() const;

    friend bool operator==(const SemigroupElement&, const SemigroupElement&) = default;
};

/// The semigroup ring Q[t^s : s in S]. Ideals are monomial (relative ideals
/// of S); quotients and inverses are defined for monomials only.
class SemigroupDomain {
public:
    using Element = SemigroupElement;
    using Ideal = RelativeIdeal;

    static constexpr DomainKind kind = DomainKind::NumericalSemigroup;

    explicit SemigroupDomain(NumericalSemigroup s) : s_(std::move(s)) {}

    const NumericalSemigroup& semigroup() const noexcept { return s_; }
    std::string name() const { return s_.to_string(); }
    bool operator==(const SemigroupDomain& o) const { return s_ == o.s_; }

    // --- elements -------------------------------------------------------

    Element zero() const { return {}; }
    Element one() const { return Element::monomial(0); }
    Element from_integer(long n) const { return n == 0 ? zero() : Element::monomial(0, n); }
    Element monomial(std::int64_t e, mpq_class c = 1) const { return Element::monomial(e, std::move(c)); }

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    /// Monomials only.
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_integral(const Element& a) const;
    bool is_unit(const Element& a) const { return a.is_monomial() && a.exponent() == 0; }

    DivisionWitness<Element> divides(const Element& x, const Element& y) const;
    /// Generators must be monomials; each term of x is matched to a generator
    /// whose exponent it exceeds by an element of S.
    std::optional<std::vector<Element>> solve_generators(const Element& x, std::span<const Element> gens) const;

    std::string format(const Element& a) const;

    // --- relative ideals -------------------------------------------------

    Ideal zero_ideal() const { return {}; }
    Ideal unit_ideal() const;
    /// Union of e_i + S over the exponents of monomial generators.
    Ideal from_exponents(std::span<const std::int64_t> exponents) const;
    Ideal principal(const Element& x) const;
    Ideal ideal(std::span<const Element> gens) const;

    bool is_zero(const Ideal& I) const { return I.zero; }
    std::vector<std::int64_t> minimal_exponents(const Ideal& I) const;
    std::vector<Element> generators(const Ideal& I) const;
    std::size_t generator_count(const Ideal& I) const { return minimal_exponents(I).size(); }

    Ideal sum(const Ideal& I, const Ideal& J) const;
    Ideal product(const Ideal& I, const Ideal& J) const;
    Ideal intersect(const Ideal& I, const Ideal& J) const;
    /// {z : z + J ⊆ I}. Scanned over [min I - min J, max(c_I - min J, min I - min J));
    /// below that nothing fits and above it z + J lands past c_I.
    Ideal colon(const Ideal& I, const Ideal& J) const;
    Ideal inverse(const Ideal& J) const { return colon(unit_ideal(), J); }
    Ideal scale(const Element& x, const Ideal& I) const;

    bool member(const Element& x, const Ideal& I) const;
    bool contains(const Ideal& I, const Ideal& J) const;
    bool is_integral(const Ideal& I) const { return contains(unit_ideal(), I); }
    /// Whether Λ + S ⊆ Λ holds inside the stored window.
    bool is_relative_ideal(const Ideal& I) const;

    /// Drops the terms that already lie in I.
    Element reduce(const Element& x, const Ideal& I) const;

    /// Exponents in `outer` but not in `inner` (inner ⊆ outer assumed finite difference).
    std::vector<std::int64_t> difference(const Ideal& outer, const Ideal& inner) const;

    IdealMethod combine_method() const { return IdealMethod::SemigroupWindow; }
    IdealMethod colon_method() const { return IdealMethod::SemigroupWindow; }

    std::string format_ideal(const Ideal& I) const;
    std::string pretty(const Ideal& I) const;

private:
    NumericalSemigroup s_;
};

std::string format_exponent_set(std::span<const std::int64_t> exps);

} // namespace trivext
