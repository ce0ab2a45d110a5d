#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "trivext/kinds.hpp"
#include "trivext/pid_domain.hpp"
#include "trivext/quadratic.hpp"
#include "trivext/semigroup.hpp"

namespace trivext {

/// Common surface of the four base domains: exact arithmetic in Q(A),
/// generator solving over A, and f.g. fractional ideal arithmetic.
template <typename D>
concept FractionalDomain = std::equality_comparable<typename D::Element> &&
                           std::equality_comparable<typename D::Ideal> &&
                           requires(const D& d, const typename D::Element& x, const typename D::Ideal& I,
                                    std::span<const typename D::Element> gens) {
    { D::kind } -> std::convertible_to<DomainKind>;
    { d.name() } -> std::convertible_to<std::string>;
    { d.zero() } -> std::same_as<typename D::Element>;
    { d.one() } -> std::same_as<typename D::Element>;
    { d.add(x, x) } -> std::same_as<typename D::Element>;
    { d.sub(x, x) } -> std::same_as<typename D::Element>;
    { d.mul(x, x) } -> std::same_as<typename D::Element>;
    { d.neg(x) } -> std::same_as<typename D::Element>;
    { d.inv(x) } -> std::same_as<typename D::Element>;
    { d.div(x, x) } -> std::same_as<typename D::Element>;
    { d.is_zero(x) } -> std::same_as<bool>;
    { d.is_integral(x) } -> std::same_as<bool>;
    { d.is_unit(x) } -> std::same_as<bool>;
    { d.divides(x, x) } -> std::same_as<DivisionWitness<typename D::Element>>;
    { d.solve_generators(x, gens) } -> std::same_as<std::optional<std::vector<typename D::Element>>>;
    { d.format(x) } -> std::convertible_to<std::string>;

    { d.zero_ideal() } -> std::same_as<typename D::Ideal>;
    { d.unit_ideal() } -> std::same_as<typename D::Ideal>;
    { d.principal(x) } -> std::same_as<typename D::Ideal>;
    { d.ideal(gens) } -> std::same_as<typename D::Ideal>;
    { d.is_zero(I) } -> std::same_as<bool>;
    { d.generators(I) } -> std::same_as<std::vector<typename D::Element>>;
    { d.generator_count(I) } -> std::same_as<std::size_t>;
    { d.sum(I, I) } -> std::same_as<typename D::Ideal>;
    { d.product(I, I) } -> std::same_as<typename D::Ideal>;
    { d.intersect(I, I) } -> std::same_as<typename D::Ideal>;
    { d.colon(I, I) } -> std::same_as<typename D::Ideal>;
    { d.inverse(I) } -> std::same_as<typename D::Ideal>;
    { d.scale(x, I) } -> std::same_as<typename D::Ideal>;
    { d.member(x, I) } -> std::same_as<bool>;
    { d.contains(I, I) } -> std::same_as<bool>;
    { d.is_integral(I) } -> std::same_as<bool>;
    { d.reduce(x, I) } -> std::same_as<typename D::Element>;
    { d.combine_method() } -> std::same_as<IdealMethod>;
    { d.colon_method() } -> std::same_as<IdealMethod>;
    { d.format_ideal(I) } -> std::convertible_to<std::string>;
    { d.pretty(I) } -> std::convertible_to<std::string>;
};

static_assert(FractionalDomain<IntegerDomain>);
static_assert(FractionalDomain<PolynomialDomain>);
static_assert(FractionalDomain<QuadraticDomain>);
static_assert(FractionalDomain<SemigroupDomain>);

/// The field branch: A = K a field, E a K-vector space of the given dimension.
/// No arithmetic is carried; only the dimension matters for the verdict.
struct FieldBranch {
    unsigned long dimension = 1;
    std::string name() const { return "Field(" + std::to_string(dimension) + ")"; }
    bool operator==(const FieldBranch&) const = default;
};

/// Runtime selection of a base domain, as named by a CLI domain literal.
using DomainDescriptor = std::variant<IntegerDomain, PolynomialDomain, QuadraticDomain, SemigroupDomain, FieldBranch>;

inline std::string domain_name(const DomainDescriptor& d) {
    return std::visit([](const auto& dom) { return std::string(dom.name()); }, d);
}

inline bool is_field(const DomainDescriptor& d) { return std::holds_alternative<FieldBranch>(d); }

} // namespace trivext
