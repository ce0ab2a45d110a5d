#pragma once

#include <string_view>
#include <utility>

#include "trivext/idealization.hpp"

namespace trivext {

/// "Z", "Q[t]", "OK(d)", "NS(g1,...,gk)", "Field(n)".
DomainDescriptor parse_domain(std::string_view text);

/// Arithmetic expression over the domain: integers, + - * / ^, parentheses,
/// and the variable t (Q[t], NS) or w (OK). NS exponents may be negative.
template <FractionalDomain D>
typename D::Element parse_element(const D& dom, std::string_view text);

/// "Z: q", "Q[t]: f/g", "OK: gens(x,y,...)", "NS: {e1,...}". Comma-separated
/// generator lists are accepted after the prefix for every kind.
template <FractionalDomain D>
typename D::Ideal parse_ideal(const D& dom, std::string_view text);

/// "(a1,f1);(a2,f2);..." with a_i ∈ A and f_i ∈ Q(A).
template <FractionalDomain D>
GeneratorSet<D> parse_generator_set(const TrivialExtension<D>& R, std::string_view text);

/// "<element> mod <ideal>": a coset representative and its modulus.
template <FractionalDomain D>
std::pair<typename D::Element, typename D::Ideal> parse_coset(const D& dom, std::string_view text);

} // namespace trivext
