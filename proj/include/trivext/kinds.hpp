#pragma once

#include <string_view>

namespace trivext {

enum class DomainKind { Integers, RationalPolynomials, QuadraticIntegers, NumericalSemigroup };

/// Which computation route produced an ideal; oracles cross-check by route.
enum class IdealMethod { PrincipalGcd, HnfLattice, SemigroupWindow, InverseProduct };

constexpr std::string_view method_name(IdealMethod m) {
    switch (m) {
    case IdealMethod::PrincipalGcd: return "principal-gcd";
    case IdealMethod::HnfLattice: return "hnf-lattice";
    case IdealMethod::SemigroupWindow: return "semigroup-window";
    case IdealMethod::InverseProduct: return "inverse-product";
    }
    return "?";
}

/// Result of dividing y by x in Q(A): the quotient, and whether it lies in A.
template <typename Element>
struct DivisionWitness {
    Element quotient;
    bool integral = false;
};

} // namespace trivext
