#pragma once

#include <optional>

#include "trivext/domain.hpp"

namespace trivext {

enum class CombineOp { Sum, Product, Intersect };

template <FractionalDomain D>
struct IdealOpReport {
    typename D::Ideal result;
    IdealMethod method;
};

template <FractionalDomain D>
IdealOpReport<D> ideal_combine(const D& dom, CombineOp op, const typename D::Ideal& I, const typename D::Ideal& J) {
    switch (op) {
    case CombineOp::Sum: return {dom.sum(I, J), dom.combine_method()};
    case CombineOp::Product: return {dom.product(I, J), dom.combine_method()};
    case CombineOp::Intersect: return {dom.intersect(I, J), dom.combine_method()};
    }
    throw Error(Errc::UnsupportedCombination, "unknown combine op");
}

template <FractionalDomain D>
IdealOpReport<D> ideal_colon(const D& dom, const typename D::Ideal& I, const typename D::Ideal& J) {
    return {dom.colon(I, J), dom.colon_method()};
}

/// (ref : (ref : J)); with ref = A this is the divisorial closure J_v.
template <FractionalDomain D>
typename D::Ideal divisorial_closure(const D& dom, const typename D::Ideal& J, const typename D::Ideal& ref) {
    if (dom.is_zero(J) || dom.is_zero(ref))
        throw Error(Errc::ColonByZeroIdeal, "divisorial closure needs nonzero ideals");
    return dom.colon(ref, dom.colon(ref, J));
}

struct IdealPredicates {
    std::optional<bool> equal;
    std::optional<bool> contains;
    std::optional<bool> member;
    bool invertible = false;
};

/// equal(I, J), contains (J ⊆ I), member (x ∈ I), invertible (I·(A:I) = A).
template <FractionalDomain D>
IdealPredicates ideal_predicates(const D& dom, const typename D::Ideal& I,
                                 const std::optional<typename D::Ideal>& J = std::nullopt,
                                 const std::optional<typename D::Element>& x = std::nullopt) {
    IdealPredicates out;
    if (J) {
        out.equal = (I == *J);
        out.contains = dom.contains(I, *J);
    }
    if (x)
        out.member = dom.member(*x, I);
    out.invertible = !dom.is_zero(I) && dom.product(I, dom.inverse(I)) == dom.unit_ideal();
    return out;
}

} // namespace trivext
