#pragma once

#include <string>
#include <vector>

#include <doctest.h>

#include "trivext/literals.hpp"
#include "trivext/sampling.hpp"

namespace testing {

using namespace trivext;

inline IntegerDomain Z;
inline PolynomialDomain Qt;
inline QuadraticDomain OK5(-5);
inline QuadraticDomain OK3(-3);
inline QuadraticDomain OKr5(5);
inline SemigroupDomain NS345(NumericalSemigroup({3, 4, 5}));
inline SemigroupDomain NS23(NumericalSemigroup({2, 3}));

template <typename F>
void for_each_dedekind(F&& f) {
    f(Z);
    f(Qt);
    f(OK5);
    f(OK3);
    f(OKr5);
}

template <typename F>
void for_each_domain(F&& f) {
    for_each_dedekind(f);
    f(NS345);
}

template <FractionalDomain D>
typename D::Element el(const D& dom, const std::string& s) {
    return parse_element(dom, s);
}

template <FractionalDomain D>
typename D::Ideal id(const D& dom, const std::string& s) {
    return parse_ideal(dom, s);
}

inline Rng rng_for(const char* suite) {
    std::uint64_t h = kDefaultSeed;
    for (const char* p = suite; *p; ++p)
        h = h * 131 + static_cast<unsigned char>(*p);
    MESSAGE("seed for " << std::string(suite) << ": " << h);
    return Rng(h);
}

} // namespace testing
