#pragma once

#include <array>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace trivext {

using IntVec2 = std::array<mpz_class, 2>;

/// Hermite basis of a full-rank sublattice of Z^2:
///   v1 = (a, 0), v2 = (b, c) with a > 0, c > 0, 0 <= b < a.
/// A point (x, y) is in the lattice iff c | y and a | x - b*(y/c).
struct Hnf2 {
    mpz_class a;
    mpz_class b;
    mpz_class c;

    bool contains(const IntVec2& v) const;
    /// Integer coordinates (k1, k2) with v = k1*v1 + k2*v2, if v is in the lattice.
    std::optional<std::array<mpz_class, 2>> coordinates(const IntVec2& v) const;

    friend bool operator==(const Hnf2&, const Hnf2&) = default;
};

/// Hermite form plus, for each basis vector, its integer combination of the
/// input columns.
struct Hnf2WithTransform {
    Hnf2 form;
    std::vector<mpz_class> combo1;
    std::vector<mpz_class> combo2;
};

/// Column-style Hermite reduction of the Z-span of `columns`. Returns nullopt
/// when the span does not have rank 2.
std::optional<Hnf2WithTransform> hermite_reduce(const std::vector<IntVec2>& columns);

/// L1 ∩ L2 for full-rank lattices, via a linear congruence on the second
/// coordinate and a CRT on the first.
Hnf2 intersect(const Hnf2& l1, const Hnf2& l2);

mpz_class floor_mod(const mpz_class& a, const mpz_class& m);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

} // namespace trivext
