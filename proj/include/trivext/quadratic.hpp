#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trivext/kinds.hpp"
#include "trivext/lattice.hpp"

namespace trivext {

/// x + y*w in Q(sqrt d), with w the standard integral generator of the maximal order.
struct QuadraticNumber {
    mpq_class x;
    mpq_class y;

    QuadraticNumber() = default;
    QuadraticNumber(mpq_class x_, mpq_class y_ = 0) : x(std::move(x_)), y(std::move(y_)) {
        x.canonicalize();
        y.canonicalize();
    }
    QuadraticNumber(long n) : QuadraticNumber(mpq_class(n)) {}

    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;
};

/// Nonzero ideal scale * (aZ + (b + w)Z) with the lattice primitive, 0 <= b < a
/// and a | N(b + w); scale == 0 encodes the zero ideal.
struct QuadraticIdeal {
    mpq_class scale;
    mpz_class a;
    mpz_class b;

    friend bool operator==(const QuadraticIdeal&, const QuadraticIdeal&) = default;
};

/// The ring of integers of Q(sqrt d), d squarefree, d != 0, 1. Ideals are
/// rank-2 Z-lattices in Hermite normal form.
class QuadraticDomain {
public:
    using Element = QuadraticNumber;
    using Ideal = QuadraticIdeal;

    static constexpr DomainKind kind = DomainKind::QuadraticIntegers;

    /// Throws InvalidDomain unless d is squarefree and d != 0, 1.
    explicit QuadraticDomain(long d);

    long discriminant_radicand() const noexcept { return d_; }
    /// w^2 = trace*w + constant.
    long omega_trace() const noexcept { return trace_; }
    long omega_constant() const noexcept { return constant_; }

    std::string name() const;
    bool operator==(const QuadraticDomain& o) const { return d_ == o.d_; }

    // --- elements -------------------------------------------------------

    Element zero() const { return {}; }
    Element one() const { return Element(1); }
    Element omega() const { return Element(0, 1); }
    Element from_integer(long n) const { return Element(n); }

    Element add(const Element& a, const Element& b) const { return {a.x + b.x, a.y + b.y}; }
    Element sub(const Element& a, const Element& b) const { return {a.x - b.x, a.y - b.y}; }
    Element neg(const Element& a) const { return {-a.x, -a.y}; }
    Element mul(const Element& a, const Element& b) const;
    Element conjugate(const Element& a) const;
    mpq_class norm(const Element& a) const;
    mpq_class trace(const Element& a) const;
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

    bool is_zero(const Element& a) const { return a.x == 0 && a.y == 0; }
    bool is_integral(const Element& a) const;
    bool is_unit(const Element& a) const;

    DivisionWitness<Element> divides(const Element& x, const Element& y) const;
    /// Solves x = sum c_i g_i over O_K as an integer linear system in the
    /// Z-generators {g_i, g_i*w}.
    std::optional<std::vector<Element>> solve_generators(const Element& x, std::span<const Element> gens) const;

    std::string format(const Element& a) const;

    // --- fractional ideals -----------------------------------------------

    Ideal zero_ideal() const { return {}; }
    Ideal unit_ideal() const { return Ideal{1, 1, 0}; }
    Ideal principal(const Element& x) const;
    Ideal ideal(std::span<const Element> gens) const;
    /// Ideal from a Z-spanning set that is already closed under multiplication by w.
    Ideal from_lattice(std::span<const Element> zgens) const;

    bool is_zero(const Ideal& I) const { return I.scale == 0; }
    /// Z-basis {scale*a, scale*(b + w)}; also an A-module generating set.
    std::vector<Element> generators(const Ideal& I) const;
    std::size_t generator_count(const Ideal& I) const { return is_zero(I) ? 0 : 2; }

    Ideal sum(const Ideal& I, const Ideal& J) const;
    Ideal product(const Ideal& I, const Ideal& J) const;
    Ideal intersect(const Ideal& I, const Ideal& J) const;
    /// I * J^{-1} (valid in the maximal order), verified by (I:J)*J ⊆ I.
    Ideal colon(const Ideal& I, const Ideal& J) const;
    /// J^{-1} = conj(P) / (scale * N(P)) for J = scale * P.
    Ideal inverse(const Ideal& J) const;
    Ideal conjugate(const Ideal& I) const;
    Ideal scale(const Element& x, const Ideal& I) const;
    /// Index-style norm: scale^2 * a.
    mpq_class norm(const Ideal& I) const;

    bool member(const Element& x, const Ideal& I) const;
    bool contains(const Ideal& I, const Ideal& J) const;
    bool is_integral(const Ideal& I) const { return contains(unit_ideal(), I); }

    /// Representative with lattice coordinates in [0, 1).
    Element reduce(const Element& x, const Ideal& I) const;

    IdealMethod combine_method() const { return IdealMethod::HnfLattice; }
    IdealMethod colon_method() const { return IdealMethod::InverseProduct; }

    std::string format_ideal(const Ideal& I) const;
    std::string pretty(const Ideal& I) const;

    /// Integer Hermite form of the lattice `denominator * I`.
    Hnf2 integer_lattice(const Ideal& I, const mpz_class& denominator) const;
    Ideal from_integer_lattice(const Hnf2& h, const mpz_class& denominator) const;
    /// Common denominator of the Z-basis of I.
    mpz_class denominator(const Ideal& I) const;

private:
    long d_;
    long trace_;
    long constant_;
};

} // namespace trivext
