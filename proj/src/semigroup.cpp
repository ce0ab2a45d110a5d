#include "trivext/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "trivext/errors.hpp"

namespace trivext {

// --- NumericalSemigroup ---------------------------------------------------

namespace {

constexpr std::int64_t kMaxMembershipTable = 50'000'000;

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) {
    if (generators.empty())
        throw Error(Errc::InvalidDomain, "numerical semigroup needs at least one generator");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::int64_t g = 0;
    for (auto n : generators) {
        if (n <= 0)
            throw Error(Errc::InvalidDomain, "semigroup generators must be positive");
        g = std::gcd(g, n);
    }
    if (g != 1)
        throw Error(Errc::InvalidDomain, "semigroup generators must have gcd 1");

    const std::int64_t m = generators.front();
    const std::int64_t M = generators.back();
    // Frobenius number is below (m - 1)(M - 1); the table runs one generator past that.
    const std::int64_t bound = (m - 1) * (M - 1) + M + 1;
    if (bound > kMaxMembershipTable)
        throw Error(Errc::InvalidDomain, "semigroup too large for the membership table");
    std::vector<bool> in(static_cast<std::size_t>(bound), false);
    in[0] = true;
    for (std::int64_t z = 1; z < bound; ++z)
        for (auto n : generators)
            if (n <= z && in[static_cast<std::size_t>(z - n)]) {
                in[static_cast<std::size_t>(z)] = true;
                break;
            }
    std::int64_t frob = -1;
    for (std::int64_t z = bound - 1; z >= 0; --z)
        if (!in[static_cast<std::size_t>(z)]) {
            frob = z;
            break;
        }
    conductor_ = frob + 1;
    below_conductor_.assign(in.begin(), in.begin() + conductor_);

    for (auto n : generators) {
        bool minimal = true;
        for (std::int64_t s = 1; s < n && minimal; ++s)
            if (contains(s) && contains(n - s))
                minimal = false;
        if (minimal)
            minimal_.push_back(n);
    }
}

bool NumericalSemigroup::contains(std::int64_t z) const {
    if (z < 0)
        return false;
    if (z >= conductor_)
        return true;
    return below_conductor_[static_cast<std::size_t>(z)];
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = 1; z < conductor_; ++z)
        if (!contains(z))
            out.push_back(z);
    return out;
}

bool NumericalSemigroup::is_symmetric() const {
    const std::int64_t f = frobenius();
    for (std::int64_t z = 0; z <= f; ++z)
        if (contains(z) == contains(f - z))
            return false;
    return true;
}

std::string NumericalSemigroup::to_string() const {
    std::string out = "NS(";
    for (std::size_t i = 0; i < minimal_.size(); ++i)
        out += (i ? "," : "") + std::to_string(minimal_[i]);
    return out + ")";
}

// --- RelativeIdeal ----------------------------------------------------------

bool RelativeIdeal::contains(std::int64_t z) const {
    if (zero)
        return false;
    if (z >= conductor)
        return true;
    return std::binary_search(below.begin(), below.end(), z);
}

RelativeIdeal RelativeIdeal::shifted(std::int64_t k) const {
    if (zero)
        return *this;
    RelativeIdeal out = *this;
    out.conductor += k;
    for (auto& z : out.below)
        z += k;
    return out;
}

RelativeIdeal RelativeIdeal::from_window(std::int64_t lo, std::int64_t hi,
                                         const std::function<bool(std::int64_t)>& pred) {
    hi = std::max(hi, lo);
    RelativeIdeal out;
    out.zero = false;
    out.conductor = hi;
    for (std::int64_t z = lo; z < hi; ++z)
        if (pred(z))
            out.below.push_back(z);
    while (!out.below.empty() && out.below.back() == out.conductor - 1) {
        out.below.pop_back();
        --out.conductor;
    }
    return out;
}

// --- SemigroupElement ---------------------------------------------------------

SemigroupElement SemigroupElement::monomial(std::int64_t exponent, mpq_class coefficient) {
    SemigroupElement out;
    coefficient.canonicalize();
    if (coefficient != 0)
        out.terms.emplace_back(exponent, std::move(coefficient));
    return out;
}

std::int64_t SemigroupElement::exponent() const {
    if (!is_monomial())
        throw Error(Errc::UnsupportedCombination, "expected a single monomial");
    return terms.front().first;
}

namespace {

SemigroupElement from_map(const std::map<std::int64_t, mpq_class>& m) {
    SemigroupElement out;
    for (const auto& [e, c] : m)
        if (c != 0)
            out.terms.emplace_back(e, c);
    return out;
}

const SemigroupElement& require_monomial(const SemigroupElement& x, const char* what) {
    if (!x.is_monomial())
        throw Error(Errc::UnsupportedCombination, std::string(what) + " needs a single monomial");
    return x;
}

} // namespace

// --- SemigroupDomain: elements ----------------------------------------------

SemigroupElement SemigroupDomain::add(const Element& a, const Element& b) const {
    std::map<std::int64_t, mpq_class> m;
    for (const auto& [e, c] : a.terms)
        m[e] += c;
    for (const auto& [e, c] : b.terms)
        m[e] += c;
    return from_map(m);
}

SemigroupElement SemigroupDomain::neg(const Element& a) const {
    Element out = a;
    for (auto& t : out.terms)
        t.second = -t.second;
    return out;
}

SemigroupElement SemigroupDomain::mul(const Element& a, const Element& b) const {
    std::map<std::int64_t, mpq_class> m;
    for (const auto& [e1, c1] : a.terms)
        for (const auto& [e2, c2] : b.terms)
            m[e1 + e2] += c1 * c2;
    return from_map(m);
}

SemigroupElement SemigroupDomain::inv(const Element& a) const {
    if (a.is_zero())
        throw Error(Errc::InversionOfZero, "inverse of zero in " + name());
    require_monomial(a, "inverse");
    return Element::monomial(-a.terms.front().first, 1 / a.terms.front().second);
}

bool SemigroupDomain::is_integral(const Element& a) const {
    return std::all_of(a.terms.begin(), a.terms.end(), [&](const auto& t) { return s_.contains(t.first); });
}

DivisionWitness<SemigroupElement> SemigroupDomain::divides(const Element& x, const Element& y) const {
    if (x.is_zero())
        throw Error(Errc::DivisionByZero, "divides: zero divisor");
    Element w = div(y, x);
    const bool integral = is_integral(w);
    return {std::move(w), integral};
}

std::optional<std::vector<SemigroupElement>> SemigroupDomain::solve_generators(const Element& x,
                                                                              std::span<const Element> gens) const {
    if (gens.empty())
        throw Error(Errc::UnsupportedCombination, "solve_generators needs a generator");
    for (const auto& g : gens)
        if (!g.is_zero())
            require_monomial(g, "semigroup generator");
    std::vector<Element> out(gens.size());
    for (const auto& [e, c] : x.terms) {
        bool placed = false;
        for (std::size_t i = 0; i < gens.size() && !placed; ++i) {
            if (gens[i].is_zero())
                continue;
            const auto& [ge, gc] = gens[i].terms.front();
            if (s_.contains(e - ge)) {
                out[i] = add(out[i], Element::monomial(e - ge, c / gc));
                placed = true;
            }
        }
        if (!placed)
            return std::nullopt;
    }
    return out;
}

std::string SemigroupDomain::format(const Element& a) const {
    if (a.is_zero())
        return "0";
    std::string out;
    for (const auto& [e, c] : a.terms) {
        std::string term;
        if (e == 0) {
            term = c.get_str();
        } else {
            if (c == -1)
                term = "-";
            else if (c != 1)
                term = c.get_str() + "*";
            term += "t";
            if (e != 1)
                term += "^" + std::to_string(e);
        }
        if (!out.empty() && term.front() != '-')
            out += "+";
        out += term;
    }
    return out;
}

// --- SemigroupDomain: ideals ------------------------------------------------

RelativeIdeal SemigroupDomain::unit_ideal() const {
    return RelativeIdeal::from_window(0, s_.conductor(), [&](std::int64_t z) { return s_.contains(z); });
}

RelativeIdeal SemigroupDomain::from_exponents(std::span<const std::int64_t> exponents) const {
    if (exponents.empty())
        return zero_ideal();
    const std::int64_t lo = *std::min_element(exponents.begin(), exponents.end());
    // z >= lo + c_S gives z - lo in S.
    return RelativeIdeal::from_window(lo, lo + s_.conductor(), [&](std::int64_t z) {
        return std::any_of(exponents.begin(), exponents.end(), [&](std::int64_t e) { return s_.contains(z - e); });
    });
}

RelativeIdeal SemigroupDomain::principal(const Element& x) const {
    if (x.is_zero())
        return zero_ideal();
    const std::int64_t e = require_monomial(x, "principal ideal").exponent();
    return from_exponents(std::span<const std::int64_t>(&e, 1));
}

RelativeIdeal SemigroupDomain::ideal(std::span<const Element> gens) const {
    std::vector<std::int64_t> exps;
    for (const auto& g : gens)
        if (!g.is_zero())
            exps.push_back(require_monomial(g, "ideal generator").exponent());
    return from_exponents(exps);
}

std::vector<std::int64_t> SemigroupDomain::minimal_exponents(const Ideal& I) const {
    std::vector<std::int64_t> out;
    if (I.zero)
        return out;
    const std::int64_t lo = I.min();
    for (std::int64_t z = lo; z < I.conductor + s_.multiplicity(); ++z) {
        if (!I.contains(z))
            continue;
        bool minimal = true;
        for (std::int64_t s = 1; s <= z - lo && minimal; ++s)
            if (s_.contains(s) && I.contains(z - s))
                minimal = false;
        if (minimal)
            out.push_back(z);
    }
    return out;
}

std::vector<SemigroupElement> SemigroupDomain::generators(const Ideal& I) const {
    std::vector<Element> out;
    for (auto e : minimal_exponents(I))
        out.push_back(Element::monomial(e));
    return out;
}

RelativeIdeal SemigroupDomain::sum(const Ideal& I, const Ideal& J) const {
    if (I.zero)
        return J;
    if (J.zero)
        return I;
    const std::int64_t lo = std::min(I.min(), J.min());
    const std::int64_t hi = std::min(I.conductor, J.conductor);
    return RelativeIdeal::from_window(lo, hi, [&](std::int64_t z) { return I.contains(z) || J.contains(z); });
}

RelativeIdeal SemigroupDomain::product(const Ideal& I, const Ideal& J) const {
    if (I.zero || J.zero)
        return zero_ideal();
    const std::int64_t mi = I.min();
    const std::int64_t mj = J.min();
    const std::int64_t hi = std::min(I.conductor + mj, J.conductor + mi);
    return RelativeIdeal::from_window(mi + mj, hi, [&](std::int64_t z) {
        for (std::int64_t l = mi; l <= z - mj; ++l)
            if (I.contains(l) && J.contains(z - l))
                return true;
        return false;
    });
}

RelativeIdeal SemigroupDomain::intersect(const Ideal& I, const Ideal& J) const {
    if (I.zero || J.zero)
        return zero_ideal();
    const std::int64_t lo = std::max(I.min(), J.min());
    const std::int64_t hi = std::max(I.conductor, J.conductor);
    return RelativeIdeal::from_window(lo, hi, [&](std::int64_t z) { return I.contains(z) && J.contains(z); });
}

RelativeIdeal SemigroupDomain::colon(const Ideal& I, const Ideal& J) const {
    if (J.zero)
        throw Error(Errc::ColonByZeroIdeal, "(I : 0) is undefined");
    if (I.zero)
        return zero_ideal();
    const std::int64_t mj = J.min();
    const std::int64_t lo = I.min() - mj;
    const std::int64_t hi = std::max(I.conductor - mj, lo);
    return RelativeIdeal::from_window(lo, hi, [&](std::int64_t z) {
        for (std::int64_t mu = mj; mu < I.conductor - z; ++mu)
            if (J.contains(mu) && !I.contains(z + mu))
                return false;
        return true;
    });
}

RelativeIdeal SemigroupDomain::scale(const Element& x, const Ideal& I) const {
    if (x.is_zero() || I.zero)
        return zero_ideal();
    return I.shifted(require_monomial(x, "ideal scaling").exponent());
}

bool SemigroupDomain::member(const Element& x, const Ideal& I) const {
    return std::all_of(x.terms.begin(), x.terms.end(), [&](const auto& t) { return I.contains(t.first); });
}

bool SemigroupDomain::contains(const Ideal& I, const Ideal& J) const {
    if (J.zero)
        return true;
    if (I.zero)
        return false;
    const std::int64_t hi = std::max(I.conductor, J.conductor);
    for (std::int64_t z = J.min(); z < hi; ++z)
        if (J.contains(z) && !I.contains(z))
            return false;
    return true;
}

bool SemigroupDomain::is_relative_ideal(const Ideal& I) const {
    if (I.zero)
        return true;
    for (std::int64_t z = I.min(); z < I.conductor; ++z) {
        if (!I.contains(z))
            continue;
        for (auto n : s_.minimal_generators())
            if (!I.contains(z + n))
                return false;
    }
    return true;
}

SemigroupElement SemigroupDomain::reduce(const Element& x, const Ideal& I) const {
    Element out;
    for (const auto& t : x.terms)
        if (!I.contains(t.first))
            out.terms.push_back(t);
    return out;
}

std::vector<std::int64_t> SemigroupDomain::difference(const Ideal& outer, const Ideal& inner) const {
    std::vector<std::int64_t> out;
    if (outer.zero)
        return out;
    const std::int64_t hi = std::max(outer.conductor, inner.zero ? outer.conductor : inner.conductor);
    for (std::int64_t z = outer.min(); z < hi; ++z)
        if (outer.contains(z) && !inner.contains(z))
            out.push_back(z);
    return out;
}

std::string format_exponent_set(std::span<const std::int64_t> exps) {
    std::string out = "{";
    for (std::size_t i = 0; i < exps.size(); ++i)
        out += (i ? "," : "") + std::to_string(exps[i]);
    return out + "}";
}

std::string SemigroupDomain::format_ideal(const Ideal& I) const {
    return "NS: " + format_exponent_set(minimal_exponents(I));
}

std::string SemigroupDomain::pretty(const Ideal& I) const {
    if (I.zero)
        return "0";
    return format_exponent_set(minimal_exponents(I)) + "+S";
}

} // namespace trivext
