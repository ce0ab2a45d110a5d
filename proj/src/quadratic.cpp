#include "trivext/quadratic.hpp"

#include <cstdlib>
#include <stdexcept>

#include "trivext/errors.hpp"

namespace trivext {

namespace {

bool squarefree(long d) {
    unsigned long n = static_cast<unsigned long>(std::labs(d));
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

mpz_class floor_of(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class common_denominator(std::span<const QuadraticNumber> xs) {
    mpz_class den = 1;
    for (const auto& v : xs) {
        den = lcm(den, v.x.get_den());
        den = lcm(den, v.y.get_den());
    }
    return den;
}

IntVec2 scaled_column(const QuadraticNumber& v, const mpz_class& den) {
    mpq_class x = v.x * den;
    mpq_class y = v.y * den;
    return {x.get_num(), y.get_num()};
}

} // namespace

QuadraticDomain::QuadraticDomain(long d) : d_(d) {
    if (d == 0 || d == 1 || !squarefree(d))
        throw Error(Errc::InvalidDomain, "OK(" + std::to_string(d) + ") needs squarefree d != 0, 1");
    // d ≡ 1 (mod 4): w = (1 + sqrt d)/2, w^2 = w + (d - 1)/4; otherwise w = sqrt d.
    if (((d % 4) + 4) % 4 == 1) {
        trace_ = 1;
        constant_ = (d - 1) / 4;
    } else {
        trace_ = 0;
        constant_ = d;
    }
}

std::string QuadraticDomain::name() const {
    return "OK(" + std::to_string(d_) + ")";
}

QuadraticNumber QuadraticDomain::mul(const Element& a, const Element& b) const {
    const mpq_class yy = a.y * b.y;
    return {a.x * b.x + constant_ * yy, a.x * b.y + a.y * b.x + trace_ * yy};
}

QuadraticNumber QuadraticDomain::conjugate(const Element& a) const {
    return {a.x + trace_ * a.y, -a.y};
}

mpq_class QuadraticDomain::norm(const Element& a) const {
    return a.x * a.x + trace_ * a.x * a.y - constant_ * a.y * a.y;
}

mpq_class QuadraticDomain::trace(const Element& a) const {
    return 2 * a.x + trace_ * a.y;
}

QuadraticNumber QuadraticDomain::inv(const Element& a) const {
    if (is_zero(a))
        throw Error(Errc::InversionOfZero, "inverse of zero in " + name());
    const mpq_class n = norm(a);
    const Element c = conjugate(a);
    return {c.x / n, c.y / n};
}

bool QuadraticDomain::is_integral(const Element& a) const {
    return a.x.get_den() == 1 && a.y.get_den() == 1;
}

bool QuadraticDomain::is_unit(const Element& a) const {
    if (!is_integral(a))
        return false;
    const mpq_class n = norm(a);
    return n == 1 || n == -1;
}

DivisionWitness<QuadraticNumber> QuadraticDomain::divides(const Element& x, const Element& y) const {
    if (is_zero(x))
        throw Error(Errc::DivisionByZero, "divides: zero divisor");
    Element w = div(y, x);
    const bool integral = is_integral(w);
    return {std::move(w), integral};
}

std::optional<std::vector<QuadraticNumber>> QuadraticDomain::solve_generators(const Element& x,
                                                                              std::span<const Element> gens) const {
    if (gens.empty())
        throw Error(Errc::UnsupportedCombination, "solve_generators needs a generator");
    std::vector<Element> zgens;
    zgens.reserve(2 * gens.size() + 1);
    for (const auto& g : gens) {
        zgens.push_back(g);
        zgens.push_back(mul(g, omega()));
    }
    zgens.push_back(x);
    const mpz_class den = common_denominator(zgens);
    zgens.pop_back();

    std::vector<IntVec2> cols;
    cols.reserve(zgens.size());
    for (const auto& g : zgens)
        cols.push_back(scaled_column(g, den));
    auto hnf = hermite_reduce(cols);
    if (!hnf) {
        // All generators vanish (a nonzero O_K-span always has rank 2).
        if (!is_zero(x))
            return std::nullopt;
        return std::vector<Element>(gens.size(), zero());
    }
    auto coords = hnf->form.coordinates(scaled_column(x, den));
    if (!coords)
        return std::nullopt;
    std::vector<Element> out;
    out.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        mpz_class u = (*coords)[0] * hnf->combo1[2 * i] + (*coords)[1] * hnf->combo2[2 * i];
        mpz_class v = (*coords)[0] * hnf->combo1[2 * i + 1] + (*coords)[1] * hnf->combo2[2 * i + 1];
        out.emplace_back(mpq_class(u), mpq_class(v));
    }
    return out;
}

std::string QuadraticDomain::format(const Element& a) const {
    if (is_zero(a))
        return "0";
    std::string out;
    if (a.x != 0)
        out = a.x.get_str();
    if (a.y != 0) {
        const bool negative = a.y < 0;
        const mpq_class mag = negative ? mpq_class(-a.y) : a.y;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (mag != 1)
            out += mag.get_str() + "*";
        out += "w";
    }
    return out;
}

QuadraticIdeal QuadraticDomain::principal(const Element& x) const {
    const Element gens[] = {x};
    return ideal(gens);
}

QuadraticIdeal QuadraticDomain::ideal(std::span<const Element> gens) const {
    std::vector<Element> zgens;
    zgens.reserve(2 * gens.size());
    for (const auto& g : gens) {
        zgens.push_back(g);
        zgens.push_back(mul(g, omega()));
    }
    return from_lattice(zgens);
}

QuadraticIdeal QuadraticDomain::from_lattice(std::span<const Element> zgens) const {
    const mpz_class den = common_denominator(zgens);
    std::vector<IntVec2> cols;
    cols.reserve(zgens.size());
    bool any = false;
    for (const auto& g : zgens) {
        any = any || !is_zero(g);
        cols.push_back(scaled_column(g, den));
    }
    auto hnf = hermite_reduce(cols);
    if (!hnf) {
        if (any)
            throw std::logic_error("from_lattice: generating set is not an O_K-module");
        return zero_ideal();
    }
    return from_integer_lattice(hnf->form, den);
}

QuadraticIdeal QuadraticDomain::from_integer_lattice(const Hnf2& h, const mpz_class& denominator) const {
    if (!mpz_divisible_p(h.a.get_mpz_t(), h.c.get_mpz_t()) || !mpz_divisible_p(h.b.get_mpz_t(), h.c.get_mpz_t()))
        throw std::logic_error("lattice is not an ideal: content does not divide the Hermite form");
    Ideal out;
    out.scale = mpq_class(h.c, denominator);
    out.scale.canonicalize();
    out.a = h.a / h.c;
    out.b = h.b / h.c;
    const mpz_class nb = out.b * out.b + trace_ * out.b - constant_;
    if (!mpz_divisible_p(nb.get_mpz_t(), out.a.get_mpz_t()))
        throw std::logic_error("lattice is not an ideal: a does not divide N(b + w)");
    return out;
}

mpz_class QuadraticDomain::denominator(const Ideal& I) const {
    return I.scale.get_den();
}

Hnf2 QuadraticDomain::integer_lattice(const Ideal& I, const mpz_class& den) const {
    const mpq_class s = I.scale * den;
    if (s.get_den() != 1)
        throw std::logic_error("integer_lattice: denominator too small");
    const mpz_class c = s.get_num();
    return Hnf2{c * I.a, c * I.b, c};
}

std::vector<QuadraticNumber> QuadraticDomain::generators(const Ideal& I) const {
    if (is_zero(I))
        return {};
    return {Element(I.scale * I.a), Element(I.scale * I.b, I.scale)};
}

QuadraticIdeal QuadraticDomain::sum(const Ideal& I, const Ideal& J) const {
    if (is_zero(I))
        return J;
    if (is_zero(J))
        return I;
    auto zgens = generators(I);
    for (auto& g : generators(J))
        zgens.push_back(std::move(g));
    return from_lattice(zgens);
}

QuadraticIdeal QuadraticDomain::product(const Ideal& I, const Ideal& J) const {
    if (is_zero(I) || is_zero(J))
        return zero_ideal();
    std::vector<Element> zgens;
    for (const auto& g : generators(I))
        for (const auto& h : generators(J))
            zgens.push_back(mul(g, h));
    return from_lattice(zgens);
}

QuadraticIdeal QuadraticDomain::intersect(const Ideal& I, const Ideal& J) const {
    if (is_zero(I) || is_zero(J))
        return zero_ideal();
    const mpz_class den = lcm(denominator(I), denominator(J));
    return from_integer_lattice(trivext::intersect(integer_lattice(I, den), integer_lattice(J, den)), den);
}

QuadraticIdeal QuadraticDomain::conjugate(const Ideal& I) const {
    if (is_zero(I))
        return I;
    std::vector<Element> zgens;
    for (const auto& g : generators(I))
        zgens.push_back(conjugate(g));
    return from_lattice(zgens);
}

QuadraticIdeal QuadraticDomain::inverse(const Ideal& J) const {
    if (is_zero(J))
        throw Error(Errc::ColonByZeroIdeal, "inverse of the zero ideal");
    // For primitive P = (a, b + w) in the maximal order, P * conj(P) = (a).
    Ideal primitive{1, J.a, J.b};
    Ideal out = conjugate(primitive);
    out.scale /= J.scale * J.a;
    out.scale.canonicalize();
    return out;
}

QuadraticIdeal QuadraticDomain::colon(const Ideal& I, const Ideal& J) const {
    if (is_zero(J))
        throw Error(Errc::ColonByZeroIdeal, "(I : 0) is undefined");
    if (is_zero(I))
        return zero_ideal();
    Ideal out = product(I, inverse(J));
    if (!contains(I, product(out, J)))
        throw std::logic_error("colon verification failed: (I:J)*J not inside I");
    return out;
}

QuadraticIdeal QuadraticDomain::scale(const Element& x, const Ideal& I) const {
    if (is_zero(x) || is_zero(I))
        return zero_ideal();
    std::vector<Element> zgens;
    for (const auto& g : generators(I))
        zgens.push_back(mul(x, g));
    return from_lattice(zgens);
}

mpq_class QuadraticDomain::norm(const Ideal& I) const {
    return I.scale * I.scale * I.a;
}

bool QuadraticDomain::member(const Element& x, const Ideal& I) const {
    if (is_zero(I))
        return is_zero(x);
    const mpq_class k2 = x.y / I.scale;
    if (k2.get_den() != 1)
        return false;
    const mpq_class k1 = (x.x / I.scale - k2 * I.b) / I.a;
    return k1.get_den() == 1;
}

bool QuadraticDomain::contains(const Ideal& I, const Ideal& J) const {
    for (const auto& g : generators(J))
        if (!member(g, I))
            return false;
    return true;
}

QuadraticNumber QuadraticDomain::reduce(const Element& x, const Ideal& I) const {
    if (is_zero(I))
        return x;
    const mpz_class f2 = floor_of(x.y / I.scale);
    mpq_class rx = x.x - f2 * I.scale * I.b;
    mpq_class ry = x.y - f2 * I.scale;
    const mpq_class s1 = (rx - (ry / I.scale) * I.scale * I.b) / (I.scale * I.a);
    rx -= floor_of(s1) * I.scale * I.a;
    return {rx, ry};
}

std::string QuadraticDomain::format_ideal(const Ideal& I) const {
    if (is_zero(I))
        return "OK: gens(0)";
    const auto g = generators(I);
    return "OK: gens(" + format(g[0]) + "," + format(g[1]) + ")";
}

std::string QuadraticDomain::pretty(const Ideal& I) const {
    if (is_zero(I))
        return "0";
    const std::string prefix = I.scale == 1 ? "" : "(" + I.scale.get_str() + ")";
    if (I.a == 1)
        return prefix + "OK";
    return prefix + "(" + I.a.get_str() + "," + format(Element(mpq_class(I.b), 1)) + ")";
}

} // namespace trivext
