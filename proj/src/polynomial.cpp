#include "trivext/polynomial.hpp"

#include <algorithm>

#include "trivext/errors.hpp"

namespace trivext {

std::string format_rational(const mpq_class& q) {
    return q.get_str();
}

Polynomial::Polynomial(const mpq_class& constant) {
    if (constant != 0)
        coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<mpq_class> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

Polynomial Polynomial::variable() {
    return monomial(1, 1);
}

Polynomial Polynomial::monomial(const mpq_class& coefficient, unsigned degree) {
    if (coefficient == 0)
        return {};
    std::vector<mpq_class> c(degree + 1, mpq_class(0));
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const mpq_class& Polynomial::leading() const {
    if (coeffs_.empty())
        throw Error(Errc::DivisionByZero, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

mpq_class Polynomial::coefficient(unsigned i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpq_class(0);
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    Polynomial out = *this;
    const mpq_class lc = leading();
    for (auto& c : out.coeffs_)
        c /= lc;
    return out;
}

mpq_class Polynomial::evaluate(const mpq_class& at) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), mpq_class(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpq_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw Error(Errc::DivisionByZero, "polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree())
        return {Polynomial{}, rem};
    std::vector<mpq_class> quot(a.degree() - b.degree() + 1, mpq_class(0));
    const mpq_class& lc = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const mpq_class factor = rem.leading() / lc;
        quot[shift] = factor;
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeffs_[i + shift] -= factor * b.coeffs_[i];
        rem.trim();
    }
    return {Polynomial(std::move(quot)), rem};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Polynomial::Bezout Polynomial::extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = 1, s1 = 0;
    Polynomial t0 = 0, t1 = 1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero())
        return {Polynomial{}, Polynomial{}, Polynomial{}};
    const Polynomial inv_lc(1 / r0.leading());
    return {r0 * inv_lc, s0 * inv_lc, t0 * inv_lc};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = coeffs_[i];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const mpq_class mag = negative ? mpq_class(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1)
            out += mag.get_str() + "*";
        out += var;
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    return out;
}

} // namespace trivext
