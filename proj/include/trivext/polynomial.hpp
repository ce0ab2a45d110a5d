#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace trivext {

/// Dense univariate polynomial over Q, coefficients stored low degree first
/// with no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const mpq_class& constant);
    Polynomial(long constant) : Polynomial(mpq_class(constant)) {}
    explicit Polynomial(std::vector<mpq_class> coefficients);

    static Polynomial variable();
    static Polynomial monomial(const mpq_class& coefficient, unsigned degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const mpq_class& leading() const;
    mpq_class coefficient(unsigned i) const;
    const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

    Polynomial monic() const;
    mpq_class evaluate(const mpq_class& at) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Euclidean division; throws DivisionByZero for a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    struct Bezout;
    /// s*a + t*b = gcd with gcd monic (or zero when a = b = 0).
    static Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

struct Polynomial::Bezout {
    Polynomial gcd;
    Polynomial s;
    Polynomial t;
};

std::string format_rational(const mpq_class& q);

} // namespace trivext
