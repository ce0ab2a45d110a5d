#include "trivext/literals.hpp"

#include <cctype>
#include <charconv>

namespace trivext {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip() {
        while (pos_ < s_.size() && is_space(s_[pos_]))
            ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) != word)
            return false;
        pos_ += word.size();
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    void finish() {
        if (!at_end())
            fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && is_digit(s_[pos_]))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        std::string str(s_.substr(start, pos_ - start));
        if (str.front() == '+')
            str.erase(0, 1);
        return mpz_class(str);
    }
    long small_integer() {
        const std::size_t start = position();
        const mpz_class n = integer();
        if (!n.fits_slong_p())
            throw ParseError(start, "integer out of range");
        return n.get_si();
    }

    std::size_t position() {
        skip();
        return pos_;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <FractionalDomain D>
typename D::Element constant(const D& dom, const mpz_class& n) {
    if constexpr (D::kind == DomainKind::Integers)
        return typename D::Element(n);
    else if constexpr (D::kind == DomainKind::RationalPolynomials)
        return typename D::Element(Polynomial(mpq_class(n)));
    else if constexpr (D::kind == DomainKind::QuadraticIntegers)
        return QuadraticNumber(mpq_class(n));
    else
        return n == 0 ? dom.zero() : dom.monomial(0, mpq_class(n));
}

template <FractionalDomain D>
std::optional<typename D::Element> variable(const D& dom, char name) {
    if constexpr (D::kind == DomainKind::RationalPolynomials) {
        if (name == 't')
            return typename D::Element(Polynomial::variable());
    } else if constexpr (D::kind == DomainKind::QuadraticIntegers) {
        if (name == 'w')
            return dom.omega();
    } else if constexpr (D::kind == DomainKind::NumericalSemigroup) {
        if (name == 't')
            return dom.monomial(1);
    }
    return std::nullopt;
}

/// Recursive descent: expr = term {(+|-) term}; term = factor {(*|/) factor};
/// factor = -factor | power; power = primary [^ integer].
template <FractionalDomain D>
class ExpressionParser {
public:
    using Element = typename D::Element;
    ExpressionParser(const D& dom, Cursor& cur) : dom_(dom), cur_(cur) {}

    Element expr() {
        Element acc = term();
        for (;;) {
            const auto at = cur_.position();
            if (cur_.accept('+'))
                acc = guarded(at, [&] { return dom_.add(acc, term()); });
            else if (cur_.accept('-'))
                acc = guarded(at, [&] { return dom_.sub(acc, term()); });
            else
                return acc;
        }
    }

private:
    template <typename F>
    Element guarded(std::size_t at, F&& f) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    }

    Element term() {
        Element acc = factor();
        for (;;) {
            const auto at = cur_.position();
            if (cur_.accept('*')) {
                Element rhs = factor();
                acc = guarded(at, [&] { return dom_.mul(acc, rhs); });
            } else if (cur_.accept('/')) {
                Element rhs = factor();
                acc = guarded(at, [&] { return dom_.div(acc, rhs); });
            } else {
                return acc;
            }
        }
    }

    Element factor() {
        if (cur_.accept('-'))
            return dom_.neg(factor());
        return power();
    }

    Element power() {
        Element base = primary();
        const auto at = cur_.position();
        if (!cur_.accept('^'))
            return base;
        const long n = cur_.small_integer();
        return guarded(at, [&] {
            Element b = n < 0 ? dom_.inv(base) : base;
            Element out = dom_.one();
            for (long i = 0; i < (n < 0 ? -n : n); ++i)
                out = dom_.mul(out, b);
            return out;
        });
    }

    Element primary() {
        const char c = cur_.peek();
        if (c == '(') {
            cur_.accept('(');
            Element inner = expr();
            cur_.expect(')');
            return inner;
        }
        if (is_digit(c))
            return constant(dom_, cur_.integer());
        if (c != '\0') {
            if (auto v = variable(dom_, c)) {
                cur_.accept(c);
                return *v;
            }
        }
        cur_.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }

    const D& dom_;
    Cursor& cur_;
};

template <FractionalDomain D>
const char* ideal_prefix() {
    switch (D::kind) {
    case DomainKind::Integers: return "Z";
    case DomainKind::RationalPolynomials: return "Q[t]";
    case DomainKind::QuadraticIntegers: return "OK";
    case DomainKind::NumericalSemigroup: return "NS";
    }
    return "";
}

template <FractionalDomain D>
typename D::Ideal ideal_body(const D& dom, Cursor& cur) {
    if constexpr (D::kind == DomainKind::NumericalSemigroup) {
        cur.expect('{');
        std::vector<std::int64_t> exps;
        if (!cur.accept('}')) {
            do
                exps.push_back(cur.small_integer());
            while (cur.accept(','));
            cur.expect('}');
        }
        return dom.from_exponents(exps);
    } else {
        const bool wrapped = cur.accept("gens");
        if (wrapped)
            cur.expect('(');
        std::vector<typename D::Element> gens;
        ExpressionParser<D> p(dom, cur);
        do
            gens.push_back(p.expr());
        while (cur.accept(','));
        if (wrapped)
            cur.expect(')');
        return dom.ideal(gens);
    }
}

} // namespace

DomainDescriptor parse_domain(std::string_view text) {
    Cursor cur(text);
    auto wrap = [&](auto&& build) -> DomainDescriptor {
        const auto at = cur.position();
        try {
            return build();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    };
    DomainDescriptor out;
    if (cur.accept("Q[t]")) {
        out = PolynomialDomain{};
    } else if (cur.accept("Z")) {
        out = IntegerDomain{};
    } else if (cur.accept("OK")) {
        cur.expect('(');
        out = wrap([&] { return QuadraticDomain(cur.small_integer()); });
        cur.expect(')');
    } else if (cur.accept("NS")) {
        cur.expect('(');
        std::vector<std::int64_t> gens;
        do
            gens.push_back(cur.small_integer());
        while (cur.accept(','));
        cur.expect(')');
        out = wrap([&] { return SemigroupDomain(NumericalSemigroup(gens)); });
    } else if (cur.accept("Field")) {
        cur.expect('(');
        const auto at = cur.position();
        const long dim = cur.small_integer();
        if (dim < 0)
            throw ParseError(at, "dimension must be nonnegative");
        cur.expect(')');
        out = FieldBranch{static_cast<unsigned long>(dim)};
    } else {
        cur.fail("unknown domain; expected Z, Q[t], OK(d), NS(...) or Field(n)");
    }
    cur.finish();
    return out;
}

template <FractionalDomain D>
typename D::Element parse_element(const D& dom, std::string_view text) {
    Cursor cur(text);
    ExpressionParser<D> p(dom, cur);
    auto out = p.expr();
    cur.finish();
    return out;
}

template <FractionalDomain D>
typename D::Ideal parse_ideal(const D& dom, std::string_view text) {
    Cursor cur(text);
    const std::string prefix = ideal_prefix<D>();
    if (!cur.accept(std::string_view(prefix)))
        cur.fail("expected ideal prefix '" + prefix + ":'");
    cur.expect(':');
    auto out = ideal_body(dom, cur);
    cur.finish();
    return out;
}

template <FractionalDomain D>
GeneratorSet<D> parse_generator_set(const TrivialExtension<D>& R, std::string_view text) {
    Cursor cur(text);
    ExpressionParser<D> p(R.domain(), cur);
    GeneratorSet<D> out;
    do {
        cur.expect('(');
        const auto at = cur.position();
        auto a = p.expr();
        cur.expect(',');
        auto f = p.expr();
        cur.expect(')');
        try {
            out.push_back(R.element(a, f));
        } catch (const Error& e) {
            throw ParseError(at, e.what());
        }
    } while (cur.accept(';'));
    cur.finish();
    return out;
}

template <FractionalDomain D>
std::pair<typename D::Element, typename D::Ideal> parse_coset(const D& dom, std::string_view text) {
    const auto split = text.rfind(" mod ");
    if (split == std::string_view::npos)
        throw ParseError(0, "expected '<element> mod <ideal>'");
    auto rep = parse_element(dom, text.substr(0, split));
    try {
        return {rep, parse_ideal(dom, text.substr(split + 5))};
    } catch (const ParseError& e) {
        throw ParseError(split + 5 + e.position(), e.what());
    }
}

#define TRIVEXT_INSTANTIATE(D)                                                                                    \
    template D::Element parse_element<D>(const D&, std::string_view);                                              \
    template D::Ideal parse_ideal<D>(const D&, std::string_view);                                                  \
    template GeneratorSet<D> parse_generator_set<D>(const TrivialExtension<D>&, std::string_view);                 \
    template std::pair<D::Element, D::Ideal> parse_coset<D>(const D&, std::string_view);

TRIVEXT_INSTANTIATE(IntegerDomain)
TRIVEXT_INSTANTIATE(PolynomialDomain)
TRIVEXT_INSTANTIATE(QuadraticDomain)
TRIVEXT_INSTANTIATE(SemigroupDomain)

#undef TRIVEXT_INSTANTIATE

} // namespace trivext
