#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace testing;

TEST_CASE("element arithmetic examples") {
    CHECK(Z.mul(el(Z, "2/3"), el(Z, "9/4")) == el(Z, "3/2"));
    CHECK(OK5.mul(el(OK5, "1+w"), el(OK5, "1-w")) == el(OK5, "6"));
    CHECK(NS345.mul(el(NS345, "t^3"), el(NS345, "t^-1")) == el(NS345, "t^2"));
    CHECK(Qt.mul(el(Qt, "t-1"), el(Qt, "t+1")) == el(Qt, "t^2-1"));
}

TEST_CASE("omega depends on d mod 4") {
    CHECK(OK5.omega_trace() == 0);
    CHECK(OK5.omega_constant() == -5);
    CHECK(OK3.omega_trace() == 1);
    CHECK(OK3.omega_constant() == -1);
    CHECK(OKr5.omega_constant() == 1);
    CHECK(OK3.is_integral(el(OK3, "w")));
    CHECK_FALSE(OK5.is_integral(el(OK5, "1/2+1/2*w")));
    CHECK(OK5.norm(el(OK5, "1+w")) == 6);
}

TEST_CASE("invalid domains are rejected") {
    for (long d : {0L, 1L, 4L, 12L, -8L})
        CHECK_THROWS_AS(QuadraticDomain{d}, Error);
    CHECK_THROWS_AS(NumericalSemigroup({}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({2, 4}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}), Error);
    CHECK_THROWS_AS(NumericalSemigroup({-1, 3}), Error);
}

TEST_CASE("numerical semigroup data") {
    const auto& s = NS345.semigroup();
    CHECK(s.frobenius() == 2);
    CHECK(s.conductor() == 3);
    CHECK(s.multiplicity() == 3);
    CHECK(s.gaps() == std::vector<std::int64_t>{1, 2});
    CHECK(s.to_string() == "NS(3,4,5)");
    NumericalSemigroup redundant({6, 3, 4, 5});
    CHECK(redundant.minimal_generators() == std::vector<std::int64_t>{3, 4, 5});
    NumericalSemigroup n({1});
    CHECK(n.frobenius() == -1);
    CHECK(n.gaps().empty());
    NumericalSemigroup s57({5, 7});
    CHECK(s57.frobenius() == 23);
}

TEST_CASE("inversion of zero") {
    for_each_domain([](const auto& dom) {
        try {
            dom.inv(dom.zero());
            FAIL("expected InversionOfZero");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InversionOfZero);
        }
    });
}

TEST_CASE("divides") {
    auto w = Z.divides(el(Z, "2"), el(Z, "3"));
    CHECK(w.quotient == el(Z, "3/2"));
    CHECK_FALSE(w.integral);
    auto p = Qt.divides(el(Qt, "t-1"), el(Qt, "t^2-1"));
    CHECK(p.quotient == el(Qt, "t+1"));
    CHECK(p.integral);
    auto n = NS345.divides(el(NS345, "t^3"), el(NS345, "t^7"));
    CHECK(n.quotient == el(NS345, "t^4"));
    CHECK(n.integral);
    CHECK_FALSE(NS345.divides(el(NS345, "t^3"), el(NS345, "t^5")).integral);
    CHECK_THROWS_AS(Z.divides(Z.zero(), Z.one()), Error);
}

TEST_CASE("solve_generators examples") {
    {
        const std::vector gens{el(Z, "4"), el(Z, "6"), el(Z, "0")};
        CHECK_FALSE(Z.solve_generators(el(Z, "1"), gens));
    }
    {
        const std::vector gens{el(Z, "4"), el(Z, "6")};
        auto c = Z.solve_generators(el(Z, "2"), gens);
        REQUIRE(c);
        CHECK((*c)[0] == el(Z, "-1"));
        CHECK((*c)[1] == el(Z, "1"));
    }
    {
        const std::vector gens{el(Qt, "t"), el(Qt, "t-1")};
        auto c = Qt.solve_generators(el(Qt, "1"), gens);
        REQUIRE(c);
        CHECK(Qt.add(Qt.mul((*c)[0], gens[0]), Qt.mul((*c)[1], gens[1])) == Qt.one());
        CHECK((*c)[0] == el(Qt, "1"));
        CHECK((*c)[1] == el(Qt, "-1"));
    }
    {
        const std::vector gens{el(NS345, "t^3"), el(NS345, "t^4")};
        auto c = NS345.solve_generators(el(NS345, "t^7"), gens);
        REQUIRE(c);
        CHECK(NS345.add(NS345.mul((*c)[0], gens[0]), NS345.mul((*c)[1], gens[1])) == el(NS345, "t^7"));
        CHECK_FALSE(NS345.solve_generators(el(NS345, "t^5"), gens));
    }
    {
        const std::vector gens{el(OK5, "2"), el(OK5, "1+w")};
        CHECK_FALSE(OK5.solve_generators(el(OK5, "1"), gens));
        auto c = OK5.solve_generators(el(OK5, "3+w"), gens);
        REQUIRE(c);
        CHECK(OK5.add(OK5.mul((*c)[0], gens[0]), OK5.mul((*c)[1], gens[1])) == el(OK5, "3+w"));
    }
}

TEST_CASE("canonical forms are unique") {
    CHECK(el(Z, "2/4") == el(Z, "1/2"));
    CHECK(el(Z, "-3/-6") == el(Z, "1/2"));
    CHECK(el(Qt, "(2*t-2)/(t^2-1)") == el(Qt, "2/(t+1)"));
    CHECK(el(Qt, "(2*t-2)/(t^2-1)").denominator() == Polynomial(std::vector<mpq_class>{1, 1}));
    CHECK(el(Z, "0/5") == Z.zero());
    CHECK(el(Qt, "0/(t+1)") == Qt.zero());
    CHECK(el(NS345, "t^2-t^2") == NS345.zero());
    CHECK(el(OK5, "w*w") == el(OK5, "-5"));
    CHECK(el(OK3, "w*w") == el(OK3, "w-1"));
}

TEST_CASE("polynomial gcd and Bezout") {
    const auto a = el(Qt, "t^3-t").numerator();
    const auto b = el(Qt, "t^2+t").numerator();
    CHECK(Polynomial::gcd(a, b) == el(Qt, "t^2+t").numerator());
    const auto bz = Polynomial::extended_gcd(el(Qt, "t^2+1").numerator(), el(Qt, "t-1").numerator());
    CHECK(bz.gcd == Polynomial(1));
    CHECK(bz.s * el(Qt, "t^2+1").numerator() + bz.t * el(Qt, "t-1").numerator() == Polynomial(1));
    CHECK(el(Qt, "3/2*t+1").numerator().to_string() == "3/2*t+1");
    CHECK(Qt.format(el(Qt, "(t-1)/(t+1)")) == "(t-1)/(t+1)");
}

template <FractionalDomain D>
void field_axioms(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        const auto a = s.element(rng), b = s.element(rng), c = s.element(rng);
        CHECK(dom.add(a, b) == dom.add(b, a));
        CHECK(dom.mul(a, b) == dom.mul(b, a));
        CHECK(dom.add(dom.add(a, b), c) == dom.add(a, dom.add(b, c)));
        CHECK(dom.mul(dom.mul(a, b), c) == dom.mul(a, dom.mul(b, c)));
        CHECK(dom.mul(a, dom.add(b, c)) == dom.add(dom.mul(a, b), dom.mul(a, c)));
        CHECK(dom.add(a, dom.neg(a)) == dom.zero());
        CHECK(dom.mul(a, dom.one()) == a);
        if (!dom.is_zero(a))
            CHECK(dom.mul(a, dom.inv(a)) == dom.one());
    }
}

TEST_CASE("field axioms on random elements") {
    auto rng = rng_for("field axioms");
    for_each_domain([&](const auto& dom) { field_axioms(dom, rng, 200); });
}

TEST_CASE("quadratic norm is multiplicative") {
    auto rng = rng_for("norm");
    for (const auto* dom : {&OK5, &OK3, &OKr5}) {
        Sampler<QuadraticDomain> s(*dom);
        for (int i = 0; i < 1000; ++i) {
            const auto x = s.element(rng), y = s.element(rng);
            REQUIRE(dom->norm(dom->mul(x, y)) == dom->norm(x) * dom->norm(y));
        }
    }
}

template <FractionalDomain D>
void solve_soundness(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        const auto gens = random_ideal_generators(s, rng);
        auto x = dom.zero();
        for (const auto& g : gens)
            x = dom.add(x, dom.mul(s.ring_element(rng), g));
        auto c = dom.solve_generators(x, gens);
        REQUIRE(c);
        auto back = dom.zero();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            CHECK(dom.is_integral((*c)[k]));
            back = dom.add(back, dom.mul((*c)[k], gens[k]));
        }
        CHECK(back == x);
        const auto y = s.element(rng);
        if (auto d = dom.solve_generators(y, gens)) {
            auto again = dom.zero();
            for (std::size_t k = 0; k < gens.size(); ++k)
                again = dom.add(again, dom.mul((*d)[k], gens[k]));
            CHECK(again == y);
        }
    }
}

TEST_CASE("Bezout soundness on random inputs") {
    auto rng = rng_for("bezout");
    for_each_domain([&](const auto& dom) { solve_soundness(dom, rng, 200); });
}

template <FractionalDomain D>
void divides_soundness(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        const auto x = s.integral_generator(rng), y = s.element(rng);
        const auto w = dom.divides(x, y);
        CHECK(dom.mul(x, w.quotient) == y);
        CHECK(w.integral == dom.is_integral(w.quotient));
    }
}

TEST_CASE("divides soundness") {
    auto rng = rng_for("divides");
    for_each_domain([&](const auto& dom) { divides_soundness(dom, rng, 200); });
}

TEST_CASE("element literals round-trip through format") {
    auto rng = rng_for("element literals");
    for_each_domain([&](const auto& dom) {
        using D = std::decay_t<decltype(dom)>;
        Sampler<D> s(dom);
        for (int i = 0; i < 200; ++i) {
            const auto x = s.element(rng);
            REQUIRE(parse_element(dom, dom.format(x)) == x);
        }
    });
}

TEST_CASE("semigroup elements outside the monomial model") {
    const auto sum = el(NS345, "t^3+t^4");
    CHECK_FALSE(sum.is_monomial());
    CHECK_THROWS_AS(NS345.inv(sum), Error);
    CHECK(NS345.is_integral(sum));
    CHECK_FALSE(NS345.is_integral(el(NS345, "t^3+t")));
}
