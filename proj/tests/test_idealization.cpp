#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace testing;

namespace {

TrivialExtension<IntegerDomain> RZ(Z, Z.unit_ideal());

IdealizationElement<IntegerDomain> z(const std::string& a, const std::string& f) {
    return RZ.element(el(Z, a), el(Z, f));
}

FgIdealNormalForm<IntegerDomain> ext(const std::string& lit) { return RZ.extension(id(Z, lit)); }
FgIdealNormalForm<IntegerDomain> zp(const std::string& lit) { return RZ.zero_part(id(Z, lit)); }

} // namespace

TEST_CASE("ring arithmetic") {
    CHECK(RZ.mul(z("2", "1/2"), z("3", "1/3")) == z("6", "1/6"));
    CHECK(RZ.mul(RZ.one(), z("5", "2/7")) == z("5", "2/7"));
    CHECK(RZ.is_zero(RZ.mul(z("0", "1/2"), z("0", "1/3"))));
    CHECK_THROWS_AS(z("1/2", "0"), Error);
    CHECK(RZ.format(z("6", "13/6")) == "(6, 1/6)");
}

template <FractionalDomain D>
void ring_axioms(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    TrivialExtension<D> R(dom, random_ideal(s, rng));
    for (int i = 0; i < n; ++i) {
        const auto u = random_ring_element(R, s, rng), v = random_ring_element(R, s, rng),
                   w = random_ring_element(R, s, rng);
        CHECK(R.mul(u, v) == R.mul(v, u));
        CHECK(R.mul(R.mul(u, v), w) == R.mul(u, R.mul(v, w)));
        CHECK(R.mul(u, R.add(v, w)) == R.add(R.mul(u, v), R.mul(u, w)));
        CHECK(R.mul(R.one(), u) == u);
        const IdealizationElement<D> nil{dom.zero(), u.e};
        CHECK(R.is_zero(R.mul(nil, nil)));
    }
}

TEST_CASE("commutative ring axioms and square-zero E") {
    auto rng = rng_for("ring axioms");
    for_each_domain([&](const auto& dom) { ring_axioms(dom, rng, 200); });
}

TEST_CASE("classify examples") {
    const GeneratorSet<IntegerDomain> g1{z("4", "1/7"), z("6", "0")};
    CHECK(RZ.classify(g1) == ext("Z: 2"));
    CHECK(RZ.format(RZ.classify(g1)) == "Extension(2Z ⋉ E)");
    const GeneratorSet<IntegerDomain> g2{z("0", "1/2"), z("0", "1/3")};
    CHECK(RZ.classify(g2) == zp("Z: 1/6"));
    CHECK(RZ.format(RZ.classify(g2)) == "ZeroPart(0 ⋉ (1/6)Z/Z)");
    const GeneratorSet<IntegerDomain> g3{z("1", "5/9")};
    CHECK(RZ.classify(g3) == RZ.whole_ring());
    const GeneratorSet<IntegerDomain> g4{z("0", "3")};
    CHECK(RZ.classify(g4) == FgIdealNormalForm<IntegerDomain>(ZeroIdealMarker{}));
    CHECK(RZ.format(RZ.classify(g4)) == "Zero");
}

TEST_CASE("membership examples") {
    const GeneratorSet<IntegerDomain> g{z("4", "0"), z("6", "0")};
    const auto target = z("2", "1/5");
    auto c = RZ.membership(target, g);
    REQUIRE(c);
    CHECK(RZ.recombine(*c, g) == target);

    const GeneratorSet<IntegerDomain> half{z("0", "1/2")};
    CHECK_FALSE(RZ.membership(z("0", "1/3"), half));
    auto zero = RZ.membership(RZ.zero(), half);
    REQUIRE(zero);
    for (const auto& coeff : *zero)
        CHECK(RZ.is_zero(coeff));

    const GeneratorSet<IntegerDomain> unit{z("1", "0")};
    CHECK(RZ.membership(z("17", "3/11"), unit));
    CHECK_FALSE(RZ.membership(z("1", "0"), g));
}

TEST_CASE("annihilator examples") {
    CHECK(RZ.ann_of_element(z("2", "1/3")) == zp("Z: 1/2"));
    CHECK(RZ.ann_of_element(z("0", "1/2")) == ext("Z: 2"));
    CHECK(RZ.ann_of_element(RZ.one()) == FgIdealNormalForm<IntegerDomain>(ZeroIdealMarker{}));
    CHECK(RZ.ann_of_element(RZ.zero()) == RZ.whole_ring());

    CHECK(RZ.ann_of_ideal(ext("Z: 4")) == zp("Z: 1/4"));
    CHECK(RZ.ann_of_ideal(zp("Z: 1/6")) == ext("Z: 6"));
    CHECK(RZ.ann_of_ideal(RZ.zero_part(Z.unit_ideal())) == RZ.whole_ring());
    CHECK(RZ.ann_of_ideal(RZ.whole_ring()) == FgIdealNormalForm<IntegerDomain>(ZeroIdealMarker{}));
}

TEST_CASE("intersection examples") {
    CHECK(RZ.intersect(ext("Z: 4"), ext("Z: 6")) == ext("Z: 12"));
    CHECK(RZ.intersect(ext("Z: 4"), zp("Z: 1/3")) == zp("Z: 1/3"));
    CHECK(RZ.intersect(zp("Z: 1/3"), ext("Z: 4")) == zp("Z: 1/3"));
    CHECK(RZ.intersect(zp("Z: 1/4"), zp("Z: 1/6")) == zp("Z: 1/2"));
    CHECK(RZ.intersect(zp("Z: 1/2"), zp("Z: 1/3")) == FgIdealNormalForm<IntegerDomain>(ZeroIdealMarker{}));
}

TEST_CASE("normal forms reject invalid data") {
    CHECK_THROWS_AS(RZ.extension(Z.zero_ideal()), Error);
    CHECK_THROWS_AS(RZ.extension(id(Z, "Z: 1/2")), Error);
    CHECK_THROWS_AS(RZ.zero_part(id(Z, "Z: 2")), Error);
}

template <FractionalDomain D>
void normal_form_soundness(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        TrivialExtension<D> R(dom, random_ideal(s, rng));
        const auto gens = random_generator_set(R, s, rng);
        const auto nf = R.classify(gens);
        for (const auto& g : gens)
            CHECK(R.contains(nf, g));
        // Generators of the normal form lie in the ideal generated by gens.
        for (const auto& h : R.generators(nf)) {
            auto c = R.membership(h, gens);
            REQUIRE(c);
            CHECK(R.recombine(*c, gens) == h);
        }
        const auto inside = random_member(R, s, nf, rng);
        auto c = R.membership(inside, gens);
        REQUIRE(c);
        CHECK(R.recombine(*c, gens) == inside);
        const auto outside = random_ring_element(R, s, rng);
        CHECK(R.contains(nf, outside) == R.membership(outside, gens).has_value());
    }
}

TEST_CASE("normal-form soundness on fuzzed generator sets") {
    auto rng = rng_for("normal forms");
    for_each_domain([&](const auto& dom) { normal_form_soundness(dom, rng, 500); });
}

template <FractionalDomain D>
void principal_extension(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        TrivialExtension<D> R(dom, random_ideal(s, rng));
        const auto x = s.integral_generator(rng);
        const GeneratorSet<D> gens{R.element(x, dom.zero())};
        CHECK(R.classify(gens) == R.extension(dom.principal(x)));
        // xE = E: every (0, e) is a multiple of (x, 0).
        const IdealizationElement<D> target{dom.zero(), R.module().coset(s.element(rng))};
        auto c = R.membership(target, gens);
        REQUIRE(c);
        CHECK(R.recombine(*c, gens) == target);
    }
}

TEST_CASE("(x,0)R = xA ⋉ E") {
    auto rng = rng_for("principal extension");
    for_each_domain([&](const auto& dom) { principal_extension(dom, rng, 200); });
}

template <FractionalDomain D>
void annihilator_closed_forms(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        TrivialExtension<D> R(dom, random_ideal(s, rng));
        // Monomial first components keep the semigroup case inside the monomial ideal class.
        const auto u = R.element(uniform(rng, 0, 2) == 0 ? dom.zero() : s.integral_generator(rng), s.element(rng));
        const auto ann = R.ann_of_element(u);
        const GeneratorSet<D> one{u};
        const auto nf = R.classify(one);
        for (const auto& r : R.generators(ann))
            CHECK(R.is_zero(R.mul(r, u)));
        CHECK(R.ann_of_ideal(nf) == ann);
        const auto a = random_normal_form(R, s, rng), b = random_normal_form(R, s, rng);
        const auto both = R.intersect(a, b);
        CHECK(R.contains(a, both));
        CHECK(R.contains(b, both));
    }
}

TEST_CASE("annihilators and intersections on random inputs") {
    auto rng = rng_for("annihilators");
    for_each_domain([&](const auto& dom) { annihilator_closed_forms(dom, rng, 200); });
}

TEST_CASE("generator set literals") {
    const auto g = parse_generator_set(RZ, "(4,1/7);(6,0)");
    REQUIRE(g.size() == 2);
    CHECK(g[0] == z("4", "1/7"));
    try {
        parse_generator_set(RZ, "(4,1/7);(1/2,0)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
    CHECK_THROWS_AS(parse_generator_set(RZ, "(4 1/7)"), ParseError);
}
