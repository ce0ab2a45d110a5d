#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <set>

#include "trivext/criteria.hpp"
#include "trivext/oracle.hpp"

using namespace testing;

TEST_CASE("is_divisorial examples") {
    CHECK(is_divisorial(Z, id(Z, "Z: 6"), Z.unit_ideal()).divisorial);

    const auto r = is_divisorial(NS345, id(NS345, "NS: {3,4}"), NS345.unit_ideal());
    CHECK_FALSE(r.divisorial);
    CHECK(r.closure == id(NS345, "NS: {3,4,5}"));
    CHECK(format_gap(NS345, r.gap) == "{5}");

    CHECK(is_divisorial(NS23, id(NS23, "NS: {2,3}"), NS23.unit_ideal()).divisorial);
    CHECK_THROWS_AS(is_divisorial(Z, Z.zero_ideal(), Z.unit_ideal()), Error);
}

TEST_CASE("DAC examples") {
    QuotientModule<IntegerDomain> E(Z, Z.unit_ideal());
    const auto d1 = dac_check_ideal(E, id(Z, "Z: 4"));
    CHECK(d1.holds);
    CHECK(d1.routes_agree);
    CHECK(d1.lhs == id(Z, "Z: 4"));
    CHECK(d1.unit_colon);

    const auto zero = dac_check_ideal(E, Z.zero_ideal());
    CHECK(zero.holds);

    QuotientModule<SemigroupDomain> ES(NS345, NS345.unit_ideal());
    const auto d2 = dac_check_ideal(ES, id(NS345, "NS: {3,4}"));
    CHECK_FALSE(d2.holds);
    CHECK(d2.routes_agree);
    CHECK(d2.lhs == id(NS345, "NS: {3,4,5}"));

    const auto s1 = dac_check_submodule(E, id(Z, "Z: 1/6"));
    CHECK(s1.condition == DacCondition::DAC2);
    CHECK(s1.holds);
    CHECK(s1.lhs == id(Z, "Z: 1/6"));

    const auto s2 = dac_check_submodule(ES, id(NS345, "NS: {-4,-3}"));
    CHECK_FALSE(s2.holds);
    CHECK(s2.routes_agree);
    CHECK(s2.lhs == id(NS345, "NS: {-4,-3,-2}"));

    CHECK_THROWS_AS(dac_check_submodule(E, id(Z, "Z: 2")), Error);
}

TEST_CASE("double annihilators in R") {
    TrivialExtension<IntegerDomain> RZ(Z, Z.unit_ideal());
    CHECK(double_ann_check_R(RZ, RZ.extension(id(Z, "Z: 4"))).holds);
    CHECK(double_ann_check_R(RZ, RZ.zero_part(id(Z, "Z: 1/6"))).holds);
    CHECK(double_ann_check_R(RZ, FgIdealNormalForm<IntegerDomain>(ZeroIdealMarker{})).holds);
    CHECK(double_ann_check_R(RZ, RZ.whole_ring()).holds);

    TrivialExtension<SemigroupDomain> RS(NS345, NS345.unit_ideal());
    const auto r = double_ann_check_R(RS, RS.extension(id(NS345, "NS: {3,4}")));
    CHECK_FALSE(r.holds);
    CHECK(r.lhs == RS.extension(id(NS345, "NS: {3,4,5}")));
}

TEST_CASE("coherence certificates") {
    const auto z = coherence_certificate(Z, Z.unit_ideal(), 100);
    CHECK(z.passed);
    CHECK(z.noetherian_assumption);
    CHECK(z.annihilator_generator_counts.size() == 100);
    for (auto c : z.annihilator_generator_counts)
        CHECK(c == 1);
    CHECK(z.seed == kDefaultSeed);

    const auto t = coherence_certificate(Qt, id(Qt, "Q[t]: t"), 100);
    CHECK(t.passed);
    CHECK(t.intersection_samples == 100);

    CHECK(coherence_certificate(OK5, id(OK5, "OK: gens(2,1+w)"), 100).passed);
    CHECK(coherence_certificate(NS345, id(NS345, "NS: {3,4}"), 100).passed);

    try {
        coherence_certificate(FieldBranch{1});
        FAIL("expected FieldDomainRejected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldDomainRejected);
    }
    CHECK_THROWS_AS(coherence_certificate(Z, Z.zero_ideal(), 10), Error);
}

TEST_CASE("symmetry") {
    CHECK(is_symmetric(NumericalSemigroup({2, 3})));
    CHECK_FALSE(is_symmetric(NumericalSemigroup({3, 4, 5})));
    CHECK(is_symmetric(NumericalSemigroup({1})));
    CHECK(is_symmetric(NumericalSemigroup({3, 5})));
    CHECK_FALSE(is_symmetric(NumericalSemigroup({3, 5, 7})));
    // Definition: z in S iff F - z not in S, for every integer z.
    for (const auto& gens : std::vector<std::vector<std::int64_t>>{{4, 5, 6}, {5, 7}, {4, 6, 9}, {3, 7, 8}}) {
        NumericalSemigroup S(gens);
        bool sym = true;
        for (std::int64_t z = -5; z <= S.frobenius() + 5; ++z)
            sym = sym && (S.contains(z) != S.contains(S.frobenius() - z));
        CHECK(is_symmetric(S) == sym);
    }
}

TEST_CASE("verdict examples") {
    const auto bad = semiregular_verdict(NS345, NS345.unit_ideal());
    CHECK(bad.kind == VerdictKind::NotSemiRegular);
    CHECK(bad.witness == "{3,4}+S");
    CHECK(bad.witness_literal == "NS: {3,4}");
    CHECK(bad.closure == "{3,4,5}+S");
    CHECK(bad.gap == "{5}");

    const auto good = semiregular_verdict(NS23, NS23.unit_ideal(), VerdictBudget{.window = 4});
    CHECK(good.kind == VerdictKind::SemiRegular);
    CHECK(certificate_string(good.certificate) == "ExhaustiveMonomialCensus(window=4,ideals=2)");
    CHECK(good.note == "scope: monomial ideal class; semigroup is symmetric");

    const auto zd = semiregular_verdict(Z, Z.unit_ideal());
    CHECK(zd.kind == VerdictKind::SemiRegular);
    CHECK(certificate_string(zd.certificate) == "DedekindInvertibility(samples=200)");

    CHECK(semiregular_verdict(FieldBranch{1}).kind == VerdictKind::SemiRegular);
    CHECK(std::holds_alternative<FieldDimOne>(semiregular_verdict(FieldBranch{1}).certificate));
    CHECK(semiregular_verdict(FieldBranch{2}).kind == VerdictKind::NotSemiRegular);
    CHECK(semiregular_verdict(FieldBranch{5}).kind == VerdictKind::NotSemiRegular);
    CHECK_THROWS_AS(semiregular_verdict(FieldBranch{0}), Error);

    try {
        semiregular_verdict(Z, Z.zero_ideal());
        FAIL("expected ZeroIdealI");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroIdealI);
    }
    CHECK(std::string(verdict_name(VerdictKind::InconclusiveRestricted)) == "InconclusiveRestricted");
}

TEST_CASE("a truncated census is inconclusive, never a positive verdict") {
    const auto v = semiregular_verdict(NS23, NS23.unit_ideal(), VerdictBudget{.window = 0});
    CHECK(v.kind == VerdictKind::InconclusiveRestricted);
    CHECK(std::holds_alternative<std::monostate>(v.certificate));
    CHECK_FALSE(v.note.empty());

    NumericalSemigroup S({5, 7});
    SemigroupDomain dom(S);
    const auto capped = semiregular_verdict(dom, dom.unit_ideal(), VerdictBudget{.census_cap = 1});
    CHECK(capped.kind == VerdictKind::InconclusiveRestricted);
}

TEST_CASE("verdicts are deterministic for a seed") {
    for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{7}, kDefaultSeed}) {
        const auto a = semiregular_verdict(OK5, id(OK5, "OK: gens(2,1+w)"), VerdictBudget{.samples = 50, .seed = seed});
        const auto b = semiregular_verdict(OK5, id(OK5, "OK: gens(2,1+w)"), VerdictBudget{.samples = 50, .seed = seed});
        CHECK(a.kind == b.kind);
        CHECK(a.seed == seed);
        CHECK(a.note == b.note);
    }
}

namespace {

// Relative ideals S ∪ G, G ⊆ gaps, with min 0, found by filtering every subset of the gaps.
std::set<std::vector<std::int64_t>> brute_normalized_ideals(const NumericalSemigroup& S) {
    const auto gaps = S.gaps();
    std::set<std::vector<std::int64_t>> out;
    for (std::uint64_t mask = 0; mask < (1ull << gaps.size()); ++mask) {
        auto in = [&](std::int64_t z) {
            if (S.contains(z))
                return true;
            for (std::size_t k = 0; k < gaps.size(); ++k)
                if (((mask >> k) & 1) && gaps[k] == z)
                    return true;
            return false;
        };
        bool closed = true;
        for (std::int64_t z = 0; z <= S.conductor() && closed; ++z)
            for (std::int64_t s = 1; s <= S.conductor() && closed; ++s)
                if (in(z) && S.contains(s) && !in(z + s))
                    closed = false;
        if (!closed)
            continue;
        std::vector<std::int64_t> below;
        for (std::int64_t z = 0; z < S.conductor(); ++z)
            if (in(z))
                below.push_back(z);
        out.insert(below);
    }
    return out;
}

} // namespace

TEST_CASE("census enumerates exactly the normalized relative ideals") {
    for (const auto& gens : std::vector<std::vector<std::int64_t>>{{3, 4, 5}, {2, 3}, {3, 5, 7}, {4, 5, 6}, {4, 6, 9}}) {
        NumericalSemigroup S(gens);
        SemigroupDomain dom(S);
        const auto expected = brute_normalized_ideals(S);
        std::set<std::vector<std::int64_t>> seen;
        const auto stats = for_each_normalized_ideal(dom, S.frobenius(), 1u << 20, [&](const RelativeIdeal& J) {
            CHECK(J.min() == 0);
            CHECK(dom.is_relative_ideal(J));
            std::vector<std::int64_t> below;
            for (std::int64_t z = 0; z < S.conductor(); ++z)
                if (J.contains(z))
                    below.push_back(z);
            CHECK(seen.insert(below).second);
            return true;
        });
        CHECK(stats.complete);
        CHECK(seen == expected);
        CHECK(stats.visited == expected.size());
    }
}

TEST_CASE("census results") {
    const auto bad = divisoriality_census(NS345, NS345.unit_ideal(), 12, 1u << 20);
    CHECK(bad.complete);
    CHECK(bad.ideals == 4);
    CHECK(bad.non_divisorial == 2);
    REQUIRE(bad.first_witness);
    CHECK_FALSE(is_divisorial(NS345, *bad.first_witness, NS345.unit_ideal()).divisorial);
    CHECK(*bad.first_closure == divisorial_closure(NS345, *bad.first_witness, NS345.unit_ideal()));

    const auto good = divisoriality_census(NS23, NS23.unit_ideal(), 12, 1u << 20);
    CHECK(good.complete);
    CHECK(good.ideals == 2);
    CHECK(good.non_divisorial == 0);
    CHECK_FALSE(good.first_witness);
}

TEST_CASE("meta-census: symmetric iff every monomial ideal is divisorial") {
    const auto rows = meta_census(2, 9, 12);
    CHECK(rows.size() == 28);
    for (const auto& row : rows) {
        INFO("generators of size " << row.generators.size() << ", F = " << row.frobenius);
        CHECK(row.frobenius <= 12);
        CHECK(row.symmetric == (row.non_divisorial == 0));
    }
}

template <FractionalDomain D>
void witness_validity(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        const auto I = random_ideal(s, rng);
        const auto v = semiregular_verdict(dom, I, VerdictBudget{.window = 10});
        if (v.kind != VerdictKind::NotSemiRegular)
            continue;
        const auto J = parse_ideal(dom, v.witness_literal);
        const auto r = is_divisorial(dom, J, I);
        CHECK_FALSE(r.divisorial);
        CHECK(dom.pretty(r.closure) == v.closure);
        CHECK(format_gap(dom, r.gap) == v.gap);
    }
}

TEST_CASE("semigroup witnesses re-verify") {
    auto rng = rng_for("witnesses");
    witness_validity(NS345, rng, 30);
    NumericalSemigroup S({4, 5, 6});
    witness_validity(SemigroupDomain(S), rng, 30);
}

template <FractionalDomain D>
void dac_equivalence(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        TrivialExtension<D> R(dom, random_ideal(s, rng));
        const auto nf = uniform(rng, 0, 9) == 0 ? FgIdealNormalForm<D>(ZeroIdealMarker{}) : random_normal_form(R, s, rng);
        const auto lhs = double_ann_check_R(R, nf);
        const auto rhs = dac_check_for(R, nf);
        CHECK(lhs.holds == rhs.holds);
        // Both routes reduce to (I : (I : J)) once (I : I) = A.
        if (rhs.unit_colon)
            CHECK(rhs.routes_agree);
    }
}

TEST_CASE("double annihilators in R agree with the DAC statements") {
    auto rng = rng_for("dac equivalence");
    for_each_domain([&](const auto& dom) { dac_equivalence(dom, rng, 200); });
    NumericalSemigroup S({4, 5, 6});
    dac_equivalence(SemigroupDomain(S), rng, 200);
}

template <FractionalDomain D>
void claim_routes(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    int unit_colon = 0;
    for (int i = 0; i < n; ++i) {
        const auto I = random_ideal(s, rng);
        QuotientModule<D> E(dom, I);
        if constexpr (D::kind != DomainKind::NumericalSemigroup)
            CHECK(dom.colon(I, I) == dom.unit_ideal());
        if (!(dom.colon(I, I) == dom.unit_ideal()))
            continue;
        ++unit_colon;
        const auto K = random_integral_ideal(s, rng);
        const auto d1 = dac_check_ideal(E, K);
        CHECK(d1.routes_agree);
        CHECK(d1.holds == is_divisorial(dom, K, I).divisorial);
        const auto J = dom.sum(I, random_ideal(s, rng));
        const auto d2 = dac_check_submodule(E, J);
        CHECK(d2.routes_agree);
        CHECK(d2.holds == is_divisorial(dom, J, I).divisorial);
    }
    CHECK(unit_colon > 0);
}

TEST_CASE("annihilator route and colon route give the same double dual") {
    auto rng = rng_for("claim routes");
    for_each_domain([&](const auto& dom) { claim_routes(dom, rng, 200); });
}

template <FractionalDomain D>
void dedekind_soundness(const D& dom, Rng& rng, int n) {
    Sampler<D> s(dom);
    for (int i = 0; i < n; ++i) {
        const auto I = random_ideal(s, rng), J = random_ideal(s, rng);
        CHECK(dom.colon(I, J) == dom.product(I, dom.inverse(J)));
        CHECK(is_divisorial(dom, J, I).divisorial);
    }
}

TEST_CASE("Dedekind kinds: every ideal is divisorial relative to every I") {
    auto rng = rng_for("dedekind");
    for_each_dedekind([&](const auto& dom) { dedekind_soundness(dom, rng, 200); });
}
