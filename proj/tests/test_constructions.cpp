#include <gtest/gtest.h>

#include "nakamura.hpp"
#include "oracles.hpp"

using namespace nakamura;

namespace {

int type_of(const FiniteGame& g) { return classify(g).signature.type_index(); }

/// Random pair of nonempty games on 1..4 players, with a pairing that keeps
/// the product universe exactly the union of both images.
struct Pair
{
    FiniteGame g1, g2;
    Pairing pr;
};

Pair random_pair(std::mt19937_64& rng, int i)
{
    auto pick = [&](std::size_t n) {
        for (;;) {
            FiniteGame g = (rng() % 2) ? oracle::random_game(n, rng, 0.4) : oracle::random_monotone(n, rng);
            if (!g.empty()) return g;
        }
    };
    if (i % 2 == 0) {
        const std::size_t n = 1 + rng() % 4;
        return {pick(n), pick(n), Pairing::even_odd()};
    }
    const std::size_t n1 = 1 + rng() % 4;
    const std::size_t n2 = 1 + rng() % 4;
    return {pick(n1), pick(n2), Pairing::shift(n1)};
}

} // namespace

TEST(Catalog, ExamplesClassifyAsStated)
{
    const FiniteGame p3 = partition_type3({2, 1, 1});
    EXPECT_EQ(type_of(p3), 3);
    EXPECT_EQ(nakamura_number(p3).value, 3U);
    EXPECT_EQ(type_of(type11_k2()), 11);
    EXPECT_EQ(nakamura_number(type11_k2()).value, 2U);
    EXPECT_EQ(type_of(example_type9()), 9);
    EXPECT_EQ(nakamura_number(example_type9()).value, 2U);
    EXPECT_EQ(type_of(majority(5)), 1);
    EXPECT_EQ(type_of(veto_free_rule(4)), 3);
    EXPECT_EQ(nakamura_number(veto_free_rule(4)).value, 4U);
}

TEST(Catalog, PartitionGamesHaveNakamuraNumberK)
{
    for (std::size_t k = 3; k <= 7; ++k) {
        std::vector<std::size_t> sizes(k, 1);
        sizes[0] = 2;
        const FiniteGame g3 = partition_type3(sizes);
        EXPECT_EQ(type_of(g3), 3);
        EXPECT_EQ(nakamura_number(g3).value, k);
        const FiniteGame g11 = partition_type11(std::vector<std::size_t>(k, 1));
        EXPECT_EQ(type_of(g11), 11);
        EXPECT_EQ(nakamura_number(g11).value, k);
    }
}

TEST(Catalog, SingletonBlocksAreStrongOnlyForThree)
{
    EXPECT_THROW(partition_type3({1, 1, 1}), Error);
    EXPECT_EQ(type_of(partition_type3({1, 1, 1}, false)), 1);
    EXPECT_EQ(type_of(partition_type3({1, 1, 1, 1})), 3);
    EXPECT_THROW(partition_type3({2, 1}), Error);
    EXPECT_THROW(partition_type11({1, 1}), Error);
    EXPECT_THROW(partition_type3({2, 0, 1}), Error);
}

TEST(Catalog, ParameterValidation)
{
    EXPECT_THROW(majority(4), Error);
    EXPECT_THROW(dictator(3, 3), BoundError);
    EXPECT_THROW(unanimity({5}, 3), BoundError);
    EXPECT_THROW(build("nonsense", {}), Error);
    EXPECT_THROW(build("majority", {}), Error);
    BuildParams p;
    p.n = 3;
    EXPECT_TRUE(std::holds_alternative<FiniteGame>(build("majority", p)));
    EXPECT_TRUE(std::holds_alternative<PrefixGame>(build("appendixA", {})));
    for (const auto& name : catalog_names()) EXPECT_FALSE(name.empty());
}

TEST(Pairing, DisjointImageExamples)
{
    const Coalition s1 = Coalition::of({0, 2, 3}, 5);
    const Coalition s2 = Coalition::of({1, 2, 4}, 5);
    EXPECT_EQ(disjoint_image(s1, s2, Pairing::even_odd()).members(), (std::vector<Player>{0, 3, 4, 5, 6, 9}));
    EXPECT_EQ(disjoint_image(s1, s2, Pairing::shift(4)).members(), (std::vector<Player>{0, 2, 3, 5, 6, 8}));
    EXPECT_TRUE(disjoint_image(Coalition::empty(3), Coalition::empty(3), Pairing::even_odd()).empty());
    EXPECT_THROW(disjoint_image(Coalition::of({4}, 5), s2, Pairing::shift(4)), PairingError);
}

TEST(Pairing, ValidationCatchesOverlap)
{
    EXPECT_NO_THROW(Pairing::even_odd().validate(40));
    EXPECT_NO_THROW(Pairing::shift(5).validate(40));
    const Pairing bad([](std::size_t i) { return i; }, std::nullopt, [](std::size_t i) { return i + 1; }, "bad");
    EXPECT_THROW(bad.validate(6), PairingError);
}

TEST(Pairing, EveryCoalitionDecomposesUniquely)
{
    for (std::size_t u = 1; u <= 12; ++u) {
        for (const Pairing& pr : {Pairing::even_odd(), Pairing::shift(u / 2)}) {
            std::size_t n1 = 0, n2 = 0;
            while (n1 < u && pr.in_T(n1) && pr.f1(n1) < u) ++n1;
            while (pr.f2(n2) < u) ++n2;
            for (std::uint64_t s = 0; s <= Coalition::full_mask(u); ++s) {
                const auto [a, b] = decompose(Coalition(s, u), pr, n1, n2);
                ASSERT_EQ(disjoint_image(a, b, pr, u).mask(), s);
            }
            // And every pair recomposes to a coalition that decomposes back.
            if (u > 8) continue;
            for (std::uint64_t a = 0; a <= Coalition::full_mask(n1); ++a)
                for (std::uint64_t b = 0; b <= Coalition::full_mask(n2); ++b) {
                    const Coalition s = disjoint_image(Coalition(a, n1), Coalition(b, n2), pr, u);
                    const auto [a2, b2] = decompose(s, pr, n1, n2);
                    ASSERT_EQ(a2.mask(), a);
                    ASSERT_EQ(b2.mask(), b);
                }
        }
    }
}

TEST(Product, Examples)
{
    const FiniteGame mm = product(majority(3), majority(3), Pairing::even_odd());
    EXPECT_EQ(mm.universe(), 6U);
    EXPECT_EQ(nakamura_number(mm).value, 3U);

    const FiniteGame pm = product(partition_type3({2, 1, 1, 1}), majority(3), Pairing::shift(5));
    EXPECT_EQ(nakamura_number(pm).value, 4U);
    EXPECT_EQ(type_of(pm), 3);

    // A nonproper stand-in for the second factor: every nonempty coalition wins.
    const FiniteGame nonproper = FiniteGame::from_coalitions(2, {{0}, {1}, {0, 1}});
    EXPECT_FALSE(classify(nonproper).signature.proper);
    const FiniteGame tn = product(type11_k2(), nonproper, Pairing::shift(3));
    EXPECT_EQ(nakamura_number(tn).value, 2U);
    EXPECT_EQ(type_of(tn), 11);
}

TEST(Product, CarrierMustFitTheDomain)
{
    // dictator(2) on 3 players has carrier {2}, outside T = {0,1}.
    EXPECT_THROW(product(dictator(2, 3), majority(3), Pairing::shift(2)), PairingError);
    // Carrier {0} fits inside T = {0,1}: player 2 is a dummy and is dropped.
    const FiniteGame g = product(dictator(0, 3), majority(3), Pairing::shift(2));
    EXPECT_EQ(g.universe(), 5U);
    EXPECT_TRUE(g.wins(0b01101));
    EXPECT_FALSE(g.wins(0b01110));
}

TEST(Product, MembershipMatchesForwardConstruction)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        const FiniteGame p = product(g1, g2, pr);
        const auto forward = oracle::product_family(g1, g2, pr);
        ASSERT_EQ(std::set<std::uint64_t>(p.winning_masks().begin(), p.winning_masks().end()), forward);
    }
}

TEST(Product, MonotonicIffBothFactorsAre)
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        const bool both = classify(g1).signature.monotonic && classify(g2).signature.monotonic;
        ASSERT_EQ(classify(product(g1, g2, pr)).signature.monotonic, both);
    }
}

TEST(Product, ProperIfEitherFactorIs)
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        if (classify(g1).signature.proper || classify(g2).signature.proper) {
            ASSERT_TRUE(classify(product(g1, g2, pr)).signature.proper);
        }
    }
}

TEST(Product, ComplementOfDisjointImage)
{
    for (std::size_t n1 = 1; n1 <= 4; ++n1)
        for (std::size_t n2 = 1; n2 <= 4; ++n2) {
            const Pairing pr = Pairing::shift(n1);
            const std::size_t u = n1 + n2;
            for (std::uint64_t a = 0; a <= Coalition::full_mask(n1); ++a)
                for (std::uint64_t b = 0; b <= Coalition::full_mask(n2); ++b) {
                    const Coalition s1(a, n1), s2(b, n2);
                    ASSERT_EQ(disjoint_image(s1, s2, pr, u).complement(),
                              disjoint_image(s1.complement(), s2.complement(), pr, u));
                }
        }
}

TEST(Product, NonstrongUnderAnyOfTheHypotheses)
{
    std::mt19937_64 rng(34);
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        const auto s1 = classify(g1).signature, s2 = classify(g2).signature;
        const bool losing1 = g1.winning_count() < (std::size_t{1} << g1.universe());
        const bool losing2 = g2.winning_count() < (std::size_t{1} << g2.universe());
        if (!s1.strong || !s2.strong || (losing1 && losing2)) {
            ++checked;
            ASSERT_FALSE(classify(product(g1, g2, pr)).signature.strong);
        }
    }
    EXPECT_GT(checked, 150U);
}

TEST(Product, NakamuraNumberIsTheMaximum)
{
    std::mt19937_64 rng(35);
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        if (is_weak(g1) || is_weak(g2)) continue;
        ++checked;
        const FiniteGame p = product(g1, g2, pr);
        ASSERT_FALSE(is_weak(p));
        ASSERT_EQ(nakamura_number(p).value, std::max(nakamura_number(g1).value, nakamura_number(g2).value));
    }
    EXPECT_GT(checked, 20U);
}

TEST(Product, CatalogPairs)
{
    const FiniteGame maj = majority(3);
    for (std::size_t k = 3; k <= 5; ++k) {
        std::vector<std::size_t> sizes(k, 1);
        sizes[0] = 2;
        const FiniteGame left = partition_type3(sizes);
        const FiniteGame p = product(left, maj, Pairing::shift(left.universe()));
        EXPECT_EQ(type_of(p), 3);
        EXPECT_EQ(nakamura_number(p).value, k);
        const FiniteGame l11 = partition_type11(std::vector<std::size_t>(k, 1));
        const FiniteGame q = product(l11, maj, Pairing::shift(k));
        EXPECT_EQ(type_of(q), 11);
        EXPECT_EQ(nakamura_number(q).value, k);
    }
}

TEST(Product, WithPrefixGameAgreesWithFiniteProduct)
{
    // Finite second factor seen as a prefix game: same winners.
    std::mt19937_64 rng(36);
    for (int i = 0; i < 40; ++i) {
        const auto [g1, g2, pr] = random_pair(rng, i);
        const FiniteGame fp = product(g1, g2, pr);
        const PrefixGame pp = product(g1, finite_as_prefix(g2), pr);
        for (std::uint64_t s = 0; s <= Coalition::full_mask(fp.universe()); ++s) {
            const Verdict v = eval_stream(pp, MembershipStream::finite(BitString::from_mask(s, fp.universe())));
            ASSERT_TRUE(v.determined());
            ASSERT_EQ(v.winning(), fp.wins(s));
        }
    }
}

TEST(Product, WithDiagonalGame)
{
    const PrefixGame a = appendixA_game(IndexOracle::alternating());
    const PrefixGame p = product(partition_type3({2, 1, 1}), a, Pairing::shift(4));
    // Left part {0,1,2} (two of three blocks) wins; right part "11" wins.
    EXPECT_TRUE(eval_stream(p, MembershipStream::eventually_periodic(BitString::parse("1110"), BitString::parse("1"))).winning());
    // Left part {0} includes no block.
    EXPECT_TRUE(eval_stream(p, MembershipStream::eventually_periodic(BitString::parse("1000"), BitString::parse("1"))).losing());
    // Right part "00" loses regardless of the left part.
    EXPECT_TRUE(eval_stream(p, MembershipStream::eventually_periodic(BitString::parse("111100"), BitString::parse("0"))).losing());
}
