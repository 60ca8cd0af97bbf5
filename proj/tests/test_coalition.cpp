#include <gtest/gtest.h>

#include <vector>

#include "nakamura/appendix_a.hpp"
#include "nakamura/coalition.hpp"

using namespace nakamura;

namespace {

BitString bs(const char* s) { return BitString::parse(s); }

std::vector<BitString> all_strings(std::size_t max_len)
{
    std::vector<BitString> out;
    for (std::size_t len = 0; len <= max_len; ++len)
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) out.push_back(BitString::from_mask(m, len));
    return out;
}

} // namespace

TEST(BitString, ComplementExamples)
{
    EXPECT_EQ(string_complement(bs("0110100100")), bs("1001011011"));
    EXPECT_EQ(string_complement(bs("")), bs(""));
    EXPECT_EQ(string_complement(bs("11")), bs("00"));
}

TEST(BitString, ComplementIsAnInvolution)
{
    for (const auto& a : all_strings(16)) {
        const BitString c = string_complement(a);
        ASSERT_EQ(c.size(), a.size());
        ASSERT_EQ(string_complement(c), a);
    }
}

TEST(BitString, ParseRejectsOtherCharacters)
{
    EXPECT_THROW(BitString::parse("10x"), Error);
    EXPECT_EQ(bs("1011").to_string(), "1011");
}

TEST(BitString, InitialSegmentExamples)
{
    EXPECT_TRUE(is_initial_segment(bs("10"), bs("100")));
    EXPECT_FALSE(is_initial_segment(bs("10"), bs("11")));
    EXPECT_TRUE(is_initial_segment(bs(""), bs("0101")));
    EXPECT_TRUE(is_initial_segment(bs(""), bs("")));
    EXPECT_FALSE(is_initial_segment(bs("100"), bs("10")));
}

TEST(BitString, InitialSegmentIsAPartialOrder)
{
    const auto strings = all_strings(6);
    for (const auto& a : strings) {
        ASSERT_TRUE(is_initial_segment(a, a));
        for (const auto& b : strings) {
            const bool ab = is_initial_segment(a, b);
            if (ab && is_initial_segment(b, a)) { ASSERT_EQ(a, b); }
            if (!ab) continue;
            for (const auto& c : strings)
                if (is_initial_segment(b, c)) { ASSERT_TRUE(is_initial_segment(a, c)); }
        }
    }
}

TEST(BitString, IncompatibleExamples)
{
    EXPECT_TRUE(incompatible(bs("10"), bs("11")));
    EXPECT_FALSE(incompatible(bs("10"), bs("100")));
    EXPECT_FALSE(incompatible(bs(""), bs("1")));
}

TEST(BitString, IncompatibleIsSymmetricAndIrreflexive)
{
    const auto strings = all_strings(5);
    for (const auto& a : strings) {
        ASSERT_FALSE(incompatible(a, a));
        for (const auto& b : strings) ASSERT_EQ(incompatible(a, b), incompatible(b, a));
    }
}

TEST(BitString, DistinctStringsOfTheBaseSetAreIncompatible)
{
    for (const auto& oracle : {IndexOracle::alternating(), IndexOracle::seeded(7)}) {
        const auto f = appendixA_tables(oracle, 12).all_F();
        ASSERT_FALSE(f.empty());
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) ASSERT_TRUE(incompatible(f[i], f[j])) << f[i].to_string() << " " << f[j].to_string();
    }
}

TEST(BitString, ShortlexOrder)
{
    EXPECT_LT(bs("1"), bs("00"));
    EXPECT_LT(bs("01"), bs("10"));
    EXPECT_FALSE(bs("10") < bs("10"));
}

TEST(Coalition, OnesCoalitionExamples)
{
    EXPECT_EQ(ones_coalition(bs("0110"), 6).members(), (std::vector<Player>{1, 2}));
    EXPECT_TRUE(ones_coalition(bs("0000"), 4).empty());
    EXPECT_EQ(ones_coalition(bs("11"), 3).members(), (std::vector<Player>{0, 1}));
    EXPECT_EQ(ones_coalition(bs("11"), 3).universe(), 3U);
    EXPECT_THROW(ones_coalition(bs("0110"), 3), BoundError);
}

TEST(Coalition, UniverseBound)
{
    EXPECT_NO_THROW(Coalition::grand(63));
    EXPECT_THROW(Coalition::grand(64), BoundError);
    EXPECT_THROW(Coalition::of({3}, 3), BoundError);
    EXPECT_THROW(Coalition(0b1000, 3), BoundError);
}

TEST(Coalition, SetOperations)
{
    const Coalition a = Coalition::of({0, 2, 3}, 5);
    const Coalition b = Coalition::of({2, 4}, 5);
    EXPECT_EQ((a & b).members(), (std::vector<Player>{2}));
    EXPECT_EQ((a | b).members(), (std::vector<Player>{0, 2, 3, 4}));
    EXPECT_EQ(a.complement().members(), (std::vector<Player>{1, 4}));
    EXPECT_EQ(a.complement().complement(), a);
    EXPECT_TRUE(Coalition::of({2}, 5).subset_of(b));
    EXPECT_FALSE(a.subset_of(b));
    EXPECT_EQ(a.size(), 3U);
}

TEST(Coalition, BinaryLiteral)
{
    EXPECT_EQ(Coalition::of({0, 2, 3}, 4).to_binary_literal(), "0b1101");
    EXPECT_EQ(Coalition::empty(4).to_binary_literal(), "0b0");
}
