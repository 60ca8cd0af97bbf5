#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "nakamura.hpp"

using namespace nakamura;

namespace {

constexpr std::size_t kLen = 12;

BitString bs(const char* s) { return BitString::parse(s); }

std::vector<IndexOracle> oracles()
{
    return {IndexOracle::alternating(), IndexOracle::seeded(1), IndexOracle::seeded(7), IndexOracle::seeded(2024)};
}

std::vector<BitString> all_strings(std::size_t len)
{
    std::vector<BitString> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) out.push_back(BitString::from_mask(m, len));
    return out;
}

/// Some initial segment of `s` (length <= t.max_len) lies in the set.
bool has_segment_in(const AppendixATables& t, const MembershipStream& s, bool winning)
{
    for (std::size_t k = 0; k <= t.max_len; ++k) {
        const BitString seg = s.initial_segment(k);
        if (winning ? t.in_T1(seg) : t.in_T0(seg)) return true;
    }
    return false;
}

bool has_segment_in(const AppendixATables& t, const BitString& b, bool winning)
{
    for (std::size_t k = 0; k <= b.size(); ++k)
        if (winning ? t.in_T1(b.prefix(k)) : t.in_T0(b.prefix(k))) return true;
    return false;
}

/// b properly contains a (|a| <= |b|), compared on the first |a| positions.
bool properly_contains(const BitString& b, const BitString& a)
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) return false;
        if (!a[i] && b[i]) strict = true;
    }
    return strict;
}

std::vector<MembershipStream> stream_family()
{
    auto s = eventually_periodic_streams(4, 4);
    auto p = padded_streams(8);
    s.insert(s.end(), p.begin(), p.end());
    return s;
}

} // namespace

TEST(DiagonalGame, TablesForOneEntry)
{
    const auto o = IndexOracle::from_entries({{2, true}});
    const auto t = appendixA_tables(o, 3);
    ASSERT_EQ(t.l, std::vector<std::size_t>{3});
    ASSERT_EQ(t.F.size(), 1U);
    EXPECT_EQ(t.F[0], (std::vector<BitString>{bs("001"), bs("011"), bs("101"), bs("111")}));
    EXPECT_TRUE(t.in_T1(bs("101")));
    EXPECT_TRUE(t.in_T0(bs("010")));
    EXPECT_EQ(t.T1, (std::vector<BitString>{bs("11"), bs("101")}));
    EXPECT_EQ(t.T0, (std::vector<BitString>{bs("00"), bs("010")}));
    EXPECT_TRUE(t.truncated);
}

TEST(DiagonalGame, ShortStrings)
{
    for (const auto& o : oracles()) {
        EXPECT_EQ(appendixA_classify(o, bs("00")).determination, Determination::LosingDetermining);
        EXPECT_EQ(appendixA_classify(o, bs("11")).determination, Determination::WinningDetermining);
        for (const char* s : {"", "0", "1", "10", "01", "000", "111"})
            EXPECT_EQ(appendixA_classify(o, bs(s)).determination, Determination::Nondetermining) << s;
    }
}

TEST(DiagonalGame, OracleValidation)
{
    EXPECT_THROW(IndexOracle::from_entries({{2, true}, {2, false}}), Error);
    EXPECT_THROW(IndexOracle::from_entries({{1, true}}), Error);
    for (const auto& o : oracles()) {
        std::set<std::size_t> seen;
        for (const auto& e : o.entries()) EXPECT_TRUE(seen.insert(e.index).second);
        EXPECT_GE(o[0].index, 2U);
        EXPECT_TRUE(o.rich());
        EXPECT_TRUE(o.complete_through(kLen));
    }
}

TEST(DiagonalGame, OraclesKeepBothValuesAtLargeIndices)
{
    for (const auto& o : oracles()) {
        for (std::size_t bound : {8U, 16U, 32U}) {
            bool seen[2] = {false, false};
            for (const auto& e : o.entries())
                if (e.index > bound) seen[e.value ? 1 : 0] = true;
            EXPECT_TRUE(seen[0] && seen[1]) << o.name() << " above " << bound;
        }
    }
}

TEST(DiagonalGame, LengthsFollowTheRecurrence)
{
    for (const auto& o : oracles()) {
        ASSERT_GT(o.size(), 0U);
        EXPECT_EQ(o.length(0), o[0].index + 1);
        for (std::size_t s = 1; s < o.size(); ++s) {
            EXPECT_EQ(o.length(s), std::max(o.length(s - 1), o[s].index + 1));
            EXPECT_GT(o.length(s), o[s].index);
        }
    }
}

TEST(DiagonalGame, FStringsSatisfyTheirDefinition)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        EXPECT_FALSE(t.truncated);
        for (std::size_t s = 0; s < t.F.size(); ++s) {
            std::set<BitString> fs(t.F[s].begin(), t.F[s].end());
            for (const BitString& a : all_strings(t.l[s])) {
                bool member = a[o[s].index] == o[s].value;
                for (std::size_t u = 0; u < s; ++u) member = member && a[o[u].index] != o[u].value;
                EXPECT_EQ(fs.count(a) == 1, member) << o.name() << " s=" << s << " " << a.to_string();
                EXPECT_EQ(o.in_F(a, s), member);
            }
        }
    }
}

TEST(DiagonalGame, TablesAreComplementDual)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        for (const BitString& a : t.T0) {
            EXPECT_FALSE(t.in_T1(a));
            EXPECT_TRUE(t.in_T1(string_complement(a)));
        }
        for (const BitString& a : t.T1) EXPECT_TRUE(t.in_T0(string_complement(a)));
        EXPECT_EQ(t.T0.size(), t.T1.size());
    }
}

TEST(DiagonalGame, DecisionProcedureMatchesTables)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        for (std::size_t len = 0; len <= kLen; ++len) {
            for (const BitString& a : all_strings(len)) {
                const auto d = appendixA_classify(o, a);
                EXPECT_FALSE(d.truncated);
                const Determination want = t.in_T1(a)   ? Determination::WinningDetermining
                                           : t.in_T0(a) ? Determination::LosingDetermining
                                                        : Determination::Nondetermining;
                ASSERT_EQ(d.determination, want) << o.name() << " " << a.to_string();
            }
        }
    }
}

TEST(DiagonalGame, TruncatedOracleIsReported)
{
    const auto o = IndexOracle::from_entries({{2, true}});
    EXPECT_FALSE(appendixA_classify(o, bs("101")).truncated);
    const auto d = appendixA_classify(o, bs("1000"));
    EXPECT_TRUE(d.truncated);
    EXPECT_EQ(d.determination, Determination::Nondetermining);
}

TEST(DiagonalGame, FStringsArePairwiseIncompatible)
{
    for (const auto& o : oracles()) {
        const auto f = appendixA_tables(o, 11).all_F();
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                ASSERT_TRUE(incompatible(f[i], f[j])) << o.name() << " " << f[i].to_string() << " " << f[j].to_string();
    }
}

TEST(DiagonalGame, DeterminingStringsArePairwiseIncompatible)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        std::vector<BitString> all = t.T0;
        all.insert(all.end(), t.T1.begin(), t.T1.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                ASSERT_TRUE(incompatible(all[i], all[j])) << o.name() << " " << all[i].to_string() << " " << all[j].to_string();
    }
}

TEST(DiagonalGame, HittingIndexGivesEarlierFString)
{
    const BitString ten = bs("10");
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        for (std::size_t s = 0; s < t.l.size(); ++s) {
            for (const BitString& a : all_strings(t.l[s])) {
                if (!is_initial_segment(ten, a) || a[o[s].index] != o[s].value) continue;
                bool found = false;
                for (std::size_t u = 0; u <= s && !found; ++u)
                    for (const BitString& b : t.F[u])
                        if (is_initial_segment(ten, b) && is_initial_segment(b, a)) found = true;
                EXPECT_TRUE(found) << o.name() << " s=" << s << " " << a.to_string();
            }
        }
    }
}

TEST(DiagonalGame, StreamsNeverHitBothSides)
{
    const auto streams = stream_family();
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        for (const auto& s : streams)
            ASSERT_FALSE(has_segment_in(t, s, true) && has_segment_in(t, s, false)) << o.name() << " " << s.to_string();
    }
}

TEST(DiagonalGame, StreamsHittingAListedIndexAreDetermined)
{
    const auto streams = stream_family();
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        std::size_t checked = 0;
        for (const auto& s : streams) {
            const bool b0 = s.bit(0);
            const bool b1 = s.bit(1);
            bool hypothesis = b0 == b1;
            if (!hypothesis) {
                // S' is S if S extends 10, else its complement.
                for (std::size_t u = 0; u < t.l.size() && !hypothesis; ++u)
                    hypothesis = (s.bit(o[u].index) != !b0) == o[u].value;
            }
            if (!hypothesis) continue;
            ++checked;
            EXPECT_TRUE(has_segment_in(t, s, true) || has_segment_in(t, s, false)) << o.name() << " " << s.to_string();
        }
        EXPECT_GT(checked, streams.size() / 2);
    }
}

TEST(DiagonalGame, ProperContainmentPreservesWinning)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        for (const BitString& a : t.T1) {
            if (a.size() > 10) continue;
            for (const BitString& b : all_strings(a.size()))
                if (properly_contains(b, a)) { ASSERT_TRUE(has_segment_in(t, b, true)) << a.to_string() << " " << b.to_string(); }
        }
        for (const BitString& a : t.T0) {
            if (a.size() > 10) continue;
            for (const BitString& b : all_strings(a.size()))
                if (properly_contains(a, b)) { ASSERT_TRUE(has_segment_in(t, b, false)) << a.to_string() << " " << b.to_string(); }
        }
    }
}

TEST(DiagonalGame, MonotonicProperStrongOnStreams)
{
    const auto streams = stream_family();
    for (const auto& o : oracles()) {
        const PrefixGame g = appendixA_game(o, kLen);
        const auto ev = classify_bounded(g, streams, kLen, 3);
        EXPECT_FALSE(ev.nonmonotonic) << o.name();
        EXPECT_FALSE(ev.nonproper) << o.name();
        EXPECT_FALSE(ev.nonstrong) << o.name();
        EXPECT_GT(ev.determined, ev.streams / 2);
        for (const auto& s : streams) {
            const Verdict v = eval_stream(g, s);
            const Verdict vc = eval_stream(g, s.complement());
            if (v.determined() && vc.determined()) { EXPECT_NE(v.winning(), vc.winning()) << s.to_string(); }
        }
    }
}

TEST(DiagonalGame, NonweakWithThreeCoalitions)
{
    for (const auto& o : oracles()) {
        const PrefixGame g = appendixA_game(o, kLen);
        EXPECT_FALSE(nakamura_witness_bounded(g, kLen, 2)) << o.name();
        const auto w = nakamura_witness_bounded(g, kLen, 3);
        ASSERT_TRUE(w) << o.name();
        ASSERT_EQ(w->coalitions.size(), 3U);
        std::uint64_t meet = ~std::uint64_t{0};
        for (std::size_t i = 0; i < 3; ++i) {
            meet &= w->coalitions[i].mask();
            EXPECT_EQ(g.classify(w->strings[i]), Determination::WinningDetermining);
        }
        EXPECT_EQ(meet, 0U);
    }
}

TEST(DiagonalGame, DiagonalAvoiderHasNoFiniteCarrier)
{
    for (const auto& o : oracles()) {
        const auto t = appendixA_tables(o, kLen);
        // A extends 10 and disagrees with every listed value.
        std::vector<bool> bits(kLen, false);
        bits[0] = true;
        for (const auto& e : o.entries())
            if (e.index < kLen) bits[e.index] = !e.value;
        const BitString a(bits);

        std::size_t both = 0;
        for (std::size_t l = 2; l + 1 < kLen; ++l) {
            const BitString seg = a.prefix(l);
            EXPECT_FALSE(has_segment_in(t, seg, true) || has_segment_in(t, seg, false)) << o.name() << " l=" << l;
            bool win = false, lose = false;
            for (const BitString& x : t.T1) win = win || (x.size() > l && is_initial_segment(seg, x));
            for (const BitString& x : t.T0) lose = lose || (x.size() > l && is_initial_segment(seg, x));
            if (win && lose) ++both;
        }
        EXPECT_GE(both, 3U) << o.name();

        const auto lengths = noncarrier_lengths(appendixA_game(o, kLen), kLen);
        EXPECT_GE(lengths.size(), 3U) << o.name();
    }
}
