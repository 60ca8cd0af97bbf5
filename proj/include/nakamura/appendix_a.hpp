// appendix_a.hpp -- an infinite, computable, monotonic, proper, strong,
// nonweak game built from determining strings
//
// The game is parameterized by an IndexOracle: an injective listing
// (k_s, v_s) that stands in for an effective enumeration of programs
// halting on their own index together with their diagonal values. From it:
//
//   l_0 = k_0 + 1,  l_s = max(l_{s-1}, k_s + 1)
//   F_s = strings a of length l_s with a(k_s) = v_s and
//         a(k_t) = 1 - v_t for every t < s
//   T1  = {a in F : a extends 10, a(k_s) = 1} ∪ complements of the
//         value-0 members ∪ {11}, and T0 dually (with 00).
//
// A coalition wins iff one of its initial segments lies in T1.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"

namespace nakamura {

struct OracleEntry
{
    std::size_t index = 0; ///< k_s
    bool value = false;    ///< v_s
};

/// Finite materialization of an index listing. Entries are generated at
/// construction until the running length l_s exceeds the requested cover,
/// so every question about strings of length <= cover is answerable.
class IndexOracle
{
public:
    /// k_s = 2 + 2s, v_s = s mod 2.
    static IndexOracle alternating(std::size_t cover = 64)
    {
        std::vector<OracleEntry> e;
        for (std::size_t s = 0;; ++s) {
            e.push_back({2 + 2 * s, (s % 2) == 1});
            if (e.back().index + 1 > cover) break;
        }
        return IndexOracle(std::move(e), "alternating", true, true);
    }

    /// Pseudo-random listing. Most indices are drawn from a window just
    /// above the largest index seen so far (they may fall below earlier
    /// ones, so l_s often stays flat). Entries 1, 4, 7, ... are forced
    /// above all earlier l_s with alternating values, the first opposite
    /// to v_0, which keeps the listing rich: both values show up early and
    /// keep reappearing at ever larger indices.
    static IndexOracle seeded(std::uint64_t seed, std::size_t cover = 64)
    {
        std::mt19937_64 rng(seed);
        std::vector<OracleEntry> e;
        std::set<std::size_t> used;
        std::size_t max_k = 1;
        bool forced_value = false;
        for (std::size_t s = 0;; ++s) {
            OracleEntry entry;
            if (s % 3 == 1) {
                entry.index = max_k + 2 + static_cast<std::size_t>(rng() % 2);
                entry.value = forced_value;
                forced_value = !forced_value;
            } else {
                const std::size_t hi = max_k + 3;
                do entry.index = 2 + static_cast<std::size_t>(rng() % (hi - 1));
                while (used.count(entry.index));
                entry.value = (rng() & 1U) != 0;
            }
            if (s == 0) forced_value = !entry.value;
            used.insert(entry.index);
            max_k = std::max(max_k, entry.index);
            e.push_back(entry);
            if (max_k + 1 > cover) break;
        }
        return IndexOracle(std::move(e), "seeded:" + std::to_string(seed), true, true);
    }

    /// An explicit finite listing. Questions beyond it report truncation.
    static IndexOracle from_entries(std::vector<OracleEntry> entries, bool rich = false)
    {
        return IndexOracle(std::move(entries), "explicit", rich, false);
    }

    std::size_t size() const noexcept { return data_->entries.size(); }
    const OracleEntry& operator[](std::size_t s) const { return data_->entries.at(s); }
    std::span<const OracleEntry> entries() const noexcept { return data_->entries; }
    /// l_s for every materialized s.
    std::span<const std::size_t> lengths() const noexcept { return data_->lengths; }
    std::size_t length(std::size_t s) const { return data_->lengths.at(s); }
    const std::string& name() const noexcept { return data_->name; }
    bool rich() const noexcept { return data_->rich; }

    /// Every s with l_s <= len is materialized, together with the first s
    /// whose l_s exceeds len.
    bool complete_through(std::size_t len) const noexcept
    {
        return !data_->lengths.empty() && data_->lengths.back() > len;
    }

    /// Largest string length the oracle answers without truncation.
    std::size_t cover() const noexcept
    {
        return data_->lengths.empty() ? 0 : data_->lengths.back() - 1;
    }

    /// a ∈ F_s.
    bool in_F(const BitString& a, std::size_t s) const
    {
        if (s >= size() || a.size() != length(s)) return false;
        const auto& e = data_->entries;
        if (a[e[s].index] != e[s].value) return false;
        for (std::size_t t = 0; t < s; ++t)
            if (a[e[t].index] == e[t].value) return false;
        return true;
    }

private:
    struct Data
    {
        std::vector<OracleEntry> entries;
        std::vector<std::size_t> lengths;
        std::string name;
        bool rich = false;
    };

    IndexOracle(std::vector<OracleEntry> entries, std::string name, bool rich, bool generated)
    {
        auto d = std::make_shared<Data>();
        d->entries = std::move(entries);
        d->name = std::move(name);
        d->rich = rich;
        if (d->entries.empty() && generated) throw Error("oracle listing is empty");
        std::set<std::size_t> seen;
        for (std::size_t s = 0; s < d->entries.size(); ++s) {
            const std::size_t k = d->entries[s].index;
            if (!seen.insert(k).second) throw Error("oracle indices must be distinct");
            if (s == 0 && k < 2) throw Error("oracle needs k_0 >= 2");
            const std::size_t prev = s == 0 ? 0 : d->lengths.back();
            d->lengths.push_back(std::max(prev, k + 1));
        }
        data_ = std::move(d);
    }

    std::shared_ptr<const Data> data_;
};

/// Decision for one string, with a flag set when the oracle ran out
/// before the procedure could conclude.
struct AppendixADecision
{
    Determination determination = Determination::Nondetermining;
    bool truncated = false;
};

namespace detail {

/// For a string extending 10: its value v_s if it lies in some F_s, else
/// nullopt. Scans F_s, F_{s+1}, ... for the least s with l_s >= |a| while
/// l stays equal to |a|.
inline std::optional<bool> f_value(const IndexOracle& oracle, const BitString& a, bool& truncated)
{
    const std::size_t len = a.size();
    std::size_t s = 0;
    while (s < oracle.size() && oracle.length(s) < len) ++s;
    if (s == oracle.size()) {
        truncated = true;
        return std::nullopt;
    }
    if (oracle.length(s) > len) return std::nullopt;
    for (; s < oracle.size(); ++s) {
        if (oracle.length(s) != len) return std::nullopt;
        if (oracle.in_F(a, s)) return oracle[s].value;
    }
    truncated = true;
    return std::nullopt;
}

} // namespace detail

/// Decides membership of `a` in T1 (winning-determining), T0
/// (losing-determining) or neither.
inline AppendixADecision appendixA_classify(const IndexOracle& oracle, const BitString& a)
{
    AppendixADecision d;
    if (a.size() < 2) return d;
    const bool b0 = a[0];
    const bool b1 = a[1];
    if (b0 == b1) {
        if (a.size() == 2)
            d.determination = b0 ? Determination::WinningDetermining : Determination::LosingDetermining;
        return d;
    }
    // a extends 10 directly, or extends 01 and its complement extends 10.
    const bool flipped = !b0;
    const BitString probe = flipped ? string_complement(a) : a;
    const auto value = detail::f_value(oracle, probe, d.truncated);
    if (!value) return d;
    const bool wins = flipped ? !*value : *value;
    d.determination = wins ? Determination::WinningDetermining : Determination::LosingDetermining;
    return d;
}

/// Explicit l_s, F_s, T0 and T1 up to a length bound, computed straight
/// from the set definitions.
struct AppendixATables
{
    std::size_t max_len = 0;
    std::vector<std::size_t> l;                 ///< l_s for every s with l_s <= max_len
    std::vector<std::vector<BitString>> F;      ///< F_s, lexicographic
    std::vector<BitString> T0;                  ///< shortlex sorted
    std::vector<BitString> T1;                  ///< shortlex sorted
    /// The oracle ended before l_s exceeded max_len; later F_s may be missing.
    bool truncated = false;

    bool in_T0(const BitString& a) const { return std::binary_search(T0.begin(), T0.end(), a); }
    bool in_T1(const BitString& a) const { return std::binary_search(T1.begin(), T1.end(), a); }

    std::vector<BitString> all_F() const
    {
        std::vector<BitString> out;
        for (const auto& fs : F) out.insert(out.end(), fs.begin(), fs.end());
        return out;
    }
};

inline AppendixATables appendixA_tables(const IndexOracle& oracle, std::size_t max_len)
{
    if (max_len < 3) throw Error("appendix tables need max_len >= 3");
    if (max_len > 30) throw BoundError("appendix tables are limited to strings of length 30");
    AppendixATables t;
    t.max_len = max_len;
    t.truncated = !oracle.complete_through(max_len);

    const BitString ten = BitString::parse("10");
    std::vector<BitString> t0_base, t1_base;
    for (std::size_t s = 0; s < oracle.size() && oracle.length(s) <= max_len; ++s) {
        const std::size_t len = oracle.length(s);
        t.l.push_back(len);
        std::vector<std::size_t> constrained;
        std::vector<bool> forced(len, false);
        std::vector<bool> is_constrained(len, false);
        for (std::size_t u = 0; u <= s; ++u) {
            const std::size_t k = oracle[u].index;
            is_constrained[k] = true;
            forced[k] = (u == s) ? oracle[u].value : !oracle[u].value;
        }
        std::vector<std::size_t> free_pos;
        for (std::size_t i = 0; i < len; ++i)
            if (!is_constrained[i]) free_pos.push_back(i);
        std::vector<BitString> fs;
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_pos.size()); ++fill) {
            std::vector<bool> bits = forced;
            for (std::size_t j = 0; j < free_pos.size(); ++j) bits[free_pos[j]] = (fill >> j) & 1U;
            fs.emplace_back(std::move(bits));
        }
        std::sort(fs.begin(), fs.end());
        for (const BitString& a : fs) {
            if (!is_initial_segment(ten, a)) continue;
            (oracle[s].value ? t1_base : t0_base).push_back(a);
        }
        t.F.push_back(std::move(fs));
    }

    t.T0 = t0_base;
    t.T1 = t1_base;
    for (const BitString& a : t1_base) t.T0.push_back(string_complement(a));
    for (const BitString& a : t0_base) t.T1.push_back(string_complement(a));
    t.T0.push_back(BitString::parse("00"));
    t.T1.push_back(BitString::parse("11"));
    std::sort(t.T0.begin(), t.T0.end());
    std::sort(t.T1.begin(), t.T1.end());
    return t;
}

/// The game itself as a prefix game. Evaluation never looks past the
/// oracle's cover.
inline PrefixGame appendixA_game(const IndexOracle& oracle, std::size_t max_depth = 64)
{
    max_depth = std::min(max_depth, oracle.cover());
    auto classify = [oracle](const BitString& a) { return appendixA_classify(oracle, a).determination; };
    return PrefixGame(std::move(classify), max_depth, "appendixA(" + oracle.name() + ")");
}

} // namespace nakamura
