// nakamura.hpp -- exact Nakamura numbers of finite games, interval
// bounds from the axiom profile, and bounded witnesses for prefix games

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nakamura/axioms.hpp"
#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"

namespace nakamura {

/// Stands for +infinity wherever a Nakamura number is stored as a count.
inline constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

inline std::string nu_to_string(std::size_t nu)
{
    return nu == kInfinity ? "infinity" : std::to_string(nu);
}

struct NakamuraResult
{
    std::size_t value = kInfinity;
    /// `value` winning coalitions with empty intersection; empty if infinite.
    std::vector<Coalition> witness;
    /// Set when the empty coalition wins (value 1).
    bool empty_coalition_wins = false;

    bool infinite() const noexcept { return value == kInfinity; }
};

namespace detail {

inline bool meet_search(std::span<const std::uint64_t> cands, std::size_t start, std::size_t slots,
                        std::uint64_t meet, std::vector<std::size_t>& chosen)
{
    if (slots == 0) return meet == 0;
    for (std::size_t i = start; i < cands.size(); ++i) {
        const std::uint64_t next = meet & cands[i];
        if (next == meet) continue; // does not shrink the intersection
        if (slots == 1 && next != 0) continue;
        chosen.push_back(i);
        if (meet_search(cands, i + 1, slots - 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace detail

/// Lexicographically least family of minimum size (at most `limit`) of
/// `candidates` whose intersection, starting from `universe_mask`, is
/// empty. Candidates must be sorted ascending. Returns indices.
///
/// Iterative deepening over family size; a branch only takes coalitions
/// that strictly shrink the running intersection, which never discards a
/// minimum family.
inline std::optional<std::vector<std::size_t>>
smallest_empty_meet(std::span<const std::uint64_t> candidates, std::uint64_t universe_mask, std::size_t limit)
{
    std::vector<std::size_t> chosen;
    if (universe_mask == 0) {
        if (candidates.empty() || limit == 0) return std::nullopt;
        return std::vector<std::size_t>{0};
    }
    for (std::size_t k = 1; k <= std::min(limit, candidates.size()); ++k) {
        chosen.clear();
        if (detail::meet_search(candidates, 0, k, universe_mask, chosen)) return chosen;
    }
    return std::nullopt;
}

/// Winning coalitions with no winning proper subset, ascending by mask.
inline std::vector<std::uint64_t> minimal_winning(const FiniteGame& g)
{
    std::vector<std::uint64_t> by_size(g.winning_masks().begin(), g.winning_masks().end());
    std::stable_sort(by_size.begin(), by_size.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t s : by_size) {
        bool has_winning_subset = false;
        for (std::uint64_t m : minimal) {
            if ((m & ~s) == 0) {
                has_winning_subset = true;
                break;
            }
        }
        if (!has_winning_subset) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

/// Exact Nakamura number with a lexicographically least minimum witness.
/// Only minimal winning coalitions are searched, which is sound because
/// the universe is a finite carrier.
inline NakamuraResult nakamura_number(const FiniteGame& g)
{
    NakamuraResult r;
    const std::size_t n = g.universe();
    if (g.empty_is_winning()) {
        r.value = 1;
        r.witness = {Coalition::empty(n)};
        r.empty_coalition_wins = true;
        return r;
    }
    if (is_weak(g)) return r;

    const auto minimal = minimal_winning(g);
    auto found = smallest_empty_meet(minimal, Coalition::full_mask(n), minimal.size());
    if (!found) throw Error("nonweak game without an empty-intersection family (internal error)");
    r.value = found->size();
    for (std::size_t i : *found) r.witness.emplace_back(minimal[i], n);
    return r;
}

/// Interval of Nakamura numbers compatible with an axiom profile.
struct NakamuraConstraint
{
    std::size_t lower = 2;
    std::size_t upper = kInfinity;
    /// The value is known to be finite (nonweak computable game).
    bool finite = false;
    std::vector<std::string> provenance;

    bool contains(std::size_t nu) const noexcept
    {
        if (finite && nu == kInfinity) return false;
        return lower <= nu && nu <= upper;
    }

    std::string to_string() const
    {
        std::string s = "[" + nu_to_string(lower) + "," + nu_to_string(upper);
        if (finite && upper == kInfinity) s += " finite";
        return s + "]";
    }
};

/// Intersects the bounds implied by the axiom profile of a game in which
/// the empty coalition loses. An empty result means the signature cannot
/// belong to any game and is reported as an error.
inline NakamuraConstraint lemma_constraints(const TypeSignature& sig, bool empty_losing)
{
    if (!empty_losing) throw Error("axiom bounds assume the empty coalition is losing");
    NakamuraConstraint c;
    c.provenance.push_back("empty coalition losing: nu >= 2");
    auto narrow = [&c](std::size_t lo, std::size_t hi, const char* why) {
        c.lower = std::max(c.lower, lo);
        c.upper = std::min(c.upper, hi);
        c.provenance.emplace_back(why);
    };
    if (!sig.proper) narrow(2, 2, "nonproper: nu = 2");
    if (sig.strong && sig.nonweak) narrow(2, 3, "strong and nonweak: nu in {2,3}");
    if (sig.monotonic && sig.proper) narrow(3, kInfinity, "monotonic and proper: nu >= 3");
    if (!sig.monotonic && sig.strong) narrow(2, 2, "nonmonotonic and strong: nu = 2");
    if (!sig.nonweak) narrow(kInfinity, kInfinity, "weak: nu = infinity");
    if (sig.nonweak) {
        c.finite = true;
        c.provenance.emplace_back("nonweak computable: nu finite");
    }
    if (c.lower > c.upper || (c.finite && c.lower == kInfinity))
        throw Error("inconsistent type signature " + sig.signs() + ": empty Nakamura interval");
    return c;
}

/// Upper-bound certificate for a prefix game.
struct BoundedWitness
{
    std::vector<BitString> strings;    ///< winning-determining strings used
    std::vector<Coalition> coalitions; ///< their zero-extended coalitions
};

/// Searches the winning-determining strings up to `depth` for the smallest
/// family (at most `family_limit`) whose zero-extended coalitions have
/// empty intersection. Each returned coalition extends a winning-determining
/// string, so it wins.
inline std::optional<BoundedWitness>
nakamura_witness_bounded(const PrefixGame& g, std::size_t depth, std::size_t family_limit)
{
    if (depth > g.max_depth())
        throw Error("depth " + std::to_string(depth) + " exceeds the game's evaluation bound " +
                    std::to_string(g.max_depth()));
    if (depth > kMaxUniverse) throw BoundError("witness depth exceeds the coalition bound");
    const auto det = minimal_determining_strings(g, depth);

    std::vector<std::pair<std::uint64_t, BitString>> cands;
    for (const BitString& a : det.winning) cands.emplace_back(a.ones_mask(), a);
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const auto& x, const auto& y) { return x.first == y.first; }),
                cands.end());
    // A superset never helps: swapping it for its subset keeps the family
    // size and can only shrink the intersection.
    std::vector<std::pair<std::uint64_t, BitString>> minimal;
    for (const auto& c : cands) {
        const bool dominated = std::any_of(cands.begin(), cands.end(), [&](const auto& d) {
            return d.first != c.first && (d.first & ~c.first) == 0;
        });
        if (!dominated) minimal.push_back(c);
    }
    cands = std::move(minimal);
    std::vector<std::uint64_t> masks;
    for (const auto& c : cands) masks.push_back(c.first);

    auto found = smallest_empty_meet(masks, Coalition::full_mask(depth), family_limit);
    if (!found) return std::nullopt;
    BoundedWitness w;
    for (std::size_t i : *found) {
        w.strings.push_back(cands[i].second);
        w.coalitions.emplace_back(cands[i].first, depth);
    }
    return w;
}

} // namespace nakamura
