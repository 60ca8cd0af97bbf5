// axioms.hpp -- the four conventional axioms, veto players, dictators,
// carriers and the sixteen-type classification

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"

namespace nakamura {

/// Raised by operations that are undefined on the game with no winning
/// coalitions.
class EmptyGameError : public Error
{
public:
    EmptyGameError() : Error("game has no winning coalitions") {}
};

/// The axiom profile of a game. `type_index` follows the usual table
/// order: 1 = (++++), 2 = (+++-), ..., 16 = (----), with the four signs
/// standing for monotonic, proper, strong and nonweak.
struct TypeSignature
{
    bool monotonic = true;
    bool proper = true;
    bool strong = true;
    bool nonweak = true;
    bool finite = true;

    int type_index() const noexcept
    {
        return 1 + (monotonic ? 0 : 8) + (proper ? 0 : 4) + (strong ? 0 : 2) + (nonweak ? 0 : 1);
    }

    /// "++-+" style rendering.
    std::string signs() const
    {
        std::string s;
        for (bool b : {monotonic, proper, strong, nonweak}) s.push_back(b ? '+' : '-');
        return s;
    }

    static TypeSignature from_index(int type_index, bool finite = true)
    {
        if (type_index < 1 || type_index > 16) throw Error("type index must be in 1..16");
        const int bits = type_index - 1;
        return {(bits & 8) == 0, (bits & 4) == 0, (bits & 2) == 0, (bits & 1) == 0, finite};
    }

    friend bool operator==(const TypeSignature&, const TypeSignature&) = default;
};

/// Types that no game can have: weak implies proper, and strong plus weak
/// is dictatorial (hence monotonic).
inline bool is_impossible_type(int type_index)
{
    return type_index == 6 || type_index == 8 || type_index == 10 || type_index == 14 || type_index == 16;
}

/// Certificates for every failed axiom (and for weakness / nonweakness).
struct AxiomWitness
{
    /// S winning, T = S plus one player, T losing.
    std::optional<std::pair<Coalition, Coalition>> nonmonotonic;
    /// S with S and its complement both winning.
    std::optional<Coalition> nonproper;
    /// S with S and its complement both losing.
    std::optional<Coalition> nonstrong;
    /// Winning coalitions with empty intersection.
    std::optional<std::vector<Coalition>> nonweak;
    /// Nonempty set of veto players.
    std::optional<Coalition> veto;
};

struct Classification
{
    TypeSignature signature;
    AxiomWitness witness;
};

/// Decides the four axioms with complements taken inside the universe.
inline Classification classify(const FiniteGame& g)
{
    FiniteGame::require_exhaustive(g.universe());
    const std::size_t n = g.universe();
    const std::uint64_t full = Coalition::full_mask(n);
    Classification out;
    auto& sig = out.signature;
    auto& wit = out.witness;

    for (std::uint64_t s : g.winning_masks()) {
        if (!sig.monotonic) break;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t t = s | (std::uint64_t{1} << i);
            if (t != s && !g.wins(t)) {
                sig.monotonic = false;
                wit.nonmonotonic.emplace(Coalition(s, n), Coalition(t, n));
                break;
            }
        }
    }

    for (std::uint64_t s : g.winning_masks()) {
        if (g.wins(full & ~s)) {
            sig.proper = false;
            wit.nonproper = Coalition(s, n);
            break;
        }
    }

    for (std::uint64_t s = 0; s <= full; ++s) {
        if (!g.wins(s) && !g.wins(full & ~s)) {
            sig.strong = false;
            wit.nonstrong = Coalition(s, n);
            break;
        }
        if (s == full) break;
    }

    // Greedy cover: keep a winning coalition whenever it shrinks the
    // running intersection. The final intersection is the veto set.
    std::uint64_t meet = full;
    std::vector<Coalition> chosen;
    for (std::uint64_t s : g.winning_masks()) {
        if ((meet & s) != meet) {
            meet &= s;
            chosen.emplace_back(s, n);
        }
    }
    if (g.empty()) {
        sig.nonweak = false;
    } else if (meet != 0) {
        sig.nonweak = false;
        wit.veto = Coalition(meet, n);
    } else {
        if (chosen.empty()) chosen.emplace_back(0, n); // the empty coalition wins
        wit.nonweak = std::move(chosen);
    }
    return out;
}

/// Intersection of all winning coalitions.
inline Coalition veto_players(const FiniteGame& g)
{
    if (g.empty()) throw EmptyGameError();
    std::uint64_t meet = Coalition::full_mask(g.universe());
    for (std::uint64_t s : g.winning_masks()) meet &= s;
    return Coalition(meet, g.universe());
}

inline bool is_weak(const FiniteGame& g)
{
    return g.empty() || !veto_players(g).empty();
}

/// The dictator, if the winning family is exactly the coalitions
/// containing one player.
inline std::optional<Player> is_dictatorial(const FiniteGame& g)
{
    if (g.empty() || g.universe() == 0) return std::nullopt;
    const std::uint64_t meet = veto_players(g).mask();
    if (std::popcount(meet) != 1) return std::nullopt;
    const std::uint64_t expected = std::uint64_t{1} << (g.universe() - 1);
    if (g.winning_count() != expected) return std::nullopt;
    return static_cast<Player>(std::countr_zero(meet));
}

/// True iff T wins exactly when T ∩ carrier wins, for every T.
inline bool is_carrier(const FiniteGame& g, const Coalition& carrier)
{
    FiniteGame::require_exhaustive(g.universe());
    const std::uint64_t full = Coalition::full_mask(g.universe());
    const std::uint64_t c = carrier.mask();
    for (std::uint64_t t = 0;; ++t) {
        if (g.wins(t) != g.wins(t & c)) return false;
        if (t == full) break;
    }
    return true;
}

/// Smallest carrier. Computed as the set of relevant players (those whose
/// membership changes the outcome of some coalition) and verified; if the
/// verification fails an exhaustive search over all candidate carriers
/// takes over.
inline Coalition minimal_carrier(const FiniteGame& g)
{
    FiniteGame::require_exhaustive(g.universe());
    const std::size_t n = g.universe();
    const std::uint64_t full = Coalition::full_mask(n);
    std::uint64_t relevant = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t t = 0;; ++t) {
            if (!(t & bit) && g.wins(t) != g.wins(t | bit)) {
                relevant |= bit;
                break;
            }
            if (t == full) break;
        }
    }
    Coalition candidate(relevant, n);
    if (is_carrier(g, candidate)) return candidate;

    std::optional<Coalition> best;
    for (std::uint64_t c = 0;; ++c) {
        Coalition cc(c, n);
        if ((!best || cc.size() < best->size()) && is_carrier(g, cc)) best = cc;
        if (c == full) break;
    }
    return *best;
}

/// Every superset of a winning coalition wins.
inline FiniteGame monotone_closure(const FiniteGame& g)
{
    FiniteGame::require_exhaustive(g.universe());
    const std::size_t n = g.universe();
    std::vector<bool> win(std::size_t{1} << n, false);
    for (std::uint64_t s : g.winning_masks()) win[s] = true;
    // Upward propagation in increasing mask order covers all supersets.
    for (std::uint64_t s = 0; s < win.size(); ++s) {
        if (!win[s]) continue;
        for (std::size_t i = 0; i < n; ++i) win[s | (std::uint64_t{1} << i)] = true;
    }
    std::vector<std::uint64_t> masks;
    for (std::uint64_t s = 0; s < win.size(); ++s)
        if (win[s]) masks.push_back(s);
    return FiniteGame(n, std::move(masks));
}

} // namespace nakamura
