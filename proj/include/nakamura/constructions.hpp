// constructions.hpp -- catalog of witness games, disjoint images and
// products of games

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nakamura/appendix_a.hpp"
#include "nakamura/axioms.hpp"
#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"

namespace nakamura {

// ---------------------------------------------------------------------------
// Finite catalog
// ---------------------------------------------------------------------------

/// Winning iff more than half of the n players (n odd).
inline FiniteGame majority(std::size_t n)
{
    if (n == 0 || n % 2 == 0) throw Error("majority game needs an odd number of players");
    return FiniteGame::from_predicate(n, [n](std::uint64_t s) { return 2 * static_cast<std::size_t>(std::popcount(s)) > n; });
}

inline FiniteGame dictator(Player i, std::size_t n)
{
    if (i >= n) throw BoundError("dictator outside the universe");
    return FiniteGame::from_predicate(n, [i](std::uint64_t s) { return ((s >> i) & 1U) != 0; });
}

/// Winning iff every member of T is present.
inline FiniteGame unanimity(const std::vector<Player>& members, std::size_t n)
{
    const std::uint64_t t = Coalition::of(members, n).mask();
    return FiniteGame::from_predicate(n, [t](std::uint64_t s) { return (s & t) == t; });
}

/// Winning iff S excludes at most one of the k players.
inline FiniteGame veto_free_rule(std::size_t k)
{
    if (k == 0) throw Error("veto-free rule needs at least one player");
    return FiniteGame::from_predicate(k, [k](std::uint64_t s) { return static_cast<std::size_t>(std::popcount(s)) + 1 >= k; });
}

namespace detail {

/// Block masks of consecutive players: block l holds sizes[l] players.
inline std::vector<std::uint64_t> partition_blocks(const std::vector<std::size_t>& sizes, std::size_t& n)
{
    std::vector<std::uint64_t> blocks;
    n = 0;
    for (std::size_t sz : sizes) {
        if (sz == 0) throw Error("partition blocks must be nonempty");
        if (n + sz > kMaxExhaustiveUniverse) throw BoundError("partition game too large");
        blocks.push_back(Coalition::full_mask(sz) << n);
        n += sz;
    }
    return blocks;
}

inline std::size_t blocks_included(const std::vector<std::uint64_t>& blocks, std::uint64_t s)
{
    std::size_t c = 0;
    for (std::uint64_t b : blocks)
        if ((s & b) == b) ++c;
    return c;
}

} // namespace detail

/// Winning iff S includes at least k-1 of the k blocks. With k = 3 and only
/// singleton blocks the game is majority(3), which is strong; unless
/// `require_nonstrong` is cleared that case is rejected.
inline FiniteGame partition_type3(const std::vector<std::size_t>& sizes, bool require_nonstrong = true)
{
    const std::size_t k = sizes.size();
    if (k < 3) throw Error("partition_type3 needs at least 3 blocks");
    if (require_nonstrong && k == 3 && std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 1; }))
        throw Error("partition_type3 with 3 singleton blocks is strong; give one block two players");
    std::size_t n = 0;
    const auto blocks = detail::partition_blocks(sizes, n);
    return FiniteGame::from_predicate(n, [&](std::uint64_t s) { return detail::blocks_included(blocks, s) + 1 >= k; });
}

/// Winning iff S includes exactly k-1 of the k blocks.
inline FiniteGame partition_type11(const std::vector<std::size_t>& sizes)
{
    const std::size_t k = sizes.size();
    if (k < 3) throw Error("partition_type11 needs at least 3 blocks (use type11_k2 for two)");
    std::size_t n = 0;
    const auto blocks = detail::partition_blocks(sizes, n);
    return FiniteGame::from_predicate(n, [&](std::uint64_t s) { return detail::blocks_included(blocks, s) + 1 == k; });
}

/// Carrier {0,1,2}; the winning restrictions are {0} and {1}.
inline FiniteGame type11_k2() { return FiniteGame::from_coalitions(3, {{0}, {1}}); }

inline FiniteGame example_type9() { return FiniteGame::from_coalitions(3, {{0, 1, 2}, {0}, {1}, {2}}); }

inline FiniteGame example_type13()
{
    return FiniteGame::from_coalitions(3, {{0, 1, 2}, {1, 2}, {0}, {1}, {2}});
}

inline FiniteGame example_type15() { return FiniteGame::from_coalitions(3, {{0, 1, 2}, {1, 2}, {0}, {1}}); }

/// Weak, monotonic, proper, nonstrong: unanimity of {0,1}.
inline FiniteGame type4_witness() { return unanimity({0, 1}, 2); }

/// Monotonic, nonproper, strong, nonweak: S meets {0,1}.
inline FiniteGame type5_witness()
{
    return FiniteGame::from_predicate(2, [](std::uint64_t s) { return s != 0; });
}

/// Monotonic, nonproper, nonstrong, nonweak: S contains {0,1} or {2,3}.
inline FiniteGame type7_witness()
{
    return FiniteGame::from_predicate(4, [](std::uint64_t s) { return (s & 0b0011) == 0b0011 || (s & 0b1100) == 0b1100; });
}

/// Nonmonotonic, proper, nonstrong, weak: the only winning restriction to
/// the carrier {0,1} is {0}.
inline FiniteGame type12_witness() { return FiniteGame::from_coalitions(2, {{0}}); }

// ---------------------------------------------------------------------------
// Pairings, disjoint images and products
// ---------------------------------------------------------------------------

/// Carrier violation or malformed pairing.
class PairingError : public Error
{
public:
    using Error::Error;
};

/// Two injections f1 : T -> N and f2 : N -> N whose images partition N.
/// T is either all of N or an initial segment {0,...,t-1}. Both maps must
/// satisfy f(i) >= i, so that preimages of a window [0,U) lie in it.
class Pairing
{
public:
    using Map = std::function<std::size_t(std::size_t)>;

    Pairing(Map f1, std::optional<std::size_t> t_bound, Map f2, std::string name)
      : f1_(std::move(f1)), f2_(std::move(f2)), t_bound_(t_bound), name_(std::move(name))
    {
    }

    /// f1(i) = 2i on T = N, f2(i) = 2i + 1.
    static Pairing even_odd()
    {
        return Pairing([](std::size_t i) { return 2 * i; }, std::nullopt,
                       [](std::size_t i) { return 2 * i + 1; }, "even-odd");
    }

    /// f1(i) = i on T = {0,...,k-1}, f2(i) = i + k.
    static Pairing shift(std::size_t k)
    {
        return Pairing([](std::size_t i) { return i; }, k, [k](std::size_t i) { return i + k; },
                       "shift:" + std::to_string(k));
    }

    std::size_t f1(std::size_t i) const
    {
        if (!in_T(i)) throw PairingError("f1 applied outside its domain");
        return f1_(i);
    }
    std::size_t f2(std::size_t i) const { return f2_(i); }
    bool in_T(std::size_t i) const noexcept { return !t_bound_ || i < *t_bound_; }
    std::optional<std::size_t> t_bound() const noexcept { return t_bound_; }
    const std::string& name() const noexcept { return name_; }

    /// Checks on the window [0,U) that the images are disjoint and cover it.
    void validate(std::size_t window) const
    {
        std::vector<int> hits(window, 0);
        for (std::size_t i = 0; i < window; ++i) {
            if (in_T(i)) {
                const std::size_t p = f1_(i);
                if (p < i) throw PairingError("pairing map must satisfy f(i) >= i");
                if (p < window) ++hits[p];
            }
            const std::size_t q = f2_(i);
            if (q < i) throw PairingError("pairing map must satisfy f(i) >= i");
            if (q < window) ++hits[q];
        }
        for (std::size_t p = 0; p < window; ++p)
            if (hits[p] != 1)
                throw PairingError("pairing images do not partition position " + std::to_string(p) + " (" +
                                   name_ + ")");
    }

private:
    Map f1_;
    Map f2_;
    std::optional<std::size_t> t_bound_;
    std::string name_;
};

/// S1 * S2 = f1(S1) ∪ f2(S2) inside a universe of the given size.
inline Coalition disjoint_image(const Coalition& s1, const Coalition& s2, const Pairing& pr, std::size_t universe)
{
    std::uint64_t m = 0;
    auto put = [&](std::size_t p) {
        if (p >= universe) throw BoundError("disjoint image leaves universe " + std::to_string(universe));
        m |= std::uint64_t{1} << p;
    };
    for (Player i : s1.members()) {
        if (!pr.in_T(i)) throw PairingError("S1 is not contained in the domain of f1");
        put(pr.f1(i));
    }
    for (Player j : s2.members()) put(pr.f2(j));
    return Coalition(m, universe);
}

/// Smallest universe holding S1 * S2.
inline Coalition disjoint_image(const Coalition& s1, const Coalition& s2, const Pairing& pr)
{
    std::size_t top = 0;
    for (Player i : s1.members()) {
        if (!pr.in_T(i)) throw PairingError("S1 is not contained in the domain of f1");
        top = std::max(top, pr.f1(i) + 1);
    }
    for (Player j : s2.members()) top = std::max(top, pr.f2(j) + 1);
    return disjoint_image(s1, s2, pr, top);
}

/// Inverse of the disjoint image: S1 = f1^-1(S ∩ f1(T)) restricted to
/// [0,n1), S2 = f2^-1(S ∩ f2(N)) restricted to [0,n2).
inline std::pair<Coalition, Coalition> decompose(const Coalition& s, const Pairing& pr, std::size_t n1, std::size_t n2)
{
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    for (std::size_t i = 0; i < n1; ++i)
        if (pr.in_T(i) && s.contains(pr.f1(i))) m1 |= std::uint64_t{1} << i;
    for (std::size_t j = 0; j < n2; ++j)
        if (s.contains(pr.f2(j))) m2 |= std::uint64_t{1} << j;
    return {Coalition(m1, n1), Coalition(m2, n2)};
}

namespace detail {

/// Players of g1 that the pairing can carry; g1's carrier must fit in T.
inline std::size_t usable_left_universe(const FiniteGame& g1, const Pairing& pr)
{
    if (!pr.t_bound() || *pr.t_bound() >= g1.universe()) return g1.universe();
    const Coalition carrier = minimal_carrier(g1);
    for (Player p : carrier.members())
        if (!pr.in_T(p))
            throw PairingError("carrier of the left factor is not contained in T (" + pr.name() + ")");
    return *pr.t_bound();
}

inline FiniteGame restrict_universe(const FiniteGame& g, std::size_t n)
{
    if (n == g.universe()) return g;
    std::vector<std::uint64_t> masks;
    const std::uint64_t keep = Coalition::full_mask(n);
    for (std::uint64_t s : g.winning_masks())
        if ((s & ~keep) == 0) masks.push_back(s);
    return FiniteGame(n, std::move(masks));
}

} // namespace detail

/// Window [0,U) holding the images of g1's and g2's universes.
inline std::size_t product_universe(std::size_t n1, std::size_t n2, const Pairing& pr)
{
    std::size_t top = 0;
    for (std::size_t i = 0; i < n1; ++i) top = std::max(top, pr.f1(i) + 1);
    for (std::size_t j = 0; j < n2; ++j) top = std::max(top, pr.f2(j) + 1);
    return top;
}

/// Product of two finite games: S wins iff S = S1 * S2 with S1 and S2
/// winning. Membership is decided by decomposing S through the pairing.
inline FiniteGame product(const FiniteGame& g1, const FiniteGame& g2, const Pairing& pr)
{
    const std::size_t n1 = detail::usable_left_universe(g1, pr);
    const FiniteGame left = detail::restrict_universe(g1, n1);
    const std::size_t n2 = g2.universe();
    const std::size_t u = product_universe(n1, n2, pr);
    pr.validate(u);
    FiniteGame::require_exhaustive(u);
    return FiniteGame::from_predicate(u, [&](std::uint64_t s) {
        const auto [s1, s2] = decompose(Coalition(s, u), pr, n1, n2);
        return left.wins(s1.mask()) && g2.wins(s2.mask());
    });
}

/// Product of a finite game with a prefix game. A string decides the
/// product as soon as one factor is losing-determined or both are
/// winning-determined by the bits it fixes.
inline PrefixGame product(const FiniteGame& g1, const PrefixGame& g2, const Pairing& pr)
{
    const std::size_t n1 = detail::usable_left_universe(g1, pr);
    const FiniteGame left = detail::restrict_universe(g1, n1);
    std::vector<std::size_t> left_pos(n1);
    for (std::size_t i = 0; i < n1; ++i) left_pos[i] = pr.f1(i);
    const std::size_t depth = std::max(product_universe(n1, 0, pr), pr.f2(g2.max_depth() == 0 ? 0 : g2.max_depth() - 1) + 1);
    pr.validate(depth);

    auto classify = [left, g2, pr, left_pos](const BitString& sigma) {
        // Left factor: enumerate completions of the unknown positions.
        std::uint64_t fixed = 0;
        std::vector<std::size_t> unknown;
        for (std::size_t i = 0; i < left_pos.size(); ++i) {
            if (left_pos[i] < sigma.size()) {
                if (sigma[left_pos[i]]) fixed |= std::uint64_t{1} << i;
            } else {
                unknown.push_back(i);
            }
        }
        bool any_win = false;
        bool any_lose = false;
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << unknown.size()); ++fill) {
            std::uint64_t s = fixed;
            for (std::size_t j = 0; j < unknown.size(); ++j)
                if ((fill >> j) & 1U) s |= std::uint64_t{1} << unknown[j];
            (left.wins(s) ? any_win : any_lose) = true;
            if (any_win && any_lose) break;
        }
        if (!any_win) return Determination::LosingDetermining;

        BitString right;
        for (std::size_t j = 0; pr.f2(j) < sigma.size(); ++j) right.push_back(sigma[pr.f2(j)]);
        const Determination d2 = g2.classify(right);
        if (d2 == Determination::LosingDetermining) return Determination::LosingDetermining;
        if (!any_lose && d2 == Determination::WinningDetermining) return Determination::WinningDetermining;
        return Determination::Nondetermining;
    };
    return PrefixGame(std::move(classify), depth, "product(" + pr.name() + ", " + g2.description() + ")");
}

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

struct BuildParams
{
    std::optional<std::size_t> n;       ///< universe / number of players
    std::optional<std::size_t> player;  ///< dictator
    std::optional<std::size_t> k;       ///< veto_free_rule
    std::vector<std::size_t> sizes;     ///< partition games
    std::vector<std::size_t> members;   ///< unanimity
    std::string oracle = "alternating"; ///< appendixA: alternating | seeded
    std::uint64_t seed = 0;
    std::size_t max_depth = 64;
    bool require_nonstrong = true;
};

inline const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names = {
        "majority",      "dictator",      "unanimity",      "partition_type3", "partition_type11",
        "type11_k2",     "example_type9", "example_type13", "example_type15",  "veto_free_rule",
        "type4_witness", "type5_witness", "type7_witness",  "type12_witness",  "appendixA"};
    return names;
}

inline IndexOracle make_oracle(const std::string& kind, std::uint64_t seed, std::size_t cover = 64)
{
    if (kind == "alternating") return IndexOracle::alternating(cover);
    if (kind == "seeded") return IndexOracle::seeded(seed, cover);
    throw Error("unknown oracle '" + kind + "' (expected alternating or seeded)");
}

inline Game build(const std::string& name, const BuildParams& p)
{
    auto need = [&](const std::optional<std::size_t>& v, const char* what) {
        if (!v) throw Error(name + " needs parameter '" + what + "'");
        return *v;
    };
    if (name == "majority") return majority(need(p.n, "n"));
    if (name == "dictator") return dictator(need(p.player, "player"), need(p.n, "n"));
    if (name == "unanimity") return unanimity(p.members, need(p.n, "n"));
    if (name == "partition_type3") return partition_type3(p.sizes, p.require_nonstrong);
    if (name == "partition_type11") return partition_type11(p.sizes);
    if (name == "type11_k2") return type11_k2();
    if (name == "example_type9") return example_type9();
    if (name == "example_type13") return example_type13();
    if (name == "example_type15") return example_type15();
    if (name == "veto_free_rule") return veto_free_rule(need(p.k, "k"));
    if (name == "type4_witness") return type4_witness();
    if (name == "type5_witness") return type5_witness();
    if (name == "type7_witness") return type7_witness();
    if (name == "type12_witness") return type12_witness();
    if (name == "appendixA") return appendixA_game(make_oracle(p.oracle, p.seed, std::max<std::size_t>(p.max_depth, 3)), p.max_depth);
    throw Error("unknown construction '" + name + "'");
}

} // namespace nakamura
