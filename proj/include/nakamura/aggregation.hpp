// aggregation.hpp -- profiles of strict preferences, the dominance relation
// of a simple game, its core, and a desk-scale check of the statement
// "the core is nonempty for every profile iff #X < nu"

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nakamura/axioms.hpp"
#include "nakamura/game.hpp"
#include "nakamura/nakamura.hpp"

namespace nakamura {

/// Finite set of named alternatives.
class AlternativeSet
{
public:
    explicit AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        if (labels_.empty()) throw Error("alternative set must be nonempty");
        if (labels_.size() > 64) throw BoundError("at most 64 alternatives are supported");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw Error("alternative labels must be distinct");
    }

    /// Alternatives named x0, x1, ...
    static AlternativeSet indexed(std::size_t m)
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
        return AlternativeSet(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

private:
    std::vector<std::string> labels_;
};

/// Binary relation over alternatives 0..m-1; `prefers(x, y)` reads x ≻ y.
class StrictRelation
{
public:
    StrictRelation() = default;
    explicit StrictRelation(std::size_t m) : rows_(m, 0)
    {
        if (m > 64) throw BoundError("at most 64 alternatives are supported");
    }

    static StrictRelation from_pairs(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    {
        StrictRelation r(m);
        for (auto [x, y] : pairs) r.add(x, y);
        return r;
    }

    /// The linear order order[0] ≻ order[1] ≻ ... (all implied pairs).
    static StrictRelation linear_order(const std::vector<std::size_t>& order)
    {
        StrictRelation r(order.size());
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b) r.add(order[a], order[b]);
        return r;
    }

    std::size_t size() const noexcept { return rows_.size(); }

    void add(std::size_t x, std::size_t y)
    {
        if (x >= size() || y >= size()) throw BoundError("alternative index out of range");
        rows_[x] |= std::uint64_t{1} << y;
    }

    bool prefers(std::size_t x, std::size_t y) const noexcept { return (rows_[x] >> y) & 1U; }

    std::vector<std::pair<std::size_t, std::size_t>> pairs() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t x = 0; x < size(); ++x)
            for (std::size_t y = 0; y < size(); ++y)
                if (prefers(x, y)) out.emplace_back(x, y);
        return out;
    }

    bool subset_of(const StrictRelation& o) const
    {
        if (o.size() != size()) return false;
        for (std::size_t x = 0; x < size(); ++x)
            if (rows_[x] & ~o.rows_[x]) return false;
        return true;
    }

    friend bool operator==(const StrictRelation&, const StrictRelation&) = default;

private:
    std::vector<std::uint64_t> rows_;
};

/// No directed cycle, which rules out self-loops and 2-cycles as well.
inline bool is_acyclic(const StrictRelation& r)
{
    const std::size_t m = r.size();
    std::vector<std::size_t> indegree(m, 0);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (r.prefers(x, y)) ++indegree[y];
    std::vector<std::size_t> ready;
    for (std::size_t y = 0; y < m; ++y)
        if (indegree[y] == 0) ready.push_back(y);
    std::size_t removed = 0;
    while (!ready.empty()) {
        const std::size_t x = ready.back();
        ready.pop_back();
        ++removed;
        for (std::size_t y = 0; y < m; ++y)
            if (r.prefers(x, y) && --indegree[y] == 0) ready.push_back(y);
    }
    return removed == m;
}

/// Every acyclic relation on m alternatives, in increasing order of the
/// bit encoding of their off-diagonal pairs.
inline std::vector<StrictRelation> all_acyclic_relations(std::size_t m)
{
    if (m > 4) throw BoundError("acyclic relations are enumerated for at most 4 alternatives");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (x != y) slots.emplace_back(x, y);
    std::vector<StrictRelation> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots.size()); ++code) {
        StrictRelation r(m);
        for (std::size_t b = 0; b < slots.size(); ++b)
            if ((code >> b) & 1U) r.add(slots[b].first, slots[b].second);
        if (is_acyclic(r)) out.push_back(std::move(r));
    }
    return out;
}

/// One acyclic strict preference per player.
class Profile
{
public:
    explicit Profile(std::vector<StrictRelation> relations) : relations_(std::move(relations))
    {
        for (const auto& r : relations_) {
            if (!relations_.empty() && r.size() != relations_.front().size())
                throw Error("profile relations disagree on the number of alternatives");
            if (!is_acyclic(r)) throw Error("profile contains a cyclic preference");
        }
    }

    std::size_t players() const noexcept { return relations_.size(); }
    const StrictRelation& operator[](std::size_t i) const { return relations_.at(i); }
    const std::vector<StrictRelation>& relations() const noexcept { return relations_; }

    /// Players i with x ≻_i y.
    std::uint64_t supporters(std::size_t x, std::size_t y) const
    {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < relations_.size(); ++i)
            if (relations_[i].prefers(x, y)) m |= std::uint64_t{1} << i;
        return m;
    }

private:
    std::vector<StrictRelation> relations_;
};

/// x dominates y iff some winning coalition unanimously prefers x to y.
/// The result is returned as a raw relation; it may contain cycles.
inline StrictRelation dominance(const FiniteGame& g, const AlternativeSet& alts, const Profile& p)
{
    if (p.players() != g.universe())
        throw Error("profile has " + std::to_string(p.players()) + " players, game universe is " +
                    std::to_string(g.universe()));
    const std::size_t m = alts.size();
    if (p.players() > 0 && p[0].size() != m) throw Error("profile and alternative set sizes differ");
    StrictRelation dom(m);
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
            const std::uint64_t support = p.supporters(x, y);
            for (std::uint64_t s : g.winning_masks()) {
                if ((s & ~support) == 0) {
                    dom.add(x, y);
                    break;
                }
            }
        }
    }
    return dom;
}

/// Undominated alternatives (indices into `alts`).
inline std::vector<std::size_t> core(const FiniteGame& g, const AlternativeSet& alts, const Profile& p)
{
    if (g.empty_is_winning()) throw Error("core requires the empty coalition to be losing");
    const StrictRelation dom = dominance(g, alts, p);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < alts.size(); ++x) {
        bool dominated = false;
        for (std::size_t y = 0; y < alts.size() && !dominated; ++y) dominated = dom.prefers(y, x);
        if (!dominated) out.push_back(x);
    }
    return out;
}

struct CoreCheckMode
{
    enum class Kind { Exhaustive, Sampled };
    Kind kind = Kind::Exhaustive;
    std::uint64_t seed = 0;
    std::size_t count = 1000;

    static CoreCheckMode exhaustive() { return {}; }
    static CoreCheckMode sampled(std::uint64_t seed, std::size_t count)
    {
        return {Kind::Sampled, seed, count};
    }
};

struct CoreTheoremVerdict
{
    std::size_t nu = kInfinity;
    std::size_t alternatives = 0;
    /// m < nu: every profile should have a nonempty core.
    bool expect_nonempty_core = true;
    bool holds = false;
    std::size_t profiles_checked = 0;
    /// For m >= nu, the verified empty-core profile; for m < nu, a
    /// counterexample to the theorem if one was found.
    std::optional<Profile> empty_core_profile;
    std::string method;
};

/// Cyclic profile from a Nakamura witness B_0..B_{nu-1}: player i is
/// assigned the first block j it does not belong to and ranks the first
/// nu alternatives cyclically starting after x_j, so x_t beats x_{t+1}
/// inside B_t. Remaining alternatives are ranked last by everybody.
inline Profile nakamura_cycle_profile(const FiniteGame& g, const std::vector<Coalition>& witness, std::size_t m)
{
    const std::size_t nu = witness.size();
    if (nu == 0 || m < nu) throw Error("cycle profile needs a witness of size <= number of alternatives");
    std::vector<StrictRelation> rels;
    for (Player i = 0; i < g.universe(); ++i) {
        std::size_t j = 0;
        while (j < nu && witness[j].contains(i)) ++j;
        if (j == nu) throw Error("witness coalitions share a player");
        std::vector<std::size_t> order;
        for (std::size_t t = 1; t <= nu; ++t) order.push_back((j + t) % nu);
        for (std::size_t x = nu; x < m; ++x) order.push_back(x);
        rels.push_back(StrictRelation::linear_order(order));
    }
    return Profile(std::move(rels));
}

namespace detail {

inline std::vector<std::size_t> random_permutation(std::size_t m, std::mt19937_64& rng)
{
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
}

/// Every acyclic relation is a subset of a linear order, so a random
/// order thinned pairwise reaches all of them.
inline StrictRelation random_acyclic(std::size_t m, std::mt19937_64& rng)
{
    const auto order = random_permutation(m, rng);
    StrictRelation r(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (rng() & 1U) r.add(order[a], order[b]);
    return r;
}

} // namespace detail

/// Confirms the core theorem for one game and one number of alternatives.
///
/// m < nu: enumerates (exhaustive, m <= 3 and at most 4 players) or
/// samples profiles and requires every core to be nonempty.
/// m >= nu: builds the cyclic profile from a Nakamura witness, verifies
/// its core is empty, and falls back to a search over linear-order
/// profiles if it is not.
inline CoreTheoremVerdict verify_core_theorem(const FiniteGame& g, std::size_t m, const CoreCheckMode& mode)
{
    if (m == 0) throw Error("need at least one alternative");
    if (g.empty_is_winning()) throw Error("core theorem requires the empty coalition to be losing");
    if (is_weak(g)) throw Error("core theorem requires a nonweak game");

    const NakamuraResult nr = nakamura_number(g);
    const AlternativeSet alts = AlternativeSet::indexed(m);
    const std::size_t n = g.universe();
    CoreTheoremVerdict v;
    v.nu = nr.value;
    v.alternatives = m;
    v.expect_nonempty_core = m < nr.value;

    if (v.expect_nonempty_core) {
        auto check = [&](const Profile& p) {
            ++v.profiles_checked;
            if (core(g, alts, p).empty()) {
                v.empty_core_profile = p;
                return false;
            }
            return true;
        };
        if (mode.kind == CoreCheckMode::Kind::Exhaustive) {
            if (m > 3 || n > 4)
                throw BoundError("exhaustive core check is limited to 3 alternatives and 4 players");
            v.method = "exhaustive";
            const auto rels = all_acyclic_relations(m);
            std::vector<std::size_t> digits(n, 0);
            for (;;) {
                std::vector<StrictRelation> pr;
                for (std::size_t i = 0; i < n; ++i) pr.push_back(rels[digits[i]]);
                if (!check(Profile(std::move(pr)))) break;
                std::size_t pos = n;
                while (pos > 0 && ++digits[pos - 1] == rels.size()) digits[--pos] = 0;
                if (pos == 0) break;
            }
        } else {
            v.method = "sampled";
            std::mt19937_64 rng(mode.seed);
            std::vector<StrictRelation> rels;
            if (m <= 3) rels = all_acyclic_relations(m);
            for (std::size_t k = 0; k < mode.count; ++k) {
                std::vector<StrictRelation> pr;
                for (std::size_t i = 0; i < n; ++i)
                    pr.push_back(m <= 3 ? rels[rng() % rels.size()] : detail::random_acyclic(m, rng));
                if (!check(Profile(std::move(pr)))) break;
            }
        }
        v.holds = !v.empty_core_profile.has_value();
        return v;
    }

    Profile built = nakamura_cycle_profile(g, nr.witness, m);
    ++v.profiles_checked;
    if (core(g, alts, built).empty()) {
        v.method = "constructed";
        v.empty_core_profile = std::move(built);
        v.holds = true;
        return v;
    }

    // Fallback: search linear-order profiles in lexicographic order.
    v.method = "search";
    std::vector<std::vector<std::size_t>> orders;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do orders.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    double space = 1.0;
    for (std::size_t i = 0; i < n; ++i) space *= static_cast<double>(orders.size());
    if (space > 4.0e6) return v;
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
        std::vector<StrictRelation> pr;
        for (std::size_t i = 0; i < n; ++i) pr.push_back(StrictRelation::linear_order(orders[digits[i]]));
        Profile p(std::move(pr));
        ++v.profiles_checked;
        if (core(g, alts, p).empty()) {
            v.empty_core_profile = std::move(p);
            v.holds = true;
            return v;
        }
        std::size_t pos = n;
        while (pos > 0 && ++digits[pos - 1] == orders.size()) digits[--pos] = 0;
        if (pos == 0) break;
    }
    return v;
}

} // namespace nakamura
