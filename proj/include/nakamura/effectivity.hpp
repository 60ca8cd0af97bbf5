// effectivity.hpp -- game forms and the simple games derived from them by
// alpha-effectivity and by exact effectivity

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nakamura/coalition.hpp"
#include "nakamura/game.hpp"

namespace nakamura {

/// Largest strategy-profile space a game form may have.
inline constexpr std::size_t kMaxStrategyProfiles = std::size_t{1} << 20;

/// Largest outcome set; derived games enumerate every subset of outcomes.
inline constexpr std::size_t kMaxOutcomes = 16;

/// g : Σ_0 × ... × Σ_{k-1} -> X, stored as a table indexed in mixed radix
/// with player 0 as the least significant digit.
class GameForm
{
public:
    GameForm(std::vector<std::size_t> strategy_counts, std::size_t outcome_count, std::vector<std::size_t> table)
      : counts_(std::move(strategy_counts)), outcomes_(outcome_count), table_(std::move(table))
    {
        if (counts_.size() > kMaxExhaustiveUniverse) throw BoundError("too many players in game form");
        if (outcomes_ == 0 || outcomes_ > kMaxOutcomes)
            throw BoundError("game form needs between 1 and " + std::to_string(kMaxOutcomes) + " outcomes");
        std::size_t total = 1;
        for (std::size_t c : counts_) {
            if (c == 0) throw Error("every player needs at least one strategy");
            total *= c;
            if (total > kMaxStrategyProfiles) throw BoundError("strategy profile space exceeds 2^20");
        }
        if (table_.size() != total) throw Error("game form table must cover every strategy profile");
        for (std::size_t o : table_)
            if (o >= outcomes_) throw Error("game form table names an unknown outcome");
    }

    using Rule = std::function<std::size_t(const std::vector<std::size_t>&)>;

    static GameForm from_rule(std::vector<std::size_t> strategy_counts, std::size_t outcome_count, const Rule& rule)
    {
        std::size_t total = 1;
        for (std::size_t c : strategy_counts) {
            total *= std::max<std::size_t>(c, 1);
            if (total > kMaxStrategyProfiles) throw BoundError("strategy profile space exceeds 2^20");
        }
        std::vector<std::size_t> table(total);
        std::vector<std::size_t> sigma(strategy_counts.size(), 0);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t rest = idx;
            for (std::size_t i = 0; i < sigma.size(); ++i) {
                sigma[i] = rest % strategy_counts[i];
                rest /= strategy_counts[i];
            }
            table[idx] = rule(sigma);
        }
        return GameForm(std::move(strategy_counts), outcome_count, std::move(table));
    }

    std::size_t players() const noexcept { return counts_.size(); }
    std::size_t strategies(std::size_t i) const { return counts_.at(i); }
    const std::vector<std::size_t>& strategy_counts() const noexcept { return counts_; }
    std::size_t outcomes() const noexcept { return outcomes_; }
    std::size_t profiles() const noexcept { return table_.size(); }
    std::size_t outcome(std::size_t profile_index) const { return table_.at(profile_index); }

    std::size_t outcome(const std::vector<std::size_t>& sigma) const
    {
        std::size_t idx = 0;
        std::size_t radix = 1;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            idx += sigma.at(i) * radix;
            radix *= counts_[i];
        }
        return table_.at(idx);
    }

private:
    std::vector<std::size_t> counts_;
    std::size_t outcomes_;
    std::vector<std::size_t> table_;
};

/// k players with strategies {0,1}; outcome 1 iff at least k-1 play 1.
inline GameForm veto_free_form(std::size_t k)
{
    return GameForm::from_rule(std::vector<std::size_t>(k, 2), 2, [k](const std::vector<std::size_t>& sigma) {
        const auto ones = static_cast<std::size_t>(std::count(sigma.begin(), sigma.end(), std::size_t{1}));
        return ones + 1 >= k ? std::size_t{1} : std::size_t{0};
    });
}

/// k players with two strategies each; the outcome is always `value`.
inline GameForm constant_form(std::size_t k, std::size_t outcomes, std::size_t value)
{
    return GameForm::from_rule(std::vector<std::size_t>(k, 2), outcomes,
                               [value](const std::vector<std::size_t>&) { return value; });
}

/// For each joint strategy of S, the set (as a mask over outcomes) of
/// outcomes the complement can bring about.
inline std::vector<std::uint64_t> outcome_images(const GameForm& gf, const Coalition& s)
{
    if (s.universe() != gf.players()) throw Error("coalition universe does not match the game form");
    const auto& counts = gf.strategy_counts();
    std::size_t s_profiles = 1;
    for (Player i : s.members()) s_profiles *= counts[i];
    std::vector<std::uint64_t> images(s_profiles, 0);
    for (std::size_t idx = 0; idx < gf.profiles(); ++idx) {
        std::size_t rest = idx;
        std::size_t key = 0;
        std::size_t radix = 1;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const std::size_t digit = rest % counts[i];
            rest /= counts[i];
            if (s.contains(i)) {
                key += digit * radix;
                radix *= counts[i];
            }
        }
        images[key] |= std::uint64_t{1} << gf.outcome(idx);
    }
    return images;
}

/// Some joint strategy of S forces the outcome into B.
inline bool alpha_effective(const GameForm& gf, const Coalition& s, std::uint64_t outcome_set)
{
    for (std::uint64_t img : outcome_images(gf, s))
        if ((img & ~outcome_set) == 0) return true;
    return false;
}

/// Some joint strategy of S leaves the complement exactly the outcomes B.
inline bool exactly_effective(const GameForm& gf, const Coalition& s, std::uint64_t outcome_set)
{
    for (std::uint64_t img : outcome_images(gf, s))
        if (img == outcome_set) return true;
    return false;
}

namespace detail {

template <typename Effective>
FiniteGame derive_game(const GameForm& gf, Effective&& effective)
{
    const std::size_t k = gf.players();
    const std::uint64_t all_outcomes = Coalition::full_mask(gf.outcomes());
    return FiniteGame::from_predicate(k, [&](std::uint64_t mask) {
        const auto images = outcome_images(gf, Coalition(mask, k));
        for (std::uint64_t b = 1; b <= all_outcomes; ++b)
            if (!effective(images, b)) return false;
        return true;
    });
}

} // namespace detail

/// Winning iff alpha-effective for every nonempty set of outcomes.
inline FiniteGame derive_alpha_game(const GameForm& gf)
{
    return detail::derive_game(gf, [](const std::vector<std::uint64_t>& images, std::uint64_t b) {
        return std::any_of(images.begin(), images.end(), [b](std::uint64_t img) { return (img & ~b) == 0; });
    });
}

/// Winning iff exactly effective for every nonempty set of outcomes.
inline FiniteGame derive_exact_game(const GameForm& gf)
{
    return detail::derive_game(gf, [](const std::vector<std::uint64_t>& images, std::uint64_t b) {
        return std::find(images.begin(), images.end(), b) != images.end();
    });
}

} // namespace nakamura
