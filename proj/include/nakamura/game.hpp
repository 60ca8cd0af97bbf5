// game.hpp -- finite games, prefix games and membership evaluation

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nakamura/coalition.hpp"

namespace nakamura {

/// Largest universe for which operations enumerate every coalition.
inline constexpr std::size_t kMaxExhaustiveUniverse = 24;

/// A simple game whose universe {0,...,n-1} is a carrier.
///
/// Stored as the sorted list of winning coalition masks. For universes up
/// to `kMaxExhaustiveUniverse` a dense lookup table is kept as well.
class FiniteGame
{
public:
    FiniteGame() = default;

    FiniteGame(std::size_t universe, std::vector<std::uint64_t> winning)
      : universe_(universe), winning_(std::move(winning))
    {
        if (universe > kMaxUniverse)
            throw BoundError("universe " + std::to_string(universe) + " exceeds " +
                             std::to_string(kMaxUniverse));
        const std::uint64_t full = Coalition::full_mask(universe);
        for (std::uint64_t m : winning_)
            if ((m & ~full) != 0)
                throw BoundError("winning coalition has members outside universe " +
                                 std::to_string(universe));
        std::sort(winning_.begin(), winning_.end());
        winning_.erase(std::unique(winning_.begin(), winning_.end()), winning_.end());
        if (universe <= kMaxExhaustiveUniverse) {
            auto dense = std::make_shared<std::vector<bool>>(std::size_t{1} << universe, false);
            for (std::uint64_t m : winning_) (*dense)[m] = true;
            dense_ = std::move(dense);
        }
    }

    static FiniteGame from_coalitions(std::size_t universe, const std::vector<std::vector<Player>>& family)
    {
        std::vector<std::uint64_t> masks;
        masks.reserve(family.size());
        for (const auto& members : family) masks.push_back(Coalition::of(members, universe).mask());
        return FiniteGame(universe, std::move(masks));
    }

    /// Winning family {S : pred(mask of S)} over every subset of the universe.
    template <typename Pred>
    static FiniteGame from_predicate(std::size_t universe, Pred&& pred)
    {
        require_exhaustive(universe);
        std::vector<std::uint64_t> masks;
        const std::uint64_t count = std::uint64_t{1} << universe;
        for (std::uint64_t m = 0; m < count; ++m)
            if (pred(m)) masks.push_back(m);
        return FiniteGame(universe, std::move(masks));
    }

    static void require_exhaustive(std::size_t universe)
    {
        if (universe > kMaxExhaustiveUniverse)
            throw BoundError("universe " + std::to_string(universe) +
                             " too large for exhaustive enumeration (max " +
                             std::to_string(kMaxExhaustiveUniverse) + ")");
    }

    std::size_t universe() const noexcept { return universe_; }
    std::span<const std::uint64_t> winning_masks() const noexcept { return winning_; }
    std::size_t winning_count() const noexcept { return winning_.size(); }
    bool empty() const noexcept { return winning_.empty(); }

    /// Membership by mask; bits outside the universe are ignored.
    bool wins(std::uint64_t mask) const
    {
        mask &= Coalition::full_mask(universe_);
        if (dense_) return (*dense_)[mask];
        return std::binary_search(winning_.begin(), winning_.end(), mask);
    }

    /// The standing assumption of the theory is that the empty coalition
    /// loses; games violating it are representable but flagged here.
    bool empty_is_winning() const { return wins(0); }

    std::vector<Coalition> winning() const
    {
        std::vector<Coalition> out;
        out.reserve(winning_.size());
        for (std::uint64_t m : winning_) out.emplace_back(m, universe_);
        return out;
    }

    friend bool operator==(const FiniteGame& a, const FiniteGame& b)
    {
        return a.universe_ == b.universe_ && a.winning_ == b.winning_;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> winning_;
    std::shared_ptr<const std::vector<bool>> dense_;
};

/// Throws if `s` is not over the game's universe.
inline bool is_winning(const FiniteGame& g, const Coalition& s)
{
    if (s.universe() != g.universe())
        throw Error("coalition universe " + std::to_string(s.universe()) +
                    " does not match game universe " + std::to_string(g.universe()));
    return g.wins(s.mask());
}

/// The same game viewed over a larger universe; new players are dummies.
inline FiniteGame embed(const FiniteGame& g, std::size_t universe)
{
    if (universe < g.universe())
        throw BoundError("cannot embed into a smaller universe");
    const std::size_t extra = universe - g.universe();
    if (extra >= 64) throw BoundError("embedding too large");
    std::vector<std::uint64_t> masks;
    const std::uint64_t high_count = std::uint64_t{1} << extra;
    if (g.winning_count() * high_count > (std::uint64_t{1} << kMaxExhaustiveUniverse))
        throw BoundError("embedded game too large to materialize");
    for (std::uint64_t m : g.winning_masks())
        for (std::uint64_t h = 0; h < high_count; ++h)
            masks.push_back(m | (h << g.universe()));
    return FiniteGame(universe, std::move(masks));
}

// ---------------------------------------------------------------------------
// Prefix games
// ---------------------------------------------------------------------------

enum class Determination { WinningDetermining, LosingDetermining, Nondetermining };

inline const char* to_string(Determination d)
{
    switch (d) {
    case Determination::WinningDetermining: return "winning-determining";
    case Determination::LosingDetermining: return "losing-determining";
    case Determination::Nondetermining: return "nondetermining";
    }
    return "?";
}

/// A computable game given operationally: a classifier of bit-strings into
/// winning-determining, losing-determining and nondetermining strings.
/// A coalition wins iff one of its initial segments is winning-determining.
class PrefixGame
{
public:
    using Classifier = std::function<Determination(const BitString&)>;

    PrefixGame(Classifier classify, std::size_t max_depth = 64, std::string description = {})
      : classify_(std::move(classify)), max_depth_(max_depth), description_(std::move(description))
    {
        if (!classify_) throw Error("prefix game needs a classifier");
    }

    Determination classify(const BitString& alpha) const { return classify_(alpha); }
    std::size_t max_depth() const noexcept { return max_depth_; }
    const std::string& description() const noexcept { return description_; }

    PrefixGame with_max_depth(std::size_t depth) const
    {
        PrefixGame g = *this;
        g.max_depth_ = depth;
        return g;
    }

private:
    Classifier classify_;
    std::size_t max_depth_;
    std::string description_;
};

using Game = std::variant<FiniteGame, PrefixGame>;

/// Characteristic function of a (possibly infinite) coalition.
class MembershipStream
{
public:
    struct EventuallyPeriodic
    {
        BitString prefix;
        BitString period;
    };
    using Procedure = std::function<bool(std::size_t)>;

    static MembershipStream eventually_periodic(BitString prefix, BitString period)
    {
        if (period.empty()) throw Error("eventually periodic stream needs a nonempty period");
        return MembershipStream(EventuallyPeriodic{std::move(prefix), std::move(period)});
    }

    static MembershipStream procedural(Procedure bit)
    {
        if (!bit) throw Error("procedural stream needs a bit function");
        return MembershipStream(std::move(bit));
    }

    /// The finite coalition `alpha` followed by zeros.
    static MembershipStream finite(const BitString& alpha)
    {
        return eventually_periodic(alpha, BitString::parse("0"));
    }

    bool bit(std::size_t i) const
    {
        if (const auto* ep = std::get_if<EventuallyPeriodic>(&repr_)) {
            if (i < ep->prefix.size()) return ep->prefix[i];
            return ep->period[(i - ep->prefix.size()) % ep->period.size()];
        }
        return std::get<Procedure>(repr_)(i);
    }

    BitString initial_segment(std::size_t k) const
    {
        std::vector<bool> bits(k);
        for (std::size_t i = 0; i < k; ++i) bits[i] = bit(i);
        return BitString(std::move(bits));
    }

    MembershipStream complement() const
    {
        if (const auto* ep = std::get_if<EventuallyPeriodic>(&repr_))
            return eventually_periodic(string_complement(ep->prefix), string_complement(ep->period));
        Procedure f = std::get<Procedure>(repr_);
        return procedural([f](std::size_t i) { return !f(i); });
    }

    const EventuallyPeriodic* as_eventually_periodic() const
    {
        return std::get_if<EventuallyPeriodic>(&repr_);
    }

    std::string to_string() const
    {
        if (const auto* ep = as_eventually_periodic())
            return ep->prefix.to_string() + "(" + ep->period.to_string() + ")*";
        return "<procedural>";
    }

private:
    explicit MembershipStream(EventuallyPeriodic ep) : repr_(std::move(ep)) {}
    explicit MembershipStream(Procedure p) : repr_(std::move(p)) {}

    std::variant<EventuallyPeriodic, Procedure> repr_;
};

/// Number of leading bits on which two eventually periodic streams must
/// be compared to decide equality or containment exactly.
inline std::size_t comparison_horizon(const MembershipStream& a, const MembershipStream& b)
{
    const auto* ea = a.as_eventually_periodic();
    const auto* eb = b.as_eventually_periodic();
    if (!ea || !eb) throw Error("comparison needs eventually periodic streams");
    const std::size_t pre = std::max(ea->prefix.size(), eb->prefix.size());
    return pre + std::lcm(ea->period.size(), eb->period.size());
}

/// Exact set containment a ⊆ b for eventually periodic streams.
inline bool stream_subset(const MembershipStream& a, const MembershipStream& b)
{
    const std::size_t h = comparison_horizon(a, b);
    for (std::size_t i = 0; i < h; ++i)
        if (a.bit(i) && !b.bit(i)) return false;
    return true;
}

inline bool stream_equal(const MembershipStream& a, const MembershipStream& b)
{
    const std::size_t h = comparison_horizon(a, b);
    for (std::size_t i = 0; i < h; ++i)
        if (a.bit(i) != b.bit(i)) return false;
    return true;
}

/// Outcome of evaluating a stream against a prefix game.
struct Verdict
{
    enum class Kind { Winning, Losing, Undetermined };

    Kind kind = Kind::Undetermined;
    BitString witness;     ///< determining prefix (Winning/Losing only)
    std::size_t depth = 0; ///< witness length, or the depth reached

    bool determined() const noexcept { return kind != Kind::Undetermined; }
    bool winning() const noexcept { return kind == Kind::Winning; }
    bool losing() const noexcept { return kind == Kind::Losing; }
};

inline const char* to_string(Verdict::Kind k)
{
    switch (k) {
    case Verdict::Kind::Winning: return "winning";
    case Verdict::Kind::Losing: return "losing";
    case Verdict::Kind::Undetermined: return "undetermined";
    }
    return "?";
}

/// Scans S[0], S[1], ..., S[max_depth] and stops at the first determining
/// initial segment.
inline Verdict eval_stream(const PrefixGame& g, const MembershipStream& s)
{
    BitString seg;
    for (std::size_t k = 0;; ++k) {
        switch (g.classify(seg)) {
        case Determination::WinningDetermining: return {Verdict::Kind::Winning, seg, k};
        case Determination::LosingDetermining: return {Verdict::Kind::Losing, seg, k};
        case Determination::Nondetermining: break;
        }
        if (k == g.max_depth()) break;
        seg.push_back(s.bit(k));
    }
    return {Verdict::Kind::Undetermined, BitString{}, g.max_depth()};
}

/// Every determining initial segment of `s` up to length `depth`.
inline std::vector<std::pair<BitString, Determination>>
determining_prefixes(const PrefixGame& g, const MembershipStream& s, std::size_t depth)
{
    std::vector<std::pair<BitString, Determination>> out;
    BitString seg;
    for (std::size_t k = 0;; ++k) {
        Determination d = g.classify(seg);
        if (d != Determination::Nondetermining) out.emplace_back(seg, d);
        if (k == depth) break;
        seg.push_back(s.bit(k));
    }
    return out;
}

/// Determining strings of length <= depth none of whose proper initial
/// segments is determining, in shortlex order.
struct DeterminingStrings
{
    std::vector<BitString> winning;
    std::vector<BitString> losing;
};

inline DeterminingStrings minimal_determining_strings(const PrefixGame& g, std::size_t depth)
{
    DeterminingStrings out;
    std::vector<BitString> frontier{BitString{}};
    for (std::size_t len = 0; len <= depth && !frontier.empty(); ++len) {
        std::vector<BitString> next;
        for (const BitString& alpha : frontier) {
            switch (g.classify(alpha)) {
            case Determination::WinningDetermining: out.winning.push_back(alpha); break;
            case Determination::LosingDetermining: out.losing.push_back(alpha); break;
            case Determination::Nondetermining:
                if (len < depth) {
                    next.push_back(alpha + BitString::parse("0"));
                    next.push_back(alpha + BitString::parse("1"));
                }
                break;
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// A finite game as a prefix game: a string decides the outcome exactly
/// when all its extensions to the universe agree.
inline PrefixGame finite_as_prefix(const FiniteGame& g)
{
    FiniteGame::require_exhaustive(g.universe());
    const std::size_t n = g.universe();
    auto classify = [g, n](const BitString& alpha) {
        std::uint64_t fixed = 0;
        const std::size_t known = std::min(alpha.size(), n);
        for (std::size_t i = 0; i < known; ++i)
            if (alpha[i]) fixed |= std::uint64_t{1} << i;
        const std::size_t free_bits = n - known;
        bool any_win = false;
        bool any_lose = false;
        for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << free_bits); ++tail) {
            if (g.wins(fixed | (tail << known)))
                any_win = true;
            else
                any_lose = true;
            if (any_win && any_lose) return Determination::Nondetermining;
        }
        return any_win ? Determination::WinningDetermining : Determination::LosingDetermining;
    };
    return PrefixGame(std::move(classify), std::max<std::size_t>(n, 1), "finite game on " + std::to_string(n) + " players");
}

} // namespace nakamura
