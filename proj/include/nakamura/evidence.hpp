// evidence.hpp -- bounded classification evidence for prefix games
//
// Axioms of an infinite game are not decidable in general. What can be
// checked is a finite family of coalitions (eventually periodic streams)
// evaluated to a depth bound: any violation found is a genuine
// certificate, and the absence of violations is reported as evidence only.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nakamura/axioms.hpp"
#include "nakamura/game.hpp"
#include "nakamura/nakamura.hpp"

namespace nakamura {

namespace detail {

/// Bits needed to compare any two streams of the family exactly, or 0 if
/// the family is not eventually periodic or needs more than 64 bits.
inline std::size_t family_horizon(const std::vector<MembershipStream>& streams)
{
    std::size_t pre = 0;
    std::size_t per = 1;
    for (const auto& s : streams) {
        const auto* ep = s.as_eventually_periodic();
        if (!ep) return 0;
        pre = std::max(pre, ep->prefix.size());
        per = std::lcm(per, ep->period.size());
        if (pre + per > 64) return 0;
    }
    return pre + per;
}

inline std::uint64_t leading_mask(const MembershipStream& s, std::size_t h)
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < h; ++i)
        if (s.bit(i)) m |= std::uint64_t{1} << i;
    return m;
}

} // namespace detail

/// Every eventually periodic stream with |prefix| <= max_prefix and
/// 1 <= |period| <= max_period, one representative per distinct set
/// (the first generated, in order of prefix length, prefix, period length,
/// period).
inline std::vector<MembershipStream> eventually_periodic_streams(std::size_t max_prefix, std::size_t max_period)
{
    if (max_period == 0) throw Error("streams need a nonempty period");
    std::size_t per = 1;
    for (std::size_t q = 1; q <= max_period; ++q) per = std::lcm(per, q);
    if (max_prefix + per > 64) throw BoundError("stream family too wide to compare exactly");
    const std::size_t h = max_prefix + per;

    std::vector<MembershipStream> out;
    std::set<std::uint64_t> seen;
    for (std::size_t pl = 0; pl <= max_prefix; ++pl) {
        for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << pl); ++pm) {
            for (std::size_t ql = 1; ql <= max_period; ++ql) {
                for (std::uint64_t qm = 0; qm < (std::uint64_t{1} << ql); ++qm) {
                    auto s = MembershipStream::eventually_periodic(BitString::from_mask(pm, pl), BitString::from_mask(qm, ql));
                    if (seen.insert(detail::leading_mask(s, h)).second) out.push_back(std::move(s));
                }
            }
        }
    }
    return out;
}

/// alpha followed by all zeros and alpha followed by all ones, for every
/// alpha of length `len`.
inline std::vector<MembershipStream> padded_streams(std::size_t len)
{
    std::vector<MembershipStream> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
        const BitString a = BitString::from_mask(m, len);
        out.push_back(MembershipStream::eventually_periodic(a, BitString::parse("0")));
        out.push_back(MembershipStream::eventually_periodic(a, BitString::parse("1")));
    }
    return out;
}

struct BoundedEvidence
{
    TypeSignature signature;
    std::size_t depth = 0;
    std::size_t streams = 0;
    std::size_t determined = 0;
    /// A wins, B ⊇ A loses.
    std::optional<std::pair<MembershipStream, MembershipStream>> nonmonotonic;
    /// S and its complement both win.
    std::optional<MembershipStream> nonproper;
    /// S and its complement both lose.
    std::optional<MembershipStream> nonstrong;
    /// A family of winning coalitions with empty intersection.
    std::optional<BoundedWitness> nonweak;
    /// Positions shared by every winning-determining string found (weak
    /// evidence); empty mask if none were found.
    std::optional<std::uint64_t> veto_positions;
    /// Lengths l at which some string of length l has both a winning and a
    /// losing determining extension, i.e. [0,l) is not a carrier.
    std::vector<std::size_t> noncarrier_lengths;
};

/// Lengths l for which some nondetermining string of length l has both a
/// winning-determining and a losing-determining extension within `depth`.
inline std::vector<std::size_t> noncarrier_lengths(const PrefixGame& g, std::size_t depth)
{
    const auto det = minimal_determining_strings(g, depth);
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < depth; ++l) {
        std::set<BitString> win_prefixes;
        for (const auto& w : det.winning)
            if (w.size() > l) win_prefixes.insert(w.prefix(l));
        for (const auto& x : det.losing) {
            if (x.size() > l && win_prefixes.count(x.prefix(l))) {
                out.push_back(l);
                break;
            }
        }
    }
    return out;
}

inline BoundedEvidence classify_bounded(const PrefixGame& g, const std::vector<MembershipStream>& streams,
                                        std::size_t depth, std::size_t family_limit)
{
    const PrefixGame bounded = g.with_max_depth(std::min(depth, g.max_depth()));
    BoundedEvidence ev;
    ev.depth = bounded.max_depth();
    ev.streams = streams.size();
    ev.signature.finite = false;

    std::vector<std::size_t> winners, losers;
    std::vector<Verdict> verdicts;
    verdicts.reserve(streams.size());
    for (std::size_t i = 0; i < streams.size(); ++i) {
        verdicts.push_back(eval_stream(bounded, streams[i]));
        if (verdicts.back().winning()) winners.push_back(i);
        if (verdicts.back().losing()) losers.push_back(i);
    }
    ev.determined = winners.size() + losers.size();

    const std::size_t h = detail::family_horizon(streams);
    std::vector<std::uint64_t> lead;
    if (h != 0)
        for (const auto& st : streams) lead.push_back(detail::leading_mask(st, h));
    auto subset = [&](std::size_t a, std::size_t b) {
        return h != 0 ? (lead[a] & ~lead[b]) == 0 : stream_subset(streams[a], streams[b]);
    };
    for (std::size_t a : winners) {
        for (std::size_t b : losers) {
            if (subset(a, b)) {
                ev.nonmonotonic.emplace(streams[a], streams[b]);
                break;
            }
        }
        if (ev.nonmonotonic) break;
    }
    ev.signature.monotonic = !ev.nonmonotonic;

    for (std::size_t i = 0; i < streams.size() && (!ev.nonproper || !ev.nonstrong); ++i) {
        if (!verdicts[i].determined()) continue;
        const Verdict vc = eval_stream(bounded, streams[i].complement());
        if (!vc.determined()) continue;
        if (verdicts[i].winning() && vc.winning() && !ev.nonproper) ev.nonproper = streams[i];
        if (verdicts[i].losing() && vc.losing() && !ev.nonstrong) ev.nonstrong = streams[i];
    }
    ev.signature.proper = !ev.nonproper;
    ev.signature.strong = !ev.nonstrong;

    ev.nonweak = nakamura_witness_bounded(bounded, ev.depth, family_limit);
    ev.signature.nonweak = ev.nonweak.has_value();
    if (!ev.nonweak) {
        const auto det = minimal_determining_strings(bounded, ev.depth);
        std::uint64_t meet = det.winning.empty() ? 0 : ~std::uint64_t{0};
        for (const auto& w : det.winning) meet &= w.ones_mask();
        ev.veto_positions = meet;
    }
    ev.noncarrier_lengths = noncarrier_lengths(bounded, ev.depth);
    return ev;
}

} // namespace nakamura
