// coalition.hpp -- bit-strings, bounded coalitions and their algebra

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nakamura {

/// Player identifier. Players of a bounded universe are 0..n-1.
using Player = std::size_t;

/// Largest supported universe; a coalition fits in one machine word.
inline constexpr std::size_t kMaxUniverse = 63;

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A player id or a string length exceeds the universe it is used in.
class BoundError : public Error
{
public:
    using Error::Error;
};

/// Finite sequence over {0,1}.
class BitString
{
public:
    BitString() = default;

    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Parses ASCII "0"/"1" text. Throws `Error` on any other character.
    static BitString parse(std::string_view text)
    {
        std::vector<bool> bits;
        bits.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1')
                throw Error("bit-string may only contain '0' and '1': \"" +
                            std::string(text) + "\"");
            bits.push_back(c == '1');
        }
        return BitString(std::move(bits));
    }

    /// The first `length` bits of a coalition's characteristic function.
    static BitString from_mask(std::uint64_t mask, std::size_t length)
    {
        std::vector<bool> bits(length);
        for (std::size_t i = 0; i < length && i < 64; ++i)
            bits[i] = (mask >> i) & 1U;
        return BitString(std::move(bits));
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    bool at(std::size_t i) const { return bits_.at(i); }

    void push_back(bool bit) { bits_.push_back(bit); }

    /// Initial segment of length `k` (the whole string if shorter).
    BitString prefix(std::size_t k) const
    {
        k = std::min(k, bits_.size());
        return BitString(std::vector<bool>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(k)));
    }

    /// Concatenation.
    BitString operator+(const BitString& rhs) const
    {
        std::vector<bool> bits = bits_;
        bits.insert(bits.end(), rhs.bits_.begin(), rhs.bits_.end());
        return BitString(std::move(bits));
    }

    /// Positions holding a one, packed into a word. Requires size() <= 64.
    std::uint64_t ones_mask() const
    {
        if (bits_.size() > 64)
            throw BoundError("bit-string longer than 64 cannot be packed");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) m |= std::uint64_t{1} << i;
        return m;
    }

    std::string to_string() const
    {
        std::string s;
        s.reserve(bits_.size());
        for (bool b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    const std::vector<bool>& bits() const noexcept { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;

    /// Shortlex order: shorter strings first, then lexicographic.
    friend bool operator<(const BitString& a, const BitString& b)
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits_ < b.bits_;
    }

private:
    std::vector<bool> bits_;
};

/// Bitwise complement, same length.
inline BitString string_complement(const BitString& alpha)
{
    std::vector<bool> bits(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) bits[i] = !alpha[i];
    return BitString(std::move(bits));
}

/// True iff `alpha` is an initial segment of `beta`.
inline bool is_initial_segment(const BitString& alpha, const BitString& beta)
{
    if (alpha.size() > beta.size()) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != beta[i]) return false;
    return true;
}

/// True iff neither string is an initial segment of the other.
inline bool incompatible(const BitString& alpha, const BitString& beta)
{
    return !is_initial_segment(alpha, beta) && !is_initial_segment(beta, alpha);
}

/// Finite set of players inside the bounded universe {0,...,n-1}, n <= 63.
class Coalition
{
public:
    Coalition() = default;

    /// Throws `BoundError` if the universe is too large or the mask has
    /// members outside it.
    Coalition(std::uint64_t mask, std::size_t universe) : mask_(mask), universe_(universe)
    {
        if (universe > kMaxUniverse)
            throw BoundError("universe " + std::to_string(universe) + " exceeds " +
                             std::to_string(kMaxUniverse));
        if ((mask & ~full_mask(universe)) != 0)
            throw BoundError("coalition has members outside universe " + std::to_string(universe));
    }

    static Coalition empty(std::size_t universe) { return Coalition(0, universe); }
    static Coalition grand(std::size_t universe) { return Coalition(full_mask(universe), universe); }

    static Coalition of(std::initializer_list<Player> members, std::size_t universe)
    {
        return of(std::vector<Player>(members), universe);
    }

    static Coalition of(const std::vector<Player>& members, std::size_t universe)
    {
        std::uint64_t m = 0;
        for (Player p : members) {
            if (p >= universe)
                throw BoundError("player " + std::to_string(p) + " outside universe " +
                                 std::to_string(universe));
            m |= std::uint64_t{1} << p;
        }
        return Coalition(m, universe);
    }

    /// All-ones word for players 0..n-1.
    static constexpr std::uint64_t full_mask(std::size_t universe) noexcept
    {
        return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
    }

    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }

    bool contains(Player p) const noexcept { return p < 64 && ((mask_ >> p) & 1U); }

    bool subset_of(const Coalition& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    /// Complement within the universe.
    Coalition complement() const { return Coalition(~mask_ & full_mask(universe_), universe_); }

    Coalition operator&(const Coalition& o) const { return Coalition(mask_ & o.mask_, std::max(universe_, o.universe_)); }
    Coalition operator|(const Coalition& o) const { return Coalition(mask_ | o.mask_, std::max(universe_, o.universe_)); }

    std::vector<Player> members() const
    {
        std::vector<Player> out;
        for (std::uint64_t m = mask_; m != 0; m &= m - 1)
            out.push_back(static_cast<Player>(std::countr_zero(m)));
        return out;
    }

    /// Binary literal, bit i = player i (e.g. "0b1101").
    std::string to_binary_literal() const
    {
        if (mask_ == 0) return "0b0";
        std::string s = "0b";
        for (int i = 63 - std::countl_zero(mask_); i >= 0; --i)
            s.push_back(((mask_ >> i) & 1U) ? '1' : '0');
        return s;
    }

    friend bool operator==(const Coalition& a, const Coalition& b) noexcept
    {
        return a.mask_ == b.mask_ && a.universe_ == b.universe_;
    }

private:
    std::uint64_t mask_ = 0;
    std::size_t universe_ = 0;
};

/// The set {i < |alpha| : alpha(i) = 1}, zero-padded up to `universe`.
inline Coalition ones_coalition(const BitString& alpha, std::size_t universe)
{
    if (universe < alpha.size())
        throw BoundError("universe " + std::to_string(universe) + " shorter than string of length " +
                         std::to_string(alpha.size()));
    return Coalition(alpha.ones_mask(), universe);
}

} // namespace nakamura
