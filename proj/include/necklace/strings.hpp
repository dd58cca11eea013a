/* Copyright 2026 The necklace Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Words over {0,...,q-1}: rotations, periods, canonical rotations, binary
// encoding of large alphabets, and the witness automaton used to decide
// "some prefix of y certifies y < x".

#ifndef NECKLACE_STRINGS_HPP
#define NECKLACE_STRINGS_HPP

#include "necklace/core.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace necklace {

/// A length-n word over {0,...,q-1}; symbols are arbitrary precision, leftmost first.
class NkString {
public:
    NkString(BigCount q, std::vector<BigCount> digits);

    /// The n-digit base-q expansion of value (most significant digit first).
    static NkString from_integer(const BigCount& value, std::size_t n, const BigCount& q);
    static NkString constant(std::size_t n, const BigCount& q, const BigCount& symbol);
    /// Digit string when q <= 10, comma-separated decimals otherwise (both accepted on input).
    static NkString parse(std::string_view text, const BigCount& q);

    std::size_t size() const noexcept { return digits_.size(); }
    const BigCount& q() const noexcept { return q_; }
    const std::vector<BigCount>& digits() const noexcept { return digits_; }
    const BigCount& operator[](std::size_t i) const { return digits_[i]; }

    BigCount to_integer() const;
    std::string to_string() const;
    /// Symbols as machine words; only valid when q fits in 32 bits.
    std::vector<std::uint32_t> small_symbols() const;
    NkString substr(std::size_t pos, std::size_t len) const;
    bool is_constant(const BigCount& symbol) const;

    friend bool operator==(const NkString& a, const NkString& b) {
        return a.q_ == b.q_ && a.digits_ == b.digits_;
    }
    /// Lexicographic order; both words must share n and q.
    friend std::strong_ordering operator<=>(const NkString& a, const NkString& b);

private:
    BigCount q_;
    std::vector<BigCount> digits_;
};

/// Binary word made of fixed-width big-endian blocks.
struct BinWord {
    std::vector<std::uint8_t> bits;
    std::size_t block = 1;

    std::string to_string() const;
    static BinWord parse(std::string_view text, std::size_t block = 1);
    friend bool operator==(const BinWord&, const BinWord&) = default;
};

/// Rot^i(x): cyclic rotation rightwards by i positions (i taken mod n).
NkString rotate(const NkString& x, std::size_t i);

std::size_t fundamental_period(const NkString& x);

/// Lexicographically least rotation and the smallest shift i with Rot^i(x) equal to it.
std::pair<NkString, std::size_t> min_rotation(const NkString& x);
/// Lexicographically greatest rotation, same shift convention.
std::pair<NkString, std::size_t> max_rotation(const NkString& x);

BinWord bin_encode(const NkString& x);
NkString bin_decode(const BinWord& w, const BigCount& q);

/// w = s0 where s1 is a prefix of x.
bool is_in_Lx(const BinWord& w, const BinWord& x);
/// s is a prefix of some member of L_x (epsilon counts iff L_x is nonempty).
bool is_in_prefix_Lx(const BinWord& s, const BinWord& x);

/// Brute force: some rotation of y is strictly below x.
bool orbit_less_than(const NkString& y, const NkString& x);

/// Which side of the threshold a witness certifies.
enum class Direction { Less, Greater };

/// Prefix(L_x) for a threshold word x, kept positionally: every state is either
/// a prefix x[0..m) or a prefix x[0..k) followed by a replacement symbol c that
/// beats x[k] in the chosen direction (those states are exactly L_x). Failure
/// links and the full transition table follow the Aho-Corasick construction.
class WitnessAutomaton {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    WitnessAutomaton(std::vector<std::uint32_t> x, std::uint32_t alphabet,
                     Direction direction = Direction::Less);

    bool empty() const noexcept { return states_.empty(); }
    std::size_t size() const noexcept { return states_.size(); }
    std::uint32_t root() const noexcept { return 0; }
    std::span<const std::uint32_t> word() const noexcept { return x_; }
    std::uint32_t alphabet() const noexcept { return alphabet_; }
    Direction direction() const noexcept { return direction_; }

    std::uint32_t length(std::uint32_t s) const { return states_[s].length; }
    /// Replacement symbol of a witness state, kNone for plain prefixes of x.
    std::uint32_t replacement(std::uint32_t s) const { return states_[s].replacement; }
    bool is_witness(std::uint32_t s) const { return states_[s].replacement != kNone; }

    /// s followed by c, when that is still in Prefix(L_x); kNone otherwise.
    std::uint32_t extend(std::uint32_t s, std::uint32_t c) const;
    std::uint32_t fail(std::uint32_t s) const { return fail_[s]; }
    /// Longest suffix of s.c lying in Prefix(L_x).
    std::uint32_t next(std::uint32_t s, std::uint32_t c) const {
        return delta_[static_cast<std::size_t>(s) * alphabet_ + c];
    }
    std::uint32_t prefix_state(std::uint32_t m) const { return m; }
    std::uint32_t witness_state(std::uint32_t k, std::uint32_t c) const;
    /// Does replacing x[k] by c produce a witness?
    bool beats(std::uint32_t k, std::uint32_t c) const;

    /// Length of the longest common prefix of x[shift..] and x.
    std::uint32_t shifted_lcp(std::uint32_t shift) const { return z_[shift]; }
    /// For a shift L: the first mismatch i between x[L..] and x when x[i] beats x[L+i]
    /// (so x[0..L) followed by x[0..i] is a witness), kNone otherwise.
    std::uint32_t shifted_witness(std::uint32_t shift) const;

private:
    struct State {
        std::uint32_t length;
        std::uint32_t replacement;
    };

    std::vector<std::uint32_t> x_;
    std::uint32_t alphabet_;
    Direction direction_;
    std::uint32_t max_prefix_ = 0;  // largest m with x[0..m) in Prefix(L_x)
    std::vector<State> states_;
    std::vector<std::uint32_t> witness_offset_;  // first witness id at each position
    std::vector<std::uint32_t> fail_;
    std::vector<std::uint32_t> delta_;
    std::vector<std::uint32_t> z_;
};

}  // namespace necklace

#endif  // NECKLACE_STRINGS_HPP
