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
// Layered machines described implicitly by a transition function. A machine
// has length(), alphabet(), start(), step(layer, state, symbol), accepts(state),
// bits() and label(state). State 0 is the accepting sink and state 1 the
// rejecting sink; both are absorbing. Real states are >= 2.

#ifndef NECKLACE_MACHINES_HPP
#define NECKLACE_MACHINES_HPP

#include "necklace/core.hpp"
#include "necklace/strings.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

namespace necklace {

using StateKey = unsigned __int128;
inline constexpr StateKey kAcceptSink = 0;
inline constexpr StateKey kRejectSink = 1;
using Label = std::vector<std::int64_t>;

inline bool is_sink(StateKey s) noexcept { return s < 2; }

/// Which part of the rotation test a RotationWitness machine decides.
enum class WitnessMode {
    Contiguous,  // some block-aligned substring lies in L_x
    Wraparound,  // a suffix x[0..L) plus a prefix of y form a member of L_x
    Both,        // union of the two: some block-aligned rotation beats x
};

/// Words y of length N = t*n over `alphabet` having a rotation by a multiple of t that
/// is below x (Direction::Less) or above x (Direction::Greater).
///
/// The suffix half tracks the longest block-aligned suffix of y in Prefix(L_x). The
/// prefix half tracks where y falls among the sorted block-aligned proper suffixes
/// x[L..N): while y is still a prefix of some of them it keeps that interval, then it
/// keeps y's insertion rank. Rot^L(y) wraps into a witness exactly when y ends with
/// x[0..L) and y beats x[L..N) strictly.
class RotationWitness {
public:
    RotationWitness(std::vector<std::uint32_t> x, std::uint32_t alphabet, std::size_t block,
                    Direction direction = Direction::Less, WitnessMode mode = WitnessMode::Both);

    std::size_t length() const noexcept { return length_; }
    std::uint32_t alphabet() const noexcept { return alphabet_; }
    std::size_t block() const noexcept { return block_; }
    unsigned bits() const noexcept { return bits_; }
    /// True when L_x is empty, so nothing is ever accepted.
    bool trivial() const noexcept { return start_ == kRejectSink; }

    StateKey start() const noexcept { return start_; }
    StateKey step(std::size_t layer, StateKey state, std::uint32_t symbol) const;
    bool accepts(StateKey state) const;
    Label label(StateKey state) const;

private:
    struct Tables;
    std::shared_ptr<const Tables> tables_;
    std::size_t length_ = 0;
    std::uint32_t alphabet_ = 0;
    std::size_t block_ = 1;
    unsigned bits_ = 0;
    StateKey start_ = kRejectSink;
};

/// A_0: binary words of n blocks of t bits where every block, read big-endian, is below q.
class AlphabetRestriction {
public:
    AlphabetRestriction(std::size_t n, const BigCount& q);

    std::size_t length() const noexcept { return n_ * bound_.size(); }
    std::uint32_t alphabet() const noexcept { return 2; }
    unsigned bits() const noexcept { return 2; }

    StateKey start() const noexcept { return 3; }
    StateKey step(std::size_t layer, StateKey state, std::uint32_t symbol) const;
    bool accepts(StateKey state) const noexcept { return state != kRejectSink; }
    Label label(StateKey state) const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> bound_;  // bits of q-1, most significant first
};

namespace detail {

inline void check_compatible(std::size_t la, std::uint32_t aa, std::size_t lb, std::uint32_t ab) {
    if (la != lb || aa != ab) {
        fail(ErrorCode::LayerMismatch, "machines differ in length or alphabet");
    }
}

inline Label sink_label(StateKey s) { return {s == kAcceptSink ? -1 : -2}; }

}  // namespace detail

template <class A, class B, bool Conjunction>
class Product {
public:
    Product(A a, B b) : a_(std::move(a)), b_(std::move(b)) {
        detail::check_compatible(a_.length(), a_.alphabet(), b_.length(), b_.alphabet());
        if (a_.bits() + b_.bits() + 1 > 127) fail(ErrorCode::TooBig, "product state does not fit");
    }

    std::size_t length() const noexcept { return a_.length(); }
    std::uint32_t alphabet() const noexcept { return a_.alphabet(); }
    unsigned bits() const noexcept { return a_.bits() + b_.bits() + 1; }

    StateKey start() const { return pack(a_.start(), b_.start()); }

    StateKey step(std::size_t layer, StateKey state, std::uint32_t symbol) const {
        if (is_sink(state)) return state;
        const auto [sa, sb] = unpack(state);
        const StateKey na = is_sink(sa) ? sa : a_.step(layer, sa, symbol);
        const StateKey nb = is_sink(sb) ? sb : b_.step(layer, sb, symbol);
        return pack(na, nb);
    }

    bool accepts(StateKey state) const {
        if (is_sink(state)) return state == kAcceptSink;
        const auto [sa, sb] = unpack(state);
        const bool x = is_sink(sa) ? sa == kAcceptSink : a_.accepts(sa);
        const bool y = is_sink(sb) ? sb == kAcceptSink : b_.accepts(sb);
        return Conjunction ? (x && y) : (x || y);
    }

    Label label(StateKey state) const {
        if (is_sink(state)) return detail::sink_label(state);
        const auto [sa, sb] = unpack(state);
        Label out = is_sink(sa) ? detail::sink_label(sa) : a_.label(sa);
        const Label rest = is_sink(sb) ? detail::sink_label(sb) : b_.label(sb);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    const A& first() const noexcept { return a_; }
    const B& second() const noexcept { return b_; }

private:
    StateKey pack(StateKey sa, StateKey sb) const {
        if (Conjunction) {
            if (sa == kRejectSink || sb == kRejectSink) return kRejectSink;
            if (sa == kAcceptSink && sb == kAcceptSink) return kAcceptSink;
        } else {
            if (sa == kAcceptSink || sb == kAcceptSink) return kAcceptSink;
            if (sa == kRejectSink && sb == kRejectSink) return kRejectSink;
        }
        return 2 + (sa | (sb << a_.bits()));
    }

    std::pair<StateKey, StateKey> unpack(StateKey state) const {
        const StateKey raw = state - 2;
        const StateKey mask = (StateKey(1) << a_.bits()) - 1;
        return {raw & mask, raw >> a_.bits()};
    }

    A a_;
    B b_;
};

template <class A, class B>
using Intersection = Product<A, B, true>;
template <class A, class B>
using Union = Product<A, B, false>;

template <class A>
class Complement {
public:
    explicit Complement(A a) : a_(std::move(a)) {}

    std::size_t length() const noexcept { return a_.length(); }
    std::uint32_t alphabet() const noexcept { return a_.alphabet(); }
    unsigned bits() const noexcept { return a_.bits(); }

    StateKey start() const { return swap(a_.start()); }
    StateKey step(std::size_t layer, StateKey state, std::uint32_t symbol) const {
        if (is_sink(state)) return state;
        return swap(a_.step(layer, state, symbol));
    }
    bool accepts(StateKey state) const {
        if (is_sink(state)) return state == kAcceptSink;
        return !a_.accepts(state);
    }
    Label label(StateKey state) const {
        if (is_sink(state)) return detail::sink_label(state);
        return a_.label(state);
    }

private:
    static StateKey swap(StateKey s) noexcept {
        if (s == kAcceptSink) return kRejectSink;
        if (s == kRejectSink) return kAcceptSink;
        return s;
    }

    A a_;
};

template <class A, class B>
Intersection<A, B> intersect(A a, B b) {
    return Intersection<A, B>(std::move(a), std::move(b));
}

template <class A, class B>
Union<A, B> unite(A a, B b) {
    return Union<A, B>(std::move(a), std::move(b));
}

template <class A>
Complement<A> complement(A a) {
    return Complement<A>(std::move(a));
}

/// Open-addressing map from states to counts, reused across layers.
class LayerTable {
public:
    LayerTable() { rehash(64); }

    BigCount& slot(StateKey key);
    void clear();
    std::size_t size() const noexcept { return used_.size(); }

    template <class F>
    void for_each(F&& f) const {
        for (auto idx : used_) f(keys_[idx], values_[idx]);
    }

private:
    void rehash(std::size_t capacity);
    static std::size_t hash(StateKey key) noexcept;

    std::vector<StateKey> keys_;
    std::vector<std::uint8_t> full_;
    std::vector<BigCount> values_;
    std::vector<std::size_t> used_;
    std::size_t mask_ = 0;
};

struct CountStats {
    std::size_t max_layer_states = 0;
    std::size_t total_states = 0;
};

/// Number of accepted words, by a forward pass that keeps one count per live state.
template <class M>
BigCount count_machine(const M& m, CountStats* stats = nullptr) {
    const std::size_t n = m.length();
    const std::uint32_t a = m.alphabet();
    BigCount accepted = 0;
    StateKey s0 = m.start();
    if (s0 == kAcceptSink) return power(a, n);
    if (s0 == kRejectSink) return 0;

    LayerTable cur, next;
    cur.slot(s0) = 1;
    BigCount sunk;
    for (std::size_t layer = 0; layer < n; ++layer) {
        next.clear();
        sunk = 0;
        cur.for_each([&](StateKey key, const BigCount& count) {
            for (std::uint32_t c = 0; c < a; ++c) {
                const StateKey to = m.step(layer, key, c);
                if (to == kAcceptSink) {
                    sunk += count;
                } else if (to != kRejectSink) {
                    next.slot(to) += count;
                }
            }
        });
        if (sunk != 0) accepted += sunk * power(a, n - layer - 1);
        std::swap(cur, next);
        if (stats) {
            stats->max_layer_states = std::max(stats->max_layer_states, cur.size());
            stats->total_states += cur.size();
        }
    }
    cur.for_each([&](StateKey key, const BigCount& count) {
        if (m.accepts(key)) accepted += count;
    });
    return accepted;
}

/// Runs a machine on one word.
template <class M>
bool machine_accepts(const M& m, const std::vector<std::uint32_t>& word) {
    if (word.size() != m.length()) fail(ErrorCode::InvalidArgument, "word length does not match machine");
    StateKey s = m.start();
    for (std::size_t i = 0; i < word.size() && !is_sink(s); ++i) {
        if (word[i] >= m.alphabet()) fail(ErrorCode::InvalidArgument, "symbol outside machine alphabet");
        s = m.step(i, s, word[i]);
    }
    return is_sink(s) ? s == kAcceptSink : m.accepts(s);
}

}  // namespace necklace

#endif  // NECKLACE_MACHINES_HPP
