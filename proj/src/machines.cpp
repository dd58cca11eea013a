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

#include "necklace/machines.hpp"

#include <bit>
#include <numeric>

namespace necklace {

namespace {

unsigned width(std::uint64_t v) { return static_cast<unsigned>(std::bit_width(v)); }

}  // namespace

struct RotationWitness::Tables {
    WitnessAutomaton automaton;
    std::size_t length = 0;
    std::size_t block = 1;
    Direction direction = Direction::Less;
    WitnessMode mode = WitnessMode::Both;

    std::vector<std::uint32_t> trans;  // ((s * alphabet) + c) * block + r
    std::vector<std::uint8_t> witness;  // s * block + r
    std::vector<std::uint32_t> order;   // block-aligned shifts L, sorted by x[L..N)
    std::vector<std::int32_t> best;     // per state: best sorted position along its chain

    unsigned sid_bits = 0;
    unsigned rank_bits = 0;
    unsigned bits = 0;
    StateKey start = kRejectSink;

    Tables(std::vector<std::uint32_t> x, std::uint32_t alphabet, Direction dir)
        : automaton(std::move(x), alphabet, dir), direction(dir) {}

    bool less() const { return direction == Direction::Less; }

    // Prefix half codes: alive interval [lo, hi) or frozen insertion rank.
    std::uint64_t alive(std::uint32_t lo, std::uint32_t hi) const {
        return 1 | (std::uint64_t(lo) << 1) | (std::uint64_t(hi) << (1 + rank_bits));
    }
    std::uint64_t frozen(std::uint32_t r) const { return std::uint64_t(r) << 1; }

    StateKey encode(std::uint32_t sid, std::uint64_t pcode) const {
        return 2 + (StateKey(sid) | (StateKey(pcode) << sid_bits));
    }
    std::pair<std::uint32_t, std::uint64_t> decode(StateKey state) const {
        const StateKey raw = state - 2;
        const auto sid = static_cast<std::uint32_t>(raw & ((StateKey(1) << sid_bits) - 1));
        return {sid, static_cast<std::uint64_t>(raw >> sid_bits)};
    }

    std::uint64_t advance_prefix(std::uint64_t pcode, std::size_t layer, std::uint32_t c) const;
    bool wraps(std::uint32_t sid, std::uint64_t pcode) const;
};

std::uint64_t RotationWitness::Tables::advance_prefix(std::uint64_t pcode, std::size_t layer,
                                                      std::uint32_t c) const {
    if ((pcode & 1) == 0) return pcode;
    const std::uint64_t mask = (std::uint64_t(1) << rank_bits) - 1;
    auto lo = static_cast<std::uint32_t>((pcode >> 1) & mask);
    auto hi = static_cast<std::uint32_t>((pcode >> (1 + rank_bits)) & mask);
    const auto x = automaton.word();

    // At most one shift in the interval is exhausted (x[L..N) has length exactly
    // `layer`); it sorts first when the end marker is smallest and last otherwise.
    std::uint32_t ended = 0;
    std::uint32_t from = lo, to = hi;
    if (less() && from < to && order[from] + layer == length) {
        ended = 1;
        ++from;
    } else if (!less() && from < to && order[to - 1] + layer == length) {
        --to;
    }
    auto key = [&](std::uint32_t i) { return x[order[i] + layer]; };
    std::uint32_t first = from, count = to - from;
    while (count > 0) {
        const std::uint32_t half = count / 2;
        if (key(first + half) < c) {
            first += half + 1;
            count -= half + 1;
        } else {
            count = half;
        }
    }
    std::uint32_t last = first;
    while (last < to && key(last) == c) ++last;
    if (last > first) return alive(first, last);
    // y leaves every tracked suffix here; record how many of them sort below y.
    return frozen(lo + ended + (first - from));
}

bool RotationWitness::Tables::wraps(std::uint32_t sid, std::uint64_t pcode) const {
    if (pcode & 1) return false;  // still a prefix of a proper suffix of x: cannot happen at the end
    const auto r = static_cast<std::int32_t>(pcode >> 1);
    const std::int32_t b = best[sid];
    return less() ? b >= r : b < r;
}

RotationWitness::RotationWitness(std::vector<std::uint32_t> x, std::uint32_t alphabet, std::size_t block,
                                 Direction direction, WitnessMode mode) {
    if (block == 0 || x.empty() || x.size() % block != 0) {
        fail(ErrorCode::InvalidArgument, "threshold length must be a positive multiple of the block width");
    }
    auto t = std::make_shared<Tables>(std::move(x), alphabet, direction);
    t->length = t->automaton.word().size();
    t->block = block;
    t->mode = mode;
    const auto& aut = t->automaton;
    if (aut.empty()) {
        t->bits = 2;
        t->start = kRejectSink;
        tables_ = std::move(t);
        length_ = tables_->length;
        alphabet_ = alphabet;
        block_ = block;
        bits_ = 2;
        return;
    }

    const std::size_t states = aut.size();
    const std::uint32_t a = alphabet;
    const std::size_t n = t->length;

    std::vector<std::uint32_t> by_length(states);
    std::iota(by_length.begin(), by_length.end(), 0u);
    std::stable_sort(by_length.begin(), by_length.end(),
                     [&](std::uint32_t u, std::uint32_t v) { return aut.length(u) < aut.length(v); });

    // Block-aligned transition: follow failure links until a state whose extension
    // ends on the right coordinate class.
    t->trans.assign(states * a * block, 0);
    t->witness.assign(states * block, 0);
    for (std::uint32_t s : by_length) {
        const std::uint32_t len = aut.length(s);
        for (std::uint32_t c = 0; c < a; ++c) {
            const std::uint32_t e = aut.extend(s, c);
            for (std::size_t r = 0; r < block; ++r) {
                std::uint32_t v;
                if (e != WitnessAutomaton::kNone && (len + 1) % block == r) {
                    v = e;
                } else if (s == aut.root()) {
                    v = aut.root();
                } else {
                    v = t->trans[(static_cast<std::size_t>(aut.fail(s)) * a + c) * block + r];
                }
                t->trans[(static_cast<std::size_t>(s) * a + c) * block + r] = v;
            }
        }
        for (std::size_t r = 0; r < block; ++r) {
            bool w = aut.is_witness(s) && len % block == r;
            if (!w && s != aut.root()) w = t->witness[aut.fail(s) * block + r] != 0;
            t->witness[s * block + r] = w ? 1 : 0;
        }
    }

    // Proper block-aligned suffixes, sorted with the end marker below every symbol
    // (Less) or above every symbol (Greater).
    const auto xs = aut.word();
    for (std::size_t L = block; L < n; L += block) t->order.push_back(static_cast<std::uint32_t>(L));
    const bool lesser = direction == Direction::Less;
    std::sort(t->order.begin(), t->order.end(), [&](std::uint32_t u, std::uint32_t v) {
        std::size_t i = u, j = v;
        while (i < n && j < n && xs[i] == xs[j]) {
            ++i;
            ++j;
        }
        if (i == n || j == n) {
            if (i == n && j == n) return false;
            return lesser ? i == n : j == n;
        }
        return xs[i] < xs[j];
    });
    std::vector<std::int32_t> position(n + 1, -1);
    for (std::size_t i = 0; i < t->order.size(); ++i) position[t->order[i]] = static_cast<std::int32_t>(i);

    const auto k = static_cast<std::int32_t>(t->order.size());
    t->best.assign(states, lesser ? -1 : k);
    for (std::uint32_t s : by_length) {
        std::int32_t b = lesser ? -1 : k;
        if (s != aut.root()) b = t->best[aut.fail(s)];
        const std::uint32_t len = aut.length(s);
        if (!aut.is_witness(s) && len >= 1 && len < n && len % block == 0) {
            b = lesser ? std::max(b, position[len]) : std::min(b, position[len]);
        }
        t->best[s] = b;
    }

    t->sid_bits = std::max(1u, width(states));
    t->rank_bits = width(static_cast<std::uint64_t>(k) + 1);
    const unsigned pbits = mode == WitnessMode::Contiguous ? 0 : 1 + 2 * t->rank_bits;
    t->bits = t->sid_bits + pbits + 1;
    if (t->bits > 120) fail(ErrorCode::TooBig, "rotation machine state does not fit");
    const std::uint64_t p0 = mode == WitnessMode::Contiguous ? 0
                             : k > 0                         ? t->alive(0, static_cast<std::uint32_t>(k))
                                                             : t->frozen(0);
    t->start = t->encode(aut.root(), p0);
    tables_ = std::move(t);
    length_ = n;
    alphabet_ = alphabet;
    block_ = block;
    bits_ = tables_->bits;
    start_ = tables_->start;
}

StateKey RotationWitness::step(std::size_t layer, StateKey state, std::uint32_t symbol) const {
    if (is_sink(state)) return state;
    const Tables& t = *tables_;
    const auto [sid, pcode] = t.decode(state);
    const std::uint32_t a = t.automaton.alphabet();
    const std::size_t r = (layer + 1) % t.block;
    const std::uint32_t s2 = t.trans[(static_cast<std::size_t>(sid) * a + symbol) * t.block + r];
    if (t.mode != WitnessMode::Wraparound && t.witness[s2 * t.block + r]) return kAcceptSink;
    const std::uint64_t p2 = t.mode == WitnessMode::Contiguous ? 0 : t.advance_prefix(pcode, layer, symbol);
    return t.encode(s2, p2);
}

bool RotationWitness::accepts(StateKey state) const {
    if (is_sink(state)) return state == kAcceptSink;
    const Tables& t = *tables_;
    if (t.mode == WitnessMode::Contiguous) return false;
    const auto [sid, pcode] = t.decode(state);
    return t.wraps(sid, pcode);
}

Label RotationWitness::label(StateKey state) const {
    if (is_sink(state)) return detail::sink_label(state);
    const Tables& t = *tables_;
    const auto [sid, pcode] = t.decode(state);
    const auto& aut = t.automaton;
    const std::uint32_t rep = aut.replacement(sid);
    Label out{aut.length(sid), rep == WitnessAutomaton::kNone ? -1 : std::int64_t(rep)};
    if (t.mode != WitnessMode::Contiguous) {
        const std::uint64_t mask = (std::uint64_t(1) << t.rank_bits) - 1;
        if (pcode & 1) {
            out.insert(out.end(), {1, std::int64_t((pcode >> 1) & mask), std::int64_t((pcode >> (1 + t.rank_bits)) & mask)});
        } else {
            out.insert(out.end(), {0, std::int64_t(pcode >> 1), 0});
        }
    }
    return out;
}

AlphabetRestriction::AlphabetRestriction(std::size_t n, const BigCount& q) : n_(n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "block count must be positive");
    const std::size_t t = ceil_log2(q);
    const BigCount top = q - 1;
    for (std::size_t b = t; b-- > 0;) bound_.push_back(static_cast<std::uint8_t>(mpz_tstbit(top.get_mpz_t(), b)));
}

StateKey AlphabetRestriction::step(std::size_t layer, StateKey state, std::uint32_t symbol) const {
    if (is_sink(state)) return state;
    const std::size_t t = bound_.size();
    const std::size_t j = layer % t;
    bool tight = state == 3;
    if (tight) {
        if (symbol > bound_[j]) return kRejectSink;
        tight = symbol == bound_[j];
    }
    if (j + 1 == t) tight = true;  // next block starts fresh
    return tight ? 3 : 2;
}

Label AlphabetRestriction::label(StateKey state) const {
    if (is_sink(state)) return detail::sink_label(state);
    return {static_cast<std::int64_t>(state - 2)};
}

BigCount& LayerTable::slot(StateKey key) {
    if ((used_.size() + 1) * 2 > keys_.size()) rehash(keys_.size() * 2);
    std::size_t i = hash(key) & mask_;
    while (full_[i]) {
        if (keys_[i] == key) return values_[i];
        i = (i + 1) & mask_;
    }
    full_[i] = 1;
    keys_[i] = key;
    used_.push_back(i);
    return values_[i];
}

void LayerTable::clear() {
    for (auto idx : used_) {
        full_[idx] = 0;
        values_[idx] = 0;
    }
    used_.clear();
}

void LayerTable::rehash(std::size_t capacity) {
    std::vector<StateKey> keys(capacity);
    std::vector<std::uint8_t> full(capacity, 0);
    std::vector<BigCount> values(capacity);
    std::vector<std::size_t> used;
    used.reserve(used_.size());
    const std::size_t mask = capacity - 1;
    for (auto idx : used_) {
        std::size_t i = hash(keys_[idx]) & mask;
        while (full[i]) i = (i + 1) & mask;
        full[i] = 1;
        keys[i] = keys_[idx];
        values[i].swap(values_[idx]);
        used.push_back(i);
    }
    keys_.swap(keys);
    full_.swap(full);
    values_.swap(values);
    used_.swap(used);
    mask_ = mask;
}

std::size_t LayerTable::hash(StateKey key) noexcept {
    std::uint64_t lo = static_cast<std::uint64_t>(key);
    std::uint64_t hi = static_cast<std::uint64_t>(key >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    h ^= h >> 29;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 32;
    return static_cast<std::size_t>(h);
}

}  // namespace necklace
