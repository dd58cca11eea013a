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

#include "necklace/strings.hpp"

#include <algorithm>
#include <functional>

namespace necklace {

namespace {

// Booth's least-rotation scan. Returns a start index k such that x[k..] x[..k]
// is extremal under `before`.
template <class T, class Before>
std::size_t booth_start(const std::vector<T>& x, Before before) {
    const std::size_t n = x.size();
    if (n == 0) return 0;
    auto at = [&](std::size_t i) -> const T& { return x[i % n]; };
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const T& sj = at(j);
        long i = f[j - k - 1];
        while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
            if (before(sj, at(k + static_cast<std::size_t>(i) + 1))) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != at(k)) {
            if (before(sj, at(k))) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

template <class Before>
std::pair<NkString, std::size_t> extremal_rotation(const NkString& x, Before before) {
    const std::size_t n = x.size();
    const std::size_t start = booth_start(x.digits(), before);
    const std::size_t period = fundamental_period(x);
    // Rot^i moves x[k] to the front when i = n - k; shifts repeat with the period.
    const std::size_t shift = (n - start) % n % period;
    return {rotate(x, shift), shift};
}

}  // namespace

NkString::NkString(BigCount q, std::vector<BigCount> digits) : q_(std::move(q)), digits_(std::move(digits)) {
    if (q_ < 2) fail(ErrorCode::InvalidArgument, "alphabet size q must be at least 2");
    if (digits_.empty()) fail(ErrorCode::InvalidArgument, "word length must be positive");
    for (const auto& d : digits_) {
        if (d < 0 || d >= q_) {
            fail(ErrorCode::InvalidArgument, "symbol " + to_decimal(d) + " outside alphabet of size " + to_decimal(q_));
        }
    }
}

NkString NkString::from_integer(const BigCount& value, std::size_t n, const BigCount& q) {
    if (value < 0 || value >= power(q, n)) {
        fail(ErrorCode::InvalidArgument, "integer does not fit in " + std::to_string(n) + " base-q digits");
    }
    std::vector<BigCount> digits(n);
    BigCount rest = value;
    for (std::size_t i = n; i-- > 0;) {
        mpz_fdiv_qr(rest.get_mpz_t(), digits[i].get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
    }
    return NkString(q, std::move(digits));
}

NkString NkString::constant(std::size_t n, const BigCount& q, const BigCount& symbol) {
    return NkString(q, std::vector<BigCount>(n, symbol));
}

NkString NkString::parse(std::string_view text, const BigCount& q) {
    std::vector<BigCount> digits;
    if (q <= 10 && text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9') fail(ErrorCode::InvalidArgument, "bad symbol '" + std::string(1, c) + "' in word");
            digits.emplace_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const std::size_t comma = text.find(',', pos);
            digits.push_back(parse_decimal(text.substr(pos, comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return NkString(q, std::move(digits));
}

BigCount NkString::to_integer() const {
    BigCount value = 0;
    for (const auto& d : digits_) value = value * q_ + d;
    return value;
}

std::string NkString::to_string() const {
    std::string out;
    if (q_ <= 10) {
        for (const auto& d : digits_) out.push_back(static_cast<char>('0' + d.get_ui()));
        return out;
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) out.push_back(',');
        out += to_decimal(digits_[i]);
    }
    return out;
}

std::vector<std::uint32_t> NkString::small_symbols() const {
    if (!q_.fits_uint_p() || q_ > 0xffffffffu) fail(ErrorCode::TooBig, "alphabet too large for direct symbols");
    std::vector<std::uint32_t> out;
    out.reserve(digits_.size());
    for (const auto& d : digits_) out.push_back(static_cast<std::uint32_t>(d.get_ui()));
    return out;
}

NkString NkString::substr(std::size_t pos, std::size_t len) const {
    return NkString(q_, std::vector<BigCount>(digits_.begin() + static_cast<long>(pos),
                                              digits_.begin() + static_cast<long>(pos + len)));
}

bool NkString::is_constant(const BigCount& symbol) const {
    return std::all_of(digits_.begin(), digits_.end(), [&](const BigCount& d) { return d == symbol; });
}

std::strong_ordering operator<=>(const NkString& a, const NkString& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.digits_[i], b.digits_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

std::string BinWord::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

BinWord BinWord::parse(std::string_view text, std::size_t block) {
    BinWord w;
    w.block = block;
    for (char c : text) {
        if (c != '0' && c != '1') fail(ErrorCode::InvalidArgument, "binary word expected");
        w.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (block == 0 || w.bits.size() % block != 0) fail(ErrorCode::InvalidArgument, "bit length not a multiple of block");
    return w;
}

NkString rotate(const NkString& x, std::size_t i) {
    const std::size_t n = x.size();
    i %= n;
    std::vector<BigCount> out(n);
    for (std::size_t k = 0; k < n; ++k) out[(k + i) % n] = x[k];
    return NkString(x.q(), std::move(out));
}

std::size_t fundamental_period(const NkString& x) {
    const auto& d = x.digits();
    const std::size_t n = d.size();
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && d[i] != d[k]) k = border[k];
        if (d[i] == d[k]) ++k;
        border[i + 1] = k;
    }
    const std::size_t p = n - border[n];
    return n % p == 0 ? p : n;
}

std::pair<NkString, std::size_t> min_rotation(const NkString& x) {
    return extremal_rotation(x, std::less<BigCount>());
}

std::pair<NkString, std::size_t> max_rotation(const NkString& x) {
    return extremal_rotation(x, std::greater<BigCount>());
}

BinWord bin_encode(const NkString& x) {
    const std::size_t t = ceil_log2(x.q());
    BinWord w;
    w.block = t;
    w.bits.reserve(t * x.size());
    for (const auto& d : x.digits()) {
        for (std::size_t b = t; b-- > 0;) w.bits.push_back(static_cast<std::uint8_t>(mpz_tstbit(d.get_mpz_t(), b)));
    }
    return w;
}

NkString bin_decode(const BinWord& w, const BigCount& q) {
    const std::size_t t = ceil_log2(q);
    if (w.block != t || w.bits.empty() || w.bits.size() % t != 0) {
        fail(ErrorCode::InvalidArgument, "binary word does not match the block width of q");
    }
    std::vector<BigCount> digits;
    for (std::size_t i = 0; i < w.bits.size(); i += t) {
        BigCount v = 0;
        for (std::size_t b = 0; b < t; ++b) v = v * 2 + w.bits[i + b];
        if (v >= q) fail(ErrorCode::InvalidBlock, "block value " + to_decimal(v) + " is not below q");
        digits.push_back(std::move(v));
    }
    return NkString(q, std::move(digits));
}

bool is_in_Lx(const BinWord& w, const BinWord& x) {
    const std::size_t len = w.bits.size();
    if (len == 0 || len > x.bits.size()) return false;
    if (w.bits[len - 1] != 0 || x.bits[len - 1] != 1) return false;
    return std::equal(w.bits.begin(), w.bits.end() - 1, x.bits.begin());
}

bool is_in_prefix_Lx(const BinWord& s, const BinWord& x) {
    const std::size_t len = s.bits.size();
    if (len > x.bits.size()) return false;
    if (len > 0 && is_in_Lx(s, x)) return true;
    if (!std::equal(s.bits.begin(), s.bits.end(), x.bits.begin())) return false;
    // A plain prefix x[0..len) extends to a witness iff some later position holds a 1.
    return std::find(x.bits.begin() + static_cast<long>(len), x.bits.end(), 1) != x.bits.end();
}

bool orbit_less_than(const NkString& y, const NkString& x) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (rotate(y, i) < x) return true;
    }
    return false;
}

WitnessAutomaton::WitnessAutomaton(std::vector<std::uint32_t> x, std::uint32_t alphabet, Direction direction)
    : x_(std::move(x)), alphabet_(alphabet), direction_(direction) {
    const std::size_t n = x_.size();
    if (alphabet_ < 2) necklace::fail(ErrorCode::InvalidArgument, "alphabet must have at least two symbols");
    for (auto c : x_) {
        if (c >= alphabet_) necklace::fail(ErrorCode::InvalidArgument, "threshold symbol outside alphabet");
    }

    z_.assign(n + 1, 0);
    if (n > 0) z_[0] = static_cast<std::uint32_t>(n);
    for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
        std::size_t z = 0;
        if (i < r) z = std::min(r - i, static_cast<std::size_t>(z_[i - l]));
        while (i + z < n && x_[z] == x_[i + z]) ++z;
        z_[i] = static_cast<std::uint32_t>(z);
        if (i + z > r) {
            l = i;
            r = i + z;
        }
    }

    auto witness_count = [&](std::size_t k) -> std::uint32_t {
        return direction_ == Direction::Less ? x_[k] : alphabet_ - 1 - x_[k];
    };
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (witness_count(k) > 0) {
            max_prefix_ = static_cast<std::uint32_t>(k);
            any = true;
        }
    }
    if (!any) return;

    for (std::uint32_t m = 0; m <= max_prefix_; ++m) states_.push_back({m, kNone});
    witness_offset_.assign(n, kNone);
    for (std::size_t k = 0; k <= max_prefix_; ++k) {
        const std::uint32_t count = witness_count(k);
        if (count == 0) continue;
        witness_offset_[k] = static_cast<std::uint32_t>(states_.size());
        const std::uint32_t lo = direction_ == Direction::Less ? 0 : x_[k] + 1;
        for (std::uint32_t c = lo; c < lo + count; ++c) states_.push_back({static_cast<std::uint32_t>(k + 1), c});
    }

    // Breadth-first by length: children of x[0..m) are x[0..m+1) and its witnesses.
    const std::size_t total = states_.size();
    fail_.assign(total, 0);
    delta_.assign(total * alphabet_, 0);
    for (std::uint32_t c = 0; c < alphabet_; ++c) {
        const std::uint32_t e = extend(0, c);
        delta_[c] = e == kNone ? 0 : e;
    }
    auto settle = [&](std::uint32_t child, std::uint32_t parent, std::uint32_t c) {
        fail_[child] = parent == 0 ? 0 : delta_[static_cast<std::size_t>(fail_[parent]) * alphabet_ + c];
        for (std::uint32_t d = 0; d < alphabet_; ++d) {
            const std::uint32_t e = extend(child, d);
            delta_[static_cast<std::size_t>(child) * alphabet_ + d] =
                e != kNone ? e : delta_[static_cast<std::size_t>(fail_[child]) * alphabet_ + d];
        }
    };
    for (std::uint32_t m = 0; m <= max_prefix_; ++m) {
        if (witness_offset_[m] != kNone) {
            for (std::uint32_t c = 0; c < alphabet_; ++c) {
                if (beats(m, c)) settle(witness_state(m, c), m, c);
            }
        }
        if (m < max_prefix_) settle(m + 1, m, x_[m]);
    }
}

bool WitnessAutomaton::beats(std::uint32_t k, std::uint32_t c) const {
    if (k >= x_.size()) return false;
    return direction_ == Direction::Less ? c < x_[k] : c > x_[k];
}

std::uint32_t WitnessAutomaton::witness_state(std::uint32_t k, std::uint32_t c) const {
    const std::uint32_t lo = direction_ == Direction::Less ? 0 : x_[k] + 1;
    return witness_offset_[k] + (c - lo);
}

std::uint32_t WitnessAutomaton::extend(std::uint32_t s, std::uint32_t c) const {
    const State& st = states_[s];
    if (st.replacement != kNone) return kNone;  // L_x is prefix-free
    const std::uint32_t m = st.length;
    if (m < max_prefix_ && c == x_[m]) return m + 1;
    if (beats(m, c)) return witness_state(m, c);
    return kNone;
}

std::uint32_t WitnessAutomaton::shifted_witness(std::uint32_t shift) const {
    const std::uint32_t i = z_[shift];
    if (shift + i >= x_.size()) return kNone;
    return beats(shift + i, x_[i]) ? i : kNone;
}

}  // namespace necklace
