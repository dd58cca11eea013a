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

#include "necklace/counting.hpp"

#include "necklace/machines.hpp"

#include <future>
#include <map>

namespace necklace {

namespace {

bool power_of_two(const BigCount& q) {
    return mpz_popcount(q.get_mpz_t()) == 1;
}

RotationWitness threshold_machine(const NkString& x, CountPath path, Direction dir) {
    if (path == CountPath::Direct) {
        return RotationWitness(x.small_symbols(), static_cast<std::uint32_t>(x.q().get_ui()), 1, dir);
    }
    const BinWord w = bin_encode(x);
    return RotationWitness(std::vector<std::uint32_t>(w.bits.begin(), w.bits.end()), 2, w.block, dir);
}

// Counts a binary-encoded machine over valid blocks only; A_0 is a no-op when q = 2^t.
template <class M>
BigCount count_on_path(const M& m, const NkString& shape, CountPath path) {
    if (path == CountPath::Direct || power_of_two(shape.q())) return count_machine(m);
    return count_machine(intersect(m, AlphabetRestriction(shape.size(), shape.q())));
}

void require_divisor(std::size_t n, std::size_t p) {
    if (p == 0 || n % p != 0) {
        fail(ErrorCode::NotADivisor, std::to_string(p) + " does not divide " + std::to_string(n));
    }
}

NkString max_word(std::size_t n, const BigCount& q) {
    return NkString::constant(n, q, q - 1);
}

// G(x, <=d) for every divisor d of n that `need` accepts, evaluated concurrently.
template <class Need>
std::map<std::size_t, BigCount> leq_table(const NkString& x, CountPath path, Need need) {
    std::map<std::size_t, std::future<BigCount>> jobs;
    for (std::size_t d : divisors(x.size())) {
        if (!need(d)) continue;
        jobs.emplace(d, std::async(std::launch::async, [&x, d, path] { return count_G_leq(x, d, path); }));
    }
    std::map<std::size_t, BigCount> out;
    for (auto& [d, job] : jobs) out.emplace(d, job.get());
    return out;
}

BigCount exact_from(const std::map<std::size_t, BigCount>& leq, std::size_t p) {
    BigCount total = 0;
    for (std::size_t d : divisors(p)) {
        const int mu = mobius(p / d);
        if (mu == 1) total += leq.at(d);
        if (mu == -1) total -= leq.at(d);
    }
    return total;
}

}  // namespace

CountPath resolve_path(const BigCount& q, CountPath path) {
    if (path == CountPath::Auto) return q <= kAutoDirectMaxQ ? CountPath::Direct : CountPath::Encoded;
    if (path == CountPath::Direct && q > kDirectMaxQ) {
        fail(ErrorCode::TooBig, "direct path supports q <= " + std::to_string(kDirectMaxQ));
    }
    return path;
}

int mobius(std::size_t m) {
    if (m == 0) fail(ErrorCode::InvalidArgument, "mobius of zero");
    int sign = 1;
    for (std::size_t f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        m /= f;
        if (m % f == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> lo, hi;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d * d != n) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

BigCount count_rotations_below(const NkString& x, CountPath path) {
    if (x.is_constant(0)) return 0;
    path = resolve_path(x.q(), path);
    return count_on_path(threshold_machine(x, path, Direction::Less), x, path);
}

BigCount count_words_bounded(const NkString* lower, const NkString& upper, CountPath path) {
    if (lower && (lower->size() != upper.size() || lower->q() != upper.q())) {
        fail(ErrorCode::InvalidArgument, "bounds differ in length or alphabet");
    }
    if (lower && lower->is_constant(0)) return 0;
    path = resolve_path(upper.q(), path);
    const auto above = complement(threshold_machine(upper, path, Direction::Greater));
    if (!lower) return count_on_path(above, upper, path);
    return count_on_path(intersect(threshold_machine(*lower, path, Direction::Less), above), upper, path);
}

BigCount count_G_leq(const NkString& x, std::size_t p, CountPath path) {
    const std::size_t n = x.size();
    require_divisor(n, p);
    if (x.is_constant(0)) return 0;
    if (p == n) return count_rotations_below(x, path);

    const NkString x1 = x.substr(0, p);
    BigCount m = count_rotations_below(x1, path);
    // The orbit of x1 itself counts when x1 is its own least rotation and x1^(n/p) < x,
    // i.e. the first block of x that differs from x1 is larger than x1.
    bool below = false;
    for (std::size_t i = 1; i < n / p; ++i) {
        const NkString block = x.substr(i * p, p);
        if (block == x1) continue;
        below = x1 < block;
        break;
    }
    if (below && min_rotation(x1).first == x1) m += static_cast<unsigned long>(fundamental_period(x1));
    return m;
}

BigCount count_G_exact(const NkString& x, std::size_t p, CountPath path) {
    require_divisor(x.size(), p);
    if (x.is_constant(0)) return 0;
    const auto leq = leq_table(x, path, [p](std::size_t d) { return p % d == 0 && mobius(p / d) != 0; });
    return exact_from(leq, p);
}

BigCount count_classes_less(const NkString& x, CountPath path) {
    if (x.is_constant(0)) return 0;
    const std::size_t n = x.size();
    const auto leq = leq_table(x, path, [](std::size_t) { return true; });
    BigCount total = 0;
    for (std::size_t i : divisors(n)) {
        const BigCount g = exact_from(leq, i);
        if (!mpz_divisible_ui_p(g.get_mpz_t(), i)) {
            fail(ErrorCode::Internal, "orbit count of size " + std::to_string(i) + " not divisible by it");
        }
        total += g / static_cast<unsigned long>(i);
    }
    return total;
}

BigCount count_classes_less_aperiodic(const NkString& x, CountPath path) {
    if (x.is_constant(0)) return 0;
    const std::size_t n = x.size();
    const auto leq = leq_table(x, path, [n](std::size_t d) { return mobius(n / d) != 0; });
    const BigCount g = exact_from(leq, n);
    if (!mpz_divisible_ui_p(g.get_mpz_t(), n)) fail(ErrorCode::Internal, "aperiodic count not divisible by n");
    return g / static_cast<unsigned long>(n);
}

BigCount total_necklaces(std::size_t n, const BigCount& q, CountPath path) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    return count_classes_less(max_word(n, q), path) + 1;
}

BigCount total_aperiodic(std::size_t n, const BigCount& q, CountPath path) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    return count_classes_less_aperiodic(max_word(n, q), path) + (n == 1 ? 1 : 0);
}

}  // namespace necklace
