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

#include "necklace/top_heavy.hpp"

#include <map>

namespace necklace {

namespace {

void require_binary(const NkString& x) {
    if (x.q() != 2) fail(ErrorCode::NotBinary, "top-heavy words are binary");
    if (x.size() == 0) fail(ErrorCode::InvalidArgument, "empty word");
}

void require_prime(std::size_t n) {
    if (!is_prime_length(n)) fail(ErrorCode::NotPrime, std::to_string(n) + " is not prime");
}

std::size_t weight(const NkString& x) {
    std::size_t w = 0;
    for (const auto& d : x.digits()) w += d == 1;
    return w;
}

}  // namespace

bool is_prime_length(std::size_t n) {
    if (n < 2) return false;
    for (std::size_t r = 2; r * r <= n; ++r) {
        if (n % r == 0) return false;
    }
    return true;
}

BigCount scaled_prefix_excess(const NkString& x, std::size_t j) {
    require_binary(x);
    const std::size_t n = x.size();
    j %= n;
    std::size_t prefix = 0;
    for (std::size_t k = 0; k <= j; ++k) prefix += x[k] == 1;
    return BigCount(static_cast<unsigned long>(n * prefix)) - BigCount(static_cast<unsigned long>((j + 1) * weight(x)));
}

bool is_top_heavy(const NkString& x) {
    require_binary(x);
    const std::size_t n = x.size(), w = weight(x);
    std::size_t prefix = 0;
    for (std::size_t j = 0; j < n; ++j) {
        prefix += x[j] == 1;
        if (n * prefix < (j + 1) * w) return false;
    }
    return true;
}

std::size_t top_heavy_rotation(const NkString& x) {
    require_binary(x);
    const std::size_t n = x.size();
    require_prime(n);
    if (x.is_constant(0) || x.is_constant(1)) fail(ErrorCode::ConstantString, "constant words have no unique top-heavy rotation");
    std::size_t best = 0;
    BigCount best_value = scaled_prefix_excess(x, 0);
    for (std::size_t j = 1; j < n; ++j) {
        BigCount v = scaled_prefix_excess(x, j);
        if (v == best_value) fail(ErrorCode::Internal, "tied minimum of the prefix excess");
        if (v < best_value) {
            best = j;
            best_value = std::move(v);
        }
    }
    // The top-heavy rotation starts right after the minimum, at x[best + 1].
    return (n - (best + 1) % n) % n;
}

BigCount count_top_heavy(std::size_t n) {
    require_prime(n);
    // State: prefix weight s and the running minimum of floor(n s_j / (j + 1)).
    std::map<std::pair<std::size_t, std::size_t>, BigCount> cur{{{0, n}, 1}};
    for (std::size_t j = 0; j < n; ++j) {
        std::map<std::pair<std::size_t, std::size_t>, BigCount> next;
        for (const auto& [state, count] : cur) {
            for (std::size_t bit = 0; bit < 2; ++bit) {
                const std::size_t s = state.first + bit;
                const std::size_t ratio = n * s / (j + 1);
                next[{s, std::min(state.second, ratio)}] += count;
            }
        }
        cur = std::move(next);
    }
    BigCount total = 0;
    for (const auto& [state, count] : cur) {
        if (state.first <= state.second) total += count;
    }
    return total;
}

}  // namespace necklace
