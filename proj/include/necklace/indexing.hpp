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
// Ranking and unranking of necklaces and Lyndon words, ordered by their least
// rotations. Ranks are 1-based.

#ifndef NECKLACE_INDEXING_HPP
#define NECKLACE_INDEXING_HPP

#include "necklace/counting.hpp"

#include <optional>

namespace necklace {

struct RankResult {
    BigCount rank;
    NkString canonical;
};

/// The j-th necklace representative, or nullopt (too large) when j exceeds the total.
/// `probes`, when given, receives the number of class counts evaluated.
std::optional<NkString> index_necklace(std::size_t n, const BigCount& q, const BigCount& j,
                                       CountPath path = CountPath::Auto, std::size_t* probes = nullptr);
RankResult reverse_index_necklace(const NkString& x, CountPath path = CountPath::Auto);

std::optional<NkString> index_lyndon(std::size_t n, const BigCount& q, const BigCount& j,
                                     CountPath path = CountPath::Auto, std::size_t* probes = nullptr);
/// Fails with NotAperiodic when x has a period shorter than its length.
RankResult reverse_index_lyndon(const NkString& x, CountPath path = CountPath::Auto);

/// Largest x in [0, q^n - 1] (as a base-q word) with f(x) < j, given f(max word) = at_max.
/// f must be nondecreasing with f(0^n) = 0.
template <class F>
NkString search_largest_below(std::size_t n, const BigCount& q, const BigCount& j, const BigCount& at_max, F&& f,
                              std::size_t* probes) {
    BigCount hi = power(q, n) - 1;
    if (at_max < j) return NkString::from_integer(hi, n, q);
    BigCount lo = 0;  // f(lo) < j, f(hi) >= j
    while (hi - lo > 1) {
        BigCount mid = (lo + hi) / 2;
        if (probes) ++*probes;
        if (f(NkString::from_integer(mid, n, q)) < j) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    return NkString::from_integer(lo, n, q);
}

}  // namespace necklace

#endif  // NECKLACE_INDEXING_HPP
