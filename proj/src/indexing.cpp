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

#include "necklace/indexing.hpp"

namespace necklace {

namespace {

void check_query(std::size_t n, const BigCount& q, const BigCount& j) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    if (q < 2) fail(ErrorCode::InvalidArgument, "q must be at least 2");
    if (j < 1) fail(ErrorCode::InvalidArgument, "index must be at least 1");
}

}  // namespace

std::optional<NkString> index_necklace(std::size_t n, const BigCount& q, const BigCount& j, CountPath path,
                                       std::size_t* probes) {
    check_query(n, q, j);
    if (probes) *probes = 1;
    const NkString top = NkString::constant(n, q, q - 1);
    // Every orbit but the singleton of the largest word has a member below it.
    const BigCount below_top = count_classes_less(top, path);
    if (j > below_top + 1) return std::nullopt;
    return search_largest_below(
        n, q, j, below_top, [&](const NkString& x) { return count_classes_less(x, path); }, probes);
}

RankResult reverse_index_necklace(const NkString& x, CountPath path) {
    NkString canonical = min_rotation(x).first;
    BigCount rank = count_classes_less(canonical, path) + 1;
    return {std::move(rank), std::move(canonical)};
}

std::optional<NkString> index_lyndon(std::size_t n, const BigCount& q, const BigCount& j, CountPath path,
                                     std::size_t* probes) {
    check_query(n, q, j);
    if (probes) *probes = 1;
    const NkString top = NkString::constant(n, q, q - 1);
    const BigCount below_top = count_classes_less_aperiodic(top, path);
    const BigCount total = below_top + (n == 1 ? 1 : 0);
    if (j > total) return std::nullopt;
    return search_largest_below(
        n, q, j, below_top, [&](const NkString& x) { return count_classes_less_aperiodic(x, path); }, probes);
}

RankResult reverse_index_lyndon(const NkString& x, CountPath path) {
    if (fundamental_period(x) != x.size()) {
        fail(ErrorCode::NotAperiodic, "word " + x.to_string() + " is periodic");
    }
    NkString canonical = min_rotation(x).first;
    BigCount rank = count_classes_less_aperiodic(canonical, path) + 1;
    return {std::move(rank), std::move(canonical)};
}

}  // namespace necklace
