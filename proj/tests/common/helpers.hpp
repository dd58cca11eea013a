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
// Small fixtures shared by the unit tests.

#ifndef NECKLACE_TESTS_HELPERS_HPP
#define NECKLACE_TESTS_HELPERS_HPP

#include "necklace/strings.hpp"

#include <random>
#include <string>
#include <vector>

namespace necklace::testing {

inline NkString word(const std::string& text, unsigned long q = 2) { return NkString::parse(text, q); }

inline NkString random_word(std::size_t n, unsigned long q, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> digit(0, q - 1);
    std::vector<BigCount> d;
    for (std::size_t i = 0; i < n; ++i) d.emplace_back(digit(rng));
    return NkString(q, std::move(d));
}

/// All words of length n over {0..q-1} in lexicographic order.
inline std::vector<NkString> all_words(std::size_t n, unsigned long q) {
    std::vector<NkString> out;
    const BigCount total = power(q, n);
    for (BigCount v = 0; v < total; ++v) out.push_back(NkString::from_integer(v, n, q));
    return out;
}

inline std::vector<std::uint32_t> symbols(const BinWord& w) { return {w.bits.begin(), w.bits.end()}; }

}  // namespace necklace::testing

#endif  // NECKLACE_TESTS_HELPERS_HPP
