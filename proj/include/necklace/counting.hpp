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
// Orbit counts below a threshold word.
//
//   G(x, <=p)  words whose orbit size divides p and whose orbit has a word below x
//   G(x, p)    the same with orbit size exactly p
//   C(x)       number of orbits with a word below x

#ifndef NECKLACE_COUNTING_HPP
#define NECKLACE_COUNTING_HPP

#include "necklace/strings.hpp"

#include <cstddef>
#include <vector>

namespace necklace {

/// How threshold counts are evaluated. Direct reads q-ary symbols (small q only);
/// Encoded reads the ceil(log2 q)-bit binary encoding restricted to valid blocks.
enum class CountPath { Auto, Direct, Encoded };

/// Largest q accepted by the direct path.
inline constexpr unsigned kDirectMaxQ = 256;
/// Largest q for which Auto picks the direct path.
inline constexpr unsigned kAutoDirectMaxQ = 16;

CountPath resolve_path(const BigCount& q, CountPath path);

int mobius(std::size_t m);
std::vector<std::size_t> divisors(std::size_t n);

/// Words of length n with some rotation below x; this is G(x, <=n).
BigCount count_rotations_below(const NkString& x, CountPath path = CountPath::Auto);

/// Words y with every rotation <= upper and, when `lower` is given, some rotation below it.
BigCount count_words_bounded(const NkString* lower, const NkString& upper, CountPath path = CountPath::Auto);

BigCount count_G_leq(const NkString& x, std::size_t p, CountPath path = CountPath::Auto);
BigCount count_G_exact(const NkString& x, std::size_t p, CountPath path = CountPath::Auto);
BigCount count_classes_less(const NkString& x, CountPath path = CountPath::Auto);
BigCount count_classes_less_aperiodic(const NkString& x, CountPath path = CountPath::Auto);

BigCount total_necklaces(std::size_t n, const BigCount& q, CountPath path = CountPath::Auto);
BigCount total_aperiodic(std::size_t n, const BigCount& q, CountPath path = CountPath::Auto);

}  // namespace necklace

#endif  // NECKLACE_COUNTING_HPP
