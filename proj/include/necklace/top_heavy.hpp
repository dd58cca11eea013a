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
// Top-heavy binary words: every prefix has normalized weight at least that of
// the whole word. For prime n each nonconstant orbit has exactly one.

#ifndef NECKLACE_TOP_HEAVY_HPP
#define NECKLACE_TOP_HEAVY_HPP

#include "necklace/strings.hpp"

namespace necklace {

/// n * f(x, j): n times the prefix sum of (x_k - wt(x)/n) over k <= j (j taken mod n).
BigCount scaled_prefix_excess(const NkString& x, std::size_t j);

/// Fails with NotBinary unless q = 2.
bool is_top_heavy(const NkString& x);

/// The shift i with Rot^i(x) top-heavy (rightward rotation). Fails with NotPrime
/// unless n is prime and with ConstantString for 0^n and 1^n.
std::size_t top_heavy_rotation(const NkString& x);

/// Number of top-heavy binary words of prime length n.
BigCount count_top_heavy(std::size_t n);

bool is_prime_length(std::size_t n);

}  // namespace necklace

#endif  // NECKLACE_TOP_HEAVY_HPP
