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
// Monic irreducible polynomials of degree n over F_q, indexed through Lyndon
// words: the i-th Lyndon word read as a base-q integer a gives the minimal
// polynomial of g^a, g a primitive root of F_{q^n}.

#ifndef NECKLACE_IRREDUCIBLE_HPP
#define NECKLACE_IRREDUCIBLE_HPP

#include "necklace/counting.hpp"
#include "necklace/finite_field.hpp"

#include <optional>

namespace necklace {

/// Number of monic irreducible polynomials of degree n over F_q.
BigCount count_irreducible(const BigCount& q, std::size_t n, CountPath path = CountPath::Auto);

/// The i-th irreducible (1-based), or nullopt when i exceeds the count. For n = 1,
/// index 1 is T and index i >= 2 is T - g^(i-2). Fails with InvalidAdvice when the
/// context is not certified primitive.
std::optional<FqPoly> index_irreducible(const FieldContext& ctx, const BigCount& i,
                                        CountPath path = CountPath::Auto, std::size_t* probes = nullptr);

}  // namespace necklace

#endif  // NECKLACE_IRREDUCIBLE_HPP
