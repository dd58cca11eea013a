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
// Field contexts shared by the irreducible and BCH tests.

#ifndef NECKLACE_TESTS_FIELDS_HPP
#define NECKLACE_TESTS_FIELDS_HPP

#include "necklace/finite_field.hpp"

namespace necklace::testing {

inline FieldContext primitive_context(unsigned long p, std::size_t e, std::size_t n, unsigned long seed = 1) {
    const Fq fq = generate_fq(p, e, seed);
    return find_primitive_polynomial(fq, n, factorize(power(fq.order(), n) - 1), seed);
}

/// Polynomial over a prime field from low-first small coefficients.
inline FqPoly prime_poly(std::initializer_list<int> coeffs) {
    FqPoly out;
    for (int c : coeffs) out.push_back(c == 0 ? FqElement{} : FqElement{BigCount(c)});
    return out;
}

inline FieldContext context_with(unsigned long p, const FqPoly& F) {
    const Fq fq = make_fq(p, {});
    return FieldContext(fq, F, factorize(power(p, F.size() - 1) - 1));
}

}  // namespace necklace::testing

#endif  // NECKLACE_TESTS_FIELDS_HPP
