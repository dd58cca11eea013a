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
// Oracle-equivalence checks shared by the `selftest` command and the acceptance
// suite. Each check compares the fast pipeline against brute force over the
// given bounds and describes the first mismatches it finds.

#ifndef NECKLACE_SELFTEST_HPP
#define NECKLACE_SELFTEST_HPP

#include "necklace/counting.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace necklace {

struct CheckOutcome {
    bool passed = true;
    std::string detail;

    void mismatch(const std::string& what);
};

struct AlphabetBound {
    BigCount q;
    std::size_t max_n;
};

/// index 1..t against brute-force representatives, reverse index, and t+1 too large.
CheckOutcome check_necklace_indexing(const std::vector<AlphabetBound>& cases, bool lyndon);

struct WordShape {
    std::size_t n;
    BigCount q;
};

/// Per sampled x: G(x,<=p) = sum of G(x,i) over i | p, C(x) = sum of G(x,i)/i with
/// each quotient exact, all against brute force.
CheckOutcome check_counting_identities(const std::vector<WordShape>& shapes, std::size_t samples, std::uint64_t seed);

/// Direct and encoded class counts and unranking agree with each other and brute force.
CheckOutcome check_path_agreement(const std::vector<BigCount>& qs, std::size_t max_n, std::size_t samples,
                                  std::uint64_t seed);

struct IrreducibleCase {
    BigCount p;
    std::size_t e;
    std::size_t n;
};

/// Output set over i = 1..count equals brute force, count equals the closed form.
CheckOutcome check_irreducible_indexing(const std::vector<IrreducibleCase>& cases);

/// q = 2, n = 3: membership in F_q, d-column independence of the expanded parity
/// matrix, generator/parity orthogonality and row enumeration.
CheckOutcome check_bch(const std::vector<unsigned long>& ds);

/// Prime n <= max_prime: unique top-heavy rotation and count = number of necklaces.
CheckOutcome check_top_heavy(std::size_t max_prime);

/// The checks above at reduced bounds (binary words up to max_n). Calls `report`
/// with one line per check and returns true when all pass.
bool run_selftest(std::size_t max_n, const std::function<void(const std::string&)>& report);

}  // namespace necklace

#endif  // NECKLACE_SELFTEST_HPP
