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
// Brute-force references. Every function enumerates its whole domain and
// refuses (TooBig) past q^n = 2^22 rather than truncating.

#ifndef NECKLACE_ORACLE_HPP
#define NECKLACE_ORACLE_HPP

#include "necklace/bch.hpp"
#include "necklace/finite_field.hpp"
#include "necklace/strings.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace necklace {

inline constexpr unsigned kOracleMaxBits = 22;

struct OrbitEntry {
    NkString representative;  // least rotation
    std::size_t size;
};
using OrbitTable = std::vector<OrbitEntry>;

/// Least rotation and orbit size of every word of {0..q-1}^n, found by comparing all
/// n rotations directly. Answers the set-size queries below by table scans.
class BruteCounter {
public:
    BruteCounter(std::size_t n, const BigCount& q);

    std::size_t n() const noexcept { return n_; }
    const BigCount& q() const noexcept { return q_; }

    BigCount C_x(const NkString& x) const;
    BigCount G(const NkString& x, std::size_t p) const;
    BigCount G_leq(const NkString& x, std::size_t p) const;
    /// Sorted distinct least rotations with their orbit sizes.
    OrbitTable orbits() const;

private:
    std::uint64_t value_of(const NkString& x) const;
    BigCount count_words(const NkString& x, std::size_t p, bool exact) const;

    std::size_t n_;
    BigCount q_;
    std::vector<std::uint64_t> least_;   // per word, as a base-q integer
    std::vector<std::uint32_t> period_;  // per word
};

/// Every orbit of {0..q-1}^n, by increasing least rotation.
OrbitTable brute_orbits(std::size_t n, const BigCount& q);

/// Orbits with a word below x.
BigCount brute_C_x(const NkString& x);
/// Words whose orbit has size exactly p (resp. dividing p) and contains a word below x.
BigCount brute_G(const NkString& x, std::size_t p);
BigCount brute_G_leq(const NkString& x, std::size_t p);

/// All monic irreducible degree-n polynomials over F_q, ordered by coefficient
/// vectors read from the leading term down (elements by index).
std::vector<FqPoly> brute_irreducibles(const Fq& fq, std::size_t n);

struct ClosedFormCounts {
    BigCount necklaces;
    BigCount lyndon;
};
/// (1/n) sum phi(n/d) q^d and (1/n) sum mu(d) q^(n/d) over d | n.
ClosedFormCounts closed_form_counts(std::size_t n, const BigCount& q);

/// BCH rows by direct orbit enumeration of Z_{q^n - 1}: generator rows as (S, j)
/// for orbits inside {0..d}, parity rows as orbits with least element <= d.
std::vector<GeneratorRow> brute_generator_rows(const BigCount& q, std::size_t n, const BigCount& d);
std::vector<OrbitSet> brute_parity_rows(const BigCount& q, std::size_t n, const BigCount& d);

}  // namespace necklace

#endif  // NECKLACE_ORACLE_HPP
