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
// Entries of BCH generator and parity-check matrices over F_q, code length q^n.
//
// Rows are indexed by orbits S of Z_{q^n-1} under i -> iq; an orbit is named by
// its least element m_S, whose n-digit base-q word is the least rotation of the
// orbit's words. Generator rows are pairs (S, j) with S inside {0..d} and
// j <= |S|; parity rows are the orbits with m_S <= d.

#ifndef NECKLACE_BCH_HPP
#define NECKLACE_BCH_HPP

#include "necklace/counting.hpp"
#include "necklace/finite_field.hpp"

#include <map>
#include <optional>

namespace necklace {

struct OrbitSet {
    BigCount m;        // least element
    std::size_t size;  // orbit length, a divisor of n

    friend bool operator==(const OrbitSet&, const OrbitSet&) = default;
};

struct GeneratorRow {
    OrbitSet orbit;
    std::size_t j;  // 1-based basis index
};

using FqMatrix = std::vector<std::vector<FqElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Fq& fq, FqMatrix& rows);
std::size_t matrix_rank(const Fq& fq, FqMatrix rows);

/// Echelon F_q-basis of {a : a^(q^l) = a}, l | n. Basis vector i has coordinate 1 at
/// its own free column and 0 at the other free columns. Fails with NotADivisor.
std::vector<FqnElement> subfield_basis(const FieldContext& ctx, std::size_t l);

class BchCode {
public:
    /// Fails with InvalidArgument unless 0 <= d < q^n - 1.
    BchCode(FieldContext ctx, BigCount d, CountPath path = CountPath::Auto);

    const FieldContext& context() const noexcept { return ctx_; }
    const BigCount& d() const noexcept { return d_; }
    /// q^n, the code length.
    const BigCount& length() const noexcept { return length_; }

    BigCount generator_row_count() const;
    std::optional<GeneratorRow> generator_row(const BigCount& r) const;
    /// P_{S,j}(alpha); nullopt when r is past the last row.
    std::optional<FqElement> generator_entry(const BigCount& r, const FqnElement& alpha) const;

    BigCount parity_row_count() const;
    std::optional<OrbitSet> parity_row(const BigCount& r) const;
    /// alpha^(m_S); fails with ZeroColumn for alpha = 0.
    std::optional<FqnElement> parity_entry(const BigCount& r, const FqnElement& alpha) const;

    /// Column c of the generator matrix: 0 first, then g^0, g^1, ...
    FqnElement generator_column(const BigCount& c) const;
    /// Column c of the parity matrix: g^c.
    FqnElement parity_column(const BigCount& c) const;

    /// Coordinates of a in the echelon basis of the subfield of degree l.
    std::vector<FqElement> subfield_coordinates(std::size_t l, const FqnElement& a) const;
    const std::vector<FqnElement>& basis(std::size_t l) const;

private:
    FqElement evaluate(const OrbitSet& orbit, std::size_t j, const FqnElement& alpha) const;

    FieldContext ctx_;
    BigCount d_;
    CountPath path_;
    BigCount length_;
    BigCount modulus_;  // q^n - 1
    NkString word_d_;
    NkString word_d1_;
    std::map<std::size_t, std::vector<FqnElement>> bases_;
    std::map<std::size_t, std::vector<std::size_t>> free_columns_;
};

}  // namespace necklace

#endif  // NECKLACE_BCH_HPP
