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
// Whole BCH matrices over F_q for exhaustive checks at desk scale.

#ifndef NECKLACE_TESTS_BCH_MATRICES_HPP
#define NECKLACE_TESTS_BCH_MATRICES_HPP

#include "necklace/bch.hpp"

namespace necklace::testing {

inline FqMatrix generator_matrix(const BchCode& code) {
    FqMatrix out;
    const BigCount rows = code.generator_row_count();
    for (BigCount r = 1; r <= rows; ++r) {
        std::vector<FqElement> row;
        for (BigCount c = 0; c < code.length(); ++c) row.push_back(*code.generator_entry(r, code.generator_column(c)));
        out.push_back(std::move(row));
    }
    return out;
}

// Parity rows expanded over F_q; column 0 is the zero element, then g^0, g^1, ...
inline FqMatrix expanded_parity(const BchCode& code, bool with_zero_column) {
    FqMatrix out;
    const BigCount rows = code.parity_row_count();
    for (BigCount r = 1; r <= rows; ++r) {
        const OrbitSet s = *code.parity_row(r);
        std::vector<std::vector<FqElement>> block(s.size);
        if (with_zero_column) {
            const auto z = code.subfield_coordinates(s.size, s.m == 0 ? code.context().fqn().one() : FqnElement{});
            for (std::size_t k = 0; k < s.size; ++k) block[k].push_back(z[k]);
        }
        for (BigCount c = 0; c + 1 < code.length(); ++c) {
            const auto coords = code.subfield_coordinates(s.size, *code.parity_entry(r, code.parity_column(c)));
            for (std::size_t k = 0; k < s.size; ++k) block[k].push_back(coords[k]);
        }
        for (auto& b : block) out.push_back(std::move(b));
    }
    return out;
}

inline std::size_t nonorthogonal_pairs(const BchCode& code) {
    const Fq& fq = code.context().fq();
    const FqMatrix g = generator_matrix(code);
    const FqMatrix h = expanded_parity(code, true);
    std::size_t bad = 0;
    for (const auto& a : g) {
        for (const auto& b : h) {
            FqElement dot{};
            for (std::size_t c = 0; c < a.size(); ++c) dot = fq.add(dot, fq.mul(a[c], b[c]));
            if (!fq.is_zero(dot)) ++bad;
        }
    }
    return bad;
}

/// Number of d-element column subsets of h that are linearly dependent over F_q.
inline std::size_t dependent_column_sets(const Fq& fq, const FqMatrix& h, std::size_t d) {
    const std::size_t cols = h.front().size();
    std::size_t bad = 0;
    for (unsigned long mask = 0; mask < (1ul << cols); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != d) continue;
        FqMatrix sub;
        for (std::size_t c = 0; c < cols; ++c) {
            if (!(mask >> c & 1)) continue;
            std::vector<FqElement> column;
            for (const auto& row : h) column.push_back(row[c]);
            sub.push_back(std::move(column));
        }
        if (matrix_rank(fq, sub) != d) ++bad;
    }
    return bad;
}

}  // namespace necklace::testing

#endif  // NECKLACE_TESTS_BCH_MATRICES_HPP
