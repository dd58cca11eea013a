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

#include "necklace/irreducible.hpp"

#include "necklace/indexing.hpp"

namespace necklace {

BigCount count_irreducible(const BigCount& q, std::size_t n, CountPath path) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    if (q < 2) fail(ErrorCode::InvalidArgument, "q must be at least 2");
    if (n == 1) return q;
    return total_aperiodic(n, q, path);
}

std::optional<FqPoly> index_irreducible(const FieldContext& ctx, const BigCount& i, CountPath path,
                                        std::size_t* probes) {
    if (!ctx.primitive()) fail(ErrorCode::InvalidAdvice, "advice polynomial is not certified primitive");
    if (i < 1) fail(ErrorCode::InvalidArgument, "index must be at least 1");
    const Fq& fq = ctx.fq();
    const Fqn& field = ctx.fqn();
    const std::size_t n = ctx.n();
    if (probes) *probes = 0;
    if (n == 1) {
        if (i > ctx.q()) return std::nullopt;
        if (i == 1) return FqPoly{fq.zero(), fq.one()};
        const FqnElement root = field.pow(ctx.g(), i - 2);
        return FqPoly{fq.neg(*field.project(root)), fq.one()};
    }
    const auto sigma = index_lyndon(n, ctx.q(), i, path, probes);
    if (!sigma) return std::nullopt;
    // A Lyndon word of length >= 2 is never the constant word (q-1)^n.
    if (sigma->is_constant(ctx.q() - 1)) fail(ErrorCode::Internal, "indexer returned the all-(q-1) word");
    return minimal_polynomial(field, field.pow(ctx.g(), sigma->to_integer()));
}

}  // namespace necklace
