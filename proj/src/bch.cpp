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

#include "necklace/bch.hpp"

#include "necklace/indexing.hpp"

namespace necklace {

namespace {

OrbitSet orbit_of(const NkString& least) {
    return {least.to_integer(), fundamental_period(least)};
}

// Kernel of Frobenius^l - identity on the power basis, with the free columns used.
std::pair<std::vector<FqnElement>, std::vector<std::size_t>> kernel_basis(const FieldContext& ctx, std::size_t l) {
    const std::size_t n = ctx.n();
    if (l == 0 || n % l != 0) fail(ErrorCode::NotADivisor, std::to_string(l) + " does not divide " + std::to_string(n));
    const Fq& fq = ctx.fq();
    const Fqn& field = ctx.fqn();
    const BigCount exponent = power(ctx.q(), l);
    FqMatrix a(n, std::vector<FqElement>(n));
    for (std::size_t k = 0; k < n; ++k) {
        FqnElement basis_k(k + 1, fq.zero());
        basis_k[k] = fq.one();
        basis_k = field.reduce(std::move(basis_k));
        const auto col = field.coordinates(field.sub(field.pow(basis_k, exponent), basis_k));
        for (std::size_t i = 0; i < n; ++i) a[i][k] = col[i];
    }
    const auto pivots = row_reduce(fq, a);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<FqnElement> out;
    std::vector<std::size_t> free;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FqElement> v(n, fq.zero());
        v[f] = fq.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fq.neg(a[r][f]);
        out.push_back(field.from_coordinates(std::move(v)));
        free.push_back(f);
    }
    if (out.size() != l) fail(ErrorCode::Internal, "subfield kernel has the wrong dimension");
    return {std::move(out), std::move(free)};
}

NkString threshold_word(const FieldContext& ctx, const BigCount& d, unsigned long offset) {
    if (d < 0 || d >= power(ctx.q(), ctx.n()) - 1) fail(ErrorCode::InvalidArgument, "d must satisfy 0 <= d < q^n - 1");
    return NkString::from_integer(d + offset, ctx.n(), ctx.q());
}

}  // namespace

std::vector<std::size_t> row_reduce(const Fq& fq, FqMatrix& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && fq.is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const FqElement inv = fq.inv(rows[r][c]);
        for (auto& v : rows[r]) v = fq.mul(v, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || fq.is_zero(rows[i][c])) continue;
            const FqElement f = rows[i][c];
            for (std::size_t k = 0; k < cols; ++k) rows[i][k] = fq.sub(rows[i][k], fq.mul(f, rows[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t matrix_rank(const Fq& fq, FqMatrix rows) { return row_reduce(fq, rows).size(); }

std::vector<FqnElement> subfield_basis(const FieldContext& ctx, std::size_t l) { return kernel_basis(ctx, l).first; }

BchCode::BchCode(FieldContext ctx, BigCount d, CountPath path)
    : ctx_(std::move(ctx)),
      d_(std::move(d)),
      path_(path),
      length_(power(ctx_.q(), ctx_.n())),
      modulus_(length_ - 1),
      word_d_(threshold_word(ctx_, d_, 0)),
      word_d1_(threshold_word(ctx_, d_, 1)) {
    for (std::size_t l : divisors(ctx_.n())) {
        auto [basis, free] = kernel_basis(ctx_, l);
        bases_.emplace(l, std::move(basis));
        free_columns_.emplace(l, std::move(free));
    }
}

const std::vector<FqnElement>& BchCode::basis(std::size_t l) const {
    const auto it = bases_.find(l);
    if (it == bases_.end()) fail(ErrorCode::NotADivisor, std::to_string(l) + " does not divide n");
    return it->second;
}

std::vector<FqElement> BchCode::subfield_coordinates(std::size_t l, const FqnElement& a) const {
    basis(l);
    const auto coords = ctx_.fqn().coordinates(a);
    std::vector<FqElement> out;
    for (auto f : free_columns_.at(l)) out.push_back(coords[f]);
    return out;
}

BigCount BchCode::generator_row_count() const { return count_words_bounded(nullptr, word_d_, path_); }

std::optional<GeneratorRow> BchCode::generator_row(const BigCount& r) const {
    if (r < 1) fail(ErrorCode::InvalidArgument, "row must be at least 1");
    const BigCount total = generator_row_count();
    if (r > total) return std::nullopt;
    // g(x) = rows whose orbit has a rotation below x; the row's orbit is the last x with g(x) < r.
    auto g = [&](const NkString& x) { return count_words_bounded(&x, word_d_, path_); };
    const NkString least = search_largest_below(ctx_.n(), ctx_.q(), r, total, g, nullptr);
    const BigCount before = g(least);
    const OrbitSet orbit = orbit_of(least);
    return GeneratorRow{orbit, static_cast<std::size_t>(to_u64(r - before, "basis index"))};
}

FqElement BchCode::evaluate(const OrbitSet& orbit, std::size_t j, const FqnElement& alpha) const {
    const Fqn& field = ctx_.fqn();
    FqnElement beta = basis(orbit.size).at(j - 1);
    BigCount e = orbit.m;
    FqnElement sum = field.zero();
    for (std::size_t k = 0; k < orbit.size; ++k) {
        sum = field.add(sum, field.mul(beta, field.pow(alpha, e)));
        beta = field.frobenius(beta);
        e = e * ctx_.q() % modulus_;
    }
    const auto value = field.project(sum);
    if (!value) fail(ErrorCode::NotInBaseField, "generator entry is not in F_q");
    return *value;
}

std::optional<FqElement> BchCode::generator_entry(const BigCount& r, const FqnElement& alpha) const {
    const auto row = generator_row(r);
    if (!row) return std::nullopt;
    return evaluate(row->orbit, row->j, alpha);
}

BigCount BchCode::parity_row_count() const { return count_classes_less(word_d1_, path_); }

std::optional<OrbitSet> BchCode::parity_row(const BigCount& r) const {
    if (r < 1) fail(ErrorCode::InvalidArgument, "row must be at least 1");
    if (r > parity_row_count()) return std::nullopt;
    const auto least = index_necklace(ctx_.n(), ctx_.q(), r, path_);
    if (!least) fail(ErrorCode::Internal, "parity row beyond the necklace count");
    return orbit_of(*least);
}

std::optional<FqnElement> BchCode::parity_entry(const BigCount& r, const FqnElement& alpha) const {
    if (alpha.empty()) fail(ErrorCode::ZeroColumn, "parity columns are indexed by nonzero elements");
    const auto row = parity_row(r);
    if (!row) return std::nullopt;
    return ctx_.fqn().pow(alpha, row->m);
}

FqnElement BchCode::generator_column(const BigCount& c) const {
    if (c < 0 || c >= length_) fail(ErrorCode::InvalidArgument, "generator column out of range");
    if (c == 0) return ctx_.fqn().zero();
    return ctx_.fqn().pow(ctx_.g(), c - 1);
}

FqnElement BchCode::parity_column(const BigCount& c) const {
    if (c < 0 || c >= modulus_) fail(ErrorCode::InvalidArgument, "parity column out of range");
    return ctx_.fqn().pow(ctx_.g(), c);
}

}  // namespace necklace
