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

#include "necklace/oracle.hpp"

#include "necklace/counting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace necklace {

namespace {

std::uint64_t guarded_space(std::size_t n, const BigCount& q) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    if (q < 2) fail(ErrorCode::InvalidArgument, "q must be at least 2");
    const BigCount total = power(q, n);
    if (total > BigCount(1) << kOracleMaxBits) fail(ErrorCode::TooBig, "brute force limited to q^n <= 2^22");
    return total.get_ui();
}

std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t out = m;
    for (std::uint64_t r = 2; r * r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        out -= out / r;
    }
    if (m > 1) out -= out / m;
    return out;
}

// Orbits of Z_{q^n - 1} under multiplication by q, by least element.
std::vector<std::vector<std::uint64_t>> residue_orbits(const BigCount& q, std::size_t n) {
    const std::uint64_t modulus = guarded_space(n, q) - 1;
    const std::uint64_t qq = q.get_ui();
    std::vector<bool> seen(modulus, false);
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t m = 0; m < modulus; ++m) {
        if (seen[m]) continue;
        std::vector<std::uint64_t> orbit;
        for (std::uint64_t e = m; !seen[e]; e = e * qq % modulus) {
            seen[e] = true;
            orbit.push_back(e);
        }
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace

BruteCounter::BruteCounter(std::size_t n, const BigCount& q) : n_(n), q_(q) {
    const std::uint64_t total = guarded_space(n, q);
    const std::uint64_t qq = q.get_ui();
    least_.resize(total);
    period_.resize(total);
    std::vector<std::uint64_t> digits(n);
    for (std::uint64_t v = 0; v < total; ++v) {
        std::uint64_t rest = v;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rest % qq;
            rest /= qq;
        }
        // Rotation starting at s, read as a base-q integer; the order matches lexicographic.
        std::uint64_t best = v;
        std::uint32_t period = static_cast<std::uint32_t>(n);
        for (std::size_t s = 1; s < n; ++s) {
            std::uint64_t r = 0;
            for (std::size_t k = 0; k < n; ++k) r = r * qq + digits[(s + k) % n];
            best = std::min(best, r);
            if (r == v && s < period) period = static_cast<std::uint32_t>(s);
        }
        least_[v] = best;
        period_[v] = period;
    }
}

std::uint64_t BruteCounter::value_of(const NkString& x) const {
    if (x.size() != n_ || x.q() != q_) fail(ErrorCode::InvalidArgument, "word does not match the oracle table");
    return x.to_integer().get_ui();
}

BigCount BruteCounter::C_x(const NkString& x) const {
    const std::uint64_t xv = value_of(x);
    std::set<std::uint64_t> below;
    for (std::uint64_t least : least_) {
        if (least < xv) below.insert(least);
    }
    return BigCount(static_cast<unsigned long>(below.size()));
}

BigCount BruteCounter::count_words(const NkString& x, std::size_t p, bool exact) const {
    if (p == 0 || n_ % p != 0) fail(ErrorCode::NotADivisor, "p must divide n");
    const std::uint64_t xv = value_of(x);
    unsigned long total = 0;
    for (std::size_t v = 0; v < least_.size(); ++v) {
        const bool size_ok = exact ? period_[v] == p : p % period_[v] == 0;
        if (size_ok && least_[v] < xv) ++total;
    }
    return BigCount(total);
}

BigCount BruteCounter::G(const NkString& x, std::size_t p) const { return count_words(x, p, true); }
BigCount BruteCounter::G_leq(const NkString& x, std::size_t p) const { return count_words(x, p, false); }

OrbitTable BruteCounter::orbits() const {
    std::map<std::uint64_t, std::size_t> seen;
    for (std::size_t v = 0; v < least_.size(); ++v) {
        if (least_[v] == v) seen[v] = period_[v];
    }
    OrbitTable out;
    for (const auto& [value, size] : seen) {
        out.push_back({NkString::from_integer(BigCount(static_cast<unsigned long>(value)), n_, q_), size});
    }
    return out;
}

OrbitTable brute_orbits(std::size_t n, const BigCount& q) { return BruteCounter(n, q).orbits(); }

BigCount brute_C_x(const NkString& x) { return BruteCounter(x.size(), x.q()).C_x(x); }
BigCount brute_G(const NkString& x, std::size_t p) { return BruteCounter(x.size(), x.q()).G(x, p); }
BigCount brute_G_leq(const NkString& x, std::size_t p) { return BruteCounter(x.size(), x.q()).G_leq(x, p); }

std::vector<FqPoly> brute_irreducibles(const Fq& fq, std::size_t n) {
    const std::uint64_t total = guarded_space(n, fq.order());
    std::vector<FqPoly> out;
    for (std::uint64_t v = 0; v < total; ++v) {
        FqPoly f;
        BigCount rest = static_cast<unsigned long>(v);
        for (std::size_t k = 0; k < n; ++k) {
            BigCount digit;
            mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), fq.order().get_mpz_t());
            f.push_back(fq.element_at(digit));
        }
        f.push_back(fq.one());
        if (is_irreducible(fq, f)) out.push_back(std::move(f));
    }
    auto key = [&](const FqPoly& f) {
        std::vector<BigCount> k;
        for (auto c = f.rbegin(); c != f.rend(); ++c) k.push_back(fq.index_of(*c));
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const FqPoly& a, const FqPoly& b) { return key(a) < key(b); });
    return out;
}

ClosedFormCounts closed_form_counts(std::size_t n, const BigCount& q) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
    BigCount neck = 0, lyn = 0;
    for (std::size_t d : divisors(n)) {
        neck += BigCount(static_cast<unsigned long>(euler_phi(n / d))) * power(q, d);
        lyn += mobius(d) * power(q, n / d);
    }
    return {neck / static_cast<unsigned long>(n), lyn / static_cast<unsigned long>(n)};
}

std::vector<GeneratorRow> brute_generator_rows(const BigCount& q, std::size_t n, const BigCount& d) {
    std::vector<GeneratorRow> out;
    for (const auto& orbit : residue_orbits(q, n)) {
        const bool inside = std::all_of(orbit.begin(), orbit.end(), [&](std::uint64_t e) { return d >= static_cast<unsigned long>(e); });
        if (!inside) continue;
        const std::uint64_t least = *std::min_element(orbit.begin(), orbit.end());
        for (std::size_t j = 1; j <= orbit.size(); ++j) {
            out.push_back({{BigCount(static_cast<unsigned long>(least)), orbit.size()}, j});
        }
    }
    return out;
}

std::vector<OrbitSet> brute_parity_rows(const BigCount& q, std::size_t n, const BigCount& d) {
    std::vector<OrbitSet> out;
    for (const auto& orbit : residue_orbits(q, n)) {
        const std::uint64_t least = *std::min_element(orbit.begin(), orbit.end());
        if (d >= static_cast<unsigned long>(least)) out.push_back({BigCount(static_cast<unsigned long>(least)), orbit.size()});
    }
    return out;
}

}  // namespace necklace
