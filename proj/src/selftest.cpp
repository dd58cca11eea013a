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

#include "necklace/selftest.hpp"

#include "necklace/bch.hpp"
#include "necklace/indexing.hpp"
#include "necklace/irreducible.hpp"
#include "necklace/oracle.hpp"
#include "necklace/top_heavy.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>

namespace necklace {

namespace {

constexpr std::size_t kMaxReported = 4;

std::string shape(std::size_t n, const BigCount& q) { return "(n=" + std::to_string(n) + ",q=" + to_decimal(q) + ")"; }

NkString random_word(std::size_t n, const BigCount& q, std::mt19937_64& rng) {
    std::uniform_int_distribution<unsigned long> digit(0, q.get_ui() - 1);
    std::vector<BigCount> digits;
    for (std::size_t i = 0; i < n; ++i) digits.emplace_back(digit(rng));
    return NkString(q, std::move(digits));
}

// Every word when the space is small, otherwise `samples` random words.
std::vector<NkString> sample_words(std::size_t n, const BigCount& q, std::size_t samples, std::mt19937_64& rng) {
    const BigCount total = power(q, n);
    std::vector<NkString> out;
    if (total <= samples) {
        for (BigCount v = 0; v < total; ++v) out.push_back(NkString::from_integer(v, n, q));
    } else {
        for (std::size_t i = 0; i < samples; ++i) out.push_back(random_word(n, q, rng));
    }
    return out;
}

template <class F>
void guarded(CheckOutcome& out, const std::string& where, F&& f) {
    try {
        f();
    } catch (const std::exception& err) {
        out.mismatch(where + ": " + err.what());
    }
}

std::string poly_key(const Fq& fq, const FqPoly& f) { return format_fq_poly(fq, f); }

FqMatrix transpose_columns(const FqMatrix& rows, const std::vector<std::size_t>& cols) {
    FqMatrix out;
    for (auto c : cols) {
        std::vector<FqElement> column;
        for (const auto& row : rows) column.push_back(row[c]);
        out.push_back(std::move(column));
    }
    return out;
}

// Every k-subset of the columns of `rows` has rank k.
bool columns_independent(const Fq& fq, const FqMatrix& rows, std::size_t cols, std::size_t k, std::string& bad) {
    if (k == 0) return true;
    if (k > cols) k = cols;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        if (matrix_rank(fq, transpose_columns(rows, pick)) != k) {
            bad.clear();
            for (auto c : pick) bad += (bad.empty() ? "" : ",") + std::to_string(c);
            return false;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == cols - k + i - 1) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

void check_bch_one(const FieldContext& ctx, unsigned long d, CheckOutcome& out) {
    const Fq& fq = ctx.fq();
    const Fqn& field = ctx.fqn();
    const BchCode code(ctx, d);
    const std::string tag = "d=" + std::to_string(d);
    const BigCount q = ctx.q();
    const std::size_t n = ctx.n();

    // Row enumeration.
    const auto gen_expected = brute_generator_rows(q, n, d);
    if (code.generator_row_count() != gen_expected.size()) out.mismatch(tag + ": generator row count");
    for (std::size_t r = 1; r <= gen_expected.size(); ++r) {
        const auto row = code.generator_row(r);
        if (!row || !(row->orbit == gen_expected[r - 1].orbit) || row->j != gen_expected[r - 1].j) {
            out.mismatch(tag + ": generator row " + std::to_string(r));
        }
    }
    if (code.generator_row(gen_expected.size() + 1)) out.mismatch(tag + ": generator row past the end");
    const auto par_expected = brute_parity_rows(q, n, d);
    if (code.parity_row_count() != par_expected.size()) out.mismatch(tag + ": parity row count");
    for (std::size_t r = 1; r <= par_expected.size(); ++r) {
        const auto row = code.parity_row(r);
        if (!row || !(*row == par_expected[r - 1])) out.mismatch(tag + ": parity row " + std::to_string(r));
    }
    if (code.parity_row(par_expected.size() + 1)) out.mismatch(tag + ": parity row past the end");

    // Generator matrix over all q^n columns; evaluate() refuses values outside F_q.
    const std::size_t length = code.length().get_ui();
    FqMatrix gen;
    for (std::size_t r = 1; r <= gen_expected.size(); ++r) {
        std::vector<FqElement> row;
        guarded(out, tag + " generator row " + std::to_string(r), [&] {
            for (std::size_t c = 0; c < length; ++c) row.push_back(*code.generator_entry(r, code.generator_column(c)));
        });
        gen.push_back(std::move(row));
    }

    // Parity rows expanded over the echelon basis of V_|S|, columns F_{q^n}^*, plus
    // the zero column (entry 0^m) placed first to line up with the generator.
    FqMatrix parity, parity_full;
    for (std::size_t r = 1; r <= par_expected.size(); ++r) {
        const OrbitSet orbit = *code.parity_row(r);
        FqMatrix rows(orbit.size), full(orbit.size);
        for (std::size_t k = 0; k < orbit.size; ++k) full[k].push_back(orbit.m == 0 && k == 0 ? fq.one() : fq.zero());
        for (std::size_t c = 0; c + 1 < length; ++c) {
            const auto coords = code.subfield_coordinates(orbit.size, *code.parity_entry(r, code.parity_column(c)));
            for (std::size_t k = 0; k < orbit.size; ++k) {
                rows[k].push_back(coords[k]);
                full[k].push_back(coords[k]);
            }
        }
        for (auto& row : rows) parity.push_back(std::move(row));
        for (auto& row : full) parity_full.push_back(std::move(row));
    }
    (void)field;

    std::string bad;
    if (!columns_independent(fq, parity, length - 1, d, bad)) out.mismatch(tag + ": dependent parity columns {" + bad + "}");

    std::size_t non_orthogonal = 0;
    for (const auto& g : gen) {
        if (g.size() != length) continue;
        for (const auto& h : parity_full) {
            FqElement dot = fq.zero();
            for (std::size_t c = 0; c < length; ++c) dot = fq.add(dot, fq.mul(g[c], h[c]));
            if (!fq.is_zero(dot)) ++non_orthogonal;
        }
    }
    if (non_orthogonal) {
        out.mismatch(tag + ": " + std::to_string(non_orthogonal) + " generator/parity row pairs not orthogonal");
    }
}

}  // namespace

void CheckOutcome::mismatch(const std::string& what) {
    if (passed || std::count(detail.begin(), detail.end(), ';') + 1 < static_cast<long>(kMaxReported)) {
        detail += (passed ? "" : "; ") + what;
    }
    passed = false;
}

CheckOutcome check_necklace_indexing(const std::vector<AlphabetBound>& cases, bool lyndon) {
    CheckOutcome out;
    for (const auto& c : cases) {
        for (std::size_t n = 1; n <= c.max_n; ++n) {
            const std::string where = shape(n, c.q);
            guarded(out, where, [&] {
                OrbitTable table = brute_orbits(n, c.q);
                if (lyndon) std::erase_if(table, [&](const OrbitEntry& e) { return e.size != n; });
                for (std::size_t j = 1; j <= table.size(); ++j) {
                    const auto got = lyndon ? index_lyndon(n, c.q, j) : index_necklace(n, c.q, j);
                    if (!got || !(*got == table[j - 1].representative)) {
                        out.mismatch(where + " index " + std::to_string(j));
                        continue;
                    }
                    const auto back = lyndon ? reverse_index_lyndon(*got) : reverse_index_necklace(*got);
                    if (back.rank != j) out.mismatch(where + " reverse of index " + std::to_string(j));
                }
                const BigCount past = static_cast<unsigned long>(table.size() + 1);
                if (lyndon ? index_lyndon(n, c.q, past).has_value() : index_necklace(n, c.q, past).has_value()) {
                    out.mismatch(where + " index past the end is not too large");
                }
            });
        }
    }
    return out;
}

CheckOutcome check_counting_identities(const std::vector<WordShape>& shapes, std::size_t samples, std::uint64_t seed) {
    CheckOutcome out;
    std::mt19937_64 rng(seed);
    for (const auto& s : shapes) {
        const std::string where = shape(s.n, s.q);
        guarded(out, where, [&] {
            const BruteCounter brute(s.n, s.q);
            const auto divs = divisors(s.n);
            for (const auto& x : sample_words(s.n, s.q, samples, rng)) {
                std::map<std::size_t, BigCount> exact;
                for (auto i : divs) {
                    exact[i] = count_G_exact(x, i);
                    if (exact[i] != brute.G(x, i)) out.mismatch(where + " G(" + x.to_string() + "," + std::to_string(i) + ")");
                }
                for (auto p : divs) {
                    BigCount sum = 0;
                    for (auto i : divs) {
                        if (p % i == 0) sum += exact[i];
                    }
                    const BigCount leq = count_G_leq(x, p);
                    if (leq != sum || leq != brute.G_leq(x, p)) {
                        out.mismatch(where + " G(" + x.to_string() + ",<=" + std::to_string(p) + ")");
                    }
                }
                BigCount classes = 0;
                for (auto i : divs) {
                    if (!mpz_divisible_ui_p(exact[i].get_mpz_t(), i)) {
                        out.mismatch(where + " G(" + x.to_string() + "," + std::to_string(i) + ") not divisible");
                    }
                    classes += exact[i] / static_cast<unsigned long>(i);
                }
                if (classes != brute.C_x(x) || count_classes_less(x) != classes) {
                    out.mismatch(where + " C(" + x.to_string() + ")");
                }
            }
        });
    }
    return out;
}

CheckOutcome check_path_agreement(const std::vector<BigCount>& qs, std::size_t max_n, std::size_t samples,
                                  std::uint64_t seed) {
    CheckOutcome out;
    std::mt19937_64 rng(seed);
    for (const auto& q : qs) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            const std::string where = shape(n, q);
            guarded(out, where, [&] {
                const BruteCounter brute(n, q);
                for (const auto& x : sample_words(n, q, samples, rng)) {
                    const BigCount direct = count_classes_less(x, CountPath::Direct);
                    const BigCount encoded = count_classes_less(x, CountPath::Encoded);
                    if (direct != encoded || direct != brute.C_x(x)) out.mismatch(where + " C(" + x.to_string() + ")");
                }
                const OrbitTable table = brute.orbits();
                std::uniform_int_distribution<std::size_t> pick(1, table.size());
                for (std::size_t k = 0; k < std::min(samples, table.size()); ++k) {
                    const std::size_t j = table.size() <= samples ? k + 1 : pick(rng);
                    const auto direct = index_necklace(n, q, j, CountPath::Direct);
                    const auto encoded = index_necklace(n, q, j, CountPath::Encoded);
                    if (!direct || !encoded || !(*direct == *encoded) || !(*direct == table[j - 1].representative)) {
                        out.mismatch(where + " index " + std::to_string(j));
                    }
                }
            });
        }
    }
    return out;
}

CheckOutcome check_irreducible_indexing(const std::vector<IrreducibleCase>& cases) {
    CheckOutcome out;
    for (const auto& c : cases) {
        const BigCount q = power(c.p, c.e);
        const std::string where = shape(c.n, q);
        guarded(out, where, [&] {
            const Fq fq = generate_fq(c.p, c.e, 1);
            const FieldContext ctx = find_primitive_polynomial(fq, c.n, factorize(power(q, c.n) - 1), 1);
            const BigCount count = count_irreducible(q, c.n);
            const BigCount closed = c.n == 1 ? q : closed_form_counts(c.n, q).lyndon;
            if (count != closed) out.mismatch(where + " count " + to_decimal(count) + " vs closed form " + to_decimal(closed));
            std::set<std::string> got;
            for (BigCount i = 1; i <= count; ++i) {
                const auto f = index_irreducible(ctx, i);
                if (!f) {
                    out.mismatch(where + " index " + to_decimal(i) + " too large");
                    continue;
                }
                if (!got.insert(poly_key(fq, *f)).second) out.mismatch(where + " repeated output at " + to_decimal(i));
            }
            if (index_irreducible(ctx, count + 1)) out.mismatch(where + " index past the end");
            std::set<std::string> expected;
            for (const auto& f : brute_irreducibles(fq, c.n)) expected.insert(poly_key(fq, f));
            if (got != expected) out.mismatch(where + " output set differs from brute force");
        });
    }
    return out;
}

CheckOutcome check_bch(const std::vector<unsigned long>& ds) {
    CheckOutcome out;
    guarded(out, "bch", [&] {
        const Fq fq = generate_fq(2, 1, 1);
        const FieldContext ctx = find_primitive_polynomial(fq, 3, factorize(7), 1);
        for (auto d : ds) guarded(out, "d=" + std::to_string(d), [&] { check_bch_one(ctx, d, out); });
    });
    return out;
}

CheckOutcome check_top_heavy(std::size_t max_prime) {
    CheckOutcome out;
    for (std::size_t n = 2; n <= max_prime; ++n) {
        if (!is_prime_length(n)) continue;
        const std::string where = "n=" + std::to_string(n);
        guarded(out, where, [&] {
            unsigned long heavy = 0;
            const unsigned long total = 1ul << n;
            for (unsigned long v = 0; v < total; ++v) {
                const NkString x = NkString::from_integer(v, n, 2);
                heavy += is_top_heavy(x);
                if (v == 0 || v == total - 1) continue;
                std::size_t found = 0, shift = n;
                for (std::size_t i = 0; i < n; ++i) {
                    if (is_top_heavy(rotate(x, i))) {
                        ++found;
                        shift = i;
                    }
                }
                if (found != 1 || top_heavy_rotation(x) != shift) out.mismatch(where + " word " + x.to_string());
            }
            const BigCount counted = count_top_heavy(n);
            if (counted != heavy || counted != total_necklaces(n, 2)) out.mismatch(where + " top-heavy count");
        });
    }
    return out;
}

bool run_selftest(std::size_t max_n, const std::function<void(const std::string&)>& report) {
    if (max_n < 2) fail(ErrorCode::InvalidArgument, "max-n must be at least 2");
    const auto cap = [&](std::size_t v) { return std::min(max_n, v); };
    struct Named {
        const char* name;
        std::function<CheckOutcome()> run;
    };
    const std::vector<Named> checks{
        {"necklace-indexing", [&] { return check_necklace_indexing({{2, max_n}, {3, cap(5)}}, false); }},
        {"lyndon-indexing", [&] { return check_necklace_indexing({{2, max_n}, {3, cap(5)}}, true); }},
        {"counting-identities",
         [&] { return check_counting_identities({{max_n, 2}, {cap(6), 3}, {cap(4), 5}}, 100, 20260101); }},
        {"encoded-path", [&] { return check_path_agreement({3, 4, 5, 6}, cap(4), 60, 20260102); }},
        {"irreducible-indexing", [&] {
             std::vector<IrreducibleCase> cases;
             for (std::size_t n = 2; n <= cap(6); ++n) cases.push_back({2, 1, n});
             cases.insert(cases.end(), {{3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}});
             return check_irreducible_indexing(cases);
         }},
        {"bch", [&] { return check_bch({0, 1, 3, 4}); }},
        {"top-heavy", [&] { return check_top_heavy(cap(13)); }},
    };
    bool all = true;
    for (const auto& check : checks) {
        const auto start = std::chrono::steady_clock::now();
        const CheckOutcome outcome = check.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        report(std::string(outcome.passed ? "PASS " : "FAIL ") + check.name + " (" + timing + ")" +
               (outcome.detail.empty() ? "" : ": " + outcome.detail));
        all = all && outcome.passed;
    }
    return all;
}

}  // namespace necklace
