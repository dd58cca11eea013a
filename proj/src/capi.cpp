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

#include "necklace.h"

#include "necklace/bch.hpp"
#include "necklace/indexing.hpp"
#include "necklace/irreducible.hpp"
#include "necklace/selftest.hpp"
#include "necklace/top_heavy.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

struct nk_field {
    necklace::FieldContext ctx;
};

struct nk_bch {
    necklace::BchCode code;
};

namespace {

using necklace::BigCount;
using necklace::ErrorCode;
using necklace::NkString;

constexpr unsigned kMatrixMaxBits = 14;

thread_local std::string last_error;

nk_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return NK_ERR_INVALID_ARGUMENT;
        case ErrorCode::InvalidBlock: return NK_ERR_INVALID_BLOCK;
        case ErrorCode::LayerMismatch: return NK_ERR_LAYER_MISMATCH;
        case ErrorCode::NotADivisor: return NK_ERR_NOT_A_DIVISOR;
        case ErrorCode::NotAperiodic: return NK_ERR_NOT_APERIODIC;
        case ErrorCode::DivisionByZero: return NK_ERR_DIVISION_BY_ZERO;
        case ErrorCode::ConjugatesCollide: return NK_ERR_CONJUGATES_COLLIDE;
        case ErrorCode::CoefficientNotInBase: return NK_ERR_COEFFICIENT_NOT_IN_BASE;
        case ErrorCode::BadFactorization: return NK_ERR_BAD_FACTORIZATION;
        case ErrorCode::InvalidAdvice: return NK_ERR_INVALID_ADVICE;
        case ErrorCode::NotInBaseField: return NK_ERR_NOT_IN_BASE_FIELD;
        case ErrorCode::ZeroColumn: return NK_ERR_ZERO_COLUMN;
        case ErrorCode::NotBinary: return NK_ERR_NOT_BINARY;
        case ErrorCode::NotPrime: return NK_ERR_NOT_PRIME;
        case ErrorCode::ConstantString: return NK_ERR_CONSTANT_STRING;
        case ErrorCode::TooBig: return NK_ERR_TOO_BIG;
        case ErrorCode::Internal: return NK_ERR_INTERNAL;
    }
    return NK_ERR_INTERNAL;
}

// Runs f, translating exceptions into a status and the thread's error text.
template <class F>
nk_status guard(F&& f) noexcept {
    try {
        last_error.clear();
        return f();
    } catch (const necklace::Error& err) {
        last_error = err.what();
        return status_of(err.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return NK_ERR_TOO_BIG;
    } catch (const std::exception& err) {
        last_error = err.what();
        return NK_ERR_INTERNAL;
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** slot, const std::string& s) {
    if (slot) *slot = dup(s);
}

std::string text(const char* s, const char* what) {
    if (!s) necklace::fail(ErrorCode::InvalidArgument, std::string(what) + " is missing");
    return s;
}

BigCount number(const char* s, const char* what) { return necklace::parse_decimal(text(s, what)); }

BigCount alphabet(const char* q) {
    BigCount v = number(q, "q");
    if (v < 2) necklace::fail(ErrorCode::InvalidArgument, "q must be at least 2");
    return v;
}

necklace::CountPath path_of(nk_path path) {
    switch (path) {
        case NK_PATH_AUTO: return necklace::CountPath::Auto;
        case NK_PATH_DIRECT: return necklace::CountPath::Direct;
        case NK_PATH_ENCODED: return necklace::CountPath::Encoded;
    }
    necklace::fail(ErrorCode::InvalidArgument, "unknown count path");
}

void require(const void* p, const char* what) {
    if (!p) necklace::fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

nk_status index_common(bool lyndon, size_t n, const char* q, const char* j, nk_path path, char** word,
                       size_t* probes) {
    return guard([&] {
        require(word, "word");
        *word = nullptr;
        const BigCount qq = alphabet(q);
        const BigCount jj = number(j, "index");
        std::size_t used = 0;
        const auto got = lyndon ? necklace::index_lyndon(n, qq, jj, path_of(path), &used)
                                : necklace::index_necklace(n, qq, jj, path_of(path), &used);
        if (probes) *probes = used;
        if (!got) return NK_TOO_LARGE;
        put(word, got->to_string());
        return NK_OK;
    });
}

nk_status rank_common(bool lyndon, const char* word, const char* q, nk_path path, char** rank, char** canonical) {
    return guard([&] {
        const NkString x = NkString::parse(text(word, "word"), alphabet(q));
        const auto result = lyndon ? necklace::reverse_index_lyndon(x, path_of(path))
                                   : necklace::reverse_index_necklace(x, path_of(path));
        put(rank, necklace::to_decimal(result.rank));
        put(canonical, result.canonical.to_string());
        return NK_OK;
    });
}

std::string matrix_text(const nk_bch* code, bool generator) {
    const auto& c = code->code;
    if (c.length() > BigCount(1) << kMatrixMaxBits) {
        necklace::fail(ErrorCode::TooBig, "full matrices are limited to 2^14 columns");
    }
    const necklace::Fq& fq = c.context().fq();
    const necklace::Fqn& field = c.context().fqn();
    const BigCount rows = generator ? c.generator_row_count() : c.parity_row_count();
    const BigCount cols = generator ? c.length() : BigCount(c.length() - 1);
    std::ostringstream out;
    for (BigCount r = 1; r <= rows; ++r) {
        for (BigCount col = 0; col < cols; ++col) {
            if (col != 0) out << '\t';
            if (generator) {
                out << necklace::format_fq(fq, *c.generator_entry(r, c.generator_column(col)));
            } else {
                out << necklace::format_fqn(field, *c.parity_entry(r, c.parity_column(col)));
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

extern "C" {

const char* nk_status_name(nk_status status) {
    switch (status) {
        case NK_OK: return "OK";
        case NK_TOO_LARGE: return "TOO_LARGE";
        case NK_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case NK_ERR_INVALID_BLOCK: return "InvalidBlock";
        case NK_ERR_LAYER_MISMATCH: return "LayerMismatch";
        case NK_ERR_NOT_A_DIVISOR: return "NotADivisor";
        case NK_ERR_NOT_APERIODIC: return "NotAperiodic";
        case NK_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
        case NK_ERR_CONJUGATES_COLLIDE: return "ConjugatesCollide";
        case NK_ERR_COEFFICIENT_NOT_IN_BASE: return "CoefficientNotInBase";
        case NK_ERR_BAD_FACTORIZATION: return "BadFactorization";
        case NK_ERR_INVALID_ADVICE: return "InvalidAdvice";
        case NK_ERR_NOT_IN_BASE_FIELD: return "NotInBaseField";
        case NK_ERR_ZERO_COLUMN: return "ZeroColumn";
        case NK_ERR_NOT_BINARY: return "NotBinary";
        case NK_ERR_NOT_PRIME: return "NotPrime";
        case NK_ERR_CONSTANT_STRING: return "ConstantString";
        case NK_ERR_TOO_BIG: return "TooBig";
        case NK_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* nk_last_error(void) { return last_error.c_str(); }

void nk_free(char* text) { std::free(text); }

nk_status nk_parse_qspec(const char* spec, char** p, size_t* e, char** q) {
    return guard([&] {
        const std::string s = text(spec, "q-spec");
        const auto caret = s.find('^');
        const BigCount prime = necklace::parse_decimal(s.substr(0, caret));
        BigCount exponent = 1;
        if (caret != std::string::npos) exponent = necklace::parse_decimal(s.substr(caret + 1));
        if (exponent < 1 || exponent > 1u << 16) necklace::fail(ErrorCode::InvalidArgument, "exponent out of range");
        if (prime < 2 || mpz_probab_prime_p(prime.get_mpz_t(), 40) == 0) {
            necklace::fail(ErrorCode::NotPrime, necklace::to_decimal(prime) + " is not prime");
        }
        put(p, necklace::to_decimal(prime));
        if (e) *e = exponent.get_ui();
        put(q, necklace::to_decimal(necklace::power(prime, exponent.get_ui())));
        return NK_OK;
    });
}

nk_status nk_count(size_t n, const char* q, nk_path path, char** necklaces, char** lyndon) {
    return guard([&] {
        const BigCount qq = alphabet(q);
        put(necklaces, necklace::to_decimal(necklace::total_necklaces(n, qq, path_of(path))));
        put(lyndon, necklace::to_decimal(necklace::total_aperiodic(n, qq, path_of(path))));
        return NK_OK;
    });
}

nk_status nk_index_necklace(size_t n, const char* q, const char* j, nk_path path, char** word, size_t* probes) {
    return index_common(false, n, q, j, path, word, probes);
}

nk_status nk_rank_necklace(const char* word, const char* q, nk_path path, char** rank, char** canonical) {
    return rank_common(false, word, q, path, rank, canonical);
}

nk_status nk_index_lyndon(size_t n, const char* q, const char* j, nk_path path, char** word, size_t* probes) {
    return index_common(true, n, q, j, path, word, probes);
}

nk_status nk_rank_lyndon(const char* word, const char* q, nk_path path, char** rank, char** canonical) {
    return rank_common(true, word, q, path, rank, canonical);
}

nk_status nk_classes_less(const char* word, const char* q, nk_class_count kind, size_t period, nk_path path,
                          char** count) {
    return guard([&] {
        const NkString x = NkString::parse(text(word, "word"), alphabet(q));
        BigCount value;
        switch (kind) {
            case NK_CLASSES_BELOW: value = necklace::count_classes_less(x, path_of(path)); break;
            case NK_WORDS_PERIOD_EXACT: value = necklace::count_G_exact(x, period, path_of(path)); break;
            case NK_WORDS_PERIOD_DIVIDES: value = necklace::count_G_leq(x, period, path_of(path)); break;
            default: necklace::fail(ErrorCode::InvalidArgument, "unknown count kind");
        }
        put(count, necklace::to_decimal(value));
        return NK_OK;
    });
}

nk_status nk_field_load(const char* advice, nk_field** field) {
    return guard([&] {
        require(field, "field");
        *field = nullptr;
        auto ctx = necklace::load_context(necklace::parse_advice(text(advice, "advice")));
        *field = new nk_field{std::move(ctx)};
        return NK_OK;
    });
}

nk_status nk_field_generate(const char* p, size_t e, size_t n, const char* factors, unsigned long seed,
                            nk_field** field) {
    return guard([&] {
        require(field, "field");
        *field = nullptr;
        const necklace::Fq fq = necklace::generate_fq(number(p, "p"), e, seed);
        if (n == 0) necklace::fail(ErrorCode::InvalidArgument, "n must be positive");
        std::vector<BigCount> primes;
        if (factors) {
            std::istringstream in(factors);
            std::string tok;
            while (in >> tok) primes.push_back(necklace::parse_decimal(tok));
        } else {
            primes = necklace::factorize(necklace::power(fq.order(), n) - 1);
        }
        std::sort(primes.begin(), primes.end());
        *field = new nk_field{necklace::find_primitive_polynomial(fq, n, primes, seed)};
        return NK_OK;
    });
}

void nk_field_free(nk_field* field) { delete field; }

nk_status nk_field_advice(const nk_field* field, char** advice) {
    return guard([&] {
        require(field, "field");
        put(advice, necklace::format_advice(necklace::to_advice(field->ctx)));
        return NK_OK;
    });
}

nk_status nk_field_q(const nk_field* field, char** q, size_t* n) {
    return guard([&] {
        require(field, "field");
        put(q, necklace::to_decimal(field->ctx.q()));
        if (n) *n = field->ctx.n();
        return NK_OK;
    });
}

nk_status nk_irreducible_count(const char* q, size_t n, nk_path path, char** count) {
    return guard([&] {
        put(count, necklace::to_decimal(necklace::count_irreducible(alphabet(q), n, path_of(path))));
        return NK_OK;
    });
}

nk_status nk_irreducible_index(const nk_field* field, const char* i, nk_path path, char** poly) {
    return guard([&] {
        require(field, "field");
        require(poly, "poly");
        *poly = nullptr;
        const auto f = necklace::index_irreducible(field->ctx, number(i, "index"), path_of(path));
        if (!f) return NK_TOO_LARGE;
        put(poly, necklace::format_fq_poly(field->ctx.fq(), *f));
        return NK_OK;
    });
}

nk_status nk_bch_new(const nk_field* field, const char* d, nk_path path, nk_bch** code) {
    return guard([&] {
        require(field, "field");
        require(code, "code");
        *code = nullptr;
        *code = new nk_bch{necklace::BchCode(field->ctx, number(d, "d"), path_of(path))};
        return NK_OK;
    });
}

void nk_bch_free(nk_bch* code) { delete code; }

nk_status nk_bch_generator_row_count(const nk_bch* code, char** count) {
    return guard([&] {
        require(code, "code");
        put(count, necklace::to_decimal(code->code.generator_row_count()));
        return NK_OK;
    });
}

nk_status nk_bch_parity_row_count(const nk_bch* code, char** count) {
    return guard([&] {
        require(code, "code");
        put(count, necklace::to_decimal(code->code.parity_row_count()));
        return NK_OK;
    });
}

nk_status nk_bch_generator_row(const nk_bch* code, const char* r, char** m, size_t* size, size_t* j) {
    return guard([&] {
        require(code, "code");
        const auto row = code->code.generator_row(number(r, "row"));
        if (!row) return NK_TOO_LARGE;
        put(m, necklace::to_decimal(row->orbit.m));
        if (size) *size = row->orbit.size;
        if (j) *j = row->j;
        return NK_OK;
    });
}

nk_status nk_bch_parity_row(const nk_bch* code, const char* r, char** m, size_t* size) {
    return guard([&] {
        require(code, "code");
        const auto row = code->code.parity_row(number(r, "row"));
        if (!row) return NK_TOO_LARGE;
        put(m, necklace::to_decimal(row->m));
        if (size) *size = row->size;
        return NK_OK;
    });
}

nk_status nk_bch_generator_entry(const nk_bch* code, const char* r, const char* column, char** value) {
    return guard([&] {
        require(code, "code");
        const auto& c = code->code;
        const auto alpha = necklace::parse_fqn(c.context().fqn(), text(column, "column"));
        const auto entry = c.generator_entry(number(r, "row"), alpha);
        if (!entry) return NK_TOO_LARGE;
        put(value, necklace::format_fq(c.context().fq(), *entry));
        return NK_OK;
    });
}

nk_status nk_bch_parity_entry(const nk_bch* code, const char* r, const char* column, char** value) {
    return guard([&] {
        require(code, "code");
        const auto& c = code->code;
        const auto alpha = necklace::parse_fqn(c.context().fqn(), text(column, "column"));
        const auto entry = c.parity_entry(number(r, "row"), alpha);
        if (!entry) return NK_TOO_LARGE;
        put(value, necklace::format_fqn(c.context().fqn(), *entry));
        return NK_OK;
    });
}

nk_status nk_bch_generator_column(const nk_bch* code, const char* c, char** column) {
    return guard([&] {
        require(code, "code");
        put(column, necklace::format_fqn(code->code.context().fqn(), code->code.generator_column(number(c, "column"))));
        return NK_OK;
    });
}

nk_status nk_bch_parity_column(const nk_bch* code, const char* c, char** column) {
    return guard([&] {
        require(code, "code");
        put(column, necklace::format_fqn(code->code.context().fqn(), code->code.parity_column(number(c, "column"))));
        return NK_OK;
    });
}

nk_status nk_bch_generator_matrix(const nk_bch* code, char** text_out) {
    return guard([&] {
        require(code, "code");
        put(text_out, matrix_text(code, true));
        return NK_OK;
    });
}

nk_status nk_bch_parity_matrix(const nk_bch* code, char** text_out) {
    return guard([&] {
        require(code, "code");
        put(text_out, matrix_text(code, false));
        return NK_OK;
    });
}

nk_status nk_top_heavy_check(const char* word, int* top_heavy) {
    return guard([&] {
        require(top_heavy, "result");
        *top_heavy = necklace::is_top_heavy(NkString::parse(text(word, "word"), 2)) ? 1 : 0;
        return NK_OK;
    });
}

nk_status nk_top_heavy_rotation(const char* word, size_t* shift, char** rotated) {
    return guard([&] {
        const NkString x = NkString::parse(text(word, "word"), 2);
        const std::size_t i = necklace::top_heavy_rotation(x);
        if (shift) *shift = i;
        put(rotated, necklace::rotate(x, i).to_string());
        return NK_OK;
    });
}

nk_status nk_top_heavy_count(size_t n, char** count) {
    return guard([&] {
        put(count, necklace::to_decimal(necklace::count_top_heavy(n)));
        return NK_OK;
    });
}

nk_status nk_selftest(size_t max_n, nk_report_fn report, void* user, int* all_passed) {
    return guard([&] {
        const bool ok = necklace::run_selftest(max_n, [&](const std::string& line) {
            if (report) report(line.c_str(), user);
        });
        if (all_passed) *all_passed = ok ? 1 : 0;
        return NK_OK;
    });
}

}  // extern "C"
