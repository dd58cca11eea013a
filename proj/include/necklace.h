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
/* C interface to the necklace library.
 *
 * Integers (q, indices, ranks, counts) cross the boundary as decimal strings.
 * Words use digits when q <= 10 and comma-separated decimals otherwise. Every
 * char** output is allocated by the library and released with nk_free. On a
 * status other than NK_OK or NK_TOO_LARGE, nk_last_error() describes the
 * failure for the calling thread.
 */

#ifndef NECKLACE_H
#define NECKLACE_H

#include <stddef.h>

#if defined(_WIN32)
#define NK_API __declspec(dllexport)
#else
#define NK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nk_status {
    NK_OK = 0,
    NK_TOO_LARGE = 1, /* the index exceeds the number of objects; not an error */
    NK_ERR_INVALID_ARGUMENT = 10,
    NK_ERR_INVALID_BLOCK,
    NK_ERR_LAYER_MISMATCH,
    NK_ERR_NOT_A_DIVISOR,
    NK_ERR_NOT_APERIODIC,
    NK_ERR_DIVISION_BY_ZERO,
    NK_ERR_CONJUGATES_COLLIDE,
    NK_ERR_COEFFICIENT_NOT_IN_BASE,
    NK_ERR_BAD_FACTORIZATION,
    NK_ERR_INVALID_ADVICE,
    NK_ERR_NOT_IN_BASE_FIELD,
    NK_ERR_ZERO_COLUMN,
    NK_ERR_NOT_BINARY,
    NK_ERR_NOT_PRIME,
    NK_ERR_CONSTANT_STRING,
    NK_ERR_TOO_BIG,
    NK_ERR_INTERNAL
} nk_status;

typedef enum nk_path { NK_PATH_AUTO = 0, NK_PATH_DIRECT = 1, NK_PATH_ENCODED = 2 } nk_path;

typedef struct nk_field nk_field; /* F_q, F_{q^n} and a primitive modulus */
typedef struct nk_bch nk_bch;     /* BCH matrices for a field and a bound d */

NK_API const char* nk_status_name(nk_status status);
NK_API const char* nk_last_error(void);
NK_API void nk_free(char* text);

/* "p" or "p^e": the prime, the exponent and q = p^e. */
NK_API nk_status nk_parse_qspec(const char* spec, char** p, size_t* e, char** q);

/* ---- necklaces and Lyndon words ---- */

NK_API nk_status nk_count(size_t n, const char* q, nk_path path, char** necklaces, char** lyndon);
/* probes may be NULL. Returns NK_TOO_LARGE (and sets *word to NULL) past the last class. */
NK_API nk_status nk_index_necklace(size_t n, const char* q, const char* j, nk_path path, char** word,
                                   size_t* probes);
NK_API nk_status nk_rank_necklace(const char* word, const char* q, nk_path path, char** rank, char** canonical);
NK_API nk_status nk_index_lyndon(size_t n, const char* q, const char* j, nk_path path, char** word,
                                 size_t* probes);
NK_API nk_status nk_rank_lyndon(const char* word, const char* q, nk_path path, char** rank, char** canonical);

typedef enum nk_class_count {
    NK_CLASSES_BELOW = 0,   /* orbits with a word below x */
    NK_WORDS_PERIOD_EXACT,  /* words of orbit size exactly p in such orbits */
    NK_WORDS_PERIOD_DIVIDES /* words of orbit size dividing p in such orbits */
} nk_class_count;

NK_API nk_status nk_classes_less(const char* word, const char* q, nk_class_count kind, size_t period, nk_path path,
                                 char** count);

/* ---- finite fields and irreducible polynomials ---- */

/* Parses and validates advice text (see the README for the format). */
NK_API nk_status nk_field_load(const char* advice, nk_field** field);
/* Random primitive modulus of degree n over F_{p^e}. factors lists the primes of
 * q^n - 1 separated by spaces, or is NULL to factor at desk scale. */
NK_API nk_status nk_field_generate(const char* p, size_t e, size_t n, const char* factors, unsigned long seed,
                                   nk_field** field);
NK_API void nk_field_free(nk_field* field);
NK_API nk_status nk_field_advice(const nk_field* field, char** advice);
NK_API nk_status nk_field_q(const nk_field* field, char** q, size_t* n);

NK_API nk_status nk_irreducible_count(const char* q, size_t n, nk_path path, char** count);
/* Coefficients low degree first, separated by spaces, each an F_q element. */
NK_API nk_status nk_irreducible_index(const nk_field* field, const char* i, nk_path path, char** poly);

/* ---- BCH matrices ---- */

NK_API nk_status nk_bch_new(const nk_field* field, const char* d, nk_path path, nk_bch** code);
NK_API void nk_bch_free(nk_bch* code);
NK_API nk_status nk_bch_generator_row_count(const nk_bch* code, char** count);
NK_API nk_status nk_bch_parity_row_count(const nk_bch* code, char** count);
/* Orbit least element, orbit size and basis index of generator row r. */
NK_API nk_status nk_bch_generator_row(const nk_bch* code, const char* r, char** m, size_t* size, size_t* j);
NK_API nk_status nk_bch_parity_row(const nk_bch* code, const char* r, char** m, size_t* size);
/* Columns are field elements written as n space-separated F_q coordinates. */
NK_API nk_status nk_bch_generator_entry(const nk_bch* code, const char* r, const char* column, char** value);
NK_API nk_status nk_bch_parity_entry(const nk_bch* code, const char* r, const char* column, char** value);
/* Field element of a column index: generator columns 0, g^0, g^1, ...; parity columns g^0, g^1, ... */
NK_API nk_status nk_bch_generator_column(const nk_bch* code, const char* c, char** column);
NK_API nk_status nk_bch_parity_column(const nk_bch* code, const char* c, char** column);
/* Whole matrix, one row per line, entries separated by tabs; refuses more than 2^14 columns. */
NK_API nk_status nk_bch_generator_matrix(const nk_bch* code, char** text);
NK_API nk_status nk_bch_parity_matrix(const nk_bch* code, char** text);

/* ---- top-heavy words ---- */

NK_API nk_status nk_top_heavy_check(const char* word, int* top_heavy);
NK_API nk_status nk_top_heavy_rotation(const char* word, size_t* shift, char** rotated);
NK_API nk_status nk_top_heavy_count(size_t n, char** count);

/* ---- self test ---- */

typedef void (*nk_report_fn)(const char* line, void* user);
NK_API nk_status nk_selftest(size_t max_n, nk_report_fn report, void* user, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* NECKLACE_H */
