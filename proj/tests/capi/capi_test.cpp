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
// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "necklace.h"

#include <algorithm>
#include <cstring>
#include <string>

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* text) {
    REQUIRE(text != nullptr);
    std::string out(text);
    nk_free(text);
    return out;
}

}  // namespace

TEST_CASE("status names") {
    CHECK(std::string(nk_status_name(NK_OK)) == "OK");
    CHECK(std::string(nk_status_name(NK_TOO_LARGE)) == "TOO_LARGE");
    CHECK(std::strlen(nk_status_name(NK_ERR_INVALID_ADVICE)) > 0);
}

TEST_CASE("q specifications") {
    char *p = nullptr, *q = nullptr;
    size_t e = 0;
    REQUIRE(nk_parse_qspec("3^4", &p, &e, &q) == NK_OK);
    CHECK(take(p) == "3");
    CHECK(e == 4);
    CHECK(take(q) == "81");
    CHECK(nk_parse_qspec("6", &p, &e, &q) != NK_OK);
    CHECK(std::strlen(nk_last_error()) > 0);
}

TEST_CASE("necklace counts, ranks and indices") {
    char *neck = nullptr, *lyn = nullptr;
    REQUIRE(nk_count(4, "2", NK_PATH_AUTO, &neck, &lyn) == NK_OK);
    CHECK(take(neck) == "6");
    CHECK(take(lyn) == "3");

    char* word = nullptr;
    size_t probes = 0;
    REQUIRE(nk_index_necklace(3, "2", "3", NK_PATH_AUTO, &word, &probes) == NK_OK);
    CHECK(take(word) == "011");
    CHECK(probes <= 5);
    CHECK(nk_index_necklace(3, "2", "5", NK_PATH_AUTO, &word, nullptr) == NK_TOO_LARGE);
    CHECK(word == nullptr);
    CHECK(nk_index_necklace(3, "2", "0", NK_PATH_AUTO, &word, nullptr) == NK_ERR_INVALID_ARGUMENT);

    char *rank = nullptr, *canon = nullptr;
    REQUIRE(nk_rank_necklace("110", "2", NK_PATH_AUTO, &rank, &canon) == NK_OK);
    CHECK(take(rank) == "3");
    CHECK(take(canon) == "011");

    REQUIRE(nk_index_lyndon(2, "3", "3", NK_PATH_ENCODED, &word, nullptr) == NK_OK);
    CHECK(take(word) == "12");
    CHECK(nk_rank_lyndon("0101", "2", NK_PATH_AUTO, &rank, &canon) == NK_ERR_NOT_APERIODIC);

    REQUIRE(nk_index_necklace(3, "1000", "500", NK_PATH_AUTO, &word, nullptr) == NK_OK);
    const std::string big = take(word);
    REQUIRE(nk_rank_necklace(big.c_str(), "1000", NK_PATH_AUTO, &rank, &canon) == NK_OK);
    CHECK(take(rank) == "500");
    CHECK(take(canon) == big);

    char* count = nullptr;
    REQUIRE(nk_classes_less("111", "2", NK_CLASSES_BELOW, 0, NK_PATH_AUTO, &count) == NK_OK);
    CHECK(take(count) == "3");
    REQUIRE(nk_classes_less("1111", "2", NK_WORDS_PERIOD_EXACT, 4, NK_PATH_AUTO, &count) == NK_OK);
    CHECK(take(count) == "12");
    CHECK(nk_classes_less("1111", "2", NK_WORDS_PERIOD_EXACT, 3, NK_PATH_AUTO, &count) == NK_ERR_NOT_A_DIVISOR);
    CHECK(nk_classes_less("1121", "2", NK_CLASSES_BELOW, 0, NK_PATH_AUTO, &count) == NK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("fields and irreducible polynomials") {
    nk_field* field = nullptr;
    REQUIRE(nk_field_load("2 1\n3\n1 1 0 1\n", &field) == NK_OK);
    char* poly = nullptr;
    REQUIRE(nk_irreducible_index(field, "1", NK_PATH_AUTO, &poly) == NK_OK);
    const std::string first = take(poly);
    REQUIRE(nk_irreducible_index(field, "2", NK_PATH_AUTO, &poly) == NK_OK);
    const std::string second = take(poly);
    CHECK(first != second);
    CHECK(nk_irreducible_index(field, "3", NK_PATH_AUTO, &poly) == NK_TOO_LARGE);

    char* advice = nullptr;
    REQUIRE(nk_field_advice(field, &advice) == NK_OK);
    const std::string text = take(advice);
    nk_field* again = nullptr;
    REQUIRE(nk_field_load(text.c_str(), &again) == NK_OK);
    nk_field_free(again);

    char* q = nullptr;
    size_t n = 0;
    REQUIRE(nk_field_q(field, &q, &n) == NK_OK);
    CHECK(take(q) == "2");
    CHECK(n == 3);
    nk_field_free(field);

    CHECK(nk_field_load("2 1\n3\n1 0 0 1\n", &field) == NK_ERR_INVALID_ADVICE);
    CHECK(nk_field_generate("2", 1, 4, "3 7", 1, &field) == NK_ERR_BAD_FACTORIZATION);
    REQUIRE(nk_field_generate("3", 2, 2, nullptr, 5, &field) == NK_OK);
    nk_field_free(field);

    char* count = nullptr;
    REQUIRE(nk_irreducible_count("9", 4, NK_PATH_AUTO, &count) == NK_OK);
    CHECK(take(count) == "1620");
}

TEST_CASE("BCH access") {
    nk_field* field = nullptr;
    REQUIRE(nk_field_load("2 1\n3\n1 1 0 1\n", &field) == NK_OK);
    nk_bch* code = nullptr;
    REQUIRE(nk_bch_new(field, "4", NK_PATH_AUTO, &code) == NK_OK);
    char* count = nullptr;
    REQUIRE(nk_bch_generator_row_count(code, &count) == NK_OK);
    CHECK(take(count) == "4");
    REQUIRE(nk_bch_parity_row_count(code, &count) == NK_OK);
    CHECK(take(count) == "3");

    char* m = nullptr;
    size_t size = 0, j = 0;
    REQUIRE(nk_bch_generator_row(code, "2", &m, &size, &j) == NK_OK);
    CHECK(take(m) == "1");
    CHECK(size == 3);
    CHECK(j == 1);
    CHECK(nk_bch_generator_row(code, "5", &m, &size, &j) == NK_TOO_LARGE);

    char* value = nullptr;
    REQUIRE(nk_bch_generator_entry(code, "1", "0 1 0", &value) == NK_OK);
    CHECK(take(value) == "1");
    CHECK(nk_bch_parity_entry(code, "1", "", &value) == NK_ERR_ZERO_COLUMN);
    REQUIRE(nk_bch_parity_entry(code, "2", "0 1 0", &value) == NK_OK);
    CHECK(take(value) == "0 1 0");

    char* column = nullptr;
    REQUIRE(nk_bch_parity_column(code, "1", &column) == NK_OK);
    CHECK(take(column) == "0 1 0");

    char* text = nullptr;
    REQUIRE(nk_bch_generator_matrix(code, &text) == NK_OK);
    const std::string matrix = take(text);
    CHECK(std::count(matrix.begin(), matrix.end(), '\n') == 4);
    REQUIRE(nk_bch_parity_matrix(code, &text) == NK_OK);
    nk_free(text);
    nk_bch_free(code);

    CHECK(nk_bch_new(field, "7", NK_PATH_AUTO, &code) == NK_ERR_INVALID_ARGUMENT);
    nk_field_free(field);
}

TEST_CASE("top-heavy words") {
    int top = 0;
    REQUIRE(nk_top_heavy_check("110", &top) == NK_OK);
    CHECK(top == 1);
    REQUIRE(nk_top_heavy_check("101", &top) == NK_OK);
    CHECK(top == 0);
    CHECK(nk_top_heavy_check("120", &top) == NK_ERR_INVALID_ARGUMENT);
    size_t shift = 0;
    char* rotated = nullptr;
    REQUIRE(nk_top_heavy_rotation("101", &shift, &rotated) == NK_OK);
    CHECK(shift == 1);
    CHECK(take(rotated) == "110");
    CHECK(nk_top_heavy_rotation("0000", &shift, &rotated) == NK_ERR_NOT_PRIME);
    CHECK(nk_top_heavy_rotation("000", &shift, &rotated) == NK_ERR_CONSTANT_STRING);
    char* count = nullptr;
    REQUIRE(nk_top_heavy_count(13, &count) == NK_OK);
    CHECK(take(count) == "632");
}

TEST_CASE("null arguments are rejected") {
    CHECK(nk_count(3, nullptr, NK_PATH_AUTO, nullptr, nullptr) == NK_ERR_INVALID_ARGUMENT);
    CHECK(nk_index_necklace(3, "2", "1", NK_PATH_AUTO, nullptr, nullptr) == NK_ERR_INVALID_ARGUMENT);
    nk_free(nullptr);
    nk_field_free(nullptr);
    nk_bch_free(nullptr);
}

TEST_CASE("selftest through the C API") {
    struct Lines {
        int pass = 0;
        int fail = 0;
    } lines;
    int all_passed = 1;
    const auto report = [](const char* line, void* user) {
        auto* l = static_cast<Lines*>(user);
        if (std::strncmp(line, "PASS", 4) == 0) ++l->pass;
        if (std::strncmp(line, "FAIL", 4) == 0) ++l->fail;
    };
    REQUIRE(nk_selftest(5, report, &lines, &all_passed) == NK_OK);
    CHECK(lines.fail == 1);
    CHECK(lines.pass >= 5);
    CHECK(all_passed == 0);
}
