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
#include "fields.hpp"
#include "helpers.hpp"

#include "necklace/oracle.hpp"

#include <doctest.h>

using namespace necklace;
using necklace::testing::prime_poly;
using necklace::testing::word;

namespace {

std::vector<std::size_t> sizes(const OrbitTable& t) {
    std::vector<std::size_t> out;
    for (const auto& e : t) out.push_back(e.size);
    return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("orbit table examples") {
    const OrbitTable t = brute_orbits(3, 2);
    REQUIRE(t.size() == 4);
    CHECK(t[0].representative.to_string() == "000");
    CHECK(t[1].representative.to_string() == "001");
    CHECK(t[2].representative.to_string() == "011");
    CHECK(t[3].representative.to_string() == "111");
    CHECK(sizes(t) == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(brute_orbits(1, 9).size() == 9);
    CHECK(sizes(brute_orbits(4, 2)) == std::vector<std::size_t>{1, 4, 4, 2, 4, 1});
}

TEST_CASE("set size examples") {
    CHECK(brute_C_x(word("011")) == 2);
    CHECK(brute_G_leq(word("10"), 2) == 3);
    CHECK(brute_G(word("0000"), 2) == 0);
    CHECK(brute_G(word("1111"), 4) == 12);
}

TEST_CASE("irreducible list examples") {
    const Fq f2 = make_fq(2, {});
    CHECK(brute_irreducibles(f2, 2) == std::vector<FqPoly>{prime_poly({1, 1, 1})});
    CHECK(brute_irreducibles(f2, 3) == std::vector<FqPoly>{prime_poly({1, 1, 0, 1}), prime_poly({1, 0, 1, 1})});
    CHECK(brute_irreducibles(f2, 1) == std::vector<FqPoly>{prime_poly({0, 1}), prime_poly({1, 1})});
}

TEST_CASE("closed form examples") {
    CHECK(closed_form_counts(3, 2).necklaces == 4);
    CHECK(closed_form_counts(3, 2).lyndon == 2);
    CHECK(closed_form_counts(1, 11).necklaces == 11);
    CHECK(closed_form_counts(1, 11).lyndon == 11);
    CHECK(closed_form_counts(4, 2).necklaces == 6);
    CHECK(closed_form_counts(4, 2).lyndon == 3);
}

TEST_CASE("orbit tables agree with the closed forms") {
    for (auto [q, max_n] : {std::pair{2ul, 14u}, {3ul, 8u}, {5ul, 5u}}) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            const OrbitTable t = brute_orbits(n, q);
            BigCount total = 0, lyndon = 0;
            for (std::size_t i = 0; i < t.size(); ++i) {
                total += t[i].size;
                if (t[i].size == n) ++lyndon;
                if (i > 0) REQUIRE(t[i - 1].representative < t[i].representative);
            }
            CHECK(total == power(q, n));
            const auto closed = closed_form_counts(n, q);
            CHECK(BigCount(t.size()) == closed.necklaces);
            CHECK(lyndon == closed.lyndon);
        }
    }
}

TEST_CASE("guard refuses large domains") {
    CHECK_THROWS_AS(brute_orbits(23, 2), Error);
    CHECK_THROWS_AS(brute_C_x(NkString::constant(12, 5, 1)), Error);
    CHECK_NOTHROW(BruteCounter(22, 2));
}

TEST_CASE("deterministic") {
    const auto a = brute_generator_rows(3, 3, 13);
    const auto b = brute_generator_rows(3, 3, 13);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK((a[i].orbit == b[i].orbit && a[i].j == b[i].j));
    CHECK(brute_parity_rows(2, 3, 3).size() == 3);
    CHECK(brute_generator_rows(2, 3, 4).size() == 4);
}

}  // TEST_SUITE
