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

#include <doctest.h>

#include <string>
#include <vector>

using namespace necklace;

TEST_SUITE("selftest") {

TEST_CASE("individual checks pass at small bounds") {
    CHECK(check_necklace_indexing({{2, 6}, {3, 3}}, false).passed);
    CHECK(check_necklace_indexing({{2, 6}, {3, 3}}, true).passed);
    CHECK(check_counting_identities({{6, 2}, {3, 3}}, 20, 1).passed);
    CHECK(check_path_agreement({3, 5}, 3, 10, 1).passed);
    CHECK(check_irreducible_indexing({{2, 1, 3}, {3, 1, 2}}).passed);
    CHECK(check_bch({0, 1, 3}).passed);
    CHECK(check_top_heavy(7).passed);
}

TEST_CASE("the BCH check reports wrapped exponents") {
    const CheckOutcome out = check_bch({4});
    CHECK_FALSE(out.passed);
    CHECK(out.detail.find("d=4") != std::string::npos);
}

TEST_CASE("report lines") {
    std::vector<std::string> lines;
    const bool ok = run_selftest(6, [&](const std::string& line) { lines.push_back(line); });
    CHECK_FALSE(ok);
    REQUIRE(lines.size() >= 6);
    std::size_t failed = 0;
    for (const auto& line : lines) {
        const bool pass = line.rfind("PASS ", 0) == 0;
        const bool fail = line.rfind("FAIL ", 0) == 0;
        CHECK((pass || fail));
        if (fail) {
            ++failed;
            CHECK(line.rfind("FAIL bch", 0) == 0);
        }
    }
    CHECK(failed == 1);
}

}  // TEST_SUITE
