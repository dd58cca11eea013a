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
#include "helpers.hpp"

#include "necklace/oracle.hpp"
#include "necklace/strings.hpp"

#include <doctest.h>

#include <set>

using namespace necklace;
using necklace::testing::all_words;
using necklace::testing::random_word;
using necklace::testing::word;

namespace {

BinWord bits(const char* text) { return BinWord::parse(text); }

// Brute force: z has a prefix that is a member of L_x.
bool has_prefix_in_Lx(const BinWord& z, const BinWord& x) {
    for (std::size_t len = 1; len <= z.bits.size(); ++len) {
        BinWord p{{z.bits.begin(), z.bits.begin() + static_cast<long>(len)}, 1};
        if (is_in_Lx(p, x)) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("strings") {

TEST_CASE("rotate examples") {
    CHECK(rotate(word("0011"), 1).to_string() == "1001");
    CHECK(rotate(word("0110"), 0) == word("0110"));
    CHECK(rotate(word("012", 3), 2).to_string() == "120");
    CHECK(rotate(word("012", 3), 5) == rotate(word("012", 3), 2));
}

TEST_CASE("fundamental period examples") {
    CHECK(fundamental_period(word("0101")) == 2);
    CHECK(fundamental_period(word("0001")) == 4);
    CHECK(fundamental_period(word("000")) == 1);
}

TEST_CASE("least and greatest rotation examples") {
    auto [m, s] = min_rotation(word("110"));
    CHECK(m.to_string() == "011");
    CHECK(s == 1);
    CHECK(min_rotation(word("000")) == std::pair{word("000"), std::size_t{0}});
    CHECK(min_rotation(word("0101")) == std::pair{word("0101"), std::size_t{0}});
    CHECK(max_rotation(word("110")).first.to_string() == "110");
    CHECK(max_rotation(word("0102", 3)).first.to_string() == "2010");
}

TEST_CASE("text form") {
    const NkString big = NkString::parse("17,0,255", 256);
    CHECK(big.size() == 3);
    CHECK(big.to_string() == "17,0,255");
    CHECK(NkString::parse("0120", 3).to_string() == "0120");
    CHECK(NkString::parse("0,1,2,0", 3).to_string() == "0120");
    CHECK_THROWS_AS(NkString::parse("013", 3), Error);
    CHECK(NkString::from_integer(5, 4, 2).to_string() == "0101");
    CHECK(word("0101").to_integer() == 5);
}

TEST_CASE("binary encoding examples") {
    CHECK(bin_encode(word("21", 3)).to_string() == "1001");
    CHECK(bin_encode(word("21", 3)).block == 2);
    CHECK(bin_encode(word("0110")).to_string() == "0110");
    CHECK(bin_encode(word("0110")).block == 1);
    const BinWord w = bin_encode(word("402", 5));
    CHECK(w.to_string() == "100000010");
    CHECK(w.block == 3);
    CHECK(bin_decode(w, 5) == word("402", 5));
    CHECK_THROWS_AS(bin_decode(BinWord::parse("11", 2), 3), Error);
}

TEST_CASE("witness language examples") {
    CHECK(is_in_Lx(bits("100"), bits("101")));
    CHECK(is_in_Lx(bits("0"), bits("101")));
    CHECK_FALSE(is_in_Lx(bits("10"), bits("101")));
    for (const char* w : {"0", "00", "000", "1", "100"}) CHECK_FALSE(is_in_Lx(bits(w), bits("000")));
    CHECK(is_in_prefix_Lx(bits("1"), bits("11")));
    CHECK(is_in_prefix_Lx(BinWord{{}, 1}, bits("11")));
    CHECK_FALSE(is_in_prefix_Lx(BinWord{{}, 1}, bits("000")));
}

TEST_CASE("orbit comparison examples") {
    CHECK(orbit_less_than(word("10"), word("10")));
    CHECK_FALSE(orbit_less_than(word("11"), word("10")));
    CHECK(orbit_less_than(word("000"), word("001")));
}

TEST_CASE("least rotation is rotation invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned long q = 2 + trial % 5;
        const NkString x = random_word(1 + trial % 13, q, rng);
        const NkString canon = min_rotation(x).first;
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(min_rotation(rotate(x, i)).first == canon);
        }
        auto [m, s] = min_rotation(x);
        CHECK(rotate(x, s) == m);
        for (std::size_t i = 0; i < s; ++i) CHECK(rotate(x, i) != m);
    }
}

TEST_CASE("period divides length and counts distinct rotations") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const NkString& x : all_words(n, 2)) {
            std::set<std::string> seen;
            for (std::size_t i = 0; i < n; ++i) seen.insert(rotate(x, i).to_string());
            const std::size_t p = fundamental_period(x);
            CHECK(n % p == 0);
            CHECK(seen.size() == p);
        }
    }
}

TEST_CASE("binary encoding preserves order") {
    for (unsigned long q : {3ul, 5ul, 6ul, 8ul}) {
        const auto words = all_words(3, q);
        for (std::size_t i = 0; i + 1 < words.size(); ++i) {
            CHECK(bin_encode(words[i]).bits < bin_encode(words[i + 1]).bits);
            CHECK(bin_decode(bin_encode(words[i]), q) == words[i]);
        }
    }
}

TEST_CASE("a prefix in the witness language certifies z < x") {
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto words = all_words(n, 2);
        for (const NkString& xs : words) {
            const BinWord x = bin_encode(xs);
            for (const NkString& zs : words) {
                CHECK(has_prefix_in_Lx(bin_encode(zs), x) == (zs < xs));
            }
        }
    }
}

TEST_CASE("orbit comparison matches the oracle") {
    for (std::size_t n = 1; n <= 6; ++n) {
        BruteCounter brute(n, 2);
        for (const NkString& x : all_words(n, 2)) {
            BigCount below = 0;
            for (const NkString& y : all_words(n, 2)) {
                if (orbit_less_than(y, x)) ++below;
            }
            CHECK(below == brute.G_leq(x, n));
        }
    }
}

TEST_CASE("witness automaton tracks the longest suffix in the prefix language") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const NkString xs = random_word(n, 2, rng);
        const BinWord x = bin_encode(xs);
        WitnessAutomaton a(necklace::testing::symbols(x), 2);
        if (a.empty()) {
            CHECK(xs.is_constant(0));
            continue;
        }
        const NkString ys = random_word(12, 2, rng);
        const BinWord y = bin_encode(ys);
        std::uint32_t s = a.root();
        for (std::size_t i = 0; i < y.bits.size(); ++i) {
            s = a.next(s, y.bits[i]);
            std::size_t longest = 0;
            for (std::size_t len = 1; len <= i + 1; ++len) {
                BinWord suffix{{y.bits.begin() + static_cast<long>(i + 1 - len), y.bits.begin() + static_cast<long>(i + 1)}, 1};
                if (is_in_prefix_Lx(suffix, x)) longest = len;
            }
            CHECK(a.length(s) == longest);
        }
    }
}

}  // TEST_SUITE
