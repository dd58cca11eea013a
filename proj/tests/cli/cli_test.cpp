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
// Runs the built command-line tool and checks its output and exit codes.
// Usage: necklace_cli_test <path-to-necklace> [doctest options]

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_binary;

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = "'" + g_binary + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string line(const std::string& args) {
    Run r = run(args);
    CHECK(r.status == 0);
    while (!r.out.empty() && r.out.back() == '\n') r.out.pop_back();
    return r.out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("necklace_cli_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("documented examples") {
    CHECK(line("index 3 2 3") == "011");
    CHECK(line("index 3 2 9") == "TOO_LARGE");
    CHECK(line("count 1 7") == "7 7");
    CHECK(line("rank 110") == "3");
    CHECK(line("lyndon index 2 3 3") == "12");
    CHECK(line("lyndon rank 10") == "1");
    CHECK(line("classes-less 111") == "3");
    CHECK(line("classes-less 1111 --period 4 --exact") == "12");
    CHECK(line("irred count 3^2 4") == "1620");
    CHECK(line("topheavy check 110") == "true");
    CHECK(line("topheavy canon 101") == "1 110");
    CHECK(line("topheavy count 13") == "632");
}

TEST_CASE("index output ranks back to its index") {
    std::mt19937_64 rng(6);
    struct Shape { int n; std::string q; unsigned long total; };
    for (const Shape& s : {Shape{8, "2", 36}, Shape{5, "3", 51}, Shape{3, "20", 2680}, Shape{2, "1000", 500500}}) {
        std::uniform_int_distribution<unsigned long> pick(1, s.total);
        for (int k = 0; k < 6; ++k) {
            const unsigned long j = pick(rng);
            const std::string w = line("index " + std::to_string(s.n) + " " + s.q + " " + std::to_string(j));
            REQUIRE(w != "TOO_LARGE");
            CHECK(line("rank " + w + " " + s.q) == std::to_string(j));
        }
        CHECK(line("index " + std::to_string(s.n) + " " + s.q + " " + std::to_string(s.total + 1)) == "TOO_LARGE");
    }
}

TEST_CASE("both paths give the same answers") {
    for (const char* args : {"index 4 5 40", "classes-less 3142 5", "lyndon index 3 7 50"}) {
        CHECK(line(std::string("--path direct ") + args) == line(std::string("--path encoded ") + args));
    }
}

TEST_CASE("json lines") {
    const auto j = nlohmann::json::parse(line("--format json index 3 2 3"));
    CHECK(j["op"] == "index");
    CHECK(j["inputs"]["n"] == 3);
    CHECK(j["result"]["word"] == "011");
    const auto big = nlohmann::json::parse(line("--format json index 3 2 9"));
    CHECK(big["result"]["word"] == "TOO_LARGE");
    const auto c = nlohmann::json::parse(line("--format json count 4 2"));
    CHECK(c["result"]["necklaces"] == "6");
    CHECK(c["result"]["lyndon"] == "3");
}

TEST_CASE("advice generation and irreducible indexing") {
    const auto advice = std::filesystem::temp_directory_path() / "necklace_cli_test_advice";
    CHECK(run("irred gen-advice 2 3 --seed 5 --out '" + advice.string() + "'").status == 0);
    const std::string first = line("irred index 2 3 1 --advice '" + advice.string() + "'");
    const std::string second = line("irred index 2 3 2 --advice '" + advice.string() + "'");
    CHECK(first != second);
    CHECK((first == "1 1 0 1" || first == "1 0 1 1"));
    CHECK((second == "1 1 0 1" || second == "1 0 1 1"));
    CHECK(line("irred index 2 3 3 --advice '" + advice.string() + "'") == "TOO_LARGE");
    CHECK(run("irred index 3 3 1 --advice '" + advice.string() + "'").status == 3);
}

TEST_CASE("BCH subcommands") {
    const std::string advice = temp_file("f8", "2 1\n3\n1 1 0 1\n");
    CHECK(line("bch rows --advice " + advice + " --d 4") == "4 3");
    CHECK(line("bch rows --advice " + advice + " --d 4 --row 2") == "generator m=1 size=3 j=1\nparity m=1 size=3");
    CHECK(line("bch gen-entry --advice " + advice + " --d 4 --row 1 --col '0 1 0'") == "1");
    CHECK(line("bch pc-entry --advice " + advice + " --d 4 --row 2 --col-index 1") == "0 1 0");
    CHECK(lines(line("bch gen-matrix --advice " + advice + " --d 4")).size() == 4);
    CHECK(lines(line("bch pc-matrix --advice " + advice + " --d 4")).size() == 3);
    CHECK(run("bch rows --advice " + advice + " --d 9").status == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("index 3 2 x").status == 2);
    CHECK(run("index 0 2 1").status == 2);
    CHECK(run("index 3 1 1").status == 2);
    CHECK(run("rank 012").status == 2);
    CHECK(run("--path sideways index 3 2 1").status == 2);
    CHECK(run("no-such-command").status == 2);
    const std::string bad = temp_file("bad", "2 1\n3\n1 0 0 1\n");
    CHECK(run("irred index 2 3 1 --advice " + bad).status == 3);
    CHECK(run("irred index 2 3 1 --advice /nonexistent/advice").status == 3);
    CHECK(run("--path direct index 3 300 5").status == 4);
    CHECK(run("topheavy canon 0101").status == 2);
}

TEST_CASE("selftest reports one line per check") {
    const Run r = run("selftest --max-n 6");
    CHECK(r.status == 1);
    std::size_t failed = 0;
    for (const auto& l : lines(r.out)) {
        CHECK((l.rfind("PASS ", 0) == 0 || l.rfind("FAIL ", 0) == 0));
        if (l.rfind("FAIL ", 0) == 0) {
            ++failed;
            CHECK(l.rfind("FAIL bch", 0) == 0);
        }
    }
    CHECK(failed == 1);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <necklace binary> [doctest options]\n", argv[0]);
        return 2;
    }
    g_binary = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
