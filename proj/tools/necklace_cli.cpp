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
// necklace: command-line front end over the C interface.
//
// Exit codes: 0 success (including TOO_LARGE), 1 internal failure or selftest
// mismatch, 2 malformed input, 3 invalid advice, 4 guardrail exceeded.

#include "necklace.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInternal = 1, kMalformed = 2, kBadAdvice = 3, kGuardrail = 4 };

struct Failure {
    nk_status status;
    std::string message;
};

int exit_code(nk_status s) {
    switch (s) {
        case NK_OK:
        case NK_TOO_LARGE: return kOk;
        case NK_ERR_INVALID_ADVICE:
        case NK_ERR_BAD_FACTORIZATION:
        case NK_ERR_CONJUGATES_COLLIDE:
        case NK_ERR_COEFFICIENT_NOT_IN_BASE:
        case NK_ERR_NOT_IN_BASE_FIELD: return kBadAdvice;
        case NK_ERR_TOO_BIG: return kGuardrail;
        case NK_ERR_INTERNAL: return kInternal;
        default: return kMalformed;
    }
}

// Owns one library-allocated string.
struct Text {
    char* p = nullptr;
    ~Text() { nk_free(p); }
    char** out() { return &p; }
    std::string str() const { return p ? p : ""; }
};

nk_status check(nk_status s) {
    if (s != NK_OK && s != NK_TOO_LARGE) throw Failure{s, nk_last_error()};
    return s;
}

struct Options {
    std::string path = "auto";
    std::string format = "text";
};

nk_path path_of(const std::string& p) {
    if (p == "direct") return NK_PATH_DIRECT;
    if (p == "encoded") return NK_PATH_ENCODED;
    return NK_PATH_AUTO;
}

class Output {
public:
    explicit Output(const Options& o) : opts_(o) {}

    void emit(const std::string& op, const json& inputs, const json& result, const std::string& text) const {
        if (opts_.format == "json") {
            json line;
            line["op"] = op;
            line["inputs"] = inputs;
            line["result"] = result;
            std::cout << line.dump() << '\n';
        } else {
            std::cout << text << '\n';
        }
    }

private:
    const Options& opts_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{NK_ERR_INVALID_ADVICE, "cannot read advice file " + path};
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct FieldHandle {
    nk_field* p = nullptr;
    ~FieldHandle() { nk_field_free(p); }
};

struct BchHandle {
    nk_bch* p = nullptr;
    ~BchHandle() { nk_bch_free(p); }
};

void load_field(const std::string& advice_path, FieldHandle& field) {
    check(nk_field_load(read_file(advice_path).c_str(), &field.p));
}

// The advice must describe the field named on the command line.
void match_field(const FieldHandle& field, const std::string& qspec, std::size_t n) {
    Text q_cli, q_adv;
    check(nk_parse_qspec(qspec.c_str(), nullptr, nullptr, q_cli.out()));
    std::size_t n_adv = 0;
    check(nk_field_q(field.p, q_adv.out(), &n_adv));
    if (q_cli.str() != q_adv.str() || n != n_adv) {
        throw Failure{NK_ERR_INVALID_ADVICE, "advice describes q=" + q_adv.str() + ", n=" + std::to_string(n_adv)};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank and unrank necklaces, Lyndon words, irreducible polynomials and BCH matrix entries"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opts;
    app.add_option("--path", opts.path, "Class-count evaluation: auto, direct or encoded")
        ->check(CLI::IsMember({"auto", "direct", "encoded"}));
    app.add_option("--format", opts.format, "Output format: text or json (one object per line)")
        ->check(CLI::IsMember({"text", "json"}));
    const Output out(opts);
    std::function<int()> action;

    // count
    std::size_t n = 0;
    std::string q = "2", j, word, qspec, advice, d, row, col, col_index, factors;
    auto* count = app.add_subcommand("count", "Number of necklaces and of Lyndon words");
    count->add_option("n", n)->required();
    count->add_option("q", q)->required();
    count->callback([&] {
        action = [&] {
            Text neck, lyn;
            check(nk_count(n, q.c_str(), path_of(opts.path), neck.out(), lyn.out()));
            out.emit("count", {{"n", n}, {"q", q}}, {{"necklaces", neck.str()}, {"lyndon", lyn.str()}},
                     neck.str() + " " + lyn.str());
            return kOk;
        };
    });

    auto index_cmd = [&](CLI::App* cmd, bool lyndon, const char* op) {
        cmd->add_option("n", n)->required();
        cmd->add_option("q", q)->required();
        cmd->add_option("j", j, "1-based index")->required();
        cmd->callback([&, lyndon, op] {
            action = [&, lyndon, op] {
                Text w;
                std::size_t probes = 0;
                const nk_status s = check(lyndon ? nk_index_lyndon(n, q.c_str(), j.c_str(), path_of(opts.path), w.out(), &probes)
                                                 : nk_index_necklace(n, q.c_str(), j.c_str(), path_of(opts.path), w.out(), &probes));
                const std::string result = s == NK_TOO_LARGE ? "TOO_LARGE" : w.str();
                out.emit(op, {{"n", n}, {"q", q}, {"j", j}}, {{"word", result}, {"probes", probes}}, result);
                return kOk;
            };
        });
    };
    auto rank_cmd = [&](CLI::App* cmd, bool lyndon, const char* op) {
        cmd->add_option("word", word)->required();
        cmd->add_option("q", q, "Alphabet size")->capture_default_str();
        cmd->callback([&, lyndon, op] {
            action = [&, lyndon, op] {
                Text rank, canon;
                check(lyndon ? nk_rank_lyndon(word.c_str(), q.c_str(), path_of(opts.path), rank.out(), canon.out())
                             : nk_rank_necklace(word.c_str(), q.c_str(), path_of(opts.path), rank.out(), canon.out()));
                out.emit(op, {{"word", word}, {"q", q}}, {{"rank", rank.str()}, {"canonical", canon.str()}}, rank.str());
                return kOk;
            };
        });
    };
    index_cmd(app.add_subcommand("index", "The j-th necklace (least rotation), or TOO_LARGE"), false, "index");
    rank_cmd(app.add_subcommand("rank", "Rank of the necklace containing a word"), false, "rank");
    auto* lyndon = app.add_subcommand("lyndon", "Lyndon words");
    lyndon->require_subcommand(1);
    index_cmd(lyndon->add_subcommand("index", "The j-th Lyndon word, or TOO_LARGE"), true, "lyndon-index");
    rank_cmd(lyndon->add_subcommand("rank", "Rank of a Lyndon word's class"), true, "lyndon-rank");

    // classes-less
    std::size_t period = 0;
    bool exact = false;
    auto* less = app.add_subcommand("classes-less", "Classes below a word, or words in such classes by orbit size");
    less->add_option("word", word)->required();
    less->add_option("q", q, "Alphabet size")->capture_default_str();
    less->add_option("--period", period, "Count words whose orbit size divides p");
    less->add_flag("--exact", exact, "With --period: orbit size exactly p");
    less->callback([&] {
        action = [&] {
            if (exact && period == 0) throw Failure{NK_ERR_INVALID_ARGUMENT, "--exact needs --period"};
            const nk_class_count kind =
                period == 0 ? NK_CLASSES_BELOW : (exact ? NK_WORDS_PERIOD_EXACT : NK_WORDS_PERIOD_DIVIDES);
            Text value;
            check(nk_classes_less(word.c_str(), q.c_str(), kind, period, path_of(opts.path), value.out()));
            json inputs{{"word", word}, {"q", q}};
            if (period) {
                inputs["period"] = period;
                inputs["exact"] = exact;
            }
            out.emit("classes-less", inputs, {{"count", value.str()}}, value.str());
            return kOk;
        };
    });

    // irred
    unsigned long seed = 1;
    std::string out_path;
    bool have_factors = false;
    auto* irred = app.add_subcommand("irred", "Monic irreducible polynomials over F_q");
    irred->require_subcommand(1);
    auto* irred_count = irred->add_subcommand("count", "Number of monic irreducibles of degree n");
    irred_count->add_option("q-spec", qspec, "p or p^e")->required();
    irred_count->add_option("n", n)->required();
    irred_count->callback([&] {
        action = [&] {
            Text qq, value;
            check(nk_parse_qspec(qspec.c_str(), nullptr, nullptr, qq.out()));
            check(nk_irreducible_count(qq.str().c_str(), n, path_of(opts.path), value.out()));
            out.emit("irred-count", {{"q", qspec}, {"n", n}}, {{"count", value.str()}}, value.str());
            return kOk;
        };
    });
    auto* irred_index = irred->add_subcommand("index", "The i-th irreducible, coefficients low degree first");
    irred_index->add_option("q-spec", qspec, "p or p^e")->required();
    irred_index->add_option("n", n)->required();
    irred_index->add_option("i", j, "1-based index")->required();
    irred_index->add_option("--advice", advice, "Advice file with a primitive modulus")->required();
    irred_index->callback([&] {
        action = [&] {
            FieldHandle field;
            load_field(advice, field);
            match_field(field, qspec, n);
            Text poly;
            const nk_status s = check(nk_irreducible_index(field.p, j.c_str(), path_of(opts.path), poly.out()));
            const std::string result = s == NK_TOO_LARGE ? "TOO_LARGE" : poly.str();
            out.emit("irred-index", {{"q", qspec}, {"n", n}, {"i", j}}, {{"poly", result}}, result);
            return kOk;
        };
    });
    auto* gen_advice = irred->add_subcommand("gen-advice", "Find a primitive modulus and write an advice file");
    gen_advice->add_option("q-spec", qspec, "p or p^e")->required();
    gen_advice->add_option("n", n)->required();
    gen_advice->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen_advice->add_option("--factors", factors, "Prime factors of q^n - 1, space separated");
    gen_advice->add_option("--out", out_path, "Write the advice here instead of stdout");
    gen_advice->callback([&] {
        have_factors = gen_advice->count("--factors") > 0;
        action = [&] {
            Text p;
            std::size_t e = 1;
            check(nk_parse_qspec(qspec.c_str(), p.out(), &e, nullptr));
            FieldHandle field;
            check(nk_field_generate(p.str().c_str(), e, n, have_factors ? factors.c_str() : nullptr, seed, &field.p));
            Text text;
            check(nk_field_advice(field.p, text.out()));
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << text.str();
                if (!f) throw Failure{NK_ERR_INVALID_ARGUMENT, "cannot write " + out_path};
            }
            if (opts.format == "json") {
                out.emit("irred-gen-advice", {{"q", qspec}, {"n", n}, {"seed", seed}}, {{"advice", text.str()}}, "");
            } else if (out_path.empty()) {
                std::cout << text.str();
            }
            return kOk;
        };
    });

    // bch
    auto* bch = app.add_subcommand("bch", "Entries of BCH generator and parity-check matrices");
    bch->require_subcommand(1);
    auto bch_common = [&](CLI::App* cmd) {
        cmd->add_option("--advice", advice, "Advice file with a primitive modulus")->required();
        cmd->add_option("--d", d, "Degree bound, 0 <= d < q^n - 1")->required();
    };
    auto with_code = [&](const std::function<int(nk_bch*)>& f) {
        FieldHandle field;
        load_field(advice, field);
        BchHandle code;
        check(nk_bch_new(field.p, d.c_str(), path_of(opts.path), &code.p));
        return f(code.p);
    };
    auto column_of = [&](nk_bch* code, bool generator) {
        if (!col.empty()) return col;
        if (col_index.empty()) throw Failure{NK_ERR_INVALID_ARGUMENT, "give --col or --col-index"};
        Text element;
        check(generator ? nk_bch_generator_column(code, col_index.c_str(), element.out())
                        : nk_bch_parity_column(code, col_index.c_str(), element.out()));
        return element.str();
    };
    auto* rows = bch->add_subcommand("rows", "Row counts, or one row's orbit with --row");
    bch_common(rows);
    rows->add_option("--row", row, "Describe this row of both matrices");
    rows->callback([&] {
        action = [&] {
            return with_code([&](nk_bch* code) {
                if (row.empty()) {
                    Text g, h;
                    check(nk_bch_generator_row_count(code, g.out()));
                    check(nk_bch_parity_row_count(code, h.out()));
                    out.emit("bch-rows", {{"d", d}}, {{"generator", g.str()}, {"parity", h.str()}}, g.str() + " " + h.str());
                    return kOk;
                }
                Text gm, hm;
                std::size_t gsize = 0, gj = 0, hsize = 0;
                const nk_status gs = check(nk_bch_generator_row(code, row.c_str(), gm.out(), &gsize, &gj));
                const nk_status hs = check(nk_bch_parity_row(code, row.c_str(), hm.out(), &hsize));
                json result;
                std::string text;
                if (gs == NK_TOO_LARGE) {
                    result["generator"] = "TOO_LARGE";
                    text = "generator TOO_LARGE";
                } else {
                    result["generator"] = {{"m", gm.str()}, {"size", gsize}, {"j", gj}};
                    text = "generator m=" + gm.str() + " size=" + std::to_string(gsize) + " j=" + std::to_string(gj);
                }
                if (hs == NK_TOO_LARGE) {
                    result["parity"] = "TOO_LARGE";
                    text += "\nparity TOO_LARGE";
                } else {
                    result["parity"] = {{"m", hm.str()}, {"size", hsize}};
                    text += "\nparity m=" + hm.str() + " size=" + std::to_string(hsize);
                }
                out.emit("bch-row", {{"d", d}, {"row", row}}, result, text);
                return kOk;
            });
        };
    });
    auto entry_cmd = [&](CLI::App* cmd, bool generator, const char* op) {
        bch_common(cmd);
        cmd->add_option("--row", row, "1-based row")->required();
        cmd->add_option("--col", col, "Column as a field element: n F_q coordinates, low degree first");
        cmd->add_option("--col-index", col_index, "Column by position in the matrix's column order");
        cmd->callback([&, generator, op] {
            action = [&, generator, op] {
                return with_code([&](nk_bch* code) {
                    const std::string column = column_of(code, generator);
                    Text value;
                    const nk_status s = check(generator ? nk_bch_generator_entry(code, row.c_str(), column.c_str(), value.out())
                                                        : nk_bch_parity_entry(code, row.c_str(), column.c_str(), value.out()));
                    const std::string result = s == NK_TOO_LARGE ? "TOO_LARGE" : value.str();
                    out.emit(op, {{"d", d}, {"row", row}, {"col", column}}, {{"entry", result}}, result);
                    return kOk;
                });
            };
        });
    };
    entry_cmd(bch->add_subcommand("gen-entry", "Generator matrix entry, an F_q element"), true, "bch-gen-entry");
    entry_cmd(bch->add_subcommand("pc-entry", "Parity-check entry, an F_{q^n} element"), false, "bch-pc-entry");
    auto matrix_cmd = [&](CLI::App* cmd, bool generator, const char* op) {
        bch_common(cmd);
        cmd->callback([&, generator, op] {
            action = [&, generator, op] {
                return with_code([&](nk_bch* code) {
                    Text text;
                    check(generator ? nk_bch_generator_matrix(code, text.out()) : nk_bch_parity_matrix(code, text.out()));
                    std::string body = text.str();
                    if (!body.empty() && body.back() == '\n') body.pop_back();
                    json rows_json = json::array();
                    std::istringstream in(body);
                    std::string line;
                    while (std::getline(in, line)) rows_json.push_back(line);
                    out.emit(op, {{"d", d}}, {{"rows", rows_json}}, body);
                    return kOk;
                });
            };
        });
    };
    matrix_cmd(bch->add_subcommand("gen-matrix", "Whole generator matrix (at most 2^14 columns)"), true, "bch-gen-matrix");
    matrix_cmd(bch->add_subcommand("pc-matrix", "Whole parity-check matrix (at most 2^14 columns)"), false, "bch-pc-matrix");

    // topheavy
    auto* top = app.add_subcommand("topheavy", "Top-heavy binary words");
    top->require_subcommand(1);
    auto* top_check = top->add_subcommand("check", "Is the word top-heavy?");
    top_check->add_option("word", word)->required();
    top_check->callback([&] {
        action = [&] {
            int heavy = 0;
            check(nk_top_heavy_check(word.c_str(), &heavy));
            out.emit("topheavy-check", {{"word", word}}, {{"top_heavy", heavy != 0}}, heavy ? "true" : "false");
            return kOk;
        };
    });
    auto* top_canon = top->add_subcommand("canon", "The top-heavy rotation of a word of prime length");
    top_canon->add_option("word", word)->required();
    top_canon->callback([&] {
        action = [&] {
            std::size_t shift = 0;
            Text rotated;
            check(nk_top_heavy_rotation(word.c_str(), &shift, rotated.out()));
            out.emit("topheavy-canon", {{"word", word}}, {{"shift", shift}, {"rotation", rotated.str()}},
                     std::to_string(shift) + " " + rotated.str());
            return kOk;
        };
    });
    auto* top_count = top->add_subcommand("count", "Number of top-heavy words of prime length n");
    top_count->add_option("n", n)->required();
    top_count->callback([&] {
        action = [&] {
            Text value;
            check(nk_top_heavy_count(n, value.out()));
            out.emit("topheavy-count", {{"n", n}}, {{"count", value.str()}}, value.str());
            return kOk;
        };
    });

    // selftest (not listed in help)
    std::size_t max_n = 8;
    auto* selftest = app.add_subcommand("selftest", "");
    selftest->group("");
    selftest->add_option("--max-n", max_n, "Largest binary word length checked")->capture_default_str();
    selftest->callback([&] {
        action = [&] {
            int all = 0;
            struct Ctx {
                const Options* opts;
            } ctx{&opts};
            check(nk_selftest(
                max_n,
                [](const char* line, void* user) {
                    const auto* c = static_cast<Ctx*>(user);
                    if (c->opts->format == "json") {
                        const std::string s(line);
                        json obj{{"op", "selftest"}, {"inputs", json::object()}, {"result", s}};
                        std::cout << obj.dump() << '\n';
                    } else {
                        std::cout << line << '\n';
                    }
                    std::cout.flush();
                },
                &ctx, &all));
            return all ? kOk : kInternal;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "necklace: " << e.what() << '\n';
        return kMalformed;
    }
    try {
        return action ? action() : kMalformed;
    } catch (const Failure& f) {
        std::cerr << "necklace: " << nk_status_name(f.status) << ": " << f.message << '\n';
        return exit_code(f.status);
    }
}
