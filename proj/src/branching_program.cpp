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

#include "necklace/branching_program.hpp"

#include <sstream>
#include <unordered_map>

namespace necklace {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

BranchingProgram product(const BranchingProgram& a, const BranchingProgram& b, bool conjunction) {
    if (a.num_layers() != b.num_layers() || a.alphabet() != b.alphabet()) {
        fail(ErrorCode::LayerMismatch, "programs differ in length or alphabet");
    }
    const std::size_t n = a.num_layers();
    const std::uint32_t k = a.alphabet();
    BranchingProgram out(n, k);
    using Pair = std::uint64_t;
    auto key = [](std::uint32_t u, std::uint32_t v) { return (Pair(u) << 32) | v; };
    auto join = [&](std::size_t layer, std::uint32_t u, std::uint32_t v) {
        Label l = a.label(layer, u);
        const Label& r = b.label(layer, v);
        l.insert(l.end(), r.begin(), r.end());
        return l;
    };

    std::vector<std::pair<std::uint32_t, std::uint32_t>> cur{{0, 0}};
    out.add_node(0, join(0, 0, 0));
    for (std::size_t layer = 0; layer < n; ++layer) {
        std::unordered_map<Pair, std::uint32_t> ids;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> nxt;
        for (std::uint32_t id = 0; id < cur.size(); ++id) {
            const auto [u, v] = cur[id];
            for (std::uint32_t c = 0; c < k; ++c) {
                const std::uint32_t u2 = a.next(layer, u, c), v2 = b.next(layer, v, c);
                auto [it, fresh] = ids.try_emplace(key(u2, v2), static_cast<std::uint32_t>(nxt.size()));
                if (fresh) {
                    nxt.emplace_back(u2, v2);
                    out.add_node(layer + 1, join(layer + 1, u2, v2));
                }
                out.set_arc(layer, id, c, it->second);
            }
        }
        cur.swap(nxt);
    }
    for (std::uint32_t id = 0; id < cur.size(); ++id) {
        const bool x = a.accepting(cur[id].first), y = b.accepting(cur[id].second);
        out.set_accepting(id, conjunction ? (x && y) : (x || y));
    }
    return out;
}

}  // namespace

BranchingProgram::BranchingProgram(std::size_t num_layers, std::uint32_t alphabet)
    : alphabet_(alphabet), layers_(num_layers + 1) {
    if (alphabet == 0) fail(ErrorCode::InvalidArgument, "alphabet must be nonempty");
}

std::size_t BranchingProgram::total_nodes() const {
    std::size_t total = 0;
    for (const auto& l : layers_) total += l.labels.size();
    return total;
}

std::uint32_t BranchingProgram::add_node(std::size_t layer, Label label) {
    Layer& l = layers_.at(layer);
    l.labels.push_back(std::move(label));
    if (layer + 1 < layers_.size()) {
        l.arcs.resize(l.labels.size() * alphabet_, kUnset);
    } else {
        l.accept.push_back(0);
    }
    return static_cast<std::uint32_t>(l.labels.size() - 1);
}

void BranchingProgram::set_arc(std::size_t layer, std::uint32_t node, std::uint32_t symbol, std::uint32_t target) {
    if (layer + 1 >= layers_.size() || symbol >= alphabet_) fail(ErrorCode::InvalidArgument, "arc out of range");
    layers_[layer].arcs.at(static_cast<std::size_t>(node) * alphabet_ + symbol) = target;
}

void BranchingProgram::set_accepting(std::uint32_t node, bool value) {
    layers_.back().accept.at(node) = value ? 1 : 0;
}

void BranchingProgram::check_well_formed() const {
    if (layers_.front().labels.empty()) fail(ErrorCode::Internal, "program has no start node");
    for (std::size_t layer = 0; layer + 1 < layers_.size(); ++layer) {
        const Layer& l = layers_[layer];
        const std::size_t width = layers_[layer + 1].labels.size();
        if (l.arcs.size() != l.labels.size() * alphabet_) fail(ErrorCode::Internal, "arc table has wrong size");
        for (auto target : l.arcs) {
            if (target == kUnset) fail(ErrorCode::Internal, "missing arc at layer " + std::to_string(layer));
            if (target >= width) fail(ErrorCode::Internal, "arc leaves the next layer at " + std::to_string(layer));
        }
    }
    if (layers_.back().accept.size() != layers_.back().labels.size()) {
        fail(ErrorCode::Internal, "accept flags do not match final layer");
    }
}

bool BranchingProgram::accepts(const std::vector<std::uint32_t>& word) const {
    if (word.size() != num_layers()) fail(ErrorCode::InvalidArgument, "word length does not match program");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] >= alphabet_) fail(ErrorCode::InvalidArgument, "symbol outside program alphabet");
        v = next(i, v, word[i]);
    }
    return accepting(v);
}

std::string BranchingProgram::serialize() const {
    std::ostringstream out;
    for (std::size_t layer = 0; layer + 1 < layers_.size(); ++layer) {
        for (std::uint32_t v = 0; v < layers_[layer].labels.size(); ++v) {
            for (std::uint32_t c = 0; c < alphabet_; ++c) {
                out << layer << ' ' << v << ' ' << c << ' ' << next(layer, v, c) << '\n';
            }
        }
    }
    for (std::uint32_t v = 0; v < layers_.back().labels.size(); ++v) {
        if (accepting(v)) out << "ACCEPT " << v << '\n';
    }
    return out.str();
}

BigCount count_accepted(const BranchingProgram& bp) {
    const std::size_t n = bp.num_layers();
    std::vector<BigCount> cur(bp.node_count(0));
    if (cur.empty()) return 0;
    cur[0] = 1;
    for (std::size_t layer = 0; layer < n; ++layer) {
        std::vector<BigCount> nxt(bp.node_count(layer + 1));
        for (std::uint32_t v = 0; v < cur.size(); ++v) {
            if (cur[v] == 0) continue;
            for (std::uint32_t c = 0; c < bp.alphabet(); ++c) nxt[bp.next(layer, v, c)] += cur[v];
        }
        cur.swap(nxt);
    }
    BigCount total = 0;
    for (std::uint32_t v = 0; v < cur.size(); ++v) {
        if (bp.accepting(v)) total += cur[v];
    }
    return total;
}

BranchingProgram build_union(const BranchingProgram& a, const BranchingProgram& b) {
    return product(a, b, false);
}

BranchingProgram build_intersection(const BranchingProgram& a, const BranchingProgram& b) {
    return product(a, b, true);
}

BranchingProgram build_complement(const BranchingProgram& a) {
    BranchingProgram out = a;
    const std::size_t last = a.num_layers();
    for (std::uint32_t v = 0; v < a.node_count(last); ++v) out.set_accepting(v, !a.accepting(v));
    return out;
}

BranchingProgram prune(const BranchingProgram& bp) {
    const std::size_t n = bp.num_layers();
    const std::uint32_t k = bp.alphabet();

    std::vector<std::vector<std::uint8_t>> reach(n + 1), live(n + 1);
    for (std::size_t l = 0; l <= n; ++l) {
        reach[l].assign(bp.node_count(l), 0);
        live[l].assign(bp.node_count(l), 0);
    }
    reach[0][0] = 1;
    for (std::size_t l = 0; l < n; ++l) {
        for (std::uint32_t v = 0; v < reach[l].size(); ++v) {
            if (!reach[l][v]) continue;
            for (std::uint32_t c = 0; c < k; ++c) reach[l + 1][bp.next(l, v, c)] = 1;
        }
    }
    for (std::uint32_t v = 0; v < live[n].size(); ++v) live[n][v] = bp.accepting(v) ? 1 : 0;
    for (std::size_t l = n; l-- > 0;) {
        for (std::uint32_t v = 0; v < live[l].size(); ++v) {
            for (std::uint32_t c = 0; c < k && !live[l][v]; ++c) live[l][v] = live[l + 1][bp.next(l, v, c)];
        }
    }

    BranchingProgram out(n, k);
    std::vector<std::vector<std::uint32_t>> id(n + 1);
    std::vector<std::uint32_t> dead(n + 1, kUnset);
    const Label dead_label{-2};
    for (std::size_t l = 0; l <= n; ++l) {
        id[l].assign(bp.node_count(l), kUnset);
        if (l == 0 && !live[0][0]) {
            dead[0] = out.add_node(0, dead_label);
            continue;
        }
        for (std::uint32_t v = 0; v < id[l].size(); ++v) {
            if (reach[l][v] && live[l][v]) id[l][v] = out.add_node(l, bp.label(l, v));
        }
    }
    auto dead_at = [&](std::size_t l) {
        if (dead[l] == kUnset) dead[l] = out.add_node(l, dead_label);
        return dead[l];
    };
    for (std::size_t l = 0; l < n; ++l) {
        for (std::uint32_t v = 0; v < id[l].size(); ++v) {
            if (id[l][v] == kUnset) continue;
            for (std::uint32_t c = 0; c < k; ++c) {
                const std::uint32_t t = id[l + 1][bp.next(l, v, c)];
                out.set_arc(l, id[l][v], c, t == kUnset ? dead_at(l + 1) : t);
            }
        }
        if (dead[l] != kUnset) {
            for (std::uint32_t c = 0; c < k; ++c) out.set_arc(l, dead[l], c, dead_at(l + 1));
        }
    }
    for (std::uint32_t v = 0; v < id[n].size(); ++v) {
        if (id[n][v] != kUnset) out.set_accepting(id[n][v], true);
    }
    return out;
}

namespace {

RotationWitness binary_machine(const BinWord& x, WitnessMode mode) {
    std::vector<std::uint32_t> bits(x.bits.begin(), x.bits.end());
    return RotationWitness(std::move(bits), 2, x.block, Direction::Less, mode);
}

}  // namespace

BranchingProgram build_contiguous(const BinWord& x, bool pruned) {
    return materialize(binary_machine(x, WitnessMode::Contiguous), pruned);
}

BranchingProgram build_wraparound(const BinWord& x, bool pruned) {
    return materialize(binary_machine(x, WitnessMode::Wraparound), pruned);
}

BranchingProgram build_alphabet_restriction(std::size_t n, const BigCount& q, bool pruned) {
    return materialize(AlphabetRestriction(n, q), pruned);
}

BranchingProgram build_rotation_witness(const BinWord& x, bool pruned) {
    return materialize(binary_machine(x, WitnessMode::Both), pruned);
}

}  // namespace necklace
