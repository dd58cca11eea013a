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
// Explicit layered branching programs: every node is stored, arcs are a dense
// table per layer. Built from the implicit machines for inspection, golden
// tests and the set-algebra checks; counting in production goes through
// count_machine directly.

#ifndef NECKLACE_BRANCHING_PROGRAM_HPP
#define NECKLACE_BRANCHING_PROGRAM_HPP

#include "necklace/machines.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace necklace {

class BranchingProgram {
public:
    BranchingProgram(std::size_t num_layers, std::uint32_t alphabet);

    std::size_t num_layers() const noexcept { return layers_.size() - 1; }
    std::uint32_t alphabet() const noexcept { return alphabet_; }
    std::size_t node_count(std::size_t layer) const { return layers_.at(layer).labels.size(); }
    std::size_t total_nodes() const;

    const Label& label(std::size_t layer, std::uint32_t node) const { return layers_.at(layer).labels.at(node); }
    /// Target (an index into layer+1) of the arc leaving `node` on `symbol`.
    std::uint32_t next(std::size_t layer, std::uint32_t node, std::uint32_t symbol) const {
        return layers_[layer].arcs[static_cast<std::size_t>(node) * alphabet_ + symbol];
    }
    bool accepting(std::uint32_t node) const { return layers_.back().accept.at(node) != 0; }

    /// Appends a node and returns its index in the layer.
    std::uint32_t add_node(std::size_t layer, Label label);
    void set_arc(std::size_t layer, std::uint32_t node, std::uint32_t symbol, std::uint32_t target);
    void set_accepting(std::uint32_t node, bool value);

    /// Totality, layering and accept-set checks; fails with Internal on a violation.
    void check_well_formed() const;

    /// The start node is node 0 of layer 0.
    bool accepts(const std::vector<std::uint32_t>& word) const;

    /// "layer src symbol dst" per arc, then "ACCEPT node" per accepting final node.
    std::string serialize() const;

private:
    struct Layer {
        std::vector<Label> labels;
        std::vector<std::uint32_t> arcs;
        std::vector<std::uint8_t> accept;
    };

    std::uint32_t alphabet_;
    std::vector<Layer> layers_;
};

BigCount count_accepted(const BranchingProgram& bp);

BranchingProgram build_union(const BranchingProgram& a, const BranchingProgram& b);
BranchingProgram build_intersection(const BranchingProgram& a, const BranchingProgram& b);
BranchingProgram build_complement(const BranchingProgram& a);

/// Drops nodes that cannot reach an accepting node; arcs into them go to one dead
/// node per layer. The accepted set is unchanged.
BranchingProgram prune(const BranchingProgram& bp);

/// Explicit program of the states reachable from the start. Without pruning both
/// sinks are kept as nodes on every layer; with pruning, dead nodes are merged.
template <class M>
BranchingProgram materialize(const M& m, bool pruned = false) {
    const std::size_t n = m.length();
    const std::uint32_t a = m.alphabet();
    BranchingProgram bp(n, a);
    std::map<StateKey, std::uint32_t> cur, next;

    auto intern = [&](std::map<StateKey, std::uint32_t>& ids, std::size_t layer, StateKey s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        const std::uint32_t id = bp.add_node(layer, m.label(s));
        ids.emplace(s, id);
        return id;
    };
    intern(cur, 0, m.start());
    if (!pruned) {
        intern(cur, 0, kAcceptSink);
        intern(cur, 0, kRejectSink);
    }
    for (std::size_t layer = 0; layer < n; ++layer) {
        next.clear();
        if (!pruned) {
            intern(next, layer + 1, kAcceptSink);
            intern(next, layer + 1, kRejectSink);
        }
        // Visit in node order so numbering depends only on the machine.
        std::vector<std::pair<StateKey, std::uint32_t>> order(cur.begin(), cur.end());
        std::sort(order.begin(), order.end(), [](const auto& u, const auto& v) { return u.second < v.second; });
        for (const auto& [s, id] : order) {
            for (std::uint32_t c = 0; c < a; ++c) {
                const StateKey to = is_sink(s) ? s : m.step(layer, s, c);
                bp.set_arc(layer, id, c, intern(next, layer + 1, to));
            }
        }
        std::swap(cur, next);
    }
    for (const auto& [s, id] : cur) {
        bp.set_accepting(id, is_sink(s) ? s == kAcceptSink : m.accepts(s));
    }
    return pruned ? prune(bp) : bp;
}

// Named constructions over binary thresholds (block t = 1 unless stated).

/// B_x^c: some substring lies in L_x.
BranchingProgram build_contiguous(const BinWord& x, bool pruned = false);
/// B_x^w: a nonempty suffix u and nonempty prefix v with uv in L_x.
BranchingProgram build_wraparound(const BinWord& x, bool pruned = false);
/// A_0 over n blocks of ceil(log2 q) bits.
BranchingProgram build_alphabet_restriction(std::size_t n, const BigCount& q, bool pruned = false);
/// A_x: a rotation by a multiple of x.block is below x.
BranchingProgram build_rotation_witness(const BinWord& x, bool pruned = false);

}  // namespace necklace

#endif  // NECKLACE_BRANCHING_PROGRAM_HPP
