// Copyright 2026 The hgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hgs/transforms.h"

#include <algorithm>
#include <stdexcept>

namespace hgs {

namespace {

void check_vertex(const Hypergraph &g, std::size_t k) {
    if (k == 0 || k > g.num_vertices()) {
        throw std::out_of_range("vertex " + std::to_string(k) + " outside 1.." + std::to_string(g.num_vertices()));
    }
}

// Moves a real -1 out of the phase and into the Φ edge.
PhasedHypergraph normalize(Hypergraph g, Phase phase) {
    if (phase.quarter_turns() >= 2) {
        g = toggle_edge(g, Hyperedge{});
        phase *= Phase::minus_one();
    }
    return PhasedHypergraph{std::move(g), phase};
}

}  // namespace

std::vector<Hyperedge> conjugated_x_generator(const Hypergraph &g, std::size_t k) {
    check_vertex(g, k);
    std::vector<Hyperedge> out;
    for (auto e : g.edges()) {
        if (e.contains(k)) {
            out.push_back(e.without(k));
        }
    }
    // Distinct edges through k stay distinct after removing k.
    std::sort(out.begin(), out.end(), CanonicalEdgeLess{});
    return out;
}

Hypergraph pauli_x_rule(const Hypergraph &g, std::size_t k) {
    return add_edges(g, conjugated_x_generator(g, k));
}

Hypergraph pauli_z_rule(const Hypergraph &g, std::size_t k) {
    check_vertex(g, k);
    return toggle_edge(g, Hyperedge{k});
}

PhasedHypergraph pauli_y_rule(const Hypergraph &g, std::size_t k) {
    return PhasedHypergraph{pauli_x_rule(pauli_z_rule(g, k), k), Phase::i()};
}

PhasedHypergraph apply_pauli_element(const Hypergraph &g, const PauliElement &p) {
    if (p.num_qubits() != g.num_vertices()) {
        throw std::invalid_argument("Pauli element acts on " + std::to_string(p.num_qubits()) +
                                    " qubits, hypergraph has " + std::to_string(g.num_vertices()) + " vertices");
    }
    Hypergraph out = g;
    Phase phase = p.phase;
    // Letters on distinct qubits commute.
    for (std::size_t k = 1; k <= g.num_vertices(); ++k) {
        switch (p.letters[k - 1]) {
            case PauliLetter::I:
                break;
            case PauliLetter::X:
                out = pauli_x_rule(out, k);
                break;
            case PauliLetter::Z:
                out = pauli_z_rule(out, k);
                break;
            case PauliLetter::Y: {
                auto y = pauli_y_rule(out, k);
                out = std::move(y.graph);
                phase *= y.phase;
                break;
            }
        }
    }
    return normalize(std::move(out), phase);
}

SignState build_state(const PhasedHypergraph &g) {
    auto s = build_state(g.graph);
    PauliElement scalar = PauliElement::identity(g.graph.num_vertices());
    scalar.phase = g.phase;
    return apply_pauli(s, scalar);
}

Hypergraph measure_z_rule(const Hypergraph &g, std::size_t k, ZOutcome outcome) {
    return delete_vertex(g, k, outcome == ZOutcome::Plus ? DeletionMode::Plus : DeletionMode::Minus);
}

StabilizerCertificate is_stabilizer(const Hypergraph &g) {
    StabilizerCertificate cert;
    if (rank(g) > 2) {
        auto e_r = g.edges().back();  // a largest edge
        cert.witness = NonStabilizerWitness{e_r.min_vertex(), e_r};
        return cert;
    }
    cert.is_stabilizer = true;
    std::size_t n = g.num_vertices();
    for (std::size_t k = 1; k <= n; ++k) {
        auto gen = PauliElement::single(n, k, PauliLetter::X);
        for (auto e : conjugated_x_generator(g, k)) {
            if (e.empty()) {
                gen.phase *= Phase::minus_one();
            } else {
                // e has exactly one vertex, never k itself.
                gen.letters[e.min_vertex() - 1] = PauliLetter::Z;
            }
        }
        cert.generators.push_back(std::move(gen));
    }
    return cert;
}

StateClass classify(const Hypergraph &g) {
    if (rank(g) > 2) {
        return StateClass::ProperHypergraph;
    }
    bool all_pairs = std::all_of(g.edges().begin(), g.edges().end(), [](Hyperedge e) { return e.size() == 2; });
    return all_pairs ? StateClass::GraphState : StateClass::StabilizerNotGraph;
}

std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::GraphState:
            return "graph-state";
        case StateClass::StabilizerNotGraph:
            return "stabilizer-not-graph";
        default:
            return "proper-hypergraph";
    }
}

}  // namespace hgs
