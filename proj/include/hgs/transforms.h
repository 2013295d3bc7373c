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

#ifndef HGS_TRANSFORMS_H
#define HGS_TRANSFORMS_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hgs/hypergraph.h"
#include "hgs/pauli.h"
#include "hgs/sign_state.h"

namespace hgs {

/// A hypergraph state up to a tracked global phase: the vector
/// phase * |graph>. Every -1 is carried by the Φ edge, so the phase is
/// always 1 or i.
struct PhasedHypergraph {
    Hypergraph graph;
    Phase phase;

    friend bool operator==(const PhasedHypergraph &, const PhasedHypergraph &) = default;
};

/// {e - {k} | k in e, e in E}: the edges whose gates appear when X_k is
/// pushed through the hyperedge gates of g.
std::vector<Hyperedge> conjugated_x_generator(const Hypergraph &g, std::size_t k);

/// sigma_x on qubit k: E Δ {e - {k} | k in e}.
Hypergraph pauli_x_rule(const Hypergraph &g, std::size_t k);
/// sigma_z on qubit k: toggles the loop {k}.
Hypergraph pauli_z_rule(const Hypergraph &g, std::size_t k);
/// sigma_y = i sigma_x sigma_z on qubit k.
PhasedHypergraph pauli_y_rule(const Hypergraph &g, std::size_t k);

/// Applies every letter of p (Z part before X part on each qubit) and folds
/// the scalar alpha in: -1 toggles Φ, i is tracked.
PhasedHypergraph apply_pauli_element(const Hypergraph &g, const PauliElement &p);

/// State vector phase * |graph>.
SignState build_state(const PhasedHypergraph &g);

/// Outcome +1 deletes k with -+, outcome -1 with --.
Hypergraph measure_z_rule(const Hypergraph &g, std::size_t k, ZOutcome outcome);

/// A conjugated generator of g that leaves the Pauli group: the edge e - {k}
/// has at least two vertices.
struct NonStabilizerWitness {
    std::size_t vertex = 0;
    Hyperedge edge;  // e_r in E, containing vertex, with |e_r - {vertex}| >= 2
};

struct StabilizerCertificate {
    bool is_stabilizer = false;
    /// Present iff !is_stabilizer.
    std::optional<NonStabilizerWitness> witness;
    /// Present iff is_stabilizer: generators[k - 1] = X_k times the Z gates of
    /// conjugated_x_generator(g, k), written as a Pauli element. Each one
    /// stabilizes |g>.
    std::vector<PauliElement> generators;
};

/// Stabilizer test by rank <= 2, with a certificate either way.
StabilizerCertificate is_stabilizer(const Hypergraph &g);

enum class StateClass {
    GraphState,          // every edge has exactly two vertices
    StabilizerNotGraph,  // rank <= 2 with some edge of size 0 or 1
    ProperHypergraph,    // rank > 2
};

StateClass classify(const Hypergraph &g);
/// "graph-state", "stabilizer-not-graph" or "proper-hypergraph".
std::string to_string(StateClass c);

}  // namespace hgs

#endif  // HGS_TRANSFORMS_H
