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

#ifndef HGS_ENTANGLEMENT_H
#define HGS_ENTANGLEMENT_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hgs/hypergraph.h"

namespace hgs {

/// Tensor-factor structure of |g>, read off the components of g.
struct SeparabilityReport {
    std::vector<VertexSet> components;
    /// factors[i] is g restricted to components[i], renumbered 1..|V_i|.
    /// A Φ edge of g is assigned to the first factor only.
    std::vector<Hypergraph> factors;
    /// Finest factorization size, con(g).
    std::size_t max_m = 0;
    /// g is trivial.
    bool fully_separable = true;
    /// g is connected and has at least two vertices.
    bool completely_entangled = false;
};

SeparabilityReport separability_structure(const Hypergraph &g);

struct BoundWitness {
    std::size_t value = 0;
    VertexSet witness;
};

/// Bipartition sides A with 1 in A and A != {1..n}, in increasing mask order.
std::vector<VertexSet> bipartition_sides(std::size_t n);

/// max over bipartitions A of ceil(log2 schmidt_rank(|g>, A)); the witness is
/// the first side attaining it. 0 with an empty witness for n <= 1.
BoundWitness schmidt_lower_bound(const Hypergraph &g);

/// Size of a minimum vertex cover under `semantics`, with the cover.
///
/// Only the universal reading is a certified upper bound on the Schmidt
/// measure: measuring the cover in Z yields one branch per deletion-mode
/// assignment, and all of them must be product states. The existential
/// reading is provided for comparison and can undercut the lower bound.
BoundWitness schmidt_upper_bound(const Hypergraph &g, CoverSemantics semantics = CoverSemantics::Universal);

struct SchmidtBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    VertexSet witness_bipartition;
    VertexSet witness_cover;
    /// Minimum cover under the existential reading, reported for reference.
    std::size_t existential_cover_size = 0;
    VertexSet existential_cover;

    bool exact() const {
        return lower == upper;
    }
};

SchmidtBounds schmidt_bounds(const Hypergraph &g);

struct CensusReport {
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::uint64_t disconnected = 0;
    std::uint64_t connected = 0;
    std::uint64_t trivial = 0;
    std::uint64_t containing_full_edge = 0;
    std::uint64_t stabilizer = 0;   // rank <= 2
    std::uint64_t graph_state = 0;  // every edge has size 2
    /// (2^n - 2) * 2^(2^(n-1) + 2).
    std::uint64_t disconnected_bound = 0;
    /// Every hypergraph containing the edge {1..n} is connected.
    bool full_edge_implies_connected = true;

    bool bound_holds() const {
        return disconnected <= disconnected_bound;
    }
    double disconnected_fraction() const {
        return static_cast<double>(disconnected) / static_cast<double>(total);
    }
};

/// Upper bound on the number of disconnected hypergraphs on n vertices.
std::uint64_t disconnected_upper_bound(std::size_t n);

/// Streams all 2^(2^n) hypergraphs on n vertices. Requires 1 <= n <= 4.
CensusReport census(std::size_t n);

}  // namespace hgs

#endif  // HGS_ENTANGLEMENT_H
