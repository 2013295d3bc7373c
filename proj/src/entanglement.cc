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

#include "hgs/entanglement.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hgs/sign_state.h"

namespace hgs {

SeparabilityReport separability_structure(const Hypergraph &g) {
    SeparabilityReport report;
    report.components = components(g);
    report.max_m = report.components.size();
    report.fully_separable = is_trivial(g);
    report.completely_entangled = g.num_vertices() >= 2 && report.max_m == 1;
    for (std::size_t i = 0; i < report.components.size(); ++i) {
        auto factor = induced_subhypergraph(g, report.components[i]);
        if (i > 0 && factor.has_edge(Hyperedge{})) {
            factor = toggle_edge(factor, Hyperedge{});
        }
        report.factors.push_back(std::move(factor));
    }
    return report;
}

std::vector<VertexSet> bipartition_sides(std::size_t n) {
    std::vector<VertexSet> sides;
    if (n < 2) {
        return sides;
    }
    std::uint64_t full = VertexSet::range(n).mask();
    for (std::uint64_t m = 1; m < full; m += 2) {
        sides.push_back(VertexSet::from_mask(m));
    }
    return sides;
}

BoundWitness schmidt_lower_bound(const Hypergraph &g) {
    BoundWitness best;
    auto sides = bipartition_sides(g.num_vertices());
    if (sides.empty()) {
        return best;
    }
    auto state = build_state(g);
    best.witness = sides.front();
    for (auto a : sides) {
        auto r = schmidt_rank(state, a);
        auto bits = static_cast<std::size_t>(std::bit_width(r - 1));  // ceil(log2 r)
        if (bits > best.value) {
            best = BoundWitness{bits, a};
        }
    }
    return best;
}

BoundWitness schmidt_upper_bound(const Hypergraph &g, CoverSemantics semantics) {
    auto cover = min_vertex_cover(g, semantics);
    return BoundWitness{cover.size(), cover};
}

SchmidtBounds schmidt_bounds(const Hypergraph &g) {
    auto lower = schmidt_lower_bound(g);
    auto upper = schmidt_upper_bound(g, CoverSemantics::Universal);
    auto existential = schmidt_upper_bound(g, CoverSemantics::Existential);
    SchmidtBounds b;
    b.lower = lower.value;
    b.witness_bipartition = lower.witness;
    b.upper = upper.value;
    b.witness_cover = upper.witness;
    b.existential_cover_size = existential.value;
    b.existential_cover = existential.witness;
    return b;
}

std::uint64_t disconnected_upper_bound(std::size_t n) {
    if (n == 0 || n > 5) {
        throw std::out_of_range("disconnected-count bound is tabulated for 1 <= n <= 5");
    }
    std::uint64_t exponent = (std::uint64_t{1} << (n - 1)) + 2;
    return ((std::uint64_t{1} << n) - 2) << exponent;
}

CensusReport census(std::size_t n) {
    if (n < 1 || n > 4) {
        throw std::out_of_range("census supports 1 <= n <= 4, got " + std::to_string(n));
    }
    CensusReport report;
    report.n = n;
    report.disconnected_bound = disconnected_upper_bound(n);
    auto full = VertexSet::range(n);
    std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t index = 0; index < count; ++index) {
        auto g = Hypergraph::from_edge_set_index(n, index);
        ++report.total;
        bool connected = is_connected(g);
        ++(connected ? report.connected : report.disconnected);
        if (is_trivial(g)) {
            ++report.trivial;
        }
        if (g.has_edge(full)) {
            ++report.containing_full_edge;
            if (!connected) {
                report.full_edge_implies_connected = false;
            }
        }
        if (rank(g) <= 2) {
            ++report.stabilizer;
        }
        if (std::all_of(g.edges().begin(), g.edges().end(), [](Hyperedge e) { return e.size() == 2; })) {
            ++report.graph_state;
        }
    }
    return report;
}

}  // namespace hgs
