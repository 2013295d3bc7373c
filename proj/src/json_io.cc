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

#include "hgs/json_io.h"

#include "hgs/errors.h"

namespace hgs {

nlohmann::json vertex_set_to_json(VertexSet s) {
    auto out = nlohmann::json::array();
    for (auto v : s.vertices()) {
        out.push_back(v);
    }
    return out;
}

nlohmann::json hypergraph_to_json(const Hypergraph &g) {
    auto edges = nlohmann::json::array();
    for (auto e : g.edges()) {
        edges.push_back(vertex_set_to_json(e));
    }
    return nlohmann::json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw ParseError("hypergraph JSON needs an object with \"n\" and \"edges\"");
    }
    const auto &n_field = doc.at("n");
    if (!n_field.is_number_unsigned()) {
        throw ParseError("hypergraph JSON \"n\" must be a non-negative integer");
    }
    auto n = n_field.get<std::size_t>();
    if (n > Hypergraph::kMaxVertices) {
        throw CapacityError("hypergraphs are limited to 64 vertices");
    }
    const auto &edge_list = doc.at("edges");
    if (!edge_list.is_array()) {
        throw ParseError("hypergraph JSON \"edges\" must be an array");
    }
    std::vector<Hyperedge> edges;
    for (const auto &edge : edge_list) {
        if (!edge.is_array()) {
            throw ParseError("each hyperedge must be an array of vertex labels");
        }
        Hyperedge e;
        for (const auto &v : edge) {
            if (!v.is_number_unsigned()) {
                throw ParseError("vertex labels must be positive integers");
            }
            auto label = v.get<std::size_t>();
            if (label == 0 || label > n) {
                throw std::out_of_range("vertex " + std::to_string(label) + " outside 1.." + std::to_string(n));
            }
            if (e.contains(label)) {
                throw std::invalid_argument("vertex " + std::to_string(label) + " repeated inside a hyperedge");
            }
            e = e.with(label);
        }
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph parse_hypergraph_any(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(std::string("invalid hypergraph JSON: ") + e.what());
        }
        return hypergraph_from_json(doc);
    }
    return parse_hypergraph(text);
}

nlohmann::json to_json(const SeparabilityReport &report) {
    auto comps = nlohmann::json::array();
    for (auto c : report.components) {
        comps.push_back(vertex_set_to_json(c));
    }
    auto factors = nlohmann::json::array();
    for (const auto &f : report.factors) {
        factors.push_back(to_string(f));
    }
    return nlohmann::json{
        {"components", std::move(comps)},
        {"factors", std::move(factors)},
        {"max_m", report.max_m},
        {"fully_separable", report.fully_separable},
        {"completely_entangled", report.completely_entangled},
    };
}

nlohmann::json to_json(const SchmidtBounds &bounds) {
    return nlohmann::json{
        {"lower", bounds.lower},
        {"upper", bounds.upper},
        {"exact", bounds.exact()},
        {"witness_bipartition", vertex_set_to_json(bounds.witness_bipartition)},
        {"witness_cover", vertex_set_to_json(bounds.witness_cover)},
        {"existential_cover_size", bounds.existential_cover_size},
        {"existential_cover", vertex_set_to_json(bounds.existential_cover)},
    };
}

nlohmann::json to_json(const CensusReport &report) {
    return nlohmann::json{
        {"n", report.n},
        {"total", report.total},
        {"disconnected", report.disconnected},
        {"connected", report.connected},
        {"trivial", report.trivial},
        {"containing_full_edge", report.containing_full_edge},
        {"stabilizer", report.stabilizer},
        {"graph_state", report.graph_state},
        {"disconnected_bound", report.disconnected_bound},
        {"bound_holds", report.bound_holds()},
        {"full_edge_implies_connected", report.full_edge_implies_connected},
    };
}

}  // namespace hgs
