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

#ifndef HGS_JSON_IO_H
#define HGS_JSON_IO_H

#include <string_view>

#include "hgs/entanglement.h"
#include "hgs/hypergraph.h"
#include "json.hpp"

namespace hgs {

/// {"n": 4, "edges": [[1], [2, 3], ...]} with Φ as [] and edges in canonical order.
nlohmann::json hypergraph_to_json(const Hypergraph &g);
/// Throws ParseError on a malformed document; range and duplicate errors as
/// for the Hypergraph constructor.
Hypergraph hypergraph_from_json(const nlohmann::json &doc);

/// Accepts either the JSON form (leading '{') or the compact text form.
Hypergraph parse_hypergraph_any(std::string_view text);

nlohmann::json vertex_set_to_json(VertexSet s);
nlohmann::json to_json(const SeparabilityReport &report);
nlohmann::json to_json(const SchmidtBounds &bounds);
nlohmann::json to_json(const CensusReport &report);

}  // namespace hgs

#endif  // HGS_JSON_IO_H
