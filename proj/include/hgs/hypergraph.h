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

#ifndef HGS_HYPERGRAPH_H
#define HGS_HYPERGRAPH_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/vertex_set.h"

namespace hgs {

/// A bijection on {1, ..., n}; images()[v - 1] is the image of v.
class VertexPermutation {
   public:
    /// Throws std::invalid_argument unless `images` is a permutation of 1..n.
    explicit VertexPermutation(std::vector<std::size_t> images);
    static VertexPermutation identity(std::size_t n);
    /// Transposition of a and b on n vertices.
    static VertexPermutation swap(std::size_t n, std::size_t a, std::size_t b);

    std::size_t size() const {
        return images_.size();
    }
    std::span<const std::size_t> images() const {
        return images_;
    }
    std::size_t operator()(std::size_t v) const;
    VertexSet operator()(VertexSet s) const;
    VertexPermutation inverse() const;
    /// "[2,1,3]" (image list).
    std::string str() const;

    friend bool operator==(const VertexPermutation &, const VertexPermutation &) = default;

   private:
    std::vector<std::size_t> images_;
};

/// A finite undirected hypergraph on vertices {1, ..., n}.
///
/// The edge set is kept in canonical order (see CanonicalEdgeLess), so two
/// hypergraphs are equal exactly when their vertex counts and edge sets are.
/// The empty hyperedge Φ is a legal member of the edge set.
class Hypergraph {
   public:
    static constexpr std::size_t kMaxVertices = VertexSet::kMaxVertex;

    Hypergraph() = default;
    /// The empty hypergraph on n vertices.
    explicit Hypergraph(std::size_t n);
    /// Throws std::out_of_range if an edge leaves {1..n} and
    /// std::invalid_argument on a repeated edge.
    Hypergraph(std::size_t n, std::vector<Hyperedge> edges);

    /// Hypergraph whose edge set is encoded by the 2^n-bit index: bit m set
    /// means the hyperedge with mask m is present. Requires n <= 6.
    static Hypergraph from_edge_set_index(std::size_t n, std::uint64_t index);
    /// Inverse of from_edge_set_index.
    std::uint64_t edge_set_index() const;

    std::size_t num_vertices() const {
        return n_;
    }
    std::span<const Hyperedge> edges() const {
        return edges_;
    }
    std::size_t num_edges() const {
        return edges_.size();
    }
    bool has_edge(Hyperedge e) const;
    VertexSet vertex_set() const {
        return VertexSet::range(n_);
    }

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

    /// Builds from edges that are known to be in range and canonical order.
    static Hypergraph from_canonical(std::size_t n, std::vector<Hyperedge> edges);

   private:
    std::size_t n_ = 0;
    std::vector<Hyperedge> edges_;
};

enum class DeletionMode {
    Plus,   // drop every incident hyperedge
    Minus,  // shrink incident hyperedges, cancelling repeats
};

enum class CoverSemantics {
    Existential,  // some choice of deletion modes leaves a trivial hypergraph
    Universal,    // every choice of deletion modes leaves a trivial hypergraph
};

/// Edge-set symmetric difference on a common vertex set.
Hypergraph sum(const Hypergraph &g, const Hypergraph &h);
/// g + F: toggles every member of F (E Δ F). Repeated members of F cancel.
Hypergraph add_edges(const Hypergraph &g, std::span<const Hyperedge> f);
Hypergraph toggle_edge(const Hypergraph &g, Hyperedge e);

/// Deletes vertex k; survivors are renumbered 1..n-1 preserving order.
Hypergraph delete_vertex(const Hypergraph &g, std::size_t k, DeletionMode mode);
Hypergraph delete_plus(const Hypergraph &g, std::size_t k);
Hypergraph delete_minus(const Hypergraph &g, std::size_t k);

struct MultiDeletion {
    Hypergraph graph;
    /// original_labels[i] is the label in the input of the result's vertex i+1.
    std::vector<std::size_t> original_labels;
};

/// Deletes every vertex of `s`; modes[i] applies to the i-th smallest member.
MultiDeletion delete_vertices(const Hypergraph &g, VertexSet s, std::span<const DeletionMode> modes);

/// Maximum hyperedge cardinality; 0 for an empty edge set or {Φ}.
std::size_t rank(const Hypergraph &g);
/// Every hyperedge has at most one vertex.
bool is_trivial(const Hypergraph &g);

/// Path-connected vertex classes, ordered by smallest member.
std::vector<VertexSet> components(const Hypergraph &g);
std::size_t num_components(const Hypergraph &g);
/// At most one component.
bool is_connected(const Hypergraph &g);

/// Edges {P(e)}.
Hypergraph relabel(const Hypergraph &g, const VertexPermutation &p);
/// A permutation P with relabel(g, P) == h, if any.
std::optional<VertexPermutation> isomorphic(const Hypergraph &g, const Hypergraph &h);

/// Edges lying wholly inside `s`, with the members of `s` renumbered 1..|s|.
Hypergraph induced_subhypergraph(const Hypergraph &g, VertexSet s);
/// g on 1..n, h shifted to n+1..n+m.
Hypergraph disjoint_union(const Hypergraph &g, const Hypergraph &h);

bool is_vertex_cover(const Hypergraph &g, VertexSet s, CoverSemantics semantics = CoverSemantics::Existential);
/// A mode assignment (ascending vertex order) that trivializes g, if any.
std::optional<std::vector<DeletionMode>> find_cover_modes(const Hypergraph &g, VertexSet s);
/// Smallest cover; ties go to the lexicographically first sorted vertex list.
VertexSet min_vertex_cover(const Hypergraph &g, CoverSemantics semantics = CoverSemantics::Existential);

/// Compact text form "<n>:<edge>;<edge>;..." with Φ written as "0".
std::string to_string(const Hypergraph &g);
/// Throws ParseError on malformed text; std::out_of_range / std::invalid_argument
/// on well-formed text that names an invalid hypergraph.
Hypergraph parse_hypergraph(std::string_view text);

}  // namespace hgs

#endif  // HGS_HYPERGRAPH_H
