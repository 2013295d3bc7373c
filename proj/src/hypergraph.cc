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

#include "hgs/hypergraph.h"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "hgs/errors.h"

namespace hgs {

namespace {

void check_vertex(const Hypergraph &g, std::size_t k) {
    if (k == 0 || k > g.num_vertices()) {
        throw std::out_of_range(
            "vertex " + std::to_string(k) + " outside 1.." + std::to_string(g.num_vertices()));
    }
}

// Sorts into canonical order; equal edges cancel in pairs.
std::vector<Hyperedge> canonicalize_xor(std::vector<Hyperedge> edges) {
    std::sort(edges.begin(), edges.end(), CanonicalEdgeLess{});
    std::vector<Hyperedge> out;
    out.reserve(edges.size());
    for (auto e : edges) {
        if (!out.empty() && out.back() == e) {
            out.pop_back();
        } else {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<Hyperedge> symmetric_difference(std::span<const Hyperedge> a, std::span<const Hyperedge> b) {
    std::vector<Hyperedge> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), CanonicalEdgeLess{});
    return out;
}

// Deletion on raw edges without renumbering the survivors.
std::vector<Hyperedge> delete_in_place(std::span<const Hyperedge> edges, std::size_t k, DeletionMode mode) {
    std::vector<Hyperedge> out;
    out.reserve(edges.size());
    for (auto e : edges) {
        if (!e.contains(k)) {
            out.push_back(e);
        } else if (mode == DeletionMode::Minus) {
            out.push_back(e.without(k));
        }
    }
    return canonicalize_xor(std::move(out));
}

bool all_trivial(std::span<const Hyperedge> edges) {
    return std::all_of(edges.begin(), edges.end(), [](Hyperedge e) { return e.size() <= 1; });
}

// Maps the members of `keep` onto 1..|keep| in order.
Hyperedge compact_onto(Hyperedge e, VertexSet keep) {
    std::uint64_t out = 0;
    std::size_t pos = 0;
    for (std::uint64_t m = keep.mask(); m != 0; m &= m - 1, ++pos) {
        if (e.mask() & (m & -m)) {
            out |= std::uint64_t{1} << pos;
        }
    }
    return VertexSet::from_mask(out);
}

bool cover_search(std::span<const Hyperedge> edges,
                  const std::vector<std::size_t> &order,
                  std::size_t depth,
                  CoverSemantics semantics,
                  std::vector<DeletionMode> *modes) {
    // Deletions never enlarge an edge, so a trivial edge set stays trivial.
    if (all_trivial(edges)) {
        if (modes != nullptr) {
            modes->resize(order.size(), DeletionMode::Plus);
        }
        return true;
    }
    if (depth == order.size()) {
        return false;
    }
    for (auto mode : {DeletionMode::Plus, DeletionMode::Minus}) {
        auto next = delete_in_place(edges, order[depth], mode);
        if (modes != nullptr) {
            modes->resize(depth);
            modes->push_back(mode);
        }
        bool ok = cover_search(next, order, depth + 1, semantics, modes);
        if (semantics == CoverSemantics::Existential && ok) {
            return true;
        }
        if (semantics == CoverSemantics::Universal && !ok) {
            return false;
        }
    }
    return semantics == CoverSemantics::Universal;
}

std::size_t parse_number(std::string_view token, std::string_view context) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("expected a non-negative integer in " + std::string(context) + ", got '" + std::string(token) +
                         "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// VertexPermutation

VertexPermutation::VertexPermutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (auto v : images_) {
        if (v == 0 || v > images_.size() || seen[v]) {
            throw std::invalid_argument("vertex permutation is not a bijection on 1.." + std::to_string(images_.size()));
        }
        seen[v] = true;
    }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::swap(std::size_t n, std::size_t a, std::size_t b) {
    if (a == 0 || b == 0 || a > n || b > n) {
        throw std::out_of_range("transposition outside 1.." + std::to_string(n));
    }
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{1});
    std::swap(images[a - 1], images[b - 1]);
    return VertexPermutation(std::move(images));
}

std::size_t VertexPermutation::operator()(std::size_t v) const {
    if (v == 0 || v > images_.size()) {
        throw std::out_of_range("vertex outside permutation domain");
    }
    return images_[v - 1];
}

VertexSet VertexPermutation::operator()(VertexSet s) const {
    if (s.max_vertex() > images_.size()) {
        throw std::out_of_range("vertex set outside permutation domain");
    }
    std::uint64_t out = 0;
    for (auto v : s.vertices()) {
        out |= std::uint64_t{1} << (images_[v - 1] - 1);
    }
    return VertexSet::from_mask(out);
}

VertexPermutation VertexPermutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t v = 1; v <= images_.size(); ++v) {
        inv[images_[v - 1] - 1] = v;
    }
    return VertexPermutation(std::move(inv));
}

std::string VertexPermutation::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(images_[i]);
    }
    return out + "]";
}

// ---------------------------------------------------------------------------
// Hypergraph

Hypergraph::Hypergraph(std::size_t n) : n_(n) {
    if (n > kMaxVertices) {
        throw CapacityError("hypergraphs are limited to 64 vertices");
    }
}

Hypergraph::Hypergraph(std::size_t n, std::vector<Hyperedge> edges) : Hypergraph(n) {
    auto all = vertex_set();
    for (auto e : edges) {
        if (!e.is_subset_of(all)) {
            throw std::out_of_range("hyperedge " + e.str() + " leaves vertex set 1.." + std::to_string(n));
        }
    }
    std::sort(edges.begin(), edges.end(), CanonicalEdgeLess{});
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("repeated hyperedge");
    }
    edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_canonical(std::size_t n, std::vector<Hyperedge> edges) {
    Hypergraph g(n);
    g.edges_ = std::move(edges);
    return g;
}

Hypergraph Hypergraph::from_edge_set_index(std::size_t n, std::uint64_t index) {
    if (n > 6) {
        throw CapacityError("edge-set index enumeration requires n <= 6");
    }
    std::uint64_t slots = std::uint64_t{1} << n;
    if (slots < 64 && (index >> slots) != 0) {
        throw std::out_of_range("edge-set index exceeds 2^(2^n)");
    }
    std::vector<Hyperedge> edges;
    for (std::uint64_t m = 0; m < slots; ++m) {
        if ((index >> m) & 1) {
            edges.push_back(VertexSet::from_mask(m));
        }
    }
    return Hypergraph(n, std::move(edges));
}

std::uint64_t Hypergraph::edge_set_index() const {
    if (n_ > 6) {
        throw CapacityError("edge-set index enumeration requires n <= 6");
    }
    std::uint64_t index = 0;
    for (auto e : edges_) {
        index |= std::uint64_t{1} << e.mask();
    }
    return index;
}

bool Hypergraph::has_edge(Hyperedge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e, CanonicalEdgeLess{});
}

// ---------------------------------------------------------------------------
// Edge-set algebra and deletions

Hypergraph sum(const Hypergraph &g, const Hypergraph &h) {
    if (g.num_vertices() != h.num_vertices()) {
        throw std::invalid_argument("sum requires equal vertex counts (" + std::to_string(g.num_vertices()) + " vs " +
                                    std::to_string(h.num_vertices()) + ")");
    }
    return Hypergraph::from_canonical(g.num_vertices(), symmetric_difference(g.edges(), h.edges()));
}

Hypergraph add_edges(const Hypergraph &g, std::span<const Hyperedge> f) {
    auto all = g.vertex_set();
    for (auto e : f) {
        if (!e.is_subset_of(all)) {
            throw std::out_of_range("hyperedge " + e.str() + " leaves vertex set 1.." +
                                    std::to_string(g.num_vertices()));
        }
    }
    auto folded = canonicalize_xor(std::vector<Hyperedge>(f.begin(), f.end()));
    return Hypergraph::from_canonical(g.num_vertices(), symmetric_difference(g.edges(), folded));
}

Hypergraph toggle_edge(const Hypergraph &g, Hyperedge e) {
    return add_edges(g, std::span<const Hyperedge>(&e, 1));
}

Hypergraph delete_vertex(const Hypergraph &g, std::size_t k, DeletionMode mode) {
    check_vertex(g, k);
    std::vector<Hyperedge> out;
    out.reserve(g.num_edges());
    for (auto e : g.edges()) {
        if (!e.contains(k)) {
            out.push_back(remove_and_compact(e, k));
        } else if (mode == DeletionMode::Minus) {
            out.push_back(remove_and_compact(e.without(k), k));
        }
    }
    return Hypergraph::from_canonical(g.num_vertices() - 1, canonicalize_xor(std::move(out)));
}

Hypergraph delete_plus(const Hypergraph &g, std::size_t k) {
    return delete_vertex(g, k, DeletionMode::Plus);
}

Hypergraph delete_minus(const Hypergraph &g, std::size_t k) {
    return delete_vertex(g, k, DeletionMode::Minus);
}

MultiDeletion delete_vertices(const Hypergraph &g, VertexSet s, std::span<const DeletionMode> modes) {
    if (!s.is_subset_of(g.vertex_set())) {
        throw std::out_of_range("deletion set " + s.str() + " leaves vertex set");
    }
    auto order = s.vertices();
    if (modes.size() != order.size()) {
        throw std::invalid_argument("one deletion mode is required per deleted vertex");
    }
    std::vector<Hyperedge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t i = 0; i < order.size(); ++i) {
        edges = delete_in_place(edges, order[i], modes[i]);
    }
    VertexSet keep = VertexSet::from_mask(g.vertex_set().mask() & ~s.mask());
    std::vector<Hyperedge> compacted;
    compacted.reserve(edges.size());
    for (auto e : edges) {
        compacted.push_back(compact_onto(e, keep));
    }
    return MultiDeletion{Hypergraph(keep.size(), std::move(compacted)), keep.vertices()};
}

// ---------------------------------------------------------------------------
// Structure

std::size_t rank(const Hypergraph &g) {
    // Edges are ordered by cardinality.
    return g.num_edges() == 0 ? 0 : g.edges().back().size();
}

bool is_trivial(const Hypergraph &g) {
    return rank(g) <= 1;
}

std::vector<VertexSet> components(const Hypergraph &g) {
    std::size_t n = g.num_vertices();
    std::vector<std::size_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (auto e : g.edges()) {
        if (e.size() < 2) {
            continue;
        }
        auto root = find(e.min_vertex());
        for (auto v : e.vertices()) {
            auto r = find(v);
            if (r != root) {
                parent[r] = root;
            }
        }
    }
    std::vector<VertexSet> classes;
    std::vector<std::size_t> class_of_root(n + 1, SIZE_MAX);
    for (std::size_t v = 1; v <= n; ++v) {
        auto r = find(v);
        if (class_of_root[r] == SIZE_MAX) {
            class_of_root[r] = classes.size();
            classes.emplace_back();
        }
        classes[class_of_root[r]] = classes[class_of_root[r]].with(v);
    }
    return classes;
}

std::size_t num_components(const Hypergraph &g) {
    return components(g).size();
}

bool is_connected(const Hypergraph &g) {
    return num_components(g) <= 1;
}

Hypergraph relabel(const Hypergraph &g, const VertexPermutation &p) {
    if (p.size() != g.num_vertices()) {
        throw std::invalid_argument("permutation arity does not match vertex count");
    }
    std::vector<Hyperedge> edges;
    edges.reserve(g.num_edges());
    for (auto e : g.edges()) {
        edges.push_back(p(e));
    }
    return Hypergraph(g.num_vertices(), std::move(edges));
}

std::optional<VertexPermutation> isomorphic(const Hypergraph &g, const Hypergraph &h) {
    std::size_t n = g.num_vertices();
    if (n != h.num_vertices() || g.num_edges() != h.num_edges()) {
        return std::nullopt;
    }
    // Edges are sorted by size, so equal size multisets show up position-wise.
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        if (g.edges()[i].size() != h.edges()[i].size()) {
            return std::nullopt;
        }
    }
    // Vertex signature: sorted sizes of incident edges.
    auto signatures = [n](const Hypergraph &x) {
        std::vector<std::vector<std::size_t>> sig(n + 1);
        for (auto e : x.edges()) {
            for (auto v : e.vertices()) {
                sig[v].push_back(e.size());
            }
        }
        return sig;
    };
    auto sig_g = signatures(g);
    auto sig_h = signatures(h);

    std::vector<std::size_t> images(n, 0);
    std::vector<bool> used(n + 1, false);
    std::optional<VertexPermutation> found;
    auto search = [&](auto &&self, std::size_t v) -> bool {
        if (v > n) {
            VertexPermutation p(images);
            if (relabel(g, p) == h) {
                found = std::move(p);
                return true;
            }
            return false;
        }
        for (std::size_t w = 1; w <= n; ++w) {
            if (used[w] || sig_g[v] != sig_h[w]) {
                continue;
            }
            used[w] = true;
            images[v - 1] = w;
            if (self(self, v + 1)) {
                return true;
            }
            used[w] = false;
        }
        return false;
    };
    search(search, 1);
    return found;
}

Hypergraph induced_subhypergraph(const Hypergraph &g, VertexSet s) {
    if (!s.is_subset_of(g.vertex_set())) {
        throw std::out_of_range("vertex subset " + s.str() + " leaves vertex set");
    }
    std::vector<Hyperedge> edges;
    for (auto e : g.edges()) {
        if (e.is_subset_of(s)) {
            edges.push_back(compact_onto(e, s));
        }
    }
    return Hypergraph(s.size(), std::move(edges));
}

Hypergraph disjoint_union(const Hypergraph &g, const Hypergraph &h) {
    std::size_t n = g.num_vertices();
    if (n + h.num_vertices() > Hypergraph::kMaxVertices) {
        throw CapacityError("disjoint union exceeds 64 vertices");
    }
    std::vector<Hyperedge> edges(g.edges().begin(), g.edges().end());
    for (auto e : h.edges()) {
        edges.push_back(VertexSet::from_mask(n == 64 ? 0 : e.mask() << n));
    }
    // Both sides may carry Φ; on a shared vertex set those cancel.
    return Hypergraph::from_canonical(n + h.num_vertices(), canonicalize_xor(std::move(edges)));
}

// ---------------------------------------------------------------------------
// Vertex covers

bool is_vertex_cover(const Hypergraph &g, VertexSet s, CoverSemantics semantics) {
    if (!s.is_subset_of(g.vertex_set())) {
        throw std::out_of_range("vertex subset " + s.str() + " leaves vertex set");
    }
    return cover_search(g.edges(), s.vertices(), 0, semantics, nullptr);
}

std::optional<std::vector<DeletionMode>> find_cover_modes(const Hypergraph &g, VertexSet s) {
    if (!s.is_subset_of(g.vertex_set())) {
        throw std::out_of_range("vertex subset " + s.str() + " leaves vertex set");
    }
    std::vector<DeletionMode> modes;
    if (!cover_search(g.edges(), s.vertices(), 0, CoverSemantics::Existential, &modes)) {
        return std::nullopt;
    }
    return modes;
}

VertexSet min_vertex_cover(const Hypergraph &g, CoverSemantics semantics) {
    std::size_t n = g.num_vertices();
    for (std::size_t size = 0; size <= n; ++size) {
        // Lexicographic enumeration of size-element subsets of 1..n.
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), std::size_t{1});
        while (true) {
            VertexSet s(pick);
            if (cover_search(g.edges(), pick, 0, semantics, nullptr)) {
                return s;
            }
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == n - size + i) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j) {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    // Unreachable: deleting every vertex leaves only Φ.
    return g.vertex_set();
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Hypergraph &g) {
    std::string out = std::to_string(g.num_vertices()) + ":";
    bool first_edge = true;
    for (auto e : g.edges()) {
        if (!first_edge) {
            out += ';';
        }
        first_edge = false;
        if (e.empty()) {
            out += '0';
            continue;
        }
        bool first_vertex = true;
        for (auto v : e.vertices()) {
            if (!first_vertex) {
                out += ',';
            }
            first_vertex = false;
            out += std::to_string(v);
        }
    }
    return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
    text = trim(text);
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("hypergraph text must look like '<n>:<edge>;<edge>...', got '" + std::string(text) + "'");
    }
    std::size_t n = parse_number(trim(text.substr(0, colon)), "vertex count");
    if (n > Hypergraph::kMaxVertices) {
        throw CapacityError("hypergraphs are limited to 64 vertices");
    }
    auto body = trim(text.substr(colon + 1));
    std::vector<Hyperedge> edges;
    if (!body.empty()) {
        for (auto token : split(body, ';')) {
            token = trim(token);
            if (token.empty()) {
                throw ParseError("empty hyperedge token in '" + std::string(text) + "'");
            }
            if (token == "0") {
                edges.emplace_back();
                continue;
            }
            Hyperedge e;
            for (auto item : split(token, ',')) {
                std::size_t v = parse_number(trim(item), "hyperedge");
                if (v == 0 || v > n) {
                    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
                }
                if (e.contains(v)) {
                    throw std::invalid_argument("vertex " + std::to_string(v) + " repeated inside a hyperedge");
                }
                e = e.with(v);
            }
            edges.push_back(e);
        }
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace hgs
