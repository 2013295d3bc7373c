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

#ifndef HGS_VERTEX_SET_H
#define HGS_VERTEX_SET_H

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hgs {

/// A subset of the vertex labels {1, ..., 64}, stored as a bit mask where
/// bit (v - 1) marks vertex v.
///
/// Hyperedges are vertex sets; the empty set is the empty hyperedge.
class VertexSet {
   public:
    static constexpr std::size_t kMaxVertex = 64;

    constexpr VertexSet() = default;
    /// Throws std::out_of_range for labels outside 1..64.
    VertexSet(std::initializer_list<std::size_t> vertices);
    explicit VertexSet(const std::vector<std::size_t> &vertices);

    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.mask_ = mask;
        return s;
    }
    /// {1, ..., n}.
    static VertexSet range(std::size_t n);

    constexpr std::uint64_t mask() const {
        return mask_;
    }
    constexpr bool empty() const {
        return mask_ == 0;
    }
    constexpr std::size_t size() const {
        return static_cast<std::size_t>(std::popcount(mask_));
    }
    bool contains(std::size_t v) const;
    /// Largest label in the set, or 0 when empty.
    constexpr std::size_t max_vertex() const {
        return mask_ == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(mask_));
    }
    constexpr std::size_t min_vertex() const {
        return mask_ == 0 ? 0 : 1 + static_cast<std::size_t>(std::countr_zero(mask_));
    }
    constexpr bool is_subset_of(VertexSet other) const {
        return (mask_ & ~other.mask_) == 0;
    }

    VertexSet with(std::size_t v) const;
    VertexSet without(std::size_t v) const;

    /// Vertices in ascending order.
    std::vector<std::size_t> vertices() const;

    /// "{1,2,3}"; the empty set prints as "{}".
    std::string str() const;

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
        return from_mask(a.mask_ | b.mask_);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
        return from_mask(a.mask_ & b.mask_);
    }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) {
        return from_mask(a.mask_ ^ b.mask_);
    }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

   private:
    std::uint64_t mask_ = 0;
};

using Hyperedge = VertexSet;

/// Canonical hyperedge order: by cardinality, then lexicographically by the
/// ascending vertex list. Φ sorts first.
struct CanonicalEdgeLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        std::uint64_t diff = a.mask() ^ b.mask();
        if (diff == 0) {
            return false;
        }
        // The set holding the smallest differing vertex comes first.
        return (a.mask() & (diff & -diff)) != 0;
    }
};

/// Drops vertex k from the set and shifts every label above k down by one.
VertexSet remove_and_compact(VertexSet s, std::size_t k);

}  // namespace hgs

#endif  // HGS_VERTEX_SET_H
