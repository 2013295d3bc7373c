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

#ifndef HGS_BOOLEAN_FUNCTION_H
#define HGS_BOOLEAN_FUNCTION_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/hypergraph.h"

namespace hgs {

// Bit-order convention, shared by truth tables and sign tables: the
// computational-basis index x = x_1 x_2 ... x_n reads x_1 as the most
// significant bit. Vertex sets use bit (v - 1) for vertex v, so converting
// between the two reverses the low n bits.

/// Value of x_k in basis index `index` over n variables.
constexpr bool assignment_bit(std::uint64_t index, std::size_t n, std::size_t k) {
    return ((index >> (n - k)) & 1) != 0;
}

/// The set {k | x_k = 1} for basis index `index`.
VertexSet ones_of_index(std::uint64_t index, std::size_t n);
/// Basis index whose ones are exactly `s`.
std::uint64_t index_of_ones(VertexSet s, std::size_t n);

/// c(e)(x): 1 for Φ, otherwise the product of x_k over k in e.
bool monomial(Hyperedge e, std::uint64_t index, std::size_t n);

/// In-place binary Möbius transform over GF(2) on a table of length 2^m.
/// The transform is its own inverse; the same routine maps truth tables to
/// ANF coefficient tables and back. Throws std::invalid_argument if the
/// length is not a power of two.
void mobius_transform(std::span<std::uint8_t> table);

/// An n-variable Boolean function held both as a truth table and as its
/// algebraic normal form.
class BooleanFunction {
   public:
    static constexpr std::size_t kMaxArity = 24;

    /// The zero function.
    explicit BooleanFunction(std::size_t n = 0);

    /// Truth table indexed by basis index; entries must be 0 or 1.
    static BooleanFunction from_truth_table(std::vector<std::uint8_t> truth);
    /// Sum of monomials c(e) over `supports`; repeated supports cancel.
    static BooleanFunction from_anf(std::size_t n, std::span<const Hyperedge> supports);

    std::size_t arity() const {
        return n_;
    }
    std::span<const std::uint8_t> truth_table() const {
        return truth_;
    }
    bool operator()(std::uint64_t index) const {
        return truth_[index] != 0;
    }
    /// a_e.
    bool coefficient(Hyperedge e) const;
    /// Supports with a_e = 1, in canonical edge order.
    std::vector<Hyperedge> anf() const;
    bool is_zero() const;

    friend bool operator==(const BooleanFunction &a, const BooleanFunction &b) {
        return a.n_ == b.n_ && a.truth_ == b.truth_;
    }

   private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> truth_;  // by basis index
    std::vector<std::uint8_t> anf_;    // by vertex-set mask
};

/// u(g) = XOR of c(e) over the edges of g.
BooleanFunction from_hypergraph(const Hypergraph &g);
/// Inverse of from_hypergraph: the ANF supports become the edges.
Hypergraph to_hypergraph(const BooleanFunction &f);

/// Pointwise XOR. Throws std::invalid_argument on an arity mismatch.
BooleanFunction operator^(const BooleanFunction &f, const BooleanFunction &h);

/// Largest / smallest support size; std::nullopt for the zero function.
std::optional<std::size_t> degree(const BooleanFunction &f);
std::optional<std::size_t> codegree(const BooleanFunction &f);
/// Degree at most two (the zero function counts).
bool is_quadratic(const BooleanFunction &f);

/// "0110"-style string over {0,1}, index ascending.
std::string truth_table_string(const BooleanFunction &f);
/// Throws ParseError on characters other than 0/1 or a non power-of-two length.
BooleanFunction parse_truth_table(std::string_view text);

}  // namespace hgs

#endif  // HGS_BOOLEAN_FUNCTION_H
