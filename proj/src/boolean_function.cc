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

#include "hgs/boolean_function.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hgs/errors.h"

namespace hgs {

namespace {

void check_arity(std::size_t n) {
    if (n > BooleanFunction::kMaxArity) {
        throw CapacityError("Boolean functions are limited to " + std::to_string(BooleanFunction::kMaxArity) +
                            " variables");
    }
}

std::size_t log2_exact(std::size_t length) {
    if (length == 0 || !std::has_single_bit(length)) {
        throw std::invalid_argument("table length " + std::to_string(length) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(length));
}

}  // namespace

VertexSet ones_of_index(std::uint64_t index, std::size_t n) {
    std::uint64_t mask = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (assignment_bit(index, n, k)) {
            mask |= std::uint64_t{1} << (k - 1);
        }
    }
    return VertexSet::from_mask(mask);
}

std::uint64_t index_of_ones(VertexSet s, std::size_t n) {
    std::uint64_t index = 0;
    for (auto k : s.vertices()) {
        index |= std::uint64_t{1} << (n - k);
    }
    return index;
}

bool monomial(Hyperedge e, std::uint64_t index, std::size_t n) {
    return e.is_subset_of(ones_of_index(index, n));
}

void mobius_transform(std::span<std::uint8_t> table) {
    log2_exact(table.size());
    for (std::size_t step = 1; step < table.size(); step <<= 1) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (i & step) {
                table[i] ^= table[i ^ step];
            }
        }
    }
}

BooleanFunction::BooleanFunction(std::size_t n) : n_(n) {
    check_arity(n);
    truth_.assign(std::size_t{1} << n, 0);
    anf_.assign(std::size_t{1} << n, 0);
}

BooleanFunction BooleanFunction::from_truth_table(std::vector<std::uint8_t> truth) {
    std::size_t n = log2_exact(truth.size());
    check_arity(n);
    if (std::any_of(truth.begin(), truth.end(), [](std::uint8_t b) { return b > 1; })) {
        throw std::invalid_argument("truth table entries must be 0 or 1");
    }
    BooleanFunction f(n);
    // Re-index from basis order to vertex-mask order before transforming.
    for (std::uint64_t x = 0; x < truth.size(); ++x) {
        f.anf_[ones_of_index(x, n).mask()] = truth[x];
    }
    mobius_transform(f.anf_);
    f.truth_ = std::move(truth);
    return f;
}

BooleanFunction BooleanFunction::from_anf(std::size_t n, std::span<const Hyperedge> supports) {
    BooleanFunction f(n);
    auto all = VertexSet::range(n);
    for (auto e : supports) {
        if (!e.is_subset_of(all)) {
            throw std::out_of_range("monomial support " + e.str() + " leaves 1.." + std::to_string(n));
        }
        f.anf_[e.mask()] ^= 1;
    }
    std::vector<std::uint8_t> by_mask = f.anf_;
    mobius_transform(by_mask);
    for (std::uint64_t m = 0; m < by_mask.size(); ++m) {
        f.truth_[index_of_ones(VertexSet::from_mask(m), n)] = by_mask[m];
    }
    return f;
}

bool BooleanFunction::coefficient(Hyperedge e) const {
    if (!e.is_subset_of(VertexSet::range(n_))) {
        return false;
    }
    return anf_[e.mask()] != 0;
}

std::vector<Hyperedge> BooleanFunction::anf() const {
    std::vector<Hyperedge> out;
    for (std::uint64_t m = 0; m < anf_.size(); ++m) {
        if (anf_[m]) {
            out.push_back(VertexSet::from_mask(m));
        }
    }
    std::sort(out.begin(), out.end(), CanonicalEdgeLess{});
    return out;
}

bool BooleanFunction::is_zero() const {
    return std::none_of(anf_.begin(), anf_.end(), [](std::uint8_t b) { return b != 0; });
}

BooleanFunction from_hypergraph(const Hypergraph &g) {
    return BooleanFunction::from_anf(g.num_vertices(), g.edges());
}

Hypergraph to_hypergraph(const BooleanFunction &f) {
    return Hypergraph::from_canonical(f.arity(), f.anf());
}

BooleanFunction operator^(const BooleanFunction &f, const BooleanFunction &h) {
    if (f.arity() != h.arity()) {
        throw std::invalid_argument("XOR of Boolean functions with different arity");
    }
    std::vector<std::uint8_t> truth(f.truth_table().begin(), f.truth_table().end());
    for (std::size_t i = 0; i < truth.size(); ++i) {
        truth[i] ^= h.truth_table()[i];
    }
    return BooleanFunction::from_truth_table(std::move(truth));
}

std::optional<std::size_t> degree(const BooleanFunction &f) {
    auto supports = f.anf();
    if (supports.empty()) {
        return std::nullopt;
    }
    return supports.back().size();
}

std::optional<std::size_t> codegree(const BooleanFunction &f) {
    auto supports = f.anf();
    if (supports.empty()) {
        return std::nullopt;
    }
    return supports.front().size();
}

bool is_quadratic(const BooleanFunction &f) {
    return degree(f).value_or(0) <= 2;
}

std::string truth_table_string(const BooleanFunction &f) {
    std::string out;
    out.reserve(f.truth_table().size());
    for (auto b : f.truth_table()) {
        out += b ? '1' : '0';
    }
    return out;
}

BooleanFunction parse_truth_table(std::string_view text) {
    if (text.empty() || !std::has_single_bit(text.size())) {
        throw ParseError("truth table length " + std::to_string(text.size()) + " is not a power of two");
    }
    std::vector<std::uint8_t> truth;
    truth.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ParseError(std::string("truth table character '") + c + "' is not 0 or 1");
        }
        truth.push_back(c == '1' ? 1 : 0);
    }
    return BooleanFunction::from_truth_table(std::move(truth));
}

}  // namespace hgs
