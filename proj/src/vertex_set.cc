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

#include "hgs/vertex_set.h"

#include <stdexcept>

namespace hgs {

namespace {

void check_label(std::size_t v) {
    if (v == 0 || v > VertexSet::kMaxVertex) {
        throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1..64");
    }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<std::size_t> vertices) {
    for (auto v : vertices) {
        check_label(v);
        mask_ |= std::uint64_t{1} << (v - 1);
    }
}

VertexSet::VertexSet(const std::vector<std::size_t> &vertices) {
    for (auto v : vertices) {
        check_label(v);
        mask_ |= std::uint64_t{1} << (v - 1);
    }
}

VertexSet VertexSet::range(std::size_t n) {
    if (n > kMaxVertex) {
        throw std::out_of_range("vertex range exceeds 64");
    }
    return from_mask(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

bool VertexSet::contains(std::size_t v) const {
    return v >= 1 && v <= kMaxVertex && ((mask_ >> (v - 1)) & 1) != 0;
}

VertexSet VertexSet::with(std::size_t v) const {
    check_label(v);
    return from_mask(mask_ | (std::uint64_t{1} << (v - 1)));
}

VertexSet VertexSet::without(std::size_t v) const {
    check_label(v);
    return from_mask(mask_ & ~(std::uint64_t{1} << (v - 1)));
}

std::vector<std::size_t> VertexSet::vertices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
        out.push_back(1 + static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
}

std::string VertexSet::str() const {
    std::string out = "{";
    bool first = true;
    for (auto v : vertices()) {
        if (!first) {
            out += ',';
        }
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

VertexSet remove_and_compact(VertexSet s, std::size_t k) {
    check_label(k);
    std::uint64_t m = s.mask();
    std::uint64_t low = m & ((std::uint64_t{1} << (k - 1)) - 1);
    std::uint64_t high = k == 64 ? 0 : (m >> k) << (k - 1);
    return VertexSet::from_mask(low | high);
}

}  // namespace hgs
