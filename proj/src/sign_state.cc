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

#include "hgs/sign_state.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hgs/errors.h"

namespace hgs {

namespace {

std::uint64_t qubit_bit(std::size_t n, std::size_t k) {
    return std::uint64_t{1} << (n - k);
}

// Real signs belong in the table; the phase field keeps 1, i or -i.
SignState with_folded_phase(std::vector<std::int8_t> signs, Phase phase) {
    if (phase == Phase::minus_one()) {
        for (auto &v : signs) {
            v = static_cast<std::int8_t>(-v);
        }
        phase = Phase::one();
    }
    return SignState::from_signs(std::move(signs), phase);
}

void check_qubit(const SignState &s, std::size_t k) {
    if (k == 0 || k > s.num_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(k) + " outside 1.." + std::to_string(s.num_qubits()));
    }
}

// Gathers the bits of `index` selected by `positions` (most significant first)
// into a packed integer.
std::uint64_t gather(std::uint64_t index, std::span<const std::uint64_t> positions) {
    std::uint64_t out = 0;
    for (auto bit : positions) {
        out = (out << 1) | ((index & bit) != 0 ? 1 : 0);
    }
    return out;
}

__extension__ typedef __int128 Wide;

std::size_t fraction_free_rank(std::vector<std::vector<std::int64_t>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Wide num = static_cast<Wide>(m[r][c]) * m[i][j] - static_cast<Wide>(m[i][c]) * m[r][j];
                Wide q = num / prev;
                if (q > INT64_MAX || q < INT64_MIN) {
                    throw CapacityError("Schmidt rank elimination overflowed");
                }
                m[i][j] = static_cast<std::int64_t>(q);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace

void check_qubit_capacity(std::size_t n) {
    if (n > SignState::kMaxQubits) {
        throw CapacityError("sign states are limited to " + std::to_string(SignState::kMaxQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

SignState SignState::plus(std::size_t n) {
    check_qubit_capacity(n);
    return SignState(n, std::vector<std::int8_t>(std::size_t{1} << n, 1), Phase::one());
}

SignState SignState::from_signs(std::vector<std::int8_t> signs, Phase phase) {
    if (signs.empty() || !std::has_single_bit(signs.size())) {
        throw std::invalid_argument("sign table length " + std::to_string(signs.size()) + " is not a power of two");
    }
    auto n = static_cast<std::size_t>(std::countr_zero(signs.size()));
    check_qubit_capacity(n);
    if (std::any_of(signs.begin(), signs.end(), [](std::int8_t v) { return v != 1 && v != -1; })) {
        throw std::invalid_argument("sign table entries must be +1 or -1");
    }
    return SignState(n, std::move(signs), phase);
}

SignState apply_hyperedge_gate(const SignState &s, Hyperedge e) {
    std::size_t n = s.num_qubits();
    if (!e.is_subset_of(VertexSet::range(n))) {
        throw std::out_of_range("hyperedge " + e.str() + " leaves qubits 1.." + std::to_string(n));
    }
    std::uint64_t need = index_of_ones(e, n);
    std::vector<std::int8_t> signs(s.signs().begin(), s.signs().end());
    for (std::uint64_t x = 0; x < signs.size(); ++x) {
        if ((x & need) == need) {
            signs[x] = static_cast<std::int8_t>(-signs[x]);
        }
    }
    return SignState::from_signs(std::move(signs), s.phase());
}

SignState build_state(const Hypergraph &g) {
    auto s = SignState::plus(g.num_vertices());
    for (auto e : g.edges()) {
        s = apply_hyperedge_gate(s, e);
    }
    return s;
}

SignState from_boolean(const BooleanFunction &f) {
    check_qubit_capacity(f.arity());
    std::vector<std::int8_t> signs;
    signs.reserve(f.truth_table().size());
    for (auto b : f.truth_table()) {
        signs.push_back(b ? -1 : 1);
    }
    return SignState::from_signs(std::move(signs));
}

SignState apply_pauli(const SignState &s, const PauliElement &p) {
    std::size_t n = s.num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("Pauli element acts on " + std::to_string(p.num_qubits()) + " qubits, state has " +
                                    std::to_string(n));
    }
    std::vector<std::int8_t> signs(s.signs().begin(), s.signs().end());
    Phase phase = s.phase() * p.phase;
    std::vector<std::int8_t> scratch(signs.size());
    for (std::size_t k = 1; k <= n; ++k) {
        auto letter = p.letters[k - 1];
        if (letter == PauliLetter::I) {
            continue;
        }
        std::uint64_t bit = qubit_bit(n, k);
        if (letter == PauliLetter::X || letter == PauliLetter::Y) {
            for (std::uint64_t x = 0; x < signs.size(); ++x) {
                scratch[x] = signs[x ^ bit];
            }
            signs.swap(scratch);
        }
        if (letter == PauliLetter::Z || letter == PauliLetter::Y) {
            for (std::uint64_t x = 0; x < signs.size(); ++x) {
                if (x & bit) {
                    signs[x] = static_cast<std::int8_t>(-signs[x]);
                }
            }
        }
        if (letter == PauliLetter::Y) {
            phase *= Phase::minus_i();
        }
    }
    return with_folded_phase(std::move(signs), phase);
}

Probability Probability::reduced(std::uint64_t numerator, std::uint64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("probability with zero denominator");
    }
    auto g = std::gcd(numerator, denominator);
    if (g == 0) {
        return Probability{0, 1};
    }
    return Probability{numerator / g, denominator / g};
}

std::string Probability::str() const {
    if (denominator == 1) {
        return std::to_string(numerator);
    }
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

ZProjection project_z(const SignState &s, std::size_t k, ZOutcome outcome) {
    check_qubit(s, k);
    std::size_t n = s.num_qubits();
    std::uint64_t bit = qubit_bit(n, k);
    std::uint64_t want = outcome == ZOutcome::Plus ? 0 : bit;
    std::vector<std::int8_t> kept;
    kept.reserve(s.signs().size() / 2);
    for (std::uint64_t x = 0; x < s.signs().size(); ++x) {
        if ((x & bit) == want) {
            kept.push_back(s.signs()[x]);
        }
    }
    // Every amplitude has squared magnitude 2^-n, so the probability is the
    // fraction of basis states kept.
    auto probability = Probability::reduced(kept.size(), s.signs().size());
    return ZProjection{probability, SignState::from_signs(std::move(kept), s.phase())};
}

SignState tensor(const SignState &s, const SignState &t) {
    check_qubit_capacity(s.num_qubits() + t.num_qubits());
    std::vector<std::int8_t> signs;
    signs.reserve(s.signs().size() * t.signs().size());
    for (auto a : s.signs()) {
        for (auto b : t.signs()) {
            signs.push_back(static_cast<std::int8_t>(a * b));
        }
    }
    return with_folded_phase(std::move(signs), s.phase() * t.phase());
}

SignState permute_qubits(const SignState &s, const VertexPermutation &p) {
    std::size_t n = s.num_qubits();
    if (p.size() != n) {
        throw std::invalid_argument("permutation arity does not match qubit count");
    }
    std::vector<std::int8_t> signs(s.signs().size());
    for (std::uint64_t x = 0; x < signs.size(); ++x) {
        std::uint64_t y = 0;
        for (std::size_t v = 1; v <= n; ++v) {
            if (x & qubit_bit(n, v)) {
                y |= qubit_bit(n, p(v));
            }
        }
        signs[y] = s.signs()[x];
    }
    return SignState::from_signs(std::move(signs), s.phase());
}

std::optional<Phase> equal_up_to_global_phase(const SignState &s, const SignState &t) {
    if (s.num_qubits() != t.num_qubits()) {
        throw std::invalid_argument("comparing states on different qubit counts");
    }
    int ratio = s.sign(0) * t.sign(0);
    for (std::uint64_t x = 1; x < s.signs().size(); ++x) {
        if (s.sign(x) * t.sign(x) != ratio) {
            return std::nullopt;
        }
    }
    // s = phase_s * signs_s = (phase_s / phase_t) * ratio * (phase_t * signs_t).
    Phase mu = s.phase() * Phase::from_quarter_turns(-t.phase().quarter_turns());
    if (ratio < 0) {
        mu *= Phase::minus_one();
    }
    return mu;
}

bool same_vector(const SignState &s, const SignState &t) {
    auto mu = equal_up_to_global_phase(s, t);
    return mu.has_value() && *mu == Phase::one();
}

std::size_t schmidt_rank(const SignState &s, VertexSet a) {
    std::size_t n = s.num_qubits();
    auto all = VertexSet::range(n);
    if (a.empty() || a == all || !a.is_subset_of(all)) {
        throw std::invalid_argument("bipartition side " + a.str() + " must be a proper non-empty subset of 1.." +
                                    std::to_string(n));
    }
    VertexSet b = VertexSet::from_mask(all.mask() & ~a.mask());
    // Put the smaller side on the rows; every intermediate is a minor of size
    // at most rows, bounded by rows^(rows/2).
    if (a.size() > b.size()) {
        std::swap(a, b);
    }
    if (a.size() > 4) {
        throw CapacityError("Schmidt rank supports bipartitions whose smaller side has at most 4 qubits");
    }
    std::vector<std::uint64_t> row_bits;
    std::vector<std::uint64_t> col_bits;
    for (auto v : a.vertices()) {
        row_bits.push_back(qubit_bit(n, v));
    }
    for (auto v : b.vertices()) {
        col_bits.push_back(qubit_bit(n, v));
    }
    std::vector<std::vector<std::int64_t>> m(std::size_t{1} << a.size(),
                                             std::vector<std::int64_t>(std::size_t{1} << b.size()));
    for (std::uint64_t x = 0; x < s.signs().size(); ++x) {
        m[gather(x, row_bits)][gather(x, col_bits)] = s.sign(x);
    }
    return fraction_free_rank(std::move(m));
}

std::string sign_string(const SignState &s) {
    std::string out;
    out.reserve(s.signs().size());
    for (auto v : s.signs()) {
        out += v > 0 ? '+' : '-';
    }
    return out;
}

SignState parse_sign_string(std::string_view text, Phase phase) {
    std::vector<std::int8_t> signs;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else if (text.substr(i, 3) == "\xE2\x88\x92") {  // U+2212
            signs.push_back(-1);
            i += 2;
        } else {
            throw ParseError(std::string("sign string character '") + c + "' is not + or -");
        }
    }
    if (signs.empty() || !std::has_single_bit(signs.size())) {
        throw ParseError("sign string length " + std::to_string(signs.size()) + " is not a power of two");
    }
    return SignState::from_signs(std::move(signs), phase);
}

}  // namespace hgs
