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

// Test-only reference implementations. Nothing here shares code paths with
// the library routines it is used to check.

#ifndef HGS_TESTS_ORACLE_H
#define HGS_TESTS_ORACLE_H

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "hgs/hypergraph.h"
#include "hgs/pauli.h"
#include "hgs/sign_state.h"

namespace hgs::oracle {

/// Gaussian integer a + b i.
struct Gauss {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend Gauss operator+(Gauss x, Gauss y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend Gauss operator*(Gauss x, Gauss y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend bool operator==(Gauss, Gauss) = default;
};

using Matrix2 = std::array<std::array<Gauss, 2>, 2>;

inline Matrix2 pauli_matrix(PauliLetter l) {
    switch (l) {
        case PauliLetter::I:
            return {{{{{1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}}}}};
        case PauliLetter::X:
            return {{{{{0, 0}, {1, 0}}}, {{{1, 0}, {0, 0}}}}};
        case PauliLetter::Y:
            return {{{{{0, 0}, {0, -1}}}, {{{0, 1}, {0, 0}}}}};
        default:
            return {{{{{1, 0}, {0, 0}}}, {{{0, 0}, {-1, 0}}}}};
    }
}

inline Gauss unit(Phase p) {
    static const Gauss units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return units[p.quarter_turns()];
}

/// Unnormalized dense state vector: amplitudes times 2^(n/2).
struct Dense {
    std::size_t n = 0;
    std::vector<Gauss> amp;

    static Dense plus(std::size_t n) {
        return Dense{n, std::vector<Gauss>(std::size_t{1} << n, Gauss{1, 0})};
    }
    static Dense of(const SignState &s) {
        Dense d{s.num_qubits(), {}};
        for (auto v : s.signs()) {
            d.amp.push_back(unit(s.phase()) * Gauss{v, 0});
        }
        return d;
    }

    bool bit(std::uint64_t x, std::size_t k) const {
        return ((x >> (n - k)) & 1) != 0;
    }

    /// Generic 2x2 matrix on qubit k: new[x] = sum_b M[x_k][b] old[x with x_k = b].
    void apply(std::size_t k, const Matrix2 &m) {
        std::vector<Gauss> out(amp.size());
        std::uint64_t mask = std::uint64_t{1} << (n - k);
        for (std::uint64_t x = 0; x < amp.size(); ++x) {
            int row = bit(x, k) ? 1 : 0;
            out[x] = m[row][0] * amp[x & ~mask] + m[row][1] * amp[x | mask];
        }
        amp = std::move(out);
    }

    void scale(Gauss c) {
        for (auto &a : amp) {
            a = c * a;
        }
    }

    /// Z_{|e|} on the qubits of e: the diagonal is -1 only on the last basis
    /// state of the |e|-qubit register, i.e. when every qubit of e is 1.
    /// Z_Φ = -I.
    void hyperedge_gate(Hyperedge e) {
        auto qubits = e.vertices();
        for (std::uint64_t x = 0; x < amp.size(); ++x) {
            std::uint64_t j = 0;  // row of the |e|-qubit diagonal, 0-based
            for (auto k : qubits) {
                j = (j << 1) | (bit(x, k) ? 1 : 0);
            }
            std::uint64_t last = (std::uint64_t{1} << qubits.size()) - 1;
            if (j == last) {
                amp[x] = Gauss{-1, 0} * amp[x];
            }
        }
    }

    void pauli(const PauliElement &p) {
        for (std::size_t k = 1; k <= p.num_qubits(); ++k) {
            apply(k, pauli_matrix(p.letters[k - 1]));
        }
        scale(unit(p.phase));
    }

    friend bool operator==(const Dense &, const Dense &) = default;
};

inline Dense hypergraph_state(const Hypergraph &g) {
    auto d = Dense::plus(g.num_vertices());
    for (auto e : g.edges()) {
        d.hyperedge_gate(e);
    }
    return d;
}

/// Rank over Q by Gauss-Jordan elimination with exact rationals.
inline std::size_t rational_rank(const std::vector<std::vector<int>> &in) {
    using boost::multiprecision::cpp_rational;
    std::vector<std::vector<cpp_rational>> m;
    for (const auto &row : in) {
        m.emplace_back(row.begin(), row.end());
    }
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) {
                continue;
            }
            cpp_rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
        }
        ++r;
    }
    return r;
}

/// Reshapes signs into (A | complement) and takes the rational rank.
inline std::size_t bipartite_rank(const SignState &s, VertexSet a) {
    std::size_t n = s.num_qubits();
    auto av = a.vertices();
    std::vector<std::size_t> bv;
    for (std::size_t v = 1; v <= n; ++v) {
        if (!a.contains(v)) {
            bv.push_back(v);
        }
    }
    std::vector<std::vector<int>> m(std::size_t{1} << av.size(), std::vector<int>(std::size_t{1} << bv.size()));
    for (std::uint64_t x = 0; x < s.signs().size(); ++x) {
        std::uint64_t r = 0, c = 0;
        for (auto v : av) {
            r = (r << 1) | ((x >> (n - v)) & 1);
        }
        for (auto v : bv) {
            c = (c << 1) | ((x >> (n - v)) & 1);
        }
        m[r][c] = s.sign(x);
    }
    return rational_rank(m);
}

/// Tries every deletion-mode assignment, deleting from the highest label down
/// with the public single-vertex deletions.
inline bool brute_force_cover(const Hypergraph &g, VertexSet s, CoverSemantics semantics) {
    auto vs = s.vertices();
    std::size_t assignments = std::size_t{1} << vs.size();
    bool any = false;
    bool all = true;
    for (std::size_t a = 0; a < assignments; ++a) {
        Hypergraph h = g;
        for (std::size_t i = vs.size(); i-- > 0;) {
            h = ((a >> i) & 1) ? delete_minus(h, vs[i]) : delete_plus(h, vs[i]);
        }
        bool trivial = true;
        for (auto e : h.edges()) {
            trivial = trivial && e.size() <= 1;
        }
        any = any || trivial;
        all = all && trivial;
    }
    return semantics == CoverSemantics::Existential ? any : all;
}

/// Breadth-first search over "shares an edge of size >= 2" adjacency.
inline std::vector<VertexSet> bfs_components(const Hypergraph &g) {
    std::size_t n = g.num_vertices();
    std::vector<bool> seen(n + 1, false);
    std::vector<VertexSet> out;
    for (std::size_t start = 1; start <= n; ++start) {
        if (seen[start]) {
            continue;
        }
        VertexSet comp;
        std::queue<std::size_t> q;
        q.push(start);
        seen[start] = true;
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            comp = comp.with(v);
            for (auto e : g.edges()) {
                if (e.size() < 2 || !e.contains(v)) {
                    continue;
                }
                for (auto w : e.vertices()) {
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push(w);
                    }
                }
            }
        }
        out.push_back(comp);
    }
    return out;
}

/// Calls fn(g) for all 2^(2^n) hypergraphs on n vertices.
inline void for_each_hypergraph(std::size_t n, const std::function<void(const Hypergraph &)> &fn) {
    std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t i = 0; i < count; ++i) {
        fn(Hypergraph::from_edge_set_index(n, i));
    }
}

/// All n! permutations of 1..n.
inline std::vector<VertexPermutation> all_permutations(std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) {
        images[i] = i + 1;
    }
    std::vector<VertexPermutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace hgs::oracle

#endif  // HGS_TESTS_ORACLE_H
