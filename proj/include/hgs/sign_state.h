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

#ifndef HGS_SIGN_STATE_H
#define HGS_SIGN_STATE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/boolean_function.h"
#include "hgs/hypergraph.h"
#include "hgs/pauli.h"

namespace hgs {

/// An exact real equally weighted state on n qubits: amplitude
/// phase * signs[x] * 2^(-n/2) at basis index x (x_1 most significant).
///
/// No amplitude is ever stored in floating point. The representation is not
/// unique as a vector ((p, s) and (-p, -s) coincide); compare vectors with
/// same_vector or equal_up_to_global_phase, representations with ==.
class SignState {
   public:
    static constexpr std::size_t kMaxQubits = 24;

    /// |+>^n. n = 0 gives the scalar 1.
    static SignState plus(std::size_t n);
    /// Throws std::invalid_argument unless the length is 2^n and every entry is +-1.
    static SignState from_signs(std::vector<std::int8_t> signs, Phase phase = Phase::one());

    std::size_t num_qubits() const {
        return n_;
    }
    std::span<const std::int8_t> signs() const {
        return signs_;
    }
    int sign(std::uint64_t index) const {
        return signs_[index];
    }
    Phase phase() const {
        return phase_;
    }

    friend bool operator==(const SignState &, const SignState &) = default;

   private:
    SignState(std::size_t n, std::vector<std::int8_t> signs, Phase phase)
        : n_(n), signs_(std::move(signs)), phase_(phase) {
    }

    std::size_t n_ = 0;
    std::vector<std::int8_t> signs_;
    Phase phase_;
};

/// Throws CapacityError when n exceeds SignState::kMaxQubits.
void check_qubit_capacity(std::size_t n);

/// Multiplies the sign at x by (-1)^{c(e)(x)}; Φ negates every sign.
SignState apply_hyperedge_gate(const SignState &s, Hyperedge e);
/// |g>: every hyperedge gate of g applied to |+>^n.
SignState build_state(const Hypergraph &g);
/// |psi_f>: signs (-1)^{f(x)}.
SignState from_boolean(const BooleanFunction &f);

/// Exact action of a Pauli element. X permutes basis states, Z multiplies by
/// (-1)^{x_k}, Y acts as -i Z X with the -i kept in the phase. A net phase
/// of -1 is moved into the sign table.
SignState apply_pauli(const SignState &s, const PauliElement &p);

enum class ZOutcome : int { Plus = 1, Minus = -1 };

/// Reduced non-negative fraction.
struct Probability {
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;

    static Probability reduced(std::uint64_t numerator, std::uint64_t denominator);
    std::string str() const;
    friend bool operator==(const Probability &, const Probability &) = default;
};

struct ZProjection {
    Probability probability;
    SignState post_state;  // on the remaining n - 1 qubits, renormalized
};

/// Projects qubit k onto |0> (outcome +1) or |1> (outcome -1).
ZProjection project_z(const SignState &s, std::size_t k, ZOutcome outcome);

/// s ⊗ t; qubits of s come first.
/// Phases multiply; a product of -1 is moved into the sign table.
SignState tensor(const SignState &s, const SignState &t);
/// Moves qubit v to position P(v).
SignState permute_qubits(const SignState &s, const VertexPermutation &p);

/// The unit mu with s = mu * t as vectors, if one exists.
std::optional<Phase> equal_up_to_global_phase(const SignState &s, const SignState &t);
/// Vector equality (mu = 1).
bool same_vector(const SignState &s, const SignState &t);

/// Rank over the rationals of the sign matrix with rows indexed by the
/// qubits in `a` and columns by the rest. Uses fraction-free elimination.
/// Throws std::invalid_argument if `a` is empty, full or out of range, and
/// CapacityError if both sides exceed four qubits.
std::size_t schmidt_rank(const SignState &s, VertexSet a);

/// "+-" string, index ascending.
std::string sign_string(const SignState &s);
/// Accepts '+' and '-' (also the Unicode minus sign).
SignState parse_sign_string(std::string_view text, Phase phase = Phase::one());

}  // namespace hgs

#endif  // HGS_SIGN_STATE_H
