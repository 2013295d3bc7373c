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

#ifndef HGS_PAULI_H
#define HGS_PAULI_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hgs {

/// A unit i^k, k in {0,1,2,3}.
class Phase {
   public:
    constexpr Phase() = default;
    static constexpr Phase from_quarter_turns(int k) {
        Phase p;
        p.k_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
        return p;
    }
    static constexpr Phase one() {
        return from_quarter_turns(0);
    }
    static constexpr Phase i() {
        return from_quarter_turns(1);
    }
    static constexpr Phase minus_one() {
        return from_quarter_turns(2);
    }
    static constexpr Phase minus_i() {
        return from_quarter_turns(3);
    }

    constexpr int quarter_turns() const {
        return k_;
    }
    constexpr bool is_real() const {
        return (k_ & 1) == 0;
    }

    friend constexpr Phase operator*(Phase a, Phase b) {
        return from_quarter_turns(a.k_ + b.k_);
    }
    constexpr Phase &operator*=(Phase other) {
        return *this = *this * other;
    }
    constexpr Phase operator-() const {
        return *this * minus_one();
    }
    friend constexpr bool operator==(Phase, Phase) = default;

    /// One of "1", "i", "-1", "-i".
    std::string str() const;

   private:
    std::uint8_t k_ = 0;
};

/// Throws ParseError unless the text is 1, +1, i, +i, -1 or -i.
Phase parse_phase(std::string_view text);

enum class PauliLetter : std::uint8_t { I, X, Y, Z };

char to_char(PauliLetter letter);

/// α · p_1 ⊗ ... ⊗ p_n with letters[k - 1] acting on qubit k.
struct PauliElement {
    Phase phase;
    std::vector<PauliLetter> letters;

    std::size_t num_qubits() const {
        return letters.size();
    }

    static PauliElement identity(std::size_t n);
    /// A single letter on qubit k (1-based) of n.
    static PauliElement single(std::size_t n, std::size_t k, PauliLetter letter);

    friend bool operator==(const PauliElement &, const PauliElement &) = default;
};

/// "-i XZIY" form; the phase prefix is omitted when it is 1.
std::string to_string(const PauliElement &p);
/// Accepts an optional phase prefix (+1, -1, +i, -i, also bare 1/i), optional
/// whitespace, then letters over {I,X,Y,Z}. Throws ParseError otherwise.
PauliElement parse_pauli(std::string_view text);

}  // namespace hgs

#endif  // HGS_PAULI_H
