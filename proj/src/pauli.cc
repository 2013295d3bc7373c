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

#include "hgs/pauli.h"

#include <stdexcept>

#include "hgs/errors.h"

namespace hgs {

std::string Phase::str() const {
    switch (k_) {
        case 0:
            return "1";
        case 1:
            return "i";
        case 2:
            return "-1";
        default:
            return "-i";
    }
}

Phase parse_phase(std::string_view text) {
    if (text == "1" || text == "+1") {
        return Phase::one();
    }
    if (text == "i" || text == "+i") {
        return Phase::i();
    }
    if (text == "-1") {
        return Phase::minus_one();
    }
    if (text == "-i") {
        return Phase::minus_i();
    }
    throw ParseError("unknown phase '" + std::string(text) + "'");
}

char to_char(PauliLetter letter) {
    switch (letter) {
        case PauliLetter::I:
            return 'I';
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Y:
            return 'Y';
        default:
            return 'Z';
    }
}

PauliElement PauliElement::identity(std::size_t n) {
    return PauliElement{Phase::one(), std::vector<PauliLetter>(n, PauliLetter::I)};
}

PauliElement PauliElement::single(std::size_t n, std::size_t k, PauliLetter letter) {
    if (k == 0 || k > n) {
        throw std::out_of_range("qubit " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    auto p = identity(n);
    p.letters[k - 1] = letter;
    return p;
}

std::string to_string(const PauliElement &p) {
    std::string out;
    if (p.phase != Phase::one()) {
        out = (p.phase == Phase::i() ? "+i" : p.phase.str()) + " ";
    }
    for (auto l : p.letters) {
        out += to_char(l);
    }
    return out;
}

PauliElement parse_pauli(std::string_view text) {
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
    }
    PauliElement p;
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-' || text[0] == '1' || text[0] == 'i')) {
        std::size_t end = 1;
        if (text[0] == '+' || text[0] == '-') {
            if (text.size() < 2 || (text[1] != '1' && text[1] != 'i')) {
                throw ParseError("phase prefix must be +1, -1, +i or -i in '" + std::string(text) + "'");
            }
            end = 2;
        }
        p.phase = parse_phase(text.substr(0, end));
        pos = end;
    }
    while (pos < text.size() && is_space(text[pos])) {
        ++pos;
    }
    for (; pos < text.size(); ++pos) {
        switch (text[pos]) {
            case 'I':
                p.letters.push_back(PauliLetter::I);
                break;
            case 'X':
                p.letters.push_back(PauliLetter::X);
                break;
            case 'Y':
                p.letters.push_back(PauliLetter::Y);
                break;
            case 'Z':
                p.letters.push_back(PauliLetter::Z);
                break;
            default:
                throw ParseError(std::string("unexpected character '") + text[pos] + "' in Pauli string");
        }
    }
    return p;
}

}  // namespace hgs
