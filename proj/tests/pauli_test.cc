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

#include <gtest/gtest.h>

#include "hgs/errors.h"

using namespace hgs;

TEST(Phase, Arithmetic) {
    EXPECT_EQ(Phase::i() * Phase::i(), Phase::minus_one());
    EXPECT_EQ(Phase::i() * Phase::minus_i(), Phase::one());
    EXPECT_EQ(-Phase::i(), Phase::minus_i());
    EXPECT_EQ(Phase::from_quarter_turns(-1), Phase::minus_i());
    EXPECT_EQ(Phase::from_quarter_turns(6), Phase::minus_one());
    EXPECT_TRUE(Phase::minus_one().is_real());
    EXPECT_FALSE(Phase::i().is_real());
}

TEST(Phase, TextRoundTrip) {
    for (int k = 0; k < 4; ++k) {
        auto p = Phase::from_quarter_turns(k);
        EXPECT_EQ(parse_phase(p.str()), p);
    }
    EXPECT_EQ(parse_phase("+1"), Phase::one());
    EXPECT_EQ(parse_phase("+i"), Phase::i());
    EXPECT_THROW(parse_phase("2"), ParseError);
    EXPECT_THROW(parse_phase(""), ParseError);
}

TEST(PauliElement, Constructors) {
    auto p = PauliElement::single(3, 2, PauliLetter::Y);
    EXPECT_EQ(to_string(p), "IYI");
    EXPECT_EQ(to_string(PauliElement::identity(2)), "II");
    EXPECT_THROW(PauliElement::single(3, 4, PauliLetter::X), std::out_of_range);
    EXPECT_THROW(PauliElement::single(3, 0, PauliLetter::X), std::out_of_range);
}

TEST(PauliElement, TextFormat) {
    auto p = parse_pauli("-i XZIY");
    EXPECT_EQ(p.phase, Phase::minus_i());
    EXPECT_EQ(p.letters, (std::vector<PauliLetter>{PauliLetter::X, PauliLetter::Z, PauliLetter::I, PauliLetter::Y}));
    EXPECT_EQ(to_string(p), "-i XZIY");
    EXPECT_EQ(to_string(parse_pauli("+i XX")), "+i XX");
    EXPECT_EQ(to_string(parse_pauli("-1XX")), "-1 XX");
    EXPECT_EQ(to_string(parse_pauli("+1 ZZ")), "ZZ");
    EXPECT_EQ(parse_pauli("XY"), (PauliElement{Phase::one(), {PauliLetter::X, PauliLetter::Y}}));
    EXPECT_EQ(parse_pauli("").num_qubits(), 0u);
}

TEST(PauliElement, ParseErrors) {
    EXPECT_THROW(parse_pauli("XA"), ParseError);
    EXPECT_THROW(parse_pauli("-XZ"), ParseError);
    EXPECT_THROW(parse_pauli("+2 XZ"), ParseError);
    EXPECT_THROW(parse_pauli("x"), ParseError);
}
