// Copyright 2026 The qbp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qbp/pauli.h"

#include <random>

#include "gtest/gtest.h"

using namespace qbp;

namespace {

// Single-qubit commutation written out by hand: two different non-identity
// Paulis anticommute, everything else commutes.
int table_commute(Pauli a, Pauli b) {
    if (a == Pauli::I || b == Pauli::I || a == b) {
        return +1;
    }
    return -1;
}

PauliOperator random_pauli(size_t n, std::mt19937_64& rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli>(rng() & 3));
    }
    return p;
}

}  // namespace

TEST(pauli, single_qubit_table) {
    for (Pauli a : kAllPaulis) {
        for (Pauli b : kAllPaulis) {
            EXPECT_EQ(commute_single(a, b), table_commute(a, b)) << pauli_char(a) << pauli_char(b);
        }
    }
}

TEST(pauli, examples) {
    EXPECT_EQ(commute(PauliOperator::parse("XX"), PauliOperator::parse("ZZ")), +1);
    EXPECT_EQ(commute(PauliOperator::parse("XI"), PauliOperator::parse("ZI")), -1);
    EXPECT_EQ(commute(PauliOperator::parse("XZZXI"), PauliOperator::parse("IXZZX")), +1);
    EXPECT_EQ(multiply(PauliOperator::parse("XI"), PauliOperator::parse("ZI")), PauliOperator::parse("YI"));
    EXPECT_EQ(multiply(PauliOperator::parse("XYZI"), PauliOperator::parse("YZXI")), PauliOperator::parse("ZXYI"));
}

TEST(pauli, parse_and_print) {
    auto p = PauliOperator::parse("IXYZ");
    EXPECT_EQ(p.num_qubits(), 4u);
    EXPECT_EQ(p.get(0), Pauli::I);
    EXPECT_EQ(p.get(2), Pauli::Y);
    EXPECT_EQ(p.str(), "IXYZ");
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{1, 2, 3}));
    EXPECT_THROW(PauliOperator::parse(""), std::invalid_argument);
    EXPECT_THROW(PauliOperator::parse("XQ"), std::invalid_argument);
}

TEST(pauli, length_mismatch_throws) {
    auto a = PauliOperator::parse("XX");
    auto b = PauliOperator::parse("XXX");
    EXPECT_THROW(a.commute(b), std::invalid_argument);
    EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(pauli, symplectic_form_matches_table) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10000; trial++) {
        size_t n = 1 + rng() % 150;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        int expected = 1;
        for (size_t q = 0; q < n; q++) {
            expected *= table_commute(a.get(q), b.get(q));
        }
        ASSERT_EQ(commute(a, b), expected);
    }
}

TEST(pauli, group_properties) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; trial++) {
        size_t n = 1 + rng() % 130;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        auto c = random_pauli(n, rng);
        ASSERT_TRUE((a * a).is_identity());
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(commute(a, b), commute(b, a));
        ASSERT_EQ(commute(a * b, c), commute(a, c) * commute(b, c));
        ASSERT_EQ(commute(a, a), 1);
        ASSERT_EQ(PauliOperator::parse(a.str()), a);
    }
}

TEST(pauli, word_boundaries) {
    PauliOperator p(129);
    p.set(63, Pauli::X);
    p.set(64, Pauli::Z);
    p.set(128, Pauli::Y);
    EXPECT_EQ(p.num_words(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{63, 64, 128}));
    PauliOperator q(129);
    q.set(64, Pauli::X);
    EXPECT_EQ(commute(p, q), -1);
    p.set(128, Pauli::I);
    EXPECT_EQ(p.weight(), 2u);
}

TEST(pauli, lex_order) {
    EXPECT_TRUE(PauliOperator::parse("IZ").lex_less(PauliOperator::parse("XI")));
    EXPECT_TRUE(PauliOperator::parse("XY").lex_less(PauliOperator::parse("XZ")));
    EXPECT_FALSE(PauliOperator::parse("XZ").lex_less(PauliOperator::parse("XZ")));
}
