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

#include "qbp/constructions.h"

#include <random>

#include "gtest/gtest.h"
#include "qbp/tanner_analysis.h"

using namespace qbp;

TEST(constructions, cyclic_matrix_examples) {
    EXPECT_EQ(cyclic_matrix({1, 0}), BitMatrix::from_rows({{1, 0}, {0, 1}}));
    EXPECT_EQ(cyclic_matrix({0, 0, 0}), BitMatrix(3, 3));
    EXPECT_EQ(cyclic_matrix({1, 1, 0}), BitMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    EXPECT_THROW(cyclic_matrix({}), std::invalid_argument);
}

TEST(constructions, cyclic_and_circulant_structure) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; t++) {
        size_t d = 1 + rng() % 20;
        std::vector<uint8_t> a(d);
        size_t weight = 0;
        for (auto& v : a) {
            v = rng() & 1;
            weight += v;
        }
        for (const auto& c : {cyclic_matrix(a), circulant_matrix(a)}) {
            for (size_t i = 0; i < d; i++) {
                ASSERT_EQ(c.row_weight(i), weight);
                ASSERT_EQ(c.col_weight(i), weight);
            }
        }
        // Rows are cyclic shifts of each other: to the left for the
        // (i + j) indexing, to the right for the circulant.
        auto cyc = cyclic_matrix(a);
        auto circ = circulant_matrix(a);
        for (size_t i = 0; i < d; i++) {
            for (size_t j = 0; j < d; j++) {
                ASSERT_EQ(cyc.get((i + 1) % d, j), cyc.get(i, (j + 1) % d));
                ASSERT_EQ(circ.get((i + 1) % d, (j + 1) % d), circ.get(i, j));
            }
        }
    }
}

TEST(constructions, bicycle_example) {
    auto bc = generate_bicycle(BicycleSpec{20, 10, 6, 1});
    EXPECT_EQ(bc.code.num_checks(), 10u);
    EXPECT_EQ(bc.code.num_logical(), 10u);
    for (size_t c = 0; c < 10; c++) {
        EXPECT_EQ(bc.code.check_degree(c), 6u);
    }
    for (size_t c = 0; c < 5; c++) {
        for (size_t q : bc.code.check(c).support()) {
            EXPECT_EQ(bc.code.check(c).get(q), Pauli::Z);
            EXPECT_EQ(bc.code.check(c + 5).get(q), Pauli::X);
        }
    }
    EXPECT_EQ(bc.deleted_rows.size(), 5u);
}

TEST(constructions, bicycle_random_specs) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; t++) {
        BicycleSpec spec;
        // Rate around one half with enough checks to cover every column.
        spec.n = 4 * (6 + rng() % 25);
        spec.m = spec.n / 2 + 2 * (rng() % 5) - 4;
        spec.w = 2 * (4 + rng() % 4);
        spec.seed = rng();
        if (t % 4 == 0) {
            spec.deletion = RowDeletion::kRandom;
            spec.w += 4;
        }
        auto bc = generate_bicycle(spec);
        auto gram = multiply_transpose(bc.h, bc.h);
        for (size_t i = 0; i < gram.rows(); i++) {
            for (size_t j = 0; j < gram.cols(); j++) {
                ASSERT_FALSE(gram.get(i, j));
            }
        }
        const auto& code = bc.code;
        for (size_t a = 0; a < code.num_checks(); a++) {
            for (size_t b = a + 1; b < code.num_checks(); b++) {
                ASSERT_EQ(commute(code.check(a), code.check(b)), 1);
            }
        }
        ASSERT_EQ(code.num_qubits(), spec.n);
        ASSERT_EQ(code.num_checks(), spec.m);
        ASSERT_EQ(code.num_logical(), spec.n - spec.m);
        ASSERT_GE(four_loop_census(code).size(), 1u);
        for (size_t col = 0; col < bc.h.cols(); col++) {
            ASSERT_GT(bc.h.col_weight(col), 0u);
        }
    }
}

TEST(constructions, bicycle_is_deterministic) {
    BicycleSpec spec{40, 16, 8, 77};
    auto a = generate_bicycle(spec);
    auto b = generate_bicycle(spec);
    EXPECT_EQ(a.h, b.h);
    EXPECT_EQ(a.deleted_rows, b.deleted_rows);
    spec.seed = 78;
    EXPECT_NE(generate_bicycle(spec).h, a.h);
}

TEST(constructions, balanced_deletion_evens_column_weights) {
    BicycleSpec spec{200, 60, 10, 5};
    auto balanced = generate_bicycle(spec);
    size_t lo = SIZE_MAX;
    size_t hi = 0;
    for (size_t c = 0; c < balanced.h.cols(); c++) {
        lo = std::min(lo, balanced.h.col_weight(c));
        hi = std::max(hi, balanced.h.col_weight(c));
    }
    EXPECT_GE(lo, 1u);
    EXPECT_LE(hi - lo, 3u);
}

TEST(constructions, bicycle_spec_validation) {
    EXPECT_THROW(generate_bicycle(BicycleSpec{21, 10, 6, 0}), std::invalid_argument);
    EXPECT_THROW(generate_bicycle(BicycleSpec{20, 9, 6, 0}), std::invalid_argument);
    EXPECT_THROW(generate_bicycle(BicycleSpec{20, 22, 6, 0}), std::invalid_argument);
    EXPECT_THROW(generate_bicycle(BicycleSpec{20, 10, 5, 0}), std::invalid_argument);
    EXPECT_THROW(generate_bicycle(BicycleSpec{20, 10, 0, 0}), std::invalid_argument);
}

TEST(constructions, css_from_matrix_toy) {
    auto code = css_from_matrix(BitMatrix::from_rows({{1, 1}}));
    ASSERT_EQ(code.num_checks(), 2u);
    EXPECT_EQ(code.check(0).str(), "ZZ");
    EXPECT_EQ(code.check(1).str(), "XX");
}

TEST(constructions, css_from_matrix_errors) {
    try {
        css_from_matrix(BitMatrix::from_rows({{1, 1, 0, 0}, {0, 1, 1, 0}}));
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("rows 0 and 1"), std::string::npos);
    }
    EXPECT_THROW(css_from_matrix(BitMatrix::from_rows({{1, 1, 0, 0}, {0, 0, 0, 0}})), std::invalid_argument);
    EXPECT_THROW(css_from_matrix(BitMatrix::from_rows({{1, 1, 1, 1}, {1, 1, 1, 1}})), std::invalid_argument);
}

TEST(constructions, builtins) {
    EXPECT_EQ(builtin_names().size(), 2u);
    EXPECT_EQ(builtin_code("two_qubit_toy").num_qubits(), 2u);
    EXPECT_THROW(builtin_code("steane"), std::invalid_argument);
}
