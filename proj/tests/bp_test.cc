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

#include "qbp/bp.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "qbp/constructions.h"
#include "qbp/exact_oracle.h"
#include "naive_oracles.h"

using namespace qbp;
using qbp::naive::naive_check_message;

namespace {

Dist4 random_dist(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Dist4 d;
    double s = 0;
    for (auto& x : d) {
        x = u(rng);
        s += x;
    }
    for (auto& x : d) {
        x /= s;
    }
    return d;
}

PauliOperator random_check(size_t n, std::mt19937_64& rng) {
    PauliOperator p(n);
    for (size_t q = 0; q < n; q++) {
        p.set(q, static_cast<Pauli>(1 + rng() % 3));
    }
    return p;
}

void expect_dist_near(const Dist4& a, const Dist4& b, double tol) {
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(a[i], b[i], tol) << "entry " << i;
    }
}

}  // namespace

TEST(bp, normalize_with_floor) {
    auto d = normalize_with_floor({2, 0, 0, 0});
    EXPECT_NEAR(d[0], 1.0, 1e-11);
    EXPECT_GE(d[1], kProbabilityFloor * 0.99);
    EXPECT_NEAR(d[0] + d[1] + d[2] + d[3], 1.0, 1e-15);
}

TEST(bp, channel_prior_validation) {
    EXPECT_THROW(ChannelPrior({{0.5, 0.5, 0.1, -0.1}}), std::invalid_argument);
    EXPECT_THROW(ChannelPrior({{0.5, 0.5, 0.1, 0.0}}), std::invalid_argument);
    EXPECT_THROW(ChannelPrior::depolarizing(3, 1.5), std::invalid_argument);
    auto p = ChannelPrior::depolarizing(2, 0.3);
    EXPECT_DOUBLE_EQ(p[1][0], 0.7);
    EXPECT_DOUBLE_EQ(p[1][3], 0.1);
}

TEST(bp, check_update_toy_example) {
    double eps = 0.1;
    auto code = builtin_code("two_qubit_toy");
    auto prior = ChannelPrior::depolarizing(2, eps);
    auto state = init_messages(code, prior);
    check_update(state, code, Syndrome::parse("-+"));
    // Edge 0 is XX -> qubit 0.
    double a = 2 * eps / 3;
    expect_dist_near(state.check_to_qubit[0], {a / 2, a / 2, (1 - a) / 2, (1 - a) / 2}, 1e-15);
}

TEST(bp, check_update_uniform_and_degree_one) {
    auto code = StabilizerCode::build({PauliOperator::parse("XXZ"), PauliOperator::parse("IIZ")});
    auto state = init_messages(code, ChannelPrior::depolarizing(3, 0.2));
    for (auto& m : state.qubit_to_check) {
        m = {0.25, 0.25, 0.25, 0.25};
    }
    check_update(state, code, Syndrome::parse("+-"));
    for (size_t e = 0; e < 3; e++) {
        expect_dist_near(state.check_to_qubit[e], {0.25, 0.25, 0.25, 0.25}, 1e-15);
    }
    // Degree-one Z check with a flipped sign: only X and Y survive.
    const Dist4& m = state.check_to_qubit[3];
    EXPECT_LT(m[0], 1e-11);
    EXPECT_LT(m[3], 1e-11);
    EXPECT_NEAR(m[1], m[2], 1e-15);
}

TEST(bp, check_update_matches_naive_sum) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 1000; trial++) {
        size_t d = 1 + rng() % 6;
        auto code = StabilizerCode::build({random_check(d, rng)});
        auto state = init_messages(code, ChannelPrior::depolarizing(d, 0.1));
        std::vector<Dist4> incoming(d);
        std::vector<Pauli> labels(d);
        for (size_t i = 0; i < d; i++) {
            incoming[i] = random_dist(rng);
            state.qubit_to_check[i] = incoming[i];
            labels[i] = code.edges()[i].label;
        }
        int sign = rng() & 1 ? -1 : +1;
        Syndrome s(1);
        s.set(0, sign);
        check_update(state, code, s);
        for (size_t i = 0; i < d; i++) {
            auto expected = naive_check_message(labels, incoming, sign, i);
            for (int k = 0; k < 4; k++) {
                ASSERT_NEAR(state.check_to_qubit[i][k], expected[k], 1e-12);
            }
        }
    }
}

TEST(bp, single_check_beliefs_are_exact) {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 300; trial++) {
        size_t d = 1 + rng() % 6;
        auto code = StabilizerCode::build({random_check(d, rng)});
        std::vector<Dist4> per_qubit(d);
        for (auto& p : per_qubit) {
            p = random_dist(rng);
        }
        ChannelPrior prior(per_qubit);
        Syndrome s(1);
        s.set(0, rng() & 1 ? -1 : +1);
        BeliefPropagation bp(code, prior, s);
        bp.iterate();
        auto exact = exact_marginals(code, prior, s);
        for (size_t q = 0; q < d; q++) {
            for (int k = 0; k < 4; k++) {
                ASSERT_NEAR(bp.beliefs()[q][k], exact[q][k], 1e-10);
            }
        }
    }
}

TEST(bp, tree_code_beliefs_are_exact) {
    // Chain Z0Z1, Z1Z2, Z2Z3: a tree, so BP is exact after enough rounds.
    auto code = StabilizerCode::build(
        {PauliOperator::parse("ZZII"), PauliOperator::parse("IZZI"), PauliOperator::parse("IIZZ")});
    auto prior = ChannelPrior::depolarizing(4, 0.15);
    for (const char* syn : {"+-+", "--+", "-+-", "+++"}) {
        auto s = Syndrome::parse(syn);
        BeliefPropagation bp(code, prior, s);
        for (int i = 0; i < 6; i++) {
            bp.iterate();
        }
        auto exact = exact_marginals(code, prior, s);
        for (size_t q = 0; q < 4; q++) {
            for (int k = 0; k < 4; k++) {
                EXPECT_NEAR(bp.beliefs()[q][k], exact[q][k], 1e-10) << syn << " q" << q;
            }
        }
    }
}

TEST(bp, qubit_update_examples) {
    auto code = StabilizerCode::build({PauliOperator::parse("ZZ"), PauliOperator::parse("XX")});
    auto prior = ChannelPrior::depolarizing(2, 0.2);
    auto state = init_messages(code, prior);
    qubit_update(state, code);
    // Both incoming messages are uniform, so outgoing equals the prior.
    for (size_t e = 0; e < 4; e++) {
        expect_dist_near(state.qubit_to_check[e], prior[0], 1e-15);
    }
    auto single = StabilizerCode::build({PauliOperator::parse("ZZ")});
    auto s1 = init_messages(single, prior);
    s1.check_to_qubit[0] = {0.1, 0.2, 0.3, 0.4};
    qubit_update(s1, single);
    expect_dist_near(s1.qubit_to_check[0], prior[0], 1e-15);
}

TEST(bp, toy_first_iteration_closed_form) {
    double eps = 0.1;
    auto code = builtin_code("two_qubit_toy");
    auto prior = ChannelPrior::depolarizing(2, eps);
    auto state = init_messages(code, prior);
    check_update(state, code, Syndrome::parse("+-"));
    qubit_update(state, code);
    // m_{1 -> XX} is the prior times the ZZ message, which favours X and Y.
    double a = 2 * eps / 3;
    Dist4 from_zz = {a / 2, (1 - a) / 2, (1 - a) / 2, a / 2};
    Dist4 expected;
    for (int k = 0; k < 4; k++) {
        expected[k] = prior[0][k] * from_zz[k];
    }
    expect_dist_near(state.qubit_to_check[0], normalize_with_floor(expected), 1e-15);
}

TEST(bp, toy_stays_symmetric) {
    auto code = builtin_code("two_qubit_toy");
    auto prior = ChannelPrior::depolarizing(2, 0.1);
    DecodeConfig config;
    size_t calls = 0;
    auto result = decode(code, prior, Syndrome::parse("+-"), config, [&](size_t, const std::vector<Dist4>& b) {
        calls++;
        EXPECT_EQ(b[0], b[1]);
        EXPECT_GT(b[0][0], b[0][1]);
        EXPECT_GT(b[0][0], b[0][2]);
        EXPECT_GT(b[0][0], b[0][3]);
    });
    EXPECT_EQ(calls, 90u);
    EXPECT_FALSE(result.converged);
    EXPECT_EQ(result.iterations_used, 90u);
    EXPECT_EQ(result.correction.str(), "II");
}

TEST(bp, trivial_syndrome_converges_at_once) {
    auto code = generate_bicycle(BicycleSpec{40, 20, 6, 2}).code;
    auto result = decode(code, ChannelPrior::depolarizing(40, 0.05), Syndrome(20), DecodeConfig{});
    EXPECT_TRUE(result.converged);
    EXPECT_EQ(result.iterations_used, 1u);
    EXPECT_TRUE(result.correction.is_identity());
}

TEST(bp, long_runs_stay_finite) {
    auto code = generate_bicycle(BicycleSpec{24, 12, 6, 4}).code;
    std::mt19937_64 rng(5);
    for (double eps : {1e-4, 0.5}) {
        auto prior = ChannelPrior::depolarizing(24, eps);
        Syndrome s(12);
        for (size_t c = 0; c < 12; c++) {
            s.set(c, rng() & 1 ? -1 : 1);
        }
        BeliefPropagation bp(code, prior, s);
        for (int i = 0; i < 100000; i++) {
            bp.iterate();
        }
        for (const auto& m : bp.state().check_to_qubit) {
            ASSERT_NEAR(m[0] + m[1] + m[2] + m[3], 1.0, 1e-12);
            for (double x : m) {
                ASSERT_TRUE(std::isfinite(x));
                ASSERT_GE(x, 0.0);
            }
        }
        for (const auto& m : bp.state().qubit_to_check) {
            ASSERT_NEAR(m[0] + m[1] + m[2] + m[3], 1.0, 1e-12);
        }
        for (const auto& b : bp.beliefs()) {
            ASSERT_NEAR(b[0] + b[1] + b[2] + b[3], 1.0, 1e-12);
            for (double x : b) {
                ASSERT_TRUE(std::isfinite(x));
            }
        }
    }
}

TEST(bp, relabelling_qubits_permutes_beliefs) {
    auto bc = generate_bicycle(BicycleSpec{30, 14, 6, 8});
    const auto& code = bc.code;
    size_t n = code.num_qubits();
    std::mt19937_64 rng(9);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; i++) {
        perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<PauliOperator> moved;
    for (const auto& c : code.checks()) {
        PauliOperator p(n);
        for (size_t q = 0; q < n; q++) {
            p.set(perm[q], c.get(q));
        }
        moved.push_back(p);
    }
    auto permuted = StabilizerCode::build(moved);
    std::vector<Dist4> per_qubit(n);
    for (auto& d : per_qubit) {
        d = random_dist(rng);
    }
    std::vector<Dist4> moved_prior(n);
    for (size_t q = 0; q < n; q++) {
        moved_prior[perm[q]] = per_qubit[q];
    }
    PauliOperator e(n);
    e.set(3, Pauli::Y);
    e.set(17, Pauli::X);
    ChannelPrior prior(per_qubit);
    ChannelPrior prior2(moved_prior);
    BeliefPropagation a(code, prior, code.syndrome(e));
    PauliOperator e2(n);
    e2.set(perm[3], Pauli::Y);
    e2.set(perm[17], Pauli::X);
    BeliefPropagation b(permuted, prior2, permuted.syndrome(e2));
    for (int i = 0; i < 5; i++) {
        a.iterate();
        b.iterate();
    }
    for (size_t q = 0; q < n; q++) {
        for (int k = 0; k < 4; k++) {
            ASSERT_NEAR(a.beliefs()[q][k], b.beliefs()[perm[q]][k], 1e-12);
        }
    }
}

TEST(bp, hard_decision_ties) {
    auto d = hard_decision({{0.25, 0.25, 0.25, 0.25}, {0.1, 0.4, 0.4, 0.1}, {0.1, 0.2, 0.3, 0.4}});
    EXPECT_EQ(d.str(), "IXZ");
}

TEST(bp, heuristic_names) {
    EXPECT_EQ(parse_heuristic("collision_freeze"), Heuristic::kCollisionFreeze);
    EXPECT_EQ(parse_heuristic("collision-perturb"), Heuristic::kCollisionPerturb);
    EXPECT_STREQ(heuristic_name(Heuristic::kFreeze), "freeze");
    EXPECT_THROW(parse_heuristic("anneal"), std::invalid_argument);
}

TEST(bp, config_validation) {
    DecodeConfig c;
    c.t_pert = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.t_pert = 6;
    c.delta = -1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.delta = 0.1;
    c.max_iterations = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}
