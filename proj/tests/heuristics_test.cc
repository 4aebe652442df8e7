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

#include "qbp/heuristics.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "qbp/constructions.h"

using namespace qbp;

namespace {

const StabilizerCode& toy() {
    static const StabilizerCode code = builtin_code("two_qubit_toy");
    return code;
}

bool valid_toy_recovery(const PauliOperator& e) {
    auto s = e.str();
    return s == "XI" || s == "IX" || s == "YZ" || s == "ZY";
}

std::set<size_t> neighbours(const StabilizerCode& code, const std::vector<size_t>& checks) {
    std::set<size_t> out;
    for (size_t c : checks) {
        for (size_t q : code.check(c).support()) {
            out.insert(q);
        }
    }
    return out;
}

}  // namespace

TEST(heuristics, frustrated_checks) {
    auto s = Syndrome::parse("+-");
    EXPECT_EQ(find_frustrated_checks(toy(), PauliOperator::parse("II"), s), (std::vector<size_t>{1}));
    EXPECT_TRUE(find_frustrated_checks(toy(), PauliOperator::parse("XI"), s).empty());
    EXPECT_EQ(find_frustrated_checks(toy(), PauliOperator::parse("ZI"), s), (std::vector<size_t>{0, 1}));
}

TEST(heuristics, collision_targets) {
    auto both = collision_targets(toy(), {0, 1});
    ASSERT_TRUE(both.has_value());
    EXPECT_EQ(both->check_a, 0u);
    EXPECT_EQ(both->check_b, 1u);
    EXPECT_EQ(both->shared_qubits, (std::vector<size_t>{0, 1}));
    EXPECT_FALSE(collision_targets(toy(), {1}).has_value());
    auto disjoint = StabilizerCode::build({PauliOperator::parse("ZZII"), PauliOperator::parse("IIZZ")});
    EXPECT_FALSE(collision_targets(disjoint, {0, 1}).has_value());
}

TEST(heuristics, freezing_breaks_toy_symmetry) {
    ChannelPrior prior = ChannelPrior::depolarizing(2, 0.1);
    BeliefPropagation bp(toy(), prior, Syndrome::parse("+-"));
    bp.set_working_prior(1, normalize_with_floor({1, 0, 0, 0}));
    for (const auto& m : {bp.state().qubit_to_check[1], bp.state().qubit_to_check[3]}) {
        EXPECT_NEAR(m[0], 1.0, 1e-11);
    }
    bp.iterate();
    EXPECT_NEAR(bp.beliefs()[0][1], 1.0, 1e-9);
    EXPECT_NEAR(bp.beliefs()[1][0], 1.0, 1e-9);
    EXPECT_EQ(bp.decision().str(), "XI");
    EXPECT_TRUE(bp.satisfied());
    bp.restore_prior(1);
    EXPECT_EQ(bp.working_prior(1), prior[1]);
}

TEST(heuristics, zero_delta_perturbation_is_a_no_op) {
    ChannelPrior prior = ChannelPrior::depolarizing(2, 0.1);
    BeliefPropagation bp(toy(), prior, Syndrome::parse("+-"));
    Rng rng(1);
    auto events = perturb_step(bp, {0, 1}, 0.0, rng);
    ASSERT_EQ(events.size(), 2u);
    EXPECT_EQ(bp.working_prior(0), prior[0]);
    EXPECT_EQ(bp.working_prior(1), prior[1]);
}

TEST(heuristics, perturbation_lowers_identity_weight) {
    ChannelPrior prior = ChannelPrior::depolarizing(2, 0.1);
    BeliefPropagation bp(toy(), prior, Syndrome::parse("+-"));
    Rng rng(2);
    auto event = perturb_qubits(bp, {0}, {1}, 0.5, rng);
    ASSERT_EQ(event.deltas.size(), 1u);
    for (double d : event.deltas[0]) {
        EXPECT_GE(d, 0.0);
        EXPECT_LE(d, 0.5);
    }
    EXPECT_LT(bp.working_prior(0)[0], prior[0][0]);
    EXPECT_EQ(bp.working_prior(1), prior[1]);
}

TEST(heuristics, toy_freeze_mode) {
    DecodeConfig config;
    config.heuristic = Heuristic::kFreeze;
    auto out = decode_with_heuristics(toy(), ChannelPrior::depolarizing(2, 0.1), Syndrome::parse("+-"), config);
    EXPECT_TRUE(out.result.converged);
    EXPECT_LE(out.result.iterations_used, config.t_pert + 1);
    EXPECT_TRUE(valid_toy_recovery(out.result.correction)) << out.result.correction.str();
    ASSERT_EQ(out.events.size(), 1u);
    EXPECT_EQ(out.events[0].kind, PerturbationEvent::Kind::kFreeze);
}

TEST(heuristics, toy_success_rates) {
    auto prior = ChannelPrior::depolarizing(2, 0.1);
    auto s = Syndrome::parse("+-");
    for (Heuristic h : {Heuristic::kFreeze, Heuristic::kPerturb, Heuristic::kCollisionFreeze,
                        Heuristic::kCollisionPerturb}) {
        DecodeConfig config;
        config.heuristic = h;
        config.delta = 1.0;
        size_t ok = 0;
        for (uint64_t seed = 0; seed < 1000; seed++) {
            config.seed = seed;
            auto out = decode_with_heuristics(toy(), prior, s, config);
            ok += out.result.converged && valid_toy_recovery(out.result.correction);
        }
        EXPECT_GE(ok, 990u) << heuristic_name(h);
    }
}

TEST(heuristics, none_matches_plain_decode) {
    auto code = generate_bicycle(BicycleSpec{60, 30, 6, 3}).code;
    auto prior = ChannelPrior::depolarizing(60, 0.06);
    Rng rng(4);
    DecodeConfig config;
    for (int t = 0; t < 1000; t++) {
        PauliOperator e(60);
        for (size_t q = 0; q < 60; q++) {
            if (uniform01(rng) < 0.06) {
                e.set(q, static_cast<Pauli>(1 + uniform_index(rng, 3)));
            }
        }
        auto s = code.syndrome(e);
        config.seed = rng();
        auto a = decode(code, prior, s, config);
        auto b = decode_with_heuristics(code, prior, s, config);
        ASSERT_TRUE(b.events.empty());
        ASSERT_EQ(a.correction, b.result.correction);
        ASSERT_EQ(a.iterations_used, b.result.iterations_used);
        ASSERT_EQ(a.final_beliefs, b.result.final_beliefs);
    }
}

TEST(heuristics, invariants_on_bicycle_code) {
    auto code = generate_bicycle(BicycleSpec{80, 40, 8, 6}).code;
    auto prior = ChannelPrior::depolarizing(80, 0.09);
    Rng rng(7);
    size_t events_seen = 0;
    for (Heuristic h : {Heuristic::kFreeze, Heuristic::kPerturb, Heuristic::kCollisionFreeze,
                        Heuristic::kCollisionPerturb}) {
        DecodeConfig config;
        config.heuristic = h;
        config.max_iterations = 40;
        for (int t = 0; t < 60; t++) {
            PauliOperator e(80);
            for (size_t q = 0; q < 80; q++) {
                if (uniform01(rng) < 0.09) {
                    e.set(q, static_cast<Pauli>(1 + uniform_index(rng, 3)));
                }
            }
            auto s = code.syndrome(e);
            config.seed = rng();
            auto out = decode_with_heuristics(code, prior, s, config);
            ASSERT_LE(out.result.iterations_used, config.max_iterations);
            if (out.result.converged) {
                ASSERT_EQ(code.syndrome(out.result.correction), s);
            }
            for (const auto& ev : out.events) {
                events_seen++;
                auto allowed = neighbours(code, ev.trigger_checks);
                for (size_t q : ev.target_qubits) {
                    ASSERT_TRUE(allowed.count(q)) << ev.str();
                }
                ASSERT_EQ(ev.kind == PerturbationEvent::Kind::kPerturb, ev.deltas.size() == ev.target_qubits.size());
                for (const auto& d : ev.deltas) {
                    for (double x : d) {
                        ASSERT_GE(x, 0.0);
                        ASSERT_LE(x, config.delta);
                    }
                }
            }
            // Replaying the same seed gives the same log and result.
            auto again = decode_with_heuristics(code, prior, s, config);
            ASSERT_EQ(again.events, out.events);
            ASSERT_EQ(again.result.correction, out.result.correction);
        }
    }
    EXPECT_GT(events_seen, 0u);
}

TEST(heuristics, freeze_scheduler_cycles_through_candidates) {
    // A single check on three qubits with a syndrome no single-qubit freeze can
    // resolve by itself: the scheduler must walk all candidates, then give up.
    auto code = StabilizerCode::build({PauliOperator::parse("ZZZ")});
    auto prior = ChannelPrior::depolarizing(3, 0.1);
    BeliefPropagation bp(code, prior, Syndrome::parse("-"));
    FreezeScheduler sched;
    Rng rng(3);
    std::set<size_t> tried;
    for (int i = 0; i < 3; i++) {
        auto ev = sched.step(bp, {0}, std::nullopt, rng);
        ASSERT_TRUE(ev.has_value());
        ASSERT_EQ(ev->target_qubits.size(), 1u);
        tried.insert(ev->target_qubits[0]);
        EXPECT_EQ(sched.frozen_qubits().size(), 1u);
        EXPECT_EQ(ev->restored_qubits.size(), i == 0 ? 0u : 1u);
    }
    EXPECT_EQ(tried.size(), 3u);
    EXPECT_FALSE(sched.step(bp, {0}, std::nullopt, rng).has_value());
    EXPECT_TRUE(sched.frozen_qubits().empty());
    for (size_t q = 0; q < 3; q++) {
        EXPECT_EQ(bp.working_prior(q), prior[q]);
    }
}

TEST(heuristics, event_record_format) {
    PerturbationEvent ev;
    ev.kind = PerturbationEvent::Kind::kFreeze;
    ev.iteration = 6;
    ev.trigger_checks = {1};
    ev.target_qubits = {0};
    EXPECT_EQ(ev.str(), "kind=freeze iter=6 trigger=1 qubits=0 deltas= restored=");
}
