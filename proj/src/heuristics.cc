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

#include <algorithm>
#include <sstream>

namespace qbp {

namespace {

template <typename T>
void join(std::ostream& out, const std::vector<T>& values) {
    for (size_t i = 0; i < values.size(); i++) {
        out << (i ? "," : "") << values[i];
    }
}

std::vector<size_t> check_qubits(const StabilizerCode& code, size_t c) {
    std::vector<size_t> out;
    for (uint32_t e : code.check_edges(c)) {
        out.push_back(code.edges()[e].qubit);
    }
    return out;
}

void shuffle(std::vector<size_t>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; i--) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

const Dist4 kFrozenPrior = normalize_with_floor({1, 0, 0, 0});

}  // namespace

std::string PerturbationEvent::str() const {
    std::ostringstream out;
    out.precision(17);
    out << "kind=" << (kind == Kind::kFreeze ? "freeze" : "perturb") << " iter=" << iteration << " trigger=";
    join(out, trigger_checks);
    out << " qubits=";
    join(out, target_qubits);
    out << " deltas=";
    for (size_t i = 0; i < deltas.size(); i++) {
        out << (i ? ";" : "") << deltas[i][0] << "," << deltas[i][1] << "," << deltas[i][2];
    }
    out << " restored=";
    join(out, restored_qubits);
    return out.str();
}

std::vector<size_t> find_frustrated_checks(const StabilizerCode& code, const PauliOperator& decision,
                                           const Syndrome& s) {
    Syndrome actual = code.syndrome(decision);
    if (s.size() != actual.size()) {
        throw std::invalid_argument("syndrome length does not match check count");
    }
    std::vector<size_t> out;
    for (size_t c = 0; c < s.size(); c++) {
        if (actual[c] != s[c]) {
            out.push_back(c);
        }
    }
    return out;
}

std::optional<CollisionTarget> collision_targets(const StabilizerCode& code, const std::vector<size_t>& frustrated) {
    std::vector<std::vector<size_t>> supports;
    supports.reserve(frustrated.size());
    for (size_t c : frustrated) {
        supports.push_back(check_qubits(code, c));
    }
    for (size_t i = 0; i < frustrated.size(); i++) {
        for (size_t j = i + 1; j < frustrated.size(); j++) {
            std::vector<size_t> shared;
            std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(), supports[j].end(),
                                  std::back_inserter(shared));
            if (!shared.empty()) {
                return CollisionTarget{frustrated[i], frustrated[j], std::move(shared)};
            }
        }
    }
    return std::nullopt;
}

PerturbationEvent perturb_qubits(BeliefPropagation& bp, const std::vector<size_t>& qubits,
                                 std::vector<size_t> trigger, double delta, Rng& rng) {
    PerturbationEvent event;
    event.kind = PerturbationEvent::Kind::kPerturb;
    event.iteration = bp.iterations();
    event.trigger_checks = std::move(trigger);
    event.target_qubits = qubits;
    for (size_t q : qubits) {
        std::array<double, 3> d;
        for (auto& x : d) {
            x = delta * uniform01(rng);
        }
        Dist4 p = bp.working_prior(q);
        p[1] *= 1 + d[0];
        p[2] *= 1 + d[1];
        p[3] *= 1 + d[2];
        double s = p[0] + p[1] + p[2] + p[3];
        for (auto& x : p) {
            x /= s;
        }
        bp.set_working_prior(q, p);
        event.deltas.push_back(d);
    }
    return event;
}

std::vector<PerturbationEvent> perturb_step(BeliefPropagation& bp, const std::vector<size_t>& frustrated,
                                            double delta, Rng& rng) {
    std::vector<PerturbationEvent> events;
    for (size_t c : frustrated) {
        events.push_back(perturb_qubits(bp, check_qubits(bp.code(), c), {c}, delta, rng));
    }
    return events;
}

std::optional<PerturbationEvent> FreezeScheduler::step(BeliefPropagation& bp, const std::vector<size_t>& frustrated,
                                                       const std::optional<CollisionTarget>& collision, Rng& rng) {
    PerturbationEvent event;
    event.kind = PerturbationEvent::Kind::kFreeze;
    event.iteration = bp.iterations();

    if (active_) {
        bool unresolved = std::any_of(trigger_.begin(), trigger_.end(), [&](size_t c) {
            return std::binary_search(frustrated.begin(), frustrated.end(), c);
        });
        if (unresolved) {
            size_t previous = frozen_.back();
            frozen_.pop_back();
            bp.restore_prior(previous);
            event.restored_qubits.push_back(previous);
            if (next_candidate_ == candidates_.size()) {
                for (size_t q : frozen_) {
                    bp.restore_prior(q);
                }
                frozen_.clear();
                active_ = false;
                return std::nullopt;
            }
            size_t q = candidates_[next_candidate_++];
            bp.set_working_prior(q, kFrozenPrior);
            frozen_.push_back(q);
            event.trigger_checks = trigger_;
            event.target_qubits = {q};
            return event;
        }
        // The trigger is satisfied: keep its freeze and look for a new one.
        active_ = false;
    }

    if (collision) {
        trigger_ = {collision->check_a, collision->check_b};
        candidates_ = collision->shared_qubits;
    } else {
        trigger_ = {frustrated.front()};
        candidates_ = check_qubits(bp.code(), frustrated.front());
    }
    // Never re-freeze a qubit that is already frozen by an earlier trigger.
    std::erase_if(candidates_, [&](size_t q) { return std::find(frozen_.begin(), frozen_.end(), q) != frozen_.end(); });
    if (candidates_.empty()) {
        for (size_t q : frozen_) {
            bp.restore_prior(q);
        }
        frozen_.clear();
        return std::nullopt;
    }
    shuffle(candidates_, rng);
    size_t q = candidates_[0];
    next_candidate_ = 1;
    active_ = true;
    bp.set_working_prior(q, kFrozenPrior);
    frozen_.push_back(q);
    event.trigger_checks = trigger_;
    event.target_qubits = {q};
    return event;
}

HeuristicDecodeResult decode_with_heuristics(const StabilizerCode& code, const ChannelPrior& prior,
                                             const Syndrome& s, const DecodeConfig& config,
                                             const BeliefObserver& observer) {
    config.validate();
    HeuristicDecodeResult out;
    BeliefPropagation bp(code, prior, s);
    Rng rng(config.seed);
    FreezeScheduler freezer;
    Heuristic mode = config.heuristic;
    size_t since_intervention = 0;

    while (bp.iterations() < config.max_iterations) {
        bp.iterate();
        if (observer) {
            observer(bp.iterations(), bp.beliefs());
        }
        if (bp.satisfied()) {
            break;
        }
        if (mode == Heuristic::kNone || ++since_intervention < config.t_pert ||
            bp.iterations() == config.max_iterations) {
            continue;
        }
        since_intervention = 0;

        auto frustrated = find_frustrated_checks(code, bp.decision(), s);
        bool collision_mode = mode == Heuristic::kCollisionFreeze || mode == Heuristic::kCollisionPerturb;
        std::optional<CollisionTarget> collision;
        if (collision_mode) {
            collision = collision_targets(code, frustrated);
        }

        if (mode == Heuristic::kFreeze || mode == Heuristic::kCollisionFreeze) {
            auto event = freezer.step(bp, frustrated, collision, rng);
            if (event) {
                out.events.push_back(std::move(*event));
                continue;
            }
            mode = mode == Heuristic::kFreeze ? Heuristic::kPerturb : Heuristic::kCollisionPerturb;
        }

        if (collision) {
            out.events.push_back(perturb_qubits(bp, collision->shared_qubits, {collision->check_a, collision->check_b},
                                                config.delta, rng));
        } else {
            for (auto& e : perturb_step(bp, frustrated, config.delta, rng)) {
                out.events.push_back(std::move(e));
            }
        }
    }
    out.result = bp.result();
    return out;
}

}  // namespace qbp
