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

#include <cmath>
#include <stdexcept>

namespace qbp {

namespace {

constexpr Dist4 kUniform = {0.25, 0.25, 0.25, 0.25};

Dist4 hadamard(const Dist4& a, const Dist4& b) { return {a[0] * b[0], a[1] * b[1], a[2] * b[2], a[3] * b[3]}; }

// Rescale without flooring; only used for running products whose scale is
// irrelevant.
Dist4 rescale(const Dist4& v) {
    double s = v[0] + v[1] + v[2] + v[3];
    return {v[0] / s, v[1] / s, v[2] / s, v[3] / s};
}

// Running products of the incoming messages are kept normalised at every step
// so that high-degree qubits cannot underflow.
void leave_one_out(const Dist4& prior, const std::vector<const Dist4*>& inputs, std::vector<Dist4>& out,
                   std::vector<Dist4>& prefix) {
    size_t k = inputs.size();
    prefix.resize(k + 1);
    out.resize(k);
    prefix[0] = prior;
    for (size_t i = 0; i < k; i++) {
        prefix[i + 1] = rescale(hadamard(prefix[i], *inputs[i]));
    }
    Dist4 suffix = {1, 1, 1, 1};
    for (size_t i = k; i-- > 0;) {
        out[i] = normalize_with_floor(hadamard(prefix[i], suffix));
        suffix = rescale(hadamard(suffix, *inputs[i]));
    }
}

}  // namespace

Dist4 normalize_with_floor(Dist4 v) {
    double s = v[0] + v[1] + v[2] + v[3];
    if (!(s > 0) || !std::isfinite(s)) {
        return kUniform;
    }
    double t = 0;
    for (auto& x : v) {
        x = std::max(x / s, kProbabilityFloor);
        t += x;
    }
    for (auto& x : v) {
        x /= t;
    }
    return v;
}

ChannelPrior::ChannelPrior(std::vector<Dist4> per_qubit) : per_qubit_(std::move(per_qubit)) {
    for (size_t q = 0; q < per_qubit_.size(); q++) {
        const auto& p = per_qubit_[q];
        double s = 0;
        for (double x : p) {
            if (!(x >= 0)) {
                throw std::invalid_argument("prior of qubit " + std::to_string(q) + " has a negative entry");
            }
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-12) {
            throw std::invalid_argument("prior of qubit " + std::to_string(q) + " does not sum to 1");
        }
    }
}

ChannelPrior ChannelPrior::depolarizing(size_t num_qubits, double eps) {
    if (!(eps >= 0 && eps <= 1)) {
        throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
    }
    return ChannelPrior(std::vector<Dist4>(num_qubits, Dist4{1 - eps, eps / 3, eps / 3, eps / 3}));
}

MessageState init_messages(const StabilizerCode& code, const ChannelPrior& prior) {
    if (prior.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument("prior has " + std::to_string(prior.num_qubits()) + " qubits, code has " +
                                    std::to_string(code.num_qubits()));
    }
    MessageState state;
    state.working_prior = prior.per_qubit();
    state.qubit_to_check.resize(code.edges().size());
    state.check_to_qubit.assign(code.edges().size(), kUniform);
    for (size_t e = 0; e < code.edges().size(); e++) {
        state.qubit_to_check[e] = normalize_with_floor(state.working_prior[code.edges()[e].qubit]);
    }
    return state;
}

void check_update(MessageState& state, const StabilizerCode& code, const Syndrome& s) {
    const auto& edges = code.edges();
    std::vector<double> diff;
    std::vector<double> prefix;
    for (size_t c = 0; c < code.num_checks(); c++) {
        auto ids = code.check_edges(c);
        size_t d = ids.size();
        diff.resize(d);
        for (size_t i = 0; i < d; i++) {
            const Dist4& mu = state.qubit_to_check[ids[i]];
            double signed_mass = 0;
            for (Pauli p : kAllPaulis) {
                signed_mass += commute_single(p, edges[ids[i]].label) * mu[static_cast<int>(p)];
            }
            diff[i] = signed_mass;
        }
        prefix.resize(d + 1);
        prefix[0] = 1;
        for (size_t i = 0; i < d; i++) {
            prefix[i + 1] = prefix[i] * diff[i];
        }
        double suffix = 1;
        double sc = s[c];
        for (size_t i = d; i-- > 0;) {
            // Expected sign of the other neighbours' combined commutation.
            double others = prefix[i] * suffix;
            double p_commute = 0.5 * (1 + sc * others);
            double p_anti = 0.5 * (1 - sc * others);
            Pauli label = edges[ids[i]].label;
            Dist4 out;
            for (Pauli p : kAllPaulis) {
                out[static_cast<int>(p)] = commute_single(p, label) > 0 ? p_commute : p_anti;
            }
            state.check_to_qubit[ids[i]] = normalize_with_floor(out);
            suffix *= diff[i];
        }
    }
}

void qubit_update_one(MessageState& state, const StabilizerCode& code, size_t q) {
    auto ids = code.qubit_edges(q);
    std::vector<const Dist4*> inputs;
    inputs.reserve(ids.size());
    for (uint32_t e : ids) {
        inputs.push_back(&state.check_to_qubit[e]);
    }
    std::vector<Dist4> out;
    std::vector<Dist4> prefix;
    leave_one_out(state.working_prior[q], inputs, out, prefix);
    for (size_t i = 0; i < ids.size(); i++) {
        state.qubit_to_check[ids[i]] = out[i];
    }
}

void qubit_update(MessageState& state, const StabilizerCode& code) {
    std::vector<const Dist4*> inputs;
    std::vector<Dist4> out;
    std::vector<Dist4> prefix;
    for (size_t q = 0; q < code.num_qubits(); q++) {
        auto ids = code.qubit_edges(q);
        inputs.clear();
        for (uint32_t e : ids) {
            inputs.push_back(&state.check_to_qubit[e]);
        }
        leave_one_out(state.working_prior[q], inputs, out, prefix);
        for (size_t i = 0; i < ids.size(); i++) {
            state.qubit_to_check[ids[i]] = out[i];
        }
    }
}

std::vector<Dist4> compute_beliefs(const MessageState& state, const StabilizerCode& code) {
    std::vector<Dist4> beliefs(code.num_qubits());
    for (size_t q = 0; q < code.num_qubits(); q++) {
        Dist4 b = state.working_prior[q];
        for (uint32_t e : code.qubit_edges(q)) {
            b = rescale(hadamard(b, state.check_to_qubit[e]));
        }
        beliefs[q] = rescale(b);
    }
    return beliefs;
}

PauliOperator hard_decision(const std::vector<Dist4>& beliefs) {
    PauliOperator out(beliefs.size());
    for (size_t q = 0; q < beliefs.size(); q++) {
        int best = 0;
        for (int p = 1; p < 4; p++) {
            if (beliefs[q][p] > beliefs[q][best]) {
                best = p;
            }
        }
        out.set(q, static_cast<Pauli>(best));
    }
    return out;
}

const char* heuristic_name(Heuristic h) {
    switch (h) {
        case Heuristic::kNone:
            return "none";
        case Heuristic::kFreeze:
            return "freeze";
        case Heuristic::kPerturb:
            return "perturb";
        case Heuristic::kCollisionFreeze:
            return "collision-freeze";
        case Heuristic::kCollisionPerturb:
            return "collision-perturb";
    }
    return "?";
}

Heuristic parse_heuristic(std::string_view name) {
    std::string key(name);
    for (auto& ch : key) {
        if (ch == '_') {
            ch = '-';
        }
    }
    for (Heuristic h : {Heuristic::kNone, Heuristic::kFreeze, Heuristic::kPerturb, Heuristic::kCollisionFreeze,
                        Heuristic::kCollisionPerturb}) {
        if (key == heuristic_name(h)) {
            return h;
        }
    }
    throw std::invalid_argument("unknown heuristic '" + std::string(name) + "'");
}

void DecodeConfig::validate() const {
    if (max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be at least 1");
    }
    if (t_pert < 1 || t_pert > max_iterations) {
        throw std::invalid_argument("t_pert must lie in [1, max_iterations]");
    }
    if (!(delta >= 0)) {
        throw std::invalid_argument("delta must be non-negative");
    }
}

BeliefPropagation::BeliefPropagation(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& syndrome)
    : code_(code), prior_(prior), syndrome_(syndrome), state_(init_messages(code, prior)) {
    if (syndrome.size() != code.num_checks()) {
        throw std::invalid_argument("syndrome has " + std::to_string(syndrome.size()) + " bits, code has " +
                                    std::to_string(code.num_checks()) + " checks");
    }
    beliefs_ = state_.working_prior;
    decision_ = PauliOperator(code.num_qubits());
    decision_syndrome_ = Syndrome(code.num_checks());
}

void BeliefPropagation::iterate() {
    check_update(state_, code_, syndrome_);
    qubit_update(state_, code_);
    beliefs_ = compute_beliefs(state_, code_);
    decision_ = hard_decision(beliefs_);
    decision_syndrome_ = code_.syndrome(decision_);
    iterations_++;
}

void BeliefPropagation::set_working_prior(size_t q, const Dist4& p) {
    state_.working_prior[q] = p;
    qubit_update_one(state_, code_, q);
}

DecodeResult BeliefPropagation::result() const {
    return DecodeResult{decision_, satisfied(), iterations_, beliefs_};
}

DecodeResult decode(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s,
                    const DecodeConfig& config, const BeliefObserver& observer) {
    config.validate();
    BeliefPropagation bp(code, prior, s);
    while (bp.iterations() < config.max_iterations) {
        bp.iterate();
        if (observer) {
            observer(bp.iterations(), bp.beliefs());
        }
        if (bp.satisfied()) {
            break;
        }
    }
    return bp.result();
}

}  // namespace qbp
