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

#ifndef QBP_BP_H
#define QBP_BP_H

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qbp/stabilizer_code.h"

namespace qbp {

/// Probability vector over (I, X, Y, Z).
using Dist4 = std::array<double, 4>;

/// Entries of every message are kept at or above this value so that no
/// hypothesis is ever ruled out permanently.
inline constexpr double kProbabilityFloor = 1e-12;

/// Scales to unit sum, clamps entries to kProbabilityFloor, rescales.
Dist4 normalize_with_floor(Dist4 v);

/// Memoryless Pauli channel: an independent distribution per qubit.
class ChannelPrior {
   public:
    /// Throws std::invalid_argument if any entry is negative or any vector does
    /// not sum to 1 within 1e-12.
    explicit ChannelPrior(std::vector<Dist4> per_qubit);

    /// p(I) = 1 - eps, p(X) = p(Y) = p(Z) = eps / 3.
    static ChannelPrior depolarizing(size_t num_qubits, double eps);

    size_t num_qubits() const { return per_qubit_.size(); }
    const Dist4& operator[](size_t q) const { return per_qubit_[q]; }
    const std::vector<Dist4>& per_qubit() const { return per_qubit_; }

   private:
    std::vector<Dist4> per_qubit_;
};

/// Messages on every Tanner edge (indexed like StabilizerCode::edges()) plus
/// the per-qubit prior actually used by the updates. Heuristics modify
/// working_prior; the channel prior itself is never touched.
struct MessageState {
    std::vector<Dist4> qubit_to_check;
    std::vector<Dist4> check_to_qubit;
    std::vector<Dist4> working_prior;
};

/// Every qubit sends its prior to each neighbouring check; check messages
/// start uniform. Throws std::invalid_argument on a qubit-count mismatch.
MessageState init_messages(const StabilizerCode& code, const ChannelPrior& prior);

/// m_{c->q}(E_q) proportional to the total weight of neighbour assignments
/// whose commutation sign with S_c, together with E_q, matches s_c.
///
/// Each incoming message only matters through its commute/anticommute split
/// against the edge label, so the sum factorises into a product of
/// (P_commute - P_anticommute) differences over the other neighbours. The
/// outgoing value then depends only on whether E_q commutes with the label.
void check_update(MessageState& state, const StabilizerCode& code, const Syndrome& s);

/// m_{q->c} = working prior times every incoming check message except c's.
void qubit_update(MessageState& state, const StabilizerCode& code);

/// Recomputes the outgoing messages of one qubit, e.g. after its working prior
/// changed.
void qubit_update_one(MessageState& state, const StabilizerCode& code, size_t q);

std::vector<Dist4> compute_beliefs(const MessageState& state, const StabilizerCode& code);

/// Per-qubit argmax; ties resolve to the earliest of I, X, Y, Z.
PauliOperator hard_decision(const std::vector<Dist4>& beliefs);

enum class Heuristic { kNone, kFreeze, kPerturb, kCollisionFreeze, kCollisionPerturb };

const char* heuristic_name(Heuristic h);
/// Accepts both "collision_freeze" and "collision-freeze" spellings.
Heuristic parse_heuristic(std::string_view name);

struct DecodeConfig {
    size_t max_iterations = 90;
    size_t t_pert = 6;
    double delta = 0.1;
    Heuristic heuristic = Heuristic::kNone;
    uint64_t seed = 0;

    /// Throws std::invalid_argument unless max_iterations >= 1,
    /// 1 <= t_pert <= max_iterations and delta >= 0.
    void validate() const;
};

struct DecodeResult {
    PauliOperator correction;
    /// True iff syndrome(correction) equals the input syndrome.
    bool converged = false;
    size_t iterations_used = 0;
    std::vector<Dist4> final_beliefs;
};

/// Called after every iteration with the 1-based iteration number.
using BeliefObserver = std::function<void(size_t iteration, const std::vector<Dist4>& beliefs)>;

/// Flooding-schedule BP run with a fixed prior. Owns its MessageState; one
/// instance per decoding task.
class BeliefPropagation {
   public:
    BeliefPropagation(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& syndrome);

    /// One iteration: all checks, then all qubits, then beliefs and the hard
    /// decision.
    void iterate();

    size_t iterations() const { return iterations_; }
    const std::vector<Dist4>& beliefs() const { return beliefs_; }
    const PauliOperator& decision() const { return decision_; }
    const Syndrome& decision_syndrome() const { return decision_syndrome_; }
    /// Halting condition: the hard decision reproduces the syndrome.
    bool satisfied() const { return iterations_ > 0 && decision_syndrome_ == syndrome_; }

    const StabilizerCode& code() const { return code_; }
    const ChannelPrior& channel_prior() const { return prior_; }
    const Syndrome& syndrome() const { return syndrome_; }
    const MessageState& state() const { return state_; }

    /// Replaces a qubit's working prior and refreshes its outgoing messages.
    void set_working_prior(size_t q, const Dist4& p);
    const Dist4& working_prior(size_t q) const { return state_.working_prior[q]; }
    void restore_prior(size_t q) { set_working_prior(q, prior_[q]); }

    DecodeResult result() const;

   private:
    const StabilizerCode& code_;
    const ChannelPrior& prior_;
    Syndrome syndrome_;
    MessageState state_;
    std::vector<Dist4> beliefs_;
    PauliOperator decision_;
    Syndrome decision_syndrome_;
    size_t iterations_ = 0;
};

/// Plain BP: iterate until the hard decision matches the syndrome or
/// max_iterations is reached. The heuristic and seed fields are ignored.
DecodeResult decode(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s,
                    const DecodeConfig& config, const BeliefObserver& observer = {});

}  // namespace qbp

#endif  // QBP_BP_H
