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

#ifndef QBP_HEURISTICS_H
#define QBP_HEURISTICS_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qbp/bp.h"
#include "qbp/rng.h"

namespace qbp {

/// One intervention on the working prior, recorded for replay.
struct PerturbationEvent {
    enum class Kind { kFreeze, kPerturb };

    Kind kind = Kind::kPerturb;
    /// Iteration after which the intervention was applied.
    size_t iteration = 0;
    /// One frustrated check, or the two checks of a colliding pair.
    std::vector<size_t> trigger_checks;
    std::vector<size_t> target_qubits;
    /// (delta_X, delta_Y, delta_Z) per target qubit; empty for freezes.
    std::vector<std::array<double, 3>> deltas;
    /// Qubits whose channel prior was restored just before a freeze.
    std::vector<size_t> restored_qubits;

    bool operator==(const PerturbationEvent& other) const = default;

    /// Line-based record: "kind=... iter=... trigger=... qubits=... deltas=... restored=...".
    std::string str() const;
};

/// Checks whose commutation with the hard decision disagrees with the
/// syndrome, ascending.
std::vector<size_t> find_frustrated_checks(const StabilizerCode& code, const PauliOperator& decision,
                                           const Syndrome& s);

struct CollisionTarget {
    size_t check_a;
    size_t check_b;
    std::vector<size_t> shared_qubits;
};

/// First pair (lexicographic) of frustrated checks that share at least one
/// qubit.
std::optional<CollisionTarget> collision_targets(const StabilizerCode& code, const std::vector<size_t>& frustrated);

/// Multiplies the X, Y, Z entries of each target's working prior by
/// (1 + delta_P) with delta_P ~ U[0, delta], then renormalises.
PerturbationEvent perturb_qubits(BeliefPropagation& bp, const std::vector<size_t>& qubits,
                                 std::vector<size_t> trigger, double delta, Rng& rng);

/// One perturbation event per frustrated check, covering all its qubits.
std::vector<PerturbationEvent> perturb_step(BeliefPropagation& bp, const std::vector<size_t>& frustrated,
                                            double delta, Rng& rng);

/// The freezing procedure. Freezes one qubit of a frustrated check (or of a
/// colliding pair's shared set) to a prior concentrated on I. If the trigger
/// is still frustrated at the next intervention, the qubit's channel prior is
/// restored and another untried qubit is frozen instead; once the trigger is
/// satisfied the freeze is kept and a new trigger is chosen.
class FreezeScheduler {
   public:
    /// Returns the freeze event, or std::nullopt when every candidate of the
    /// current trigger has been tried. In that case all frozen qubits have
    /// been restored to their channel prior.
    std::optional<PerturbationEvent> step(BeliefPropagation& bp, const std::vector<size_t>& frustrated,
                                          const std::optional<CollisionTarget>& collision, Rng& rng);

    const std::vector<size_t>& frozen_qubits() const { return frozen_; }

   private:
    bool active_ = false;
    std::vector<size_t> trigger_;
    std::vector<size_t> candidates_;
    size_t next_candidate_ = 0;
    std::vector<size_t> frozen_;  // last entry is the active trigger's qubit
};

struct HeuristicDecodeResult {
    DecodeResult result;
    std::vector<PerturbationEvent> events;
};

/// BP with symmetry-breaking interventions. Every t_pert iterations without
/// convergence (counted from the last intervention) the configured heuristic
/// is applied. Collision modes act on the shared qubits of a colliding pair
/// and fall back to the plain variant when no pair collides; an exhausted
/// freeze escalates to perturbation for the rest of the call. With
/// Heuristic::kNone this is exactly decode().
HeuristicDecodeResult decode_with_heuristics(const StabilizerCode& code, const ChannelPrior& prior,
                                             const Syndrome& s, const DecodeConfig& config,
                                             const BeliefObserver& observer = {});

}  // namespace qbp

#endif  // QBP_HEURISTICS_H
