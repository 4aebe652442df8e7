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

#ifndef QBP_SIMULATION_H
#define QBP_SIMULATION_H

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qbp/bp.h"
#include "qbp/heuristics.h"
#include "qbp/rng.h"

namespace qbp {

inline constexpr const char* kVersion = "0.1.0";

/// Independent per-qubit draw from the prior.
PauliOperator sample_error(const ChannelPrior& prior, Rng& rng);

enum class TrialClass { kSuccess, kDetected, kLogical };

const char* trial_class_name(TrialClass c);

struct TrialOutcome {
    TrialClass classification = TrialClass::kSuccess;
    bool converged = false;
    size_t iterations_used = 0;
    size_t perturbations = 0;
    size_t error_weight = 0;
};

/// Decodes a given error and classifies the residual E * E_bp: a non-trivial
/// syndrome is a detected failure, a stabilizer is a success, anything else
/// in the normalizer is a logical failure.
TrialOutcome run_trial_with_error(const StabilizerCode& code, const ChannelPrior& prior, const DecodeConfig& config,
                                  const PauliOperator& error);

/// Samples the error from the prior, then as above. The decoder seed in
/// `config` is replaced by one drawn from `rng`.
TrialOutcome run_trial(const StabilizerCode& code, const ChannelPrior& prior, DecodeConfig config, Rng& rng);

/// Wilson score interval for k successes out of n at the given z.
std::pair<double, double> wilson_interval(size_t k, size_t n, double z = 1.959963984540054);

struct SimConfig {
    std::vector<double> epsilons;
    size_t trials = 1000;
    DecodeConfig decode;
    uint64_t master_seed = 0;
    /// 0 picks std::thread::hardware_concurrency().
    size_t threads = 0;
    /// Stop a point once this many failures are reached; 0 disables.
    size_t target_failures = 0;
};

struct SimPoint {
    double epsilon = 0;
    size_t trials = 0;
    size_t failures = 0;
    size_t detected = 0;
    size_t logical = 0;
    double bler = 0;
    double ci_low = 0;
    double ci_high = 0;
    double mean_iterations = 0;
    bool stopped_early = false;
};

struct SimStats {
    std::vector<SimPoint> points;
};

/// Depolarizing sweep. Trial t of point i uses the RNG stream
/// derive_seed(master_seed, {i, t}), and early stopping scans trials in index
/// order, so the result is identical for any thread count.
SimStats run_simulation(const StabilizerCode& code, const SimConfig& config);

/// Config echo lines shared by the CSV and JSON writers.
std::vector<std::string> describe_config(const SimConfig& config);

/// CSV with columns epsilon,trials,failures,detected,logical,bler,ci_low,
/// ci_high,mean_iterations, preceded by '#' comment lines.
void write_csv(std::ostream& out, const SimStats& stats, const std::vector<std::string>& header);

/// JSON document with version, config echo, code fingerprint and points.
std::string to_json(const SimStats& stats, const SimConfig& config, const StabilizerCode& code,
                    const std::string& code_source);

}  // namespace qbp

#endif  // QBP_SIMULATION_H
