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

#include "qbp/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "qbp/code_io.h"

namespace qbp {

namespace {

constexpr size_t kBatchSize = 512;

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

void run_batch(const StabilizerCode& code, const ChannelPrior& prior, const SimConfig& config, size_t point,
               size_t begin, size_t end, std::vector<TrialOutcome>& out, size_t threads) {
    std::atomic<size_t> next{begin};
    auto worker = [&]() {
        for (size_t t = next.fetch_add(1); t < end; t = next.fetch_add(1)) {
            Rng rng(derive_seed(config.master_seed, {point, t}));
            out[t - begin] = run_trial(code, prior, config.decode, rng);
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (size_t i = 0; i < threads; i++) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
}

}  // namespace

PauliOperator sample_error(const ChannelPrior& prior, Rng& rng) {
    PauliOperator e(prior.num_qubits());
    for (size_t q = 0; q < prior.num_qubits(); q++) {
        double u = uniform01(rng);
        const Dist4& p = prior[q];
        int choice = 0;
        double acc = p[0];
        while (choice < 3 && !(u < acc)) {
            choice++;
            acc += p[choice];
        }
        // Rounding can leave u just above the cumulative total; never pick a
        // zero-probability letter in that case.
        while (choice > 0 && p[choice] == 0) {
            choice--;
        }
        e.set(q, static_cast<Pauli>(choice));
    }
    return e;
}

const char* trial_class_name(TrialClass c) {
    switch (c) {
        case TrialClass::kSuccess:
            return "success";
        case TrialClass::kDetected:
            return "detected";
        case TrialClass::kLogical:
            return "logical";
    }
    return "?";
}

TrialOutcome run_trial_with_error(const StabilizerCode& code, const ChannelPrior& prior, const DecodeConfig& config,
                                  const PauliOperator& error) {
    Syndrome s = code.syndrome(error);
    auto decoded = decode_with_heuristics(code, prior, s, config);
    TrialOutcome outcome;
    outcome.converged = decoded.result.converged;
    outcome.iterations_used = decoded.result.iterations_used;
    outcome.perturbations = decoded.events.size();
    outcome.error_weight = error.weight();
    switch (code.residual_class(error * decoded.result.correction)) {
        case ResidualClass::kDetectable:
            outcome.classification = TrialClass::kDetected;
            break;
        case ResidualClass::kStabilizer:
            outcome.classification = TrialClass::kSuccess;
            break;
        case ResidualClass::kLogical:
            outcome.classification = TrialClass::kLogical;
            break;
    }
    return outcome;
}

TrialOutcome run_trial(const StabilizerCode& code, const ChannelPrior& prior, DecodeConfig config, Rng& rng) {
    PauliOperator error = sample_error(prior, rng);
    config.seed = rng();
    return run_trial_with_error(code, prior, config, error);
}

std::pair<double, double> wilson_interval(size_t k, size_t n, double z) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    double nn = static_cast<double>(n);
    double p = static_cast<double>(k) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    double lo = std::max(0.0, center - half);
    double hi = std::min(1.0, center + half);
    // Keep the point estimate inside the interval despite rounding.
    return {std::min(lo, p), std::max(hi, p)};
}

SimStats run_simulation(const StabilizerCode& code, const SimConfig& config) {
    config.decode.validate();
    size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    SimStats stats;
    for (size_t point = 0; point < config.epsilons.size(); point++) {
        double eps = config.epsilons[point];
        ChannelPrior prior = ChannelPrior::depolarizing(code.num_qubits(), eps);
        SimPoint sp;
        sp.epsilon = eps;
        size_t iterations = 0;
        std::vector<TrialOutcome> batch;
        bool stop = false;
        for (size_t begin = 0; begin < config.trials && !stop;) {
            size_t end = config.target_failures ? std::min(config.trials, begin + kBatchSize) : config.trials;
            batch.assign(end - begin, TrialOutcome{});
            run_batch(code, prior, config, point, begin, end, batch, threads);
            for (const auto& outcome : batch) {
                sp.trials++;
                iterations += outcome.iterations_used;
                if (outcome.classification == TrialClass::kDetected) {
                    sp.detected++;
                } else if (outcome.classification == TrialClass::kLogical) {
                    sp.logical++;
                }
                sp.failures = sp.detected + sp.logical;
                if (config.target_failures && sp.failures >= config.target_failures) {
                    stop = true;
                    sp.stopped_early = sp.trials < config.trials;
                    break;
                }
            }
            begin = end;
        }
        if (sp.trials) {
            sp.bler = static_cast<double>(sp.failures) / static_cast<double>(sp.trials);
            sp.mean_iterations = static_cast<double>(iterations) / static_cast<double>(sp.trials);
        }
        std::tie(sp.ci_low, sp.ci_high) = wilson_interval(sp.failures, sp.trials);
        stats.points.push_back(sp);
    }
    return stats;
}

std::vector<std::string> describe_config(const SimConfig& config) {
    std::vector<std::string> lines;
    std::string eps;
    for (size_t i = 0; i < config.epsilons.size(); i++) {
        eps += (i ? "," : "") + format_real(config.epsilons[i]);
    }
    lines.push_back("epsilons=" + eps);
    lines.push_back("trials=" + std::to_string(config.trials));
    lines.push_back("master_seed=" + std::to_string(config.master_seed));
    lines.push_back("heuristic=" + std::string(heuristic_name(config.decode.heuristic)));
    lines.push_back("max_iterations=" + std::to_string(config.decode.max_iterations));
    lines.push_back("t_pert=" + std::to_string(config.decode.t_pert));
    lines.push_back("delta=" + format_real(config.decode.delta));
    lines.push_back("target_failures=" + std::to_string(config.target_failures) +
                    (config.target_failures ? "" : " (early stop disabled)"));
    return lines;
}

void write_csv(std::ostream& out, const SimStats& stats, const std::vector<std::string>& header) {
    for (const auto& h : header) {
        out << "# " << h << "\n";
    }
    out << "epsilon,trials,failures,detected,logical,bler,ci_low,ci_high,mean_iterations\n";
    for (const auto& p : stats.points) {
        out << format_real(p.epsilon) << "," << p.trials << "," << p.failures << "," << p.detected << ","
            << p.logical << "," << format_real(p.bler) << "," << format_real(p.ci_low) << ","
            << format_real(p.ci_high) << "," << format_real(p.mean_iterations) << "\n";
    }
}

std::string to_json(const SimStats& stats, const SimConfig& config, const StabilizerCode& code,
                    const std::string& code_source) {
    char fingerprint[17];
    std::snprintf(fingerprint, sizeof(fingerprint), "%016llx",
                  static_cast<unsigned long long>(code_fingerprint(code)));
    nlohmann::ordered_json doc;
    doc["tool"] = "qbp";
    doc["version"] = kVersion;
    doc["code"] = {{"source", code_source},
                   {"n", code.num_qubits()},
                   {"m", code.num_checks()},
                   {"k", code.num_logical()},
                   {"fingerprint", fingerprint}};
    doc["config"] = {{"epsilons", config.epsilons},
                     {"trials", config.trials},
                     {"master_seed", config.master_seed},
                     {"heuristic", heuristic_name(config.decode.heuristic)},
                     {"max_iterations", config.decode.max_iterations},
                     {"t_pert", config.decode.t_pert},
                     {"delta", config.decode.delta},
                     {"target_failures", config.target_failures}};
    auto points = nlohmann::ordered_json::array();
    for (const auto& p : stats.points) {
        points.push_back({{"epsilon", p.epsilon},
                          {"trials", p.trials},
                          {"failures", p.failures},
                          {"detected", p.detected},
                          {"logical", p.logical},
                          {"bler", p.bler},
                          {"ci_low", p.ci_low},
                          {"ci_high", p.ci_high},
                          {"mean_iterations", p.mean_iterations},
                          {"stopped_early", p.stopped_early}});
    }
    doc["points"] = points;
    return doc.dump(2) + "\n";
}

}  // namespace qbp
