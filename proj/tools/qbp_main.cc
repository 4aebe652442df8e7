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

// Command-line front end: generate, inspect, decode, simulate, oracle-check.
//
// Exit codes: 0 on success, 1 for usage errors, 2 for data errors (bad code
// files, mismatched syndromes, size guards, failed generation).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbp/bp.h"
#include "qbp/code_io.h"
#include "qbp/constructions.h"
#include "qbp/exact_oracle.h"
#include "qbp/heuristics.h"
#include "qbp/simulation.h"
#include "qbp/tanner_analysis.h"

using namespace qbp;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fingerprint_hex(const StabilizerCode& code) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(code_fingerprint(code)));
    return buf;
}

RowDeletion parse_deletion(const std::string& s) {
    if (s == "balanced") {
        return RowDeletion::kBalanced;
    }
    if (s == "random") {
        return RowDeletion::kRandom;
    }
    throw UsageError("--deletion must be 'balanced' or 'random'");
}

BicycleSpec parse_bicycle(const std::string& text, uint64_t seed, const std::string& deletion) {
    BicycleSpec spec;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(text);
    std::string rest;
    if (!(in >> spec.n >> c1 >> spec.m >> c2 >> spec.w) || c1 != ',' || c2 != ',' || (in >> rest)) {
        throw UsageError("--bicycle expects n,m,w");
    }
    spec.seed = seed;
    spec.deletion = parse_deletion(deletion);
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    return out;
}

// --code / --builtin / --bicycle, exactly one of them.
struct CodeSource {
    std::string file;
    std::string builtin;
    std::string bicycle;
    uint64_t code_seed = 0;
    std::string deletion = "balanced";

    void add(CLI::App* app) {
        auto* f = app->add_option("--code", file, "Code file (header 'n m', one Pauli string per line)");
        auto* b = app->add_option("--builtin", builtin, "Bundled code: two_qubit_toy or five_qubit");
        auto* y = app->add_option("--bicycle", bicycle, "Random bicycle code n,m,w");
        f->excludes(b)->excludes(y);
        b->excludes(y);
        app->add_option("--code-seed", code_seed, "Seed for --bicycle");
        app->add_option("--deletion", deletion, "Row deletion for --bicycle: balanced or random");
    }

    std::string describe() const {
        if (!file.empty()) {
            return "file:" + file;
        }
        if (!builtin.empty()) {
            return "builtin:" + builtin;
        }
        return "bicycle:" + bicycle + " seed=" + std::to_string(code_seed) + " deletion=" + deletion;
    }

    StabilizerCode load() const {
        int given = !file.empty() + !builtin.empty() + !bicycle.empty();
        if (given != 1) {
            throw UsageError("exactly one of --code, --builtin, --bicycle is required");
        }
        if (!file.empty()) {
            return read_code_file(file);
        }
        if (!builtin.empty()) {
            try {
                return builtin_code(builtin);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        return generate_bicycle(parse_bicycle(bicycle, code_seed, deletion)).code;
    }
};

struct DecodeFlags {
    std::string heuristic = "none";
    DecodeConfig config;

    void add(CLI::App* app) {
        app->add_option("--heuristic", heuristic,
                        "none, freeze, perturb, collision-freeze or collision-perturb");
        app->add_option("--max-iter", config.max_iterations, "Maximum BP iterations")->capture_default_str();
        app->add_option("--t-pert", config.t_pert, "Iterations between interventions")->capture_default_str();
        app->add_option("--delta", config.delta, "Perturbation strength")->capture_default_str();
    }

    DecodeConfig resolve() const {
        DecodeConfig c = config;
        try {
            c.heuristic = parse_heuristic(heuristic);
            c.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return c;
    }
};

std::vector<double> parse_sweep(const std::string& text) {
    double lo = 0;
    double hi = 0;
    size_t steps = 0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(text);
    if (!(in >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || steps == 0 || !(lo > 0) ||
        !(hi >= lo) || hi > 1) {
        throw UsageError("--epsilon-sweep expects lo:hi:steps with 0 < lo <= hi <= 1");
    }
    std::vector<double> out;
    for (size_t i = 0; i < steps; i++) {
        double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
        out.push_back(lo * std::pow(hi / lo, t));
    }
    return out;
}

void check_epsilon(double eps) {
    if (!(eps >= 0 && eps <= 1)) {
        throw UsageError("epsilon must lie in [0, 1]");
    }
}

// Syndrome from --syndrome, or from the injected --error.
Syndrome resolve_syndrome(const StabilizerCode& code, const std::string& syndrome, const std::string& error,
                          std::optional<PauliOperator>& injected) {
    if (syndrome.empty() == error.empty()) {
        throw UsageError("exactly one of --syndrome and --error is required");
    }
    if (!error.empty()) {
        injected = PauliOperator::parse(error);
        if (injected->num_qubits() != code.num_qubits()) {
            throw std::invalid_argument("error has " + std::to_string(injected->num_qubits()) +
                                        " qubits, code has " + std::to_string(code.num_qubits()));
        }
        return code.syndrome(*injected);
    }
    Syndrome s = Syndrome::parse(syndrome);
    if (s.size() != code.num_checks()) {
        throw std::invalid_argument("syndrome has " + std::to_string(s.size()) + " entries, code has " +
                                    std::to_string(code.num_checks()) + " checks");
    }
    return s;
}

std::vector<std::string> decode_echo(const DecodeConfig& c) {
    return {"heuristic=" + std::string(heuristic_name(c.heuristic)), "max_iterations=" + std::to_string(c.max_iterations),
            "t_pert=" + std::to_string(c.t_pert), "delta=" + fmt(c.delta), "seed=" + std::to_string(c.seed)};
}

std::string version_line() { return std::string("qbp ") + kVersion; }

// ---------------------------------------------------------------------------

struct GenerateCmd {
    std::string bicycle;
    uint64_t seed = 0;
    std::string deletion = "balanced";
    std::string out;
    std::string h_out;

    void add(CLI::App& root) {
        auto* app = root.add_subcommand("generate", "Generate a random bicycle code");
        app->add_option("--bicycle", bicycle, "n,m,w")->required();
        app->add_option("--seed", seed, "Generator seed")->capture_default_str();
        app->add_option("--deletion", deletion, "balanced or random")->capture_default_str();
        app->add_option("--out", out, "Code file to write")->required();
        app->add_option("--h-out", h_out, "Sparse H file (default <out>.H)");
        app->callback([this] { run(); });
    }

    void run() {
        BicycleSpec spec = parse_bicycle(bicycle, seed, deletion);
        BicycleCode bc = generate_bicycle(spec);
        std::string a_support;
        for (size_t i = 0; i < bc.generator.size(); i++) {
            if (bc.generator[i]) {
                a_support += (a_support.empty() ? "" : ",") + std::to_string(i);
            }
        }
        std::string deleted;
        for (size_t r : bc.deleted_rows) {
            deleted += (deleted.empty() ? "" : ",") + std::to_string(r);
        }
        std::vector<std::string> header = {
            version_line(),
            "bicycle n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m) + " w=" + std::to_string(spec.w) +
                " seed=" + std::to_string(spec.seed) + " deletion=" + deletion,
            "generator support: " + a_support,
            "deleted rows: " + deleted,
            "attempts=" + std::to_string(bc.attempts),
        };
        {
            auto f = open_output(out);
            write_code(f, bc.code, header);
        }
        std::string h_path = h_out.empty() ? out + ".H" : h_out;
        {
            auto f = open_output(h_path);
            write_sparse_matrix(f, bc.h, header);
        }
        double mean_qubit_degree = static_cast<double>(bc.code.edges().size()) / static_cast<double>(spec.n);
        std::cout << "wrote " << out << " and " << h_path << "\n"
                  << "n=" << bc.code.num_qubits() << " m=" << bc.code.num_checks() << " k=" << bc.code.num_logical()
                  << " rate=" << fmt(static_cast<double>(bc.code.num_logical()) / static_cast<double>(spec.n))
                  << " mean_qubit_degree=" << fmt(mean_qubit_degree) << " fingerprint=" << fingerprint_hex(bc.code)
                  << "\n";
    }
};

struct InspectCmd {
    CodeSource source;
    std::string dot;
    double bec = 0;

    void add(CLI::App& root) {
        auto* app = root.add_subcommand("inspect", "Report code parameters and Tanner graph statistics");
        source.add(app);
        app->add_option("--dot", dot, "Write the Tanner graph in DOT format");
        app->add_option("--bec", bec, "Also run the erasure density-evolution check at this probability");
        app->callback([this] { run(); });
    }

    static std::string poly(const DegreePolynomial& p) {
        std::string out;
        for (size_t i = 1; i < p.coefficients.size(); i++) {
            if (p.coefficients[i] != 0) {
                out += (out.empty() ? "" : " + ") + fmt(p.coefficients[i]) + " x^" + std::to_string(i - 1);
            }
        }
        return out.empty() ? "0" : out;
    }

    void run() {
        StabilizerCode code = source.load();
        size_t n = code.num_qubits();
        std::cout << version_line() << "\n"
                  << "source: " << source.describe() << "\n"
                  << "fingerprint: " << fingerprint_hex(code) << "\n"
                  << "n=" << n << " m=" << code.num_checks() << " k=" << code.num_logical()
                  << " rate=" << fmt(static_cast<double>(code.num_logical()) / static_cast<double>(n)) << "\n"
                  << "checks commute: yes\n";
        auto dd = degree_distribution(code);
        std::cout << "lambda(x) = " << poly(dd.lambda) << "\n"
                  << "rho(x) = " << poly(dd.rho) << "\n";
        try {
            std::cout << "design rate: " << fmt(design_rate(dd.lambda, dd.rho)) << "\n";
        } catch (const std::invalid_argument&) {
            std::cout << "design rate: undefined (isolated qubits)\n";
        }
        for (const auto& w : dd.warnings) {
            std::cout << "warning: " << w << "\n";
        }
        auto loops = four_loop_census(code);
        std::cout << "4-loops: " << loops.size() << " check pairs sharing two or more qubits\n";
        for (size_t i = 0; i < loops.size() && i < 10; i++) {
            std::cout << "  checks " << loops[i].check_a << "," << loops[i].check_b << " share "
                      << loops[i].shared_qubits.size() << " qubits\n";
        }
        if (bec > 0) {
            if (!(bec < 1)) {
                throw UsageError("--bec must lie in (0, 1)");
            }
            bool ok = bec_threshold_check(dd.lambda, dd.rho, bec, 1000);
            std::cout << "erasure density evolution at " << fmt(bec) << ": " << (ok ? "converges" : "stalls")
                      << "\n";
        }
        if (!dot.empty()) {
            auto f = open_output(dot);
            f << "// " << version_line() << " source=" << source.describe() << "\n" << export_tanner_dot(code);
            std::cout << "wrote " << dot << "\n";
        }
    }
};

struct DecodeCmd {
    CodeSource source;
    DecodeFlags flags;
    std::string syndrome;
    std::string error;
    double epsilon = 0.1;
    uint64_t seed = 0;
    std::string trace;

    void add(CLI::App& root) {
        auto* app = root.add_subcommand("decode", "Decode one syndrome under a depolarizing prior");
        source.add(app);
        flags.add(app);
        app->add_option("--syndrome", syndrome, "Syndrome as a string over {+,-}");
        app->add_option("--error", error, "Inject this Pauli error and decode its syndrome");
        app->add_option("--epsilon", epsilon, "Depolarizing strength of the prior")->capture_default_str();
        app->add_option("--seed", seed, "Heuristic RNG seed")->capture_default_str();
        app->add_option("--trace", trace, "Per-iteration belief CSV");
        app->callback([this] { run(); });
    }

    void run() {
        check_epsilon(epsilon);
        DecodeConfig config = flags.resolve();
        config.seed = seed;
        StabilizerCode code = source.load();
        std::optional<PauliOperator> injected;
        Syndrome s = resolve_syndrome(code, syndrome, error, injected);
        ChannelPrior prior = ChannelPrior::depolarizing(code.num_qubits(), epsilon);

        std::ofstream trace_out;
        BeliefObserver observer;
        std::vector<std::string> echo = decode_echo(config);
        echo.insert(echo.begin(), {version_line(), "source=" + source.describe(), "epsilon=" + fmt(epsilon),
                                   "syndrome=" + s.str()});
        if (!trace.empty()) {
            trace_out = open_output(trace);
            for (const auto& line : echo) {
                trace_out << "# " << line << "\n";
            }
            trace_out << "iteration,qubit,b_I,b_X,b_Y,b_Z\n";
            observer = [&](size_t iter, const std::vector<Dist4>& beliefs) {
                char buf[160];
                for (size_t q = 0; q < beliefs.size(); q++) {
                    std::snprintf(buf, sizeof(buf), "%zu,%zu,%.17g,%.17g,%.17g,%.17g\n", iter, q, beliefs[q][0],
                                  beliefs[q][1], beliefs[q][2], beliefs[q][3]);
                    trace_out << buf;
                }
            };
        }
        auto out = decode_with_heuristics(code, prior, s, config, observer);
        for (const auto& line : echo) {
            std::cout << "# " << line << "\n";
        }
        std::cout << "converged: " << (out.result.converged ? "yes" : "no") << "\n"
                  << "iterations: " << out.result.iterations_used << "\n"
                  << "correction: " << out.result.correction.str() << "\n";
        if (injected) {
            auto cls = code.residual_class(*injected * out.result.correction);
            const char* label = cls == ResidualClass::kStabilizer ? "success"
                                : cls == ResidualClass::kLogical  ? "logical"
                                                                  : "detected";
            std::cout << "outcome: " << label << "\n";
        }
        for (const auto& ev : out.events) {
            std::cout << "event " << ev.str() << "\n";
            if (trace_out.is_open()) {
                trace_out << "# event " << ev.str() << "\n";
            }
        }
    }
};

struct SimulateCmd {
    CodeSource source;
    DecodeFlags flags;
    std::vector<double> epsilons;
    std::string sweep;
    size_t trials = 1000;
    uint64_t seed = 0;
    size_t threads = 0;
    std::string out;
    std::string json;
    bool early_stop = false;
    size_t target_failures = 0;

    void add(CLI::App& root) {
        auto* app = root.add_subcommand("simulate", "Monte Carlo block error rate under depolarizing noise");
        source.add(app);
        flags.add(app);
        auto* e = app->add_option("--epsilon", epsilons, "Depolarizing strength(s)")->delimiter(',');
        auto* w = app->add_option("--epsilon-sweep", sweep, "lo:hi:steps, log-spaced");
        e->excludes(w);
        app->add_option("--trials", trials, "Trials per point")->capture_default_str();
        app->add_option("--seed", seed, "Master seed")->capture_default_str();
        app->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
        app->add_option("--out", out, "CSV output (default stdout)");
        app->add_option("--json", json, "Also write a JSON summary");
        app->add_flag("--early-stop", early_stop, "Stop a point after 100 failures");
        app->add_option("--target-failures", target_failures, "Stop a point after this many failures");
        app->callback([this] { run(); });
    }

    void run() {
        SimConfig config;
        config.epsilons = sweep.empty() ? epsilons : parse_sweep(sweep);
        if (config.epsilons.empty()) {
            throw UsageError("one of --epsilon and --epsilon-sweep is required");
        }
        for (double eps : config.epsilons) {
            check_epsilon(eps);
        }
        if (trials == 0) {
            throw UsageError("--trials must be positive");
        }
        config.trials = trials;
        config.decode = flags.resolve();
        config.master_seed = seed;
        config.threads = threads;
        config.target_failures = target_failures ? target_failures : (early_stop ? 100 : 0);
        StabilizerCode code = source.load();

        SimStats stats = run_simulation(code, config);
        std::vector<std::string> header = {version_line(), "source=" + source.describe(),
                                           "fingerprint=" + fingerprint_hex(code),
                                           "n=" + std::to_string(code.num_qubits()) +
                                               " m=" + std::to_string(code.num_checks()) +
                                               " k=" + std::to_string(code.num_logical())};
        for (const auto& line : describe_config(config)) {
            header.push_back(line);
        }
        if (out.empty()) {
            write_csv(std::cout, stats, header);
        } else {
            auto f = open_output(out);
            write_csv(f, stats, header);
        }
        if (!json.empty()) {
            auto f = open_output(json);
            f << to_json(stats, config, code, source.describe());
        }
    }
};

struct OracleCmd {
    CodeSource source;
    size_t max_iter = 90;
    std::string syndrome;
    std::string error;
    double epsilon = 0.1;
    size_t trials = 0;
    uint64_t seed = 0;
    std::string out;

    void add(CLI::App& root) {
        auto* app = root.add_subcommand("oracle-check", "Compare BP beliefs with exact marginals (n <= 12)");
        source.add(app);
        app->add_option("--max-iter", max_iter, "BP iterations")->capture_default_str();
        app->add_option("--syndrome", syndrome, "Single syndrome over {+,-}");
        app->add_option("--error", error, "Single injected error");
        app->add_option("--trials", trials, "Number of random errors drawn from the prior instead");
        app->add_option("--epsilon", epsilon, "Depolarizing strength")->capture_default_str();
        app->add_option("--seed", seed, "Seed for --trials")->capture_default_str();
        app->add_option("--out", out, "CSV output (default stdout)");
        app->callback([this] { run(); });
    }

    void run() {
        check_epsilon(epsilon);
        if (max_iter == 0) {
            throw UsageError("--max-iter must be positive");
        }
        StabilizerCode code = source.load();
        if (code.num_qubits() > kMaxEnumerationQubits) {
            throw std::invalid_argument("oracle-check enumerates 4^n operators and supports n <= " +
                                        std::to_string(kMaxEnumerationQubits) + "; code has n = " +
                                        std::to_string(code.num_qubits()));
        }
        ChannelPrior prior = ChannelPrior::depolarizing(code.num_qubits(), epsilon);
        std::vector<Syndrome> instances;
        if (trials > 0) {
            if (!syndrome.empty() || !error.empty()) {
                throw UsageError("--trials excludes --syndrome and --error");
            }
            for (size_t t = 0; t < trials; t++) {
                Rng rng(derive_seed(seed, {t}));
                instances.push_back(code.syndrome(sample_error(prior, rng)));
            }
        } else {
            std::optional<PauliOperator> injected;
            instances.push_back(resolve_syndrome(code, syndrome, error, injected));
        }

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!out.empty()) {
            file = open_output(out);
            os = &file;
        }
        *os << "# " << version_line() << "\n# source=" << source.describe() << "\n# epsilon=" << fmt(epsilon)
            << "\n# max_iterations=" << max_iter << "\n";
        *os << "instance,syndrome,qubit,pauli,bp_belief,exact_marginal,abs_diff\n";
        double worst = 0;
        DecodeConfig config;
        config.max_iterations = max_iter;
        config.t_pert = 1;
        for (size_t i = 0; i < instances.size(); i++) {
            const Syndrome& s = instances[i];
            auto exact = exact_marginals(code, prior, s);
            auto bp = decode(code, prior, s, config);
            char buf[200];
            for (size_t q = 0; q < code.num_qubits(); q++) {
                for (int k = 0; k < 4; k++) {
                    double diff = std::abs(bp.final_beliefs[q][k] - exact[q][k]);
                    worst = std::max(worst, diff);
                    std::snprintf(buf, sizeof(buf), "%zu,%s,%zu,%c,%.17g,%.17g,%.3e\n", i, s.str().c_str(), q,
                                  pauli_char(static_cast<Pauli>(k)), bp.final_beliefs[q][k], exact[q][k], diff);
                    *os << buf;
                }
            }
            if (code.num_checks() <= kMaxCosetChecks && code.num_logical() <= kMaxCosetLogicals) {
                auto table = coset_decode(code, prior, s);
                for (const auto& entry : table.entries) {
                    *os << "# instance " << i << " coset " << logical_label(entry.logical, code.num_logical())
                        << " p=" << fmt(entry.probability) << "\n";
                }
            }
        }
        *os << "# max_abs_diff=" << fmt(worst) << "\n";
        if (os != &std::cout) {
            std::cout << "max_abs_diff=" << fmt(worst) << "\n";
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Belief-propagation decoding of sparse quantum codes"};
    app.set_version_flag("--version", version_line());
    app.require_subcommand(1);
    GenerateCmd generate;
    InspectCmd inspect;
    DecodeCmd decode_cmd;
    SimulateCmd simulate;
    OracleCmd oracle;
    generate.add(app);
    inspect.add(app);
    decode_cmd.add(app);
    simulate.add(app);
    oracle.add(app);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
