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

#include "qbp/tanner_analysis.h"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace qbp {

std::vector<FourLoop> four_loop_census(const StabilizerCode& code) {
    std::vector<FourLoop> loops;
    size_t m = code.num_checks();
    std::vector<std::vector<size_t>> supports(m);
    for (size_t c = 0; c < m; c++) {
        supports[c] = code.check(c).support();
    }
    for (size_t a = 0; a < m; a++) {
        for (size_t b = a + 1; b < m; b++) {
            std::vector<size_t> shared;
            std::set_intersection(supports[a].begin(), supports[a].end(), supports[b].begin(), supports[b].end(),
                                  std::back_inserter(shared));
            if (shared.size() >= 2) {
                loops.push_back(FourLoop{a, b, std::move(shared)});
            }
        }
    }
    return loops;
}

double DegreePolynomial::operator()(double x) const {
    // sum_i c_i x^(i-1), Horner from the top degree down.
    double acc = 0;
    for (size_t i = coefficients.size(); i-- > 1;) {
        acc = acc * x + coefficients[i];
    }
    return acc;
}

double DegreePolynomial::integral() const {
    double total = 0;
    for (size_t i = 1; i < coefficients.size(); i++) {
        total += coefficients[i] / static_cast<double>(i);
    }
    return total;
}

DegreeDistribution degree_distribution(const StabilizerCode& code) {
    DegreeDistribution out;
    double edges = static_cast<double>(code.edges().size());
    size_t max_q = 0;
    for (size_t q = 0; q < code.num_qubits(); q++) {
        max_q = std::max(max_q, code.qubit_degree(q));
    }
    size_t max_c = 0;
    for (size_t c = 0; c < code.num_checks(); c++) {
        max_c = std::max(max_c, code.check_degree(c));
    }
    out.lambda.coefficients.assign(max_q + 1, 0.0);
    out.rho.coefficients.assign(max_c + 1, 0.0);
    for (size_t q = 0; q < code.num_qubits(); q++) {
        size_t d = code.qubit_degree(q);
        out.lambda.coefficients[d] += static_cast<double>(d) / edges;
    }
    for (size_t c = 0; c < code.num_checks(); c++) {
        size_t d = code.check_degree(c);
        out.rho.coefficients[d] += static_cast<double>(d) / edges;
    }
    auto isolated = code.isolated_qubits();
    if (!isolated.empty()) {
        out.warnings.push_back(std::to_string(isolated.size()) + " isolated qubit(s) of degree 0, first is qubit " +
                               std::to_string(isolated.front()));
    }
    return out;
}

double design_rate(const DegreePolynomial& lambda, const DegreePolynomial& rho) {
    if (std::abs(lambda(1.0) - 1.0) > 1e-12 || std::abs(rho(1.0) - 1.0) > 1e-12) {
        throw std::invalid_argument("degree polynomials must satisfy lambda(1) = rho(1) = 1");
    }
    return 1.0 - rho.integral() / lambda.integral();
}

bool bec_threshold_check(const DegreePolynomial& lambda, const DegreePolynomial& rho, double delta, size_t grid) {
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("erasure probability must lie in (0, 1)");
    }
    if (grid < 100) {
        throw std::invalid_argument("grid must have at least 100 points");
    }
    for (size_t i = 1; i <= grid; i++) {
        double x = delta * static_cast<double>(i) / static_cast<double>(grid + 1);
        if (!(delta * lambda(1.0 - rho(1.0 - x)) < x)) {
            return false;
        }
    }
    return true;
}

std::string export_tanner_dot(const StabilizerCode& code) {
    std::ostringstream out;
    out << "graph tanner {\n";
    for (size_t q = 0; q < code.num_qubits(); q++) {
        out << "  q" << q << " [shape=circle];\n";
    }
    for (size_t c = 0; c < code.num_checks(); c++) {
        out << "  c" << c << " [shape=box];\n";
    }
    for (const auto& e : code.edges()) {
        out << "  q" << e.qubit << " -- c" << e.check << " [label=\"" << pauli_char(e.label) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

ParsedTanner parse_tanner_dot(std::string_view dot) {
    ParsedTanner out;
    std::regex node_re(R"(^\s*([qc])(\d+)\s*\[shape=\w+\];\s*$)");
    std::regex edge_re(R"re(^\s*q(\d+)\s*--\s*c(\d+)\s*\[label="([IXYZ])"\];\s*$)re");
    std::istringstream in{std::string(dot)};
    std::string line;
    while (std::getline(in, line)) {
        std::smatch match;
        if (std::regex_match(line, match, node_re)) {
            size_t idx = std::stoul(match[2]) + 1;
            if (match[1] == "q") {
                out.num_qubits = std::max(out.num_qubits, idx);
            } else {
                out.num_checks = std::max(out.num_checks, idx);
            }
        } else if (std::regex_match(line, match, edge_re)) {
            out.edges.push_back(TannerEdge{static_cast<uint32_t>(std::stoul(match[2])),
                                           static_cast<uint32_t>(std::stoul(match[1])),
                                           pauli_from_char(match[3].str()[0])});
        }
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const TannerEdge& a, const TannerEdge& b) {
        return a.check != b.check ? a.check < b.check : a.qubit < b.qubit;
    });
    return out;
}

}  // namespace qbp
