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

#ifndef QBP_TANNER_ANALYSIS_H
#define QBP_TANNER_ANALYSIS_H

#include <string>
#include <string_view>
#include <vector>

#include "qbp/stabilizer_code.h"

namespace qbp {

struct FourLoop {
    size_t check_a;
    size_t check_b;
    std::vector<size_t> shared_qubits;
};

/// Every unordered check pair sharing at least two qubits.
std::vector<FourLoop> four_loop_census(const StabilizerCode& code);

/// Edge-perspective degree distribution. coefficients[i] is the fraction of
/// edges attached to a node of degree i, i.e. the coefficient of x^(i-1).
struct DegreePolynomial {
    std::vector<double> coefficients;

    double operator()(double x) const;
    /// Integral over [0, 1], computed termwise as sum_i coefficients[i] / i.
    double integral() const;
};

struct DegreeDistribution {
    DegreePolynomial lambda;  // qubit side
    DegreePolynomial rho;     // check side
    std::vector<std::string> warnings;
};

DegreeDistribution degree_distribution(const StabilizerCode& code);

/// R = 1 - int(rho) / int(lambda). Throws std::invalid_argument unless both
/// polynomials evaluate to 1 at x = 1 within 1e-12.
double design_rate(const DegreePolynomial& lambda, const DegreePolynomial& rho);

/// Checks delta * lambda(1 - rho(1 - x)) < x on `grid` uniformly spaced
/// interior points of (0, delta). Requires 0 < delta < 1 and grid >= 100.
bool bec_threshold_check(const DegreePolynomial& lambda, const DegreePolynomial& rho, double delta, size_t grid);

/// Decorated Tanner graph in DOT. Qubit nodes are q0..q{n-1}, check nodes
/// c0..c{m-1}, and each edge carries its Pauli label.
std::string export_tanner_dot(const StabilizerCode& code);

/// Reads back the edge list written by export_tanner_dot.
struct ParsedTanner {
    size_t num_qubits = 0;
    size_t num_checks = 0;
    std::vector<TannerEdge> edges;
};
ParsedTanner parse_tanner_dot(std::string_view dot);

}  // namespace qbp

#endif  // QBP_TANNER_ANALYSIS_H
