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

#ifndef QBP_STABILIZER_CODE_H
#define QBP_STABILIZER_CODE_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbp/gf2.h"
#include "qbp/pauli.h"

namespace qbp {

/// Measurement outcome of every check: +1 when the error commutes with the
/// check, -1 when it anticommutes.
class Syndrome {
   public:
    Syndrome() = default;
    explicit Syndrome(size_t num_checks) : signs_(num_checks, +1) {}
    explicit Syndrome(std::vector<int8_t> signs);

    /// Parses a string over {+, -}.
    static Syndrome parse(std::string_view text);

    size_t size() const { return signs_.size(); }
    int operator[](size_t c) const { return signs_[c]; }
    bool flipped(size_t c) const { return signs_[c] < 0; }
    void set(size_t c, int sign) { signs_[c] = sign < 0 ? -1 : +1; }
    bool is_trivial() const;
    size_t num_flipped() const;
    const std::vector<int8_t>& signs() const { return signs_; }

    /// Component-wise product.
    Syndrome operator*(const Syndrome& other) const;
    bool operator==(const Syndrome& other) const = default;

    std::string str() const;

   private:
    std::vector<int8_t> signs_;
};

/// One edge of the decorated Tanner graph. The label is the check's factor
/// on the qubit and is never I.
struct TannerEdge {
    uint32_t check;
    uint32_t qubit;
    Pauli label;
};

enum class ResidualClass { kStabilizer, kLogical, kDetectable };

const char* residual_class_name(ResidualClass c);

/// A validated stabilizer code: m pairwise-commuting, independent checks on n
/// qubits, its decorated Tanner graph and a canonical generating set
/// {S_c, T_c, Xbar_j, Zbar_j}.
///
/// Instances are immutable after build(); the canonical generators are
/// derived once during build.
class StabilizerCode {
   public:
    /// Throws std::invalid_argument for an empty list, mixed lengths, a
    /// non-commuting pair (both indices named) or a dependent check (its index
    /// named).
    static StabilizerCode build(std::vector<PauliOperator> checks);

    size_t num_qubits() const { return n_; }
    size_t num_checks() const { return checks_.size(); }
    size_t num_logical() const { return n_ - checks_.size(); }

    const std::vector<PauliOperator>& checks() const { return checks_; }
    const PauliOperator& check(size_t c) const { return checks_[c]; }

    /// Edges sorted by (check, qubit).
    const std::vector<TannerEdge>& edges() const { return edges_; }
    /// Edge indices belonging to check c; contiguous and ascending by qubit.
    std::span<const uint32_t> check_edges(size_t c) const {
        return {check_edge_ids_.data() + check_offsets_[c], check_offsets_[c + 1] - check_offsets_[c]};
    }
    /// Edge indices touching qubit q, ascending by check.
    std::span<const uint32_t> qubit_edges(size_t q) const {
        return {qubit_edge_ids_.data() + qubit_offsets_[q], qubit_offsets_[q + 1] - qubit_offsets_[q]};
    }
    size_t check_degree(size_t c) const { return check_offsets_[c + 1] - check_offsets_[c]; }
    size_t qubit_degree(size_t q) const { return qubit_offsets_[q + 1] - qubit_offsets_[q]; }
    /// Qubits touched by no check. Allowed, but they carry no BP messages.
    std::vector<size_t> isolated_qubits() const;

    Syndrome syndrome(const PauliOperator& error) const;

    /// T_c: commute(T_c, S_c') = -1 iff c == c', pairwise commuting.
    const std::vector<PauliOperator>& pure_errors() const { return pure_errors_; }
    const std::vector<PauliOperator>& logical_x() const { return logical_x_; }
    const std::vector<PauliOperator>& logical_z() const { return logical_z_; }

    /// Product of the T_c whose syndrome bit is -1, so that
    /// syndrome(pure_error_for_syndrome(s)) == s.
    PauliOperator pure_error_for_syndrome(const Syndrome& s) const;

    /// True when the operator is a product of checks (up to phase).
    bool in_stabilizer_group(const PauliOperator& op) const;
    ResidualClass residual_class(const PauliOperator& residual) const;

    /// For an operator commuting with every check, the exponents (a_j, b_j) of
    /// its logical part Xbar_j^a_j Zbar_j^b_j packed as bit 2j = a_j and bit
    /// 2j+1 = b_j.
    uint64_t logical_coordinates(const PauliOperator& op) const;
    /// Product of logical generators selected by a packed coordinate word.
    PauliOperator logical_operator(uint64_t coordinates) const;

   private:
    StabilizerCode() = default;
    void build_tanner_graph();
    void compute_canonical_generators();

    size_t n_ = 0;
    std::vector<PauliOperator> checks_;

    std::vector<TannerEdge> edges_;
    std::vector<uint32_t> check_edge_ids_;
    std::vector<size_t> check_offsets_;
    std::vector<uint32_t> qubit_edge_ids_;
    std::vector<size_t> qubit_offsets_;

    // Echelon basis of the checks in symplectic layout, for membership tests.
    BitMatrix check_basis_;
    std::vector<size_t> check_basis_pivots_;

    std::vector<PauliOperator> pure_errors_;
    std::vector<PauliOperator> logical_x_;
    std::vector<PauliOperator> logical_z_;
};

}  // namespace qbp

#endif  // QBP_STABILIZER_CODE_H
