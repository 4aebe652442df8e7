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

#include "qbp/stabilizer_code.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbp {

namespace {

// Symplectic layout used for all elimination: the X words of an operator
// followed by its Z words, so X columns come before Z columns when pivoting.
std::vector<uint64_t> symplectic_words(const PauliOperator& op) {
    std::vector<uint64_t> v(op.x_words().begin(), op.x_words().end());
    v.insert(v.end(), op.z_words().begin(), op.z_words().end());
    return v;
}

// Row representing the functional t -> <op, t>, i.e. the operator with its
// X and Z halves exchanged.
void write_dual_row(BitMatrix& m, size_t r, const PauliOperator& op) {
    auto row = m.row(r);
    size_t w = op.num_words();
    std::copy(op.z_words().begin(), op.z_words().end(), row.begin());
    std::copy(op.x_words().begin(), op.x_words().end(), row.begin() + w);
}

PauliOperator operator_from_symplectic(size_t n, std::span<const uint64_t> row) {
    size_t w = (n + 63) / 64;
    std::vector<uint64_t> xs(row.begin(), row.begin() + w);
    std::vector<uint64_t> zs(row.begin() + w, row.begin() + 2 * w);
    return PauliOperator::from_words(n, std::move(xs), std::move(zs));
}

bool test_bit(std::span<const uint64_t> v, size_t bit) { return (v[bit >> 6] >> (bit & 63)) & 1; }

size_t first_set_bit(std::span<const uint64_t> v) {
    for (size_t w = 0; w < v.size(); w++) {
        if (v[w]) {
            return w * 64 + std::countr_zero(v[w]);
        }
    }
    return SIZE_MAX;
}

}  // namespace

Syndrome::Syndrome(std::vector<int8_t> signs) : signs_(std::move(signs)) {
    for (auto& s : signs_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("syndrome entries must be +1 or -1");
        }
    }
}

Syndrome Syndrome::parse(std::string_view text) {
    std::vector<int8_t> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(+1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw std::invalid_argument(std::string("invalid syndrome character '") + c + "'");
        }
    }
    return Syndrome(std::move(signs));
}

bool Syndrome::is_trivial() const {
    return std::all_of(signs_.begin(), signs_.end(), [](int8_t s) { return s > 0; });
}

size_t Syndrome::num_flipped() const {
    return std::count(signs_.begin(), signs_.end(), int8_t{-1});
}

Syndrome Syndrome::operator*(const Syndrome& other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("syndrome length mismatch");
    }
    Syndrome out(size());
    for (size_t c = 0; c < size(); c++) {
        out.signs_[c] = static_cast<int8_t>(signs_[c] * other.signs_[c]);
    }
    return out;
}

std::string Syndrome::str() const {
    std::string out;
    out.reserve(signs_.size());
    for (auto s : signs_) {
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

const char* residual_class_name(ResidualClass c) {
    switch (c) {
        case ResidualClass::kStabilizer:
            return "stabilizer";
        case ResidualClass::kLogical:
            return "logical";
        case ResidualClass::kDetectable:
            return "detectable";
    }
    return "?";
}

StabilizerCode StabilizerCode::build(std::vector<PauliOperator> checks) {
    if (checks.empty()) {
        throw std::invalid_argument("a code needs at least one check");
    }
    size_t n = checks[0].num_qubits();
    if (n == 0) {
        throw std::invalid_argument("checks must act on at least one qubit");
    }
    for (size_t c = 0; c < checks.size(); c++) {
        if (checks[c].num_qubits() != n) {
            throw std::invalid_argument("check " + std::to_string(c) + " has " +
                                        std::to_string(checks[c].num_qubits()) + " qubits, expected " +
                                        std::to_string(n));
        }
    }
    for (size_t a = 0; a < checks.size(); a++) {
        for (size_t b = a + 1; b < checks.size(); b++) {
            if (!checks[a].commutes(checks[b])) {
                throw std::invalid_argument("checks " + std::to_string(a) + " and " + std::to_string(b) +
                                            " do not commute");
            }
        }
    }

    StabilizerCode code;
    code.n_ = n;
    size_t words = (n + 63) / 64;
    code.check_basis_ = BitMatrix(checks.size(), 128 * words);
    for (size_t c = 0; c < checks.size(); c++) {
        auto v = symplectic_words(checks[c]);
        for (size_t i = 0; i < code.check_basis_pivots_.size(); i++) {
            if (test_bit(v, code.check_basis_pivots_[i])) {
                auto row = code.check_basis_.row(i);
                for (size_t w = 0; w < v.size(); w++) {
                    v[w] ^= row[w];
                }
            }
        }
        size_t pivot = first_set_bit(v);
        if (pivot == SIZE_MAX) {
            throw std::invalid_argument("check " + std::to_string(c) +
                                        " is a product of earlier checks (rank deficiency)");
        }
        std::copy(v.begin(), v.end(), code.check_basis_.row(c).begin());
        code.check_basis_pivots_.push_back(pivot);
    }

    code.checks_ = std::move(checks);
    code.build_tanner_graph();
    code.compute_canonical_generators();
    return code;
}

void StabilizerCode::build_tanner_graph() {
    size_t m = checks_.size();
    check_offsets_.assign(m + 1, 0);
    std::vector<size_t> degree(n_, 0);
    for (size_t c = 0; c < m; c++) {
        for (size_t q : checks_[c].support()) {
            edges_.push_back(TannerEdge{static_cast<uint32_t>(c), static_cast<uint32_t>(q), checks_[c].get(q)});
            degree[q]++;
        }
        check_offsets_[c + 1] = edges_.size();
    }
    check_edge_ids_.resize(edges_.size());
    for (size_t e = 0; e < edges_.size(); e++) {
        check_edge_ids_[e] = static_cast<uint32_t>(e);
    }
    qubit_offsets_.assign(n_ + 1, 0);
    for (size_t q = 0; q < n_; q++) {
        qubit_offsets_[q + 1] = qubit_offsets_[q] + degree[q];
    }
    qubit_edge_ids_.resize(edges_.size());
    std::vector<size_t> cursor(qubit_offsets_.begin(), qubit_offsets_.end() - 1);
    for (size_t e = 0; e < edges_.size(); e++) {
        qubit_edge_ids_[cursor[edges_[e].qubit]++] = static_cast<uint32_t>(e);
    }
}

std::vector<size_t> StabilizerCode::isolated_qubits() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < n_; q++) {
        if (qubit_degree(q) == 0) {
            out.push_back(q);
        }
    }
    return out;
}

void StabilizerCode::compute_canonical_generators() {
    size_t m = checks_.size();
    size_t words = (n_ + 63) / 64;
    size_t width = 128 * words;

    // Pure errors: solve <S_c', T_c> = delta_{c,c'} by eliminating the dual
    // check matrix augmented with an identity that records the row operations.
    BitMatrix aug(m, width + m);
    for (size_t c = 0; c < m; c++) {
        write_dual_row(aug, c, checks_[c]);
        aug.set(c, width + c, true);
    }
    auto pivots = rref(aug, width);
    if (pivots.size() != m) {
        throw std::logic_error("check matrix lost rank during elimination");
    }
    pure_errors_.clear();
    for (size_t c = 0; c < m; c++) {
        std::vector<uint64_t> v(2 * words, 0);
        for (size_t i = 0; i < m; i++) {
            if (aug.get(i, width + c)) {
                v[pivots[i] >> 6] ^= uint64_t{1} << (pivots[i] & 63);
            }
        }
        pure_errors_.push_back(operator_from_symplectic(n_, v));
    }
    // Multiplying T_c by S_c' flips its commutation with T_c' only.
    for (size_t c = 0; c < m; c++) {
        for (size_t d = 0; d < c; d++) {
            if (!pure_errors_[c].commutes(pure_errors_[d])) {
                pure_errors_[c] *= checks_[d];
            }
        }
    }

    // Logical space: null space of the symplectic constraints against every S
    // and T, followed by symplectic Gram-Schmidt into canonical pairs.
    BitMatrix constraints(2 * m, width);
    for (size_t c = 0; c < m; c++) {
        write_dual_row(constraints, c, checks_[c]);
        write_dual_row(constraints, m + c, pure_errors_[c]);
    }
    auto cpivots = rref(constraints);
    std::vector<bool> is_pivot(width, false);
    for (size_t p : cpivots) {
        is_pivot[p] = true;
    }
    std::vector<PauliOperator> pool;
    for (size_t col = 0; col < width; col++) {
        size_t q = col % (64 * words);
        if (q >= n_ || is_pivot[col]) {
            continue;
        }
        std::vector<uint64_t> v(2 * words, 0);
        v[col >> 6] |= uint64_t{1} << (col & 63);
        for (size_t i = 0; i < cpivots.size(); i++) {
            if (constraints.get(i, col)) {
                v[cpivots[i] >> 6] ^= uint64_t{1} << (cpivots[i] & 63);
            }
        }
        pool.push_back(operator_from_symplectic(n_, v));
    }
    if (pool.size() != 2 * num_logical()) {
        throw std::logic_error("logical space has unexpected dimension");
    }

    logical_x_.clear();
    logical_z_.clear();
    while (!pool.empty()) {
        PauliOperator a = pool.front();
        auto partner = std::find_if(pool.begin() + 1, pool.end(),
                                    [&](const PauliOperator& b) { return !a.commutes(b); });
        if (partner == pool.end()) {
            throw std::logic_error("degenerate symplectic form on the logical space");
        }
        PauliOperator b = *partner;
        pool.erase(partner);
        pool.erase(pool.begin());
        for (auto& u : pool) {
            bool anti_a = !u.commutes(a);
            bool anti_b = !u.commutes(b);
            if (anti_b) {
                u *= a;
            }
            if (anti_a) {
                u *= b;
            }
        }
        logical_x_.push_back(std::move(a));
        logical_z_.push_back(std::move(b));
    }
}

Syndrome StabilizerCode::syndrome(const PauliOperator& error) const {
    if (error.num_qubits() != n_) {
        throw std::invalid_argument("syndrome: operator has " + std::to_string(error.num_qubits()) +
                                    " qubits, code has " + std::to_string(n_));
    }
    Syndrome s(checks_.size());
    for (size_t c = 0; c < checks_.size(); c++) {
        s.set(c, checks_[c].commute(error));
    }
    return s;
}

PauliOperator StabilizerCode::pure_error_for_syndrome(const Syndrome& s) const {
    if (s.size() != checks_.size()) {
        throw std::invalid_argument("syndrome length does not match check count");
    }
    PauliOperator t(n_);
    for (size_t c = 0; c < s.size(); c++) {
        if (s.flipped(c)) {
            t *= pure_errors_[c];
        }
    }
    return t;
}

bool StabilizerCode::in_stabilizer_group(const PauliOperator& op) const {
    if (op.num_qubits() != n_) {
        throw std::invalid_argument("operator qubit count does not match code");
    }
    auto v = symplectic_words(op);
    for (size_t i = 0; i < check_basis_pivots_.size(); i++) {
        if (test_bit(v, check_basis_pivots_[i])) {
            auto row = check_basis_.row(i);
            for (size_t w = 0; w < v.size(); w++) {
                v[w] ^= row[w];
            }
        }
    }
    return first_set_bit(v) == SIZE_MAX;
}

ResidualClass StabilizerCode::residual_class(const PauliOperator& residual) const {
    if (!syndrome(residual).is_trivial()) {
        return ResidualClass::kDetectable;
    }
    return in_stabilizer_group(residual) ? ResidualClass::kStabilizer : ResidualClass::kLogical;
}

uint64_t StabilizerCode::logical_coordinates(const PauliOperator& op) const {
    if (logical_x_.size() > 32) {
        throw std::invalid_argument("logical_coordinates supports at most 32 logical qubits");
    }
    uint64_t out = 0;
    for (size_t j = 0; j < logical_x_.size(); j++) {
        if (!op.commutes(logical_z_[j])) {
            out |= uint64_t{1} << (2 * j);
        }
        if (!op.commutes(logical_x_[j])) {
            out |= uint64_t{1} << (2 * j + 1);
        }
    }
    return out;
}

PauliOperator StabilizerCode::logical_operator(uint64_t coordinates) const {
    PauliOperator out(n_);
    for (size_t j = 0; j < logical_x_.size() && j < 32; j++) {
        if ((coordinates >> (2 * j)) & 1) {
            out *= logical_x_[j];
        }
        if ((coordinates >> (2 * j + 1)) & 1) {
            out *= logical_z_[j];
        }
    }
    return out;
}

}  // namespace qbp
