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

#include "qbp/exact_oracle.h"

#include <bit>
#include <stdexcept>

namespace qbp {

namespace {

struct SmallCheck {
    uint32_t x;
    uint32_t z;
};

void require_enumerable(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s) {
    if (code.num_qubits() > kMaxEnumerationQubits) {
        throw std::invalid_argument("exact enumeration supports at most " + std::to_string(kMaxEnumerationQubits) +
                                    " qubits, code has " + std::to_string(code.num_qubits()));
    }
    if (prior.num_qubits() != code.num_qubits() || s.size() != code.num_checks()) {
        throw std::invalid_argument("prior or syndrome does not match the code");
    }
}

// Visits every operator in lexicographic text order. Qubit 0 is the most
// significant base-4 digit; digit values follow the Pauli enum (I, X, Y, Z).
template <typename Visit>
void enumerate_consistent(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s, Visit visit) {
    size_t n = code.num_qubits();
    std::vector<SmallCheck> checks;
    uint32_t target = 0;
    for (size_t c = 0; c < code.num_checks(); c++) {
        SmallCheck sc{0, 0};
        for (size_t q = 0; q < n; q++) {
            sc.x |= uint32_t{code.check(c).x(q)} << q;
            sc.z |= uint32_t{code.check(c).z(q)} << q;
        }
        checks.push_back(sc);
        if (s.flipped(c)) {
            target |= uint32_t{1} << c;
        }
    }
    std::vector<uint8_t> digits(n, 0);
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t idx = 0; idx < total; idx++) {
        uint32_t x = 0;
        uint32_t z = 0;
        double p = 1;
        for (size_t q = 0; q < n; q++) {
            auto d = static_cast<uint8_t>((idx >> (2 * (n - 1 - q))) & 3);
            digits[q] = d;
            Pauli pq = static_cast<Pauli>(d);
            x |= uint32_t{x_bit(pq)} << q;
            z |= uint32_t{z_bit(pq)} << q;
            p *= prior[q][d];
        }
        uint32_t syn = 0;
        for (size_t c = 0; c < checks.size(); c++) {
            syn |= uint32_t(std::popcount((x & checks[c].z) ^ (z & checks[c].x)) & 1) << c;
        }
        if (syn == target) {
            visit(digits, p);
        }
    }
}

}  // namespace

double error_probability(const ChannelPrior& prior, const PauliOperator& e) {
    double p = 1;
    for (size_t q = 0; q < e.num_qubits(); q++) {
        p *= prior[q][static_cast<int>(e.get(q))];
    }
    return p;
}

std::vector<Dist4> exact_marginals(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s) {
    require_enumerable(code, prior, s);
    size_t n = code.num_qubits();
    std::vector<Dist4> marginals(n, Dist4{0, 0, 0, 0});
    double total = 0;
    enumerate_consistent(code, prior, s, [&](const std::vector<uint8_t>& digits, double p) {
        total += p;
        for (size_t q = 0; q < n; q++) {
            marginals[q][digits[q]] += p;
        }
    });
    if (!(total > 0)) {
        throw std::invalid_argument("syndrome has zero probability under the prior");
    }
    for (auto& m : marginals) {
        for (auto& v : m) {
            v /= total;
        }
    }
    return marginals;
}

PauliOperator exact_map(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s) {
    require_enumerable(code, prior, s);
    size_t n = code.num_qubits();
    double best = -1;
    std::vector<uint8_t> best_digits(n, 0);
    enumerate_consistent(code, prior, s, [&](const std::vector<uint8_t>& digits, double p) {
        if (p > best) {
            best = p;
            best_digits = digits;
        }
    });
    PauliOperator out(n);
    for (size_t q = 0; q < n; q++) {
        out.set(q, static_cast<Pauli>(best_digits[q]));
    }
    return out;
}

CosetTable coset_decode(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s) {
    size_t m = code.num_checks();
    size_t k = code.num_logical();
    if (m > kMaxCosetChecks || k > kMaxCosetLogicals) {
        throw std::invalid_argument("coset enumeration supports m <= " + std::to_string(kMaxCosetChecks) +
                                    " and k <= " + std::to_string(kMaxCosetLogicals));
    }
    if (prior.num_qubits() != code.num_qubits() || s.size() != m) {
        throw std::invalid_argument("prior or syndrome does not match the code");
    }
    PauliOperator pure = code.pure_error_for_syndrome(s);
    CosetTable table;
    uint64_t classes = uint64_t{1} << (2 * k);
    for (uint64_t l = 0; l < classes; l++) {
        PauliOperator rep = pure * code.logical_operator(l);
        // Gray-code walk over the stabilizer group.
        PauliOperator cur = rep;
        double mass = error_probability(prior, cur);
        for (uint64_t g = 1; g < (uint64_t{1} << m); g++) {
            cur *= code.check(std::countr_zero(g));
            mass += error_probability(prior, cur);
        }
        table.entries.push_back(CosetEntry{l, std::move(rep), mass});
        table.syndrome_probability += mass;
    }
    for (size_t i = 0; i < table.entries.size(); i++) {
        if (table.entries[i].probability > table.entries[table.best].probability) {
            table.best = i;
        }
    }
    if (table.syndrome_probability > 0) {
        for (auto& e : table.entries) {
            e.probability /= table.syndrome_probability;
        }
    }
    return table;
}

std::string logical_label(uint64_t coordinates, size_t num_logical) {
    std::string out;
    for (size_t j = 0; j < num_logical; j++) {
        bool a = (coordinates >> (2 * j)) & 1;
        bool b = (coordinates >> (2 * j + 1)) & 1;
        out.push_back(pauli_char(pauli_from_bits(a, b)));
    }
    return out.empty() ? "-" : out;
}

}  // namespace qbp
