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

#ifndef QBP_EXACT_ORACLE_H
#define QBP_EXACT_ORACLE_H

#include <string>
#include <vector>

#include "qbp/bp.h"
#include "qbp/stabilizer_code.h"

namespace qbp {

// Brute-force reference decoders. Size guards throw std::invalid_argument;
// nothing here ever truncates an enumeration.

inline constexpr size_t kMaxEnumerationQubits = 12;
inline constexpr size_t kMaxCosetChecks = 16;
inline constexpr size_t kMaxCosetLogicals = 4;

/// p(E) for a memoryless channel.
double error_probability(const ChannelPrior& prior, const PauliOperator& e);

/// p_q(E_q | s) for every qubit, by enumerating all 4^n operators.
std::vector<Dist4> exact_marginals(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s);

/// argmax_E p(E | s). Operators are visited in lexicographic order of their
/// text form (I < X < Y < Z) and the first maximum wins.
PauliOperator exact_map(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s);

struct CosetEntry {
    /// Packed logical coordinates, see StabilizerCode::logical_coordinates.
    uint64_t logical = 0;
    /// t(s) * L; every member of the class is this times a stabilizer.
    PauliOperator representative;
    /// p(L | s), normalised over the table.
    double probability = 0;
};

struct CosetTable {
    std::vector<CosetEntry> entries;  // indexed by packed logical coordinates
    /// Unnormalised total, equal to p(s).
    double syndrome_probability = 0;
    size_t best = 0;

    const CosetEntry& best_entry() const { return entries[best]; }
};

/// Sums p(S t(s) L) over the 2^m stabilizer elements for each of the 4^k
/// logical classes. The recovery is table.best_entry().representative.
CosetTable coset_decode(const StabilizerCode& code, const ChannelPrior& prior, const Syndrome& s);

/// Per logical qubit letter of a packed coordinate word, e.g. "XI".
std::string logical_label(uint64_t coordinates, size_t num_logical);

}  // namespace qbp

#endif  // QBP_EXACT_ORACLE_H
