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

#ifndef QBP_CONSTRUCTIONS_H
#define QBP_CONSTRUCTIONS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbp/gf2.h"
#include "qbp/stabilizer_code.h"

namespace qbp {

/// C[i][j] = a[(i + j) mod d]. Every row is a cyclic shift of the first and
/// the matrix is symmetric.
BitMatrix cyclic_matrix(const std::vector<uint8_t>& a);

/// C[i][j] = a[(j - i) mod d]: row i is the first row rotated right by i.
BitMatrix circulant_matrix(const std::vector<uint8_t>& a);

enum class RowDeletion {
    /// Greedily delete the row whose columns are currently heaviest, so that
    /// the remaining column weights stay as even as possible.
    kBalanced,
    kRandom,
};

struct BicycleSpec {
    size_t n = 0;  // block length
    size_t m = 0;  // number of checks
    size_t w = 0;  // row weight of H
    uint64_t seed = 0;
    RowDeletion deletion = RowDeletion::kBalanced;

    /// Throws std::invalid_argument unless n, m, w are even, 2 <= w <= n,
    /// 2 <= m <= n.
    void validate() const;
};

struct BicycleCode {
    std::vector<uint8_t> generator;  // the sparse vector A of length n/2
    std::vector<size_t> deleted_rows;
    BitMatrix h;  // m/2 x n, self-orthogonal
    StabilizerCode code;
    size_t attempts = 0;
};

/// Bicycle CSS code: H0 = (C | C^T) for a random sparse circulant C with row
/// weight w/2, with n/2 - m/2 rows deleted. The first m/2 checks are the
/// Z-type rows of H, the last m/2 the X-type rows. Throws std::runtime_error
/// when no acceptable deletion is found within the retry budget.
BicycleCode generate_bicycle(const BicycleSpec& spec);

/// CSS code with Z-type checks from the rows of h followed by X-type checks
/// from the same rows. Requires h h^T = 0 and full row rank.
StabilizerCode css_from_matrix(const BitMatrix& h);

/// "two_qubit_toy" = {XX, ZZ}; "five_qubit" = {XZZXI, IXZZX, XIXZZ, ZXIXZ}.
StabilizerCode builtin_code(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace qbp

#endif  // QBP_CONSTRUCTIONS_H
