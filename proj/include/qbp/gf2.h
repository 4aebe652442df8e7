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

#ifndef QBP_GF2_H
#define QBP_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qbp {

/// Dense binary matrix with rows packed into 64-bit words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix from_rows(const std::vector<std::vector<uint8_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool v) {
        uint64_t& word = data_[r * stride_ + (c >> 6)];
        uint64_t mask = uint64_t{1} << (c & 63);
        word = v ? (word | mask) : (word & ~mask);
    }
    void flip(size_t r, size_t c) { data_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63); }

    std::span<uint64_t> row(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row(size_t r) const { return {data_.data() + r * stride_, stride_}; }

    /// row[dst] ^= row[src]
    void xor_row(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);
    size_t row_weight(size_t r) const;
    size_t col_weight(size_t c) const;
    /// Sorted column indices of the ones in row r.
    std::vector<size_t> row_support(size_t r) const;
    bool row_is_zero(size_t r) const;

    BitMatrix transpose() const;
    /// Submatrix made of the listed rows, in the given order.
    BitMatrix select_rows(const std::vector<size_t>& keep) const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// A * B^T over GF(2). Requires equal column counts.
BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b);

/// In-place reduced row echelon form over GF(2), pivoting on columns in
/// ascending order and only among the first `pivot_cols` columns (all columns
/// when zero). Returns the pivot column of each leading row; rows past the
/// returned size are zero on the pivot range.
std::vector<size_t> rref(BitMatrix& m, size_t pivot_cols = 0);

size_t rank(BitMatrix m);

}  // namespace qbp

#endif  // QBP_GF2_H
