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

#include "qbp/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbp {

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<uint8_t>>& rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        }
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c] != 0);
        }
    }
    return m;
}

void BitMatrix::xor_row(size_t dst, size_t src) {
    uint64_t* d = data_.data() + dst * stride_;
    const uint64_t* s = data_.data() + src * stride_;
    for (size_t w = 0; w < stride_; w++) {
        d[w] ^= s[w];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

size_t BitMatrix::row_weight(size_t r) const {
    size_t total = 0;
    for (uint64_t w : row(r)) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitMatrix::col_weight(size_t c) const {
    size_t total = 0;
    for (size_t r = 0; r < rows_; r++) {
        total += get(r, c);
    }
    return total;
}

std::vector<size_t> BitMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    auto words = row(r);
    for (size_t w = 0; w < words.size(); w++) {
        uint64_t bits = words[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool BitMatrix::row_is_zero(size_t r) const {
    for (uint64_t w : row(r)) {
        if (w) {
            return false;
        }
    }
    return true;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row_support(r)) {
            t.set(c, r, true);
        }
    }
    return t;
}

BitMatrix BitMatrix::select_rows(const std::vector<size_t>& keep) const {
    BitMatrix out(keep.size(), cols_);
    for (size_t i = 0; i < keep.size(); i++) {
        auto src = row(keep[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("multiply_transpose: column count mismatch");
    }
    BitMatrix out(a.rows(), b.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        auto ra = a.row(i);
        for (size_t j = 0; j < b.rows(); j++) {
            auto rb = b.row(j);
            uint64_t acc = 0;
            for (size_t w = 0; w < ra.size(); w++) {
                acc ^= ra[w] & rb[w];
            }
            out.set(i, j, std::popcount(acc) & 1);
        }
    }
    return out;
}

std::vector<size_t> rref(BitMatrix& m, size_t pivot_cols) {
    if (pivot_cols == 0 || pivot_cols > m.cols()) {
        pivot_cols = m.cols();
    }
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < pivot_cols && next_row < m.rows(); c++) {
        size_t found = next_row;
        while (found < m.rows() && !m.get(found, c)) {
            found++;
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(next_row, found);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next_row && m.get(r, c)) {
                m.xor_row(r, next_row);
            }
        }
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

size_t rank(BitMatrix m) { return rref(m).size(); }

}  // namespace qbp
