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

#include "qbp/constructions.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qbp/rng.h"

namespace qbp {

namespace {

constexpr size_t kMaxBicycleAttempts = 64;

std::vector<uint8_t> random_sparse_vector(size_t length, size_t ones, Rng& rng) {
    std::vector<size_t> idx(length);
    std::iota(idx.begin(), idx.end(), 0);
    for (size_t i = 0; i < ones; i++) {
        size_t j = i + uniform_index(rng, length - i);
        std::swap(idx[i], idx[j]);
    }
    std::vector<uint8_t> a(length, 0);
    for (size_t i = 0; i < ones; i++) {
        a[idx[i]] = 1;
    }
    return a;
}

std::vector<size_t> balanced_deletion(const BitMatrix& h0, size_t count, Rng& rng) {
    std::vector<std::vector<size_t>> supports(h0.rows());
    std::vector<size_t> col_weight(h0.cols(), 0);
    for (size_t r = 0; r < h0.rows(); r++) {
        supports[r] = h0.row_support(r);
        for (size_t c : supports[r]) {
            col_weight[c]++;
        }
    }
    std::vector<bool> alive(h0.rows(), true);
    std::vector<size_t> deleted;
    std::vector<size_t> best;
    for (size_t step = 0; step < count; step++) {
        // Removing the row with the largest column-weight sum gives the
        // largest drop in the sum of squared column weights.
        size_t best_score = 0;
        bool best_safe = false;
        best.clear();
        for (size_t r = 0; r < h0.rows(); r++) {
            if (!alive[r]) {
                continue;
            }
            size_t score = 0;
            bool safe = true;
            for (size_t c : supports[r]) {
                score += col_weight[c];
                safe &= col_weight[c] >= 2;
            }
            if (best.empty() || (safe && !best_safe) || (safe == best_safe && score > best_score)) {
                best.assign(1, r);
                best_score = score;
                best_safe = safe;
            } else if (safe == best_safe && score == best_score) {
                best.push_back(r);
            }
        }
        size_t victim = best[uniform_index(rng, best.size())];
        alive[victim] = false;
        for (size_t c : supports[victim]) {
            col_weight[c]--;
        }
        deleted.push_back(victim);
    }
    std::sort(deleted.begin(), deleted.end());
    return deleted;
}

std::vector<size_t> random_deletion(size_t rows, size_t count, Rng& rng) {
    auto mask = random_sparse_vector(rows, count, rng);
    std::vector<size_t> deleted;
    for (size_t r = 0; r < rows; r++) {
        if (mask[r]) {
            deleted.push_back(r);
        }
    }
    return deleted;
}

}  // namespace

BitMatrix cyclic_matrix(const std::vector<uint8_t>& a) {
    if (a.empty()) {
        throw std::invalid_argument("cyclic_matrix: empty generator vector");
    }
    size_t d = a.size();
    BitMatrix c(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            c.set(i, j, a[(i + j) % d] != 0);
        }
    }
    return c;
}

BitMatrix circulant_matrix(const std::vector<uint8_t>& a) {
    if (a.empty()) {
        throw std::invalid_argument("circulant_matrix: empty generator vector");
    }
    size_t d = a.size();
    BitMatrix c(d, d);
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            c.set(i, j, a[(j + d - i) % d] != 0);
        }
    }
    return c;
}

void BicycleSpec::validate() const {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("bicycle block length n must be even and >= 2");
    }
    if (m < 2 || m % 2 != 0 || m > n) {
        throw std::invalid_argument("bicycle check count m must be even with 2 <= m <= n");
    }
    if (w < 2 || w % 2 != 0 || w > n) {
        throw std::invalid_argument("bicycle row weight w must be even with 2 <= w <= n");
    }
}

BicycleCode generate_bicycle(const BicycleSpec& spec) {
    spec.validate();
    size_t half = spec.n / 2;
    size_t to_delete = half - spec.m / 2;
    for (size_t attempt = 0; attempt < kMaxBicycleAttempts; attempt++) {
        Rng rng(derive_seed(spec.seed, {attempt}));
        auto a = random_sparse_vector(half, spec.w / 2, rng);
        BitMatrix c = circulant_matrix(a);
        BitMatrix ct = c.transpose();
        BitMatrix h0(half, spec.n);
        for (size_t i = 0; i < half; i++) {
            for (size_t j = 0; j < half; j++) {
                h0.set(i, j, c.get(i, j));
                h0.set(i, half + j, ct.get(i, j));
            }
        }
        auto deleted = spec.deletion == RowDeletion::kBalanced ? balanced_deletion(h0, to_delete, rng)
                                                               : random_deletion(half, to_delete, rng);
        std::vector<size_t> keep;
        for (size_t r = 0, d = 0; r < half; r++) {
            if (d < deleted.size() && deleted[d] == r) {
                d++;
            } else {
                keep.push_back(r);
            }
        }
        BitMatrix h = h0.select_rows(keep);
        bool zero_column = false;
        for (size_t col = 0; col < h.cols() && !zero_column; col++) {
            zero_column = h.col_weight(col) == 0;
        }
        if (zero_column || rank(h) != keep.size()) {
            continue;
        }
        StabilizerCode code = css_from_matrix(h);
        return BicycleCode{std::move(a), std::move(deleted), std::move(h), std::move(code), attempt + 1};
    }
    throw std::runtime_error("bicycle generation failed: no full-rank deletion without empty columns after " +
                             std::to_string(kMaxBicycleAttempts) + " attempts");
}

StabilizerCode css_from_matrix(const BitMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0) {
        throw std::invalid_argument("css_from_matrix: empty matrix");
    }
    BitMatrix gram = multiply_transpose(h, h);
    for (size_t i = 0; i < gram.rows(); i++) {
        for (size_t j = i; j < gram.cols(); j++) {
            if (gram.get(i, j)) {
                throw std::invalid_argument("css_from_matrix: rows " + std::to_string(i) + " and " +
                                            std::to_string(j) + " have odd overlap (H H^T != 0)");
            }
        }
    }
    if (rank(h) != h.rows()) {
        throw std::invalid_argument("css_from_matrix: H is not full row rank");
    }
    std::vector<PauliOperator> checks;
    for (Pauli kind : {Pauli::Z, Pauli::X}) {
        for (size_t r = 0; r < h.rows(); r++) {
            PauliOperator check(h.cols());
            for (size_t c : h.row_support(r)) {
                check.set(c, kind);
            }
            checks.push_back(std::move(check));
        }
    }
    return StabilizerCode::build(std::move(checks));
}

StabilizerCode builtin_code(std::string_view name) {
    std::vector<std::string_view> rows;
    if (name == "two_qubit_toy") {
        rows = {"XX", "ZZ"};
    } else if (name == "five_qubit") {
        rows = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    } else {
        throw std::invalid_argument("unknown builtin code '" + std::string(name) + "'");
    }
    std::vector<PauliOperator> checks;
    for (auto r : rows) {
        checks.push_back(PauliOperator::parse(r));
    }
    return StabilizerCode::build(std::move(checks));
}

std::vector<std::string> builtin_names() { return {"two_qubit_toy", "five_qubit"}; }

}  // namespace qbp
