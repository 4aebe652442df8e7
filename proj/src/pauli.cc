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

#include "qbp/pauli.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qbp {

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("invalid Pauli character '") + c + "'");
    }
}

PauliOperator::PauliOperator(size_t num_qubits)
    : n_(num_qubits), xs_((num_qubits + 63) / 64, 0), zs_((num_qubits + 63) / 64, 0) {}

PauliOperator PauliOperator::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    PauliOperator result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set(q, pauli_from_char(text[q]));
    }
    return result;
}

PauliOperator PauliOperator::from_bits(const std::vector<uint8_t>& x, const std::vector<uint8_t>& z) {
    if (x.size() != z.size()) {
        throw std::invalid_argument("x and z parts have different lengths");
    }
    PauliOperator result(x.size());
    for (size_t q = 0; q < x.size(); q++) {
        result.set(q, pauli_from_bits(x[q] != 0, z[q] != 0));
    }
    return result;
}

PauliOperator PauliOperator::from_words(size_t num_qubits, std::vector<uint64_t> xs, std::vector<uint64_t> zs) {
    size_t words = (num_qubits + 63) / 64;
    if (xs.size() != words || zs.size() != words) {
        throw std::invalid_argument("from_words: word count does not match qubit count");
    }
    PauliOperator result;
    result.n_ = num_qubits;
    result.xs_ = std::move(xs);
    result.zs_ = std::move(zs);
    return result;
}

Pauli PauliOperator::get(size_t q) const { return pauli_from_bits(x(q), z(q)); }

void PauliOperator::set(size_t q, Pauli p) {
    uint64_t mask = uint64_t{1} << (q & 63);
    size_t w = q >> 6;
    xs_[w] = x_bit(p) ? (xs_[w] | mask) : (xs_[w] & ~mask);
    zs_[w] = z_bit(p) ? (zs_[w] | mask) : (zs_[w] & ~mask);
}

size_t PauliOperator::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        total += std::popcount(xs_[w] | zs_[w]);
    }
    return total;
}

bool PauliOperator::is_identity() const {
    for (size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> PauliOperator::support() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < xs_.size(); w++) {
        uint64_t bits = xs_[w] | zs_[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

int PauliOperator::commute(const PauliOperator& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("commute: qubit count mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < xs_.size(); w++) {
        acc ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return (std::popcount(acc) & 1) ? -1 : +1;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
    if (n_ != other.n_) {
        throw std::invalid_argument("multiply: qubit count mismatch");
    }
    for (size_t w = 0; w < xs_.size(); w++) {
        xs_[w] ^= other.xs_[w];
        zs_[w] ^= other.zs_[w];
    }
    return *this;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
    PauliOperator result = *this;
    result *= other;
    return result;
}

bool PauliOperator::lex_less(const PauliOperator& other) const {
    size_t n = std::min(n_, other.n_);
    for (size_t q = 0; q < n; q++) {
        auto a = get(q);
        auto b = other.get(q);
        if (a != b) {
            return a < b;
        }
    }
    return n_ < other.n_;
}

std::string PauliOperator::str() const {
    std::string out(n_, 'I');
    for (size_t q = 0; q < n_; q++) {
        out[q] = pauli_char(get(q));
    }
    return out;
}

}  // namespace qbp
