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

#ifndef QBP_PAULI_H
#define QBP_PAULI_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbp {

/// Single-qubit Pauli modulo phase. The numeric value is the index used for
/// every probability 4-vector in the library: (I, X, Y, Z).
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kAllPaulis = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

constexpr bool x_bit(Pauli p) { return p == Pauli::X || p == Pauli::Y; }
constexpr bool z_bit(Pauli p) { return p == Pauli::Z || p == Pauli::Y; }

constexpr Pauli pauli_from_bits(bool x, bool z) {
    return x ? (z ? Pauli::Y : Pauli::X) : (z ? Pauli::Z : Pauli::I);
}

/// +1 if the two factors commute, -1 otherwise.
constexpr int commute_single(Pauli a, Pauli b) {
    bool anti = (x_bit(a) && z_bit(b)) != (z_bit(a) && x_bit(b));
    return anti ? -1 : +1;
}

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// An n-qubit Pauli operator with the phase discarded, stored as bit-packed
/// X and Z indicator vectors. Qubit 0 is the leftmost character of the text
/// form.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits);

    static PauliOperator identity(size_t num_qubits) { return PauliOperator(num_qubits); }
    /// Parses a string over {I, X, Y, Z}. Throws std::invalid_argument on an
    /// empty string or any other character.
    static PauliOperator parse(std::string_view text);
    static PauliOperator from_bits(const std::vector<uint8_t>& x, const std::vector<uint8_t>& z);
    /// Takes ownership of packed words; bits past num_qubits must be zero.
    static PauliOperator from_words(size_t num_qubits, std::vector<uint64_t> xs, std::vector<uint64_t> zs);

    size_t num_qubits() const { return n_; }
    size_t num_words() const { return xs_.size(); }

    Pauli get(size_t q) const;
    void set(size_t q, Pauli p);
    bool x(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }

    std::span<const uint64_t> x_words() const { return xs_; }
    std::span<const uint64_t> z_words() const { return zs_; }

    size_t weight() const;
    bool is_identity() const;
    /// Indices of the qubits where the factor is not I, ascending.
    std::vector<size_t> support() const;

    /// Commutation sign: +1 when the operators commute, -1 otherwise.
    /// Throws std::invalid_argument when the qubit counts differ.
    int commute(const PauliOperator& other) const;
    bool commutes(const PauliOperator& other) const { return commute(other) == 1; }

    /// Product up to phase. Throws std::invalid_argument when the qubit counts differ.
    PauliOperator operator*(const PauliOperator& other) const;
    PauliOperator& operator*=(const PauliOperator& other);

    bool operator==(const PauliOperator& other) const = default;
    /// Lexicographic order of the text form with I < X < Y < Z.
    bool lex_less(const PauliOperator& other) const;

    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

inline int commute(const PauliOperator& a, const PauliOperator& b) { return a.commute(b); }
inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) { return a * b; }

}  // namespace qbp

#endif  // QBP_PAULI_H
