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

#ifndef QBP_CODE_IO_H
#define QBP_CODE_IO_H

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbp/gf2.h"
#include "qbp/stabilizer_code.h"

namespace qbp {

/// Error in an input file. The message carries the 1-based line number.
class FormatError : public std::runtime_error {
   public:
    FormatError(size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    size_t line() const { return line_; }

   private:
    size_t line_;
};

// Code file format:
//   line 1:            "n m"
//   next m lines:      one check per line, an n-character Pauli string
// Lines starting with '#' and blank lines are ignored anywhere, which is how
// provenance headers are carried.

/// Parses the code file format. Throws FormatError for malformed text and
/// std::invalid_argument when the checks do not form a valid code.
StabilizerCode read_code(std::istream& in);
StabilizerCode read_code_file(const std::string& path);

void write_code(std::ostream& out, const StabilizerCode& code, const std::vector<std::string>& header = {});

/// Sparse matrix format: one line per row listing the sorted column indices
/// of its ones, separated by spaces. Headers as above; the column count is
/// carried in a "# cols <n>" header line.
void write_sparse_matrix(std::ostream& out, const BitMatrix& h, const std::vector<std::string>& header = {});
BitMatrix read_sparse_matrix(std::istream& in);

/// FNV-1a hash of the check list, used as a code fingerprint in result files.
uint64_t code_fingerprint(const StabilizerCode& code);

}  // namespace qbp

#endif  // QBP_CODE_IO_H
