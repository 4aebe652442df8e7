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

#include "qbp/code_io.h"

#include <fstream>
#include <sstream>

namespace qbp {

namespace {

bool skippable(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r");
    auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? "" : s.substr(begin, end - begin + 1);
}

}  // namespace

StabilizerCode read_code(std::istream& in) {
    std::string line;
    size_t line_no = 0;
    size_t n = 0;
    size_t m = 0;
    bool have_header = false;
    std::vector<PauliOperator> checks;
    while (std::getline(in, line)) {
        line_no++;
        if (skippable(line)) {
            continue;
        }
        if (!have_header) {
            std::istringstream fields(line);
            std::string extra;
            if (!(fields >> n >> m) || (fields >> extra) || n == 0 || m == 0) {
                throw FormatError(line_no, "expected header \"n m\" with positive integers");
            }
            have_header = true;
            continue;
        }
        std::string text = trim(line);
        if (checks.size() == m) {
            throw FormatError(line_no, "more than " + std::to_string(m) + " checks");
        }
        if (text.size() != n) {
            throw FormatError(line_no,
                              "check has " + std::to_string(text.size()) + " characters, expected " + std::to_string(n));
        }
        try {
            checks.push_back(PauliOperator::parse(text));
        } catch (const std::invalid_argument& e) {
            throw FormatError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw FormatError(line_no + 1, "missing header");
    }
    if (checks.size() != m) {
        throw FormatError(line_no + 1,
                          "expected " + std::to_string(m) + " checks, found " + std::to_string(checks.size()));
    }
    return StabilizerCode::build(std::move(checks));
}

StabilizerCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open code file " + path);
    }
    return read_code(in);
}

void write_code(std::ostream& out, const StabilizerCode& code, const std::vector<std::string>& header) {
    for (const auto& h : header) {
        out << "# " << h << "\n";
    }
    out << code.num_qubits() << " " << code.num_checks() << "\n";
    for (const auto& check : code.checks()) {
        out << check.str() << "\n";
    }
}

void write_sparse_matrix(std::ostream& out, const BitMatrix& h, const std::vector<std::string>& header) {
    for (const auto& line : header) {
        out << "# " << line << "\n";
    }
    out << "# cols " << h.cols() << "\n";
    for (size_t r = 0; r < h.rows(); r++) {
        auto support = h.row_support(r);
        for (size_t i = 0; i < support.size(); i++) {
            out << (i ? " " : "") << support[i];
        }
        out << "\n";
    }
}

BitMatrix read_sparse_matrix(std::istream& in) {
    std::string line;
    size_t line_no = 0;
    size_t cols = 0;
    bool have_cols = false;
    std::vector<std::vector<size_t>> rows;
    while (std::getline(in, line)) {
        line_no++;
        std::string text = trim(line);
        if (text.rfind("# cols ", 0) == 0) {
            cols = std::stoul(text.substr(7));
            have_cols = true;
            continue;
        }
        if (text.empty() || text[0] == '#') {
            continue;
        }
        std::istringstream fields(text);
        std::vector<size_t> row;
        long long idx;
        while (fields >> idx) {
            if (idx < 0 || (have_cols && static_cast<size_t>(idx) >= cols)) {
                throw FormatError(line_no, "column index " + std::to_string(idx) + " out of range");
            }
            if (!row.empty() && static_cast<size_t>(idx) <= row.back()) {
                throw FormatError(line_no, "column indices must be strictly increasing");
            }
            row.push_back(static_cast<size_t>(idx));
        }
        if (!fields.eof()) {
            throw FormatError(line_no, "non-integer entry");
        }
        rows.push_back(std::move(row));
    }
    if (!have_cols) {
        throw FormatError(line_no + 1, "missing \"# cols <n>\" header");
    }
    BitMatrix h(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        for (size_t c : rows[r]) {
            h.set(r, c, true);
        }
    }
    return h;
}

uint64_t code_fingerprint(const StabilizerCode& code) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&](unsigned char byte) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    };
    for (const auto& check : code.checks()) {
        for (char ch : check.str()) {
            mix(static_cast<unsigned char>(ch));
        }
        mix('\n');
    }
    return hash;
}

}  // namespace qbp
