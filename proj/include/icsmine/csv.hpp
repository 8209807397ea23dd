// Copyright 2026-present the icsmine project
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

#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace icsmine {

/// Streaming comma-separated reader for historian exports. Handles quoted
/// fields (doubled-quote escapes, embedded commas and newlines), CRLF line
/// ends, and a leading UTF-8 byte-order mark. The header row is consumed by
/// the constructor. Rows are not padded: short rows surface as-is and the
/// caller decides whether that is an error.
class CsvReader {
public:
    /// Throws ParseError when the file cannot be opened or has no header.
    explicit CsvReader(const std::string& path);
    CsvReader(std::istream& in, std::string origin);

    const std::vector<std::string>& header() const { return header_; }

    /// Column index by name, compared after trimming surrounding
    /// whitespace. Falls back to a space-insensitive match ("FIT 101"
    /// matches "FIT101") since historian exports pad names unevenly.
    std::optional<std::size_t> column(const std::string& name) const;

    /// Reads the next data row into `out` (cleared first). Returns false at
    /// end of input. `row_number()` then names the 1-based data row.
    bool next(std::vector<std::string>& out);

    std::size_t row_number() const { return row_number_; }
    const std::string& origin() const { return origin_; }

private:
    bool read_record(std::vector<std::string>& out);

    std::ifstream file_;
    std::istream* in_;
    std::string origin_;
    std::vector<std::string> header_;
    std::size_t row_number_ = 0;
};

/// Surrounding-whitespace trim used for header names and numeric cells.
std::string_view trim_view(std::string_view text);

}  // namespace icsmine
