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

#include "icsmine/csv.hpp"

#include <algorithm>

#include "icsmine/error.hpp"

namespace icsmine {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::string without_spaces(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!is_space(c)) {
            out += c;
        }
    }
    return out;
}

}  // namespace

std::string_view trim_view(std::string_view text) {
    while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

CsvReader::CsvReader(const std::string& path) : file_(path, std::ios::binary), origin_(path) {
    if (!file_) {
        throw ParseError("cannot open '" + path + "'");
    }
    in_ = &file_;
    if (!read_record(header_)) {
        throw ParseError("'" + path + "' has no header row");
    }
}

CsvReader::CsvReader(std::istream& in, std::string origin)
    : in_(&in), origin_(std::move(origin)) {
    if (!read_record(header_)) {
        throw ParseError("'" + origin_ + "' has no header row");
    }
}

std::optional<std::size_t> CsvReader::column(const std::string& name) const {
    const std::string_view wanted = trim_view(name);
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (trim_view(header_[i]) == wanted) {
            return i;
        }
    }
    const std::string squeezed = without_spaces(wanted);
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (without_spaces(header_[i]) == squeezed) {
            return i;
        }
    }
    return std::nullopt;
}

bool CsvReader::next(std::vector<std::string>& out) {
    if (!read_record(out)) {
        return false;
    }
    ++row_number_;
    return true;
}

// One record, possibly spanning physical lines when a quoted field embeds
// newlines. Returns false on end of input with nothing read. Reads via the
// stream buffer directly; per-character istream::get() is too slow for
// historian-sized files.
bool CsvReader::read_record(std::vector<std::string>& out) {
    out.clear();
    std::streambuf& sb = *in_->rdbuf();
    constexpr int eof = std::streambuf::traits_type::eof();
    int c = sb.sbumpc();
    if (c == eof) {
        return false;
    }
    // Strip a UTF-8 byte-order mark at the very start of the stream.
    if (header_.empty() && row_number_ == 0 && c == 0xEF) {
        const int c2 = sb.sbumpc();
        const int c3 = sb.sbumpc();
        if (c2 != 0xBB || c3 != 0xBF) {
            throw ParseError("'" + origin_ + "' starts with a malformed byte-order mark");
        }
        c = sb.sbumpc();
        if (c == eof) {
            return false;
        }
    }

    std::string field;
    bool quoted = false;
    auto end_field = [&] {
        if (!quoted && !field.empty() && field.back() == '\r') {
            field.pop_back();
        }
        out.push_back(field);
        field.clear();
    };
    for (;;) {
        if (quoted) {
            if (c == eof) {
                throw ParseError("'" + origin_ + "': unterminated quoted field");
            }
            if (c == '"') {
                const int peek = sb.sbumpc();
                if (peek == '"') {
                    field += '"';
                } else {
                    quoted = false;
                    c = peek;
                    continue;
                }
            } else {
                field += static_cast<char>(c);
            }
        } else {
            if (c == eof || c == '\n') {
                end_field();
                return true;
            }
            if (c == '"' && field.empty()) {
                quoted = true;
            } else if (c == ',') {
                end_field();
            } else {
                field += static_cast<char>(c);
            }
        }
        c = sb.sbumpc();
    }
}

}  // namespace icsmine
