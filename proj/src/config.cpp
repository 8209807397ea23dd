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

#include "icsmine/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "icsmine/csv.hpp"
#include "icsmine/error.hpp"

namespace icsmine {

KeyValueConfig KeyValueConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str(), path);
}

KeyValueConfig KeyValueConfig::parse_text(const std::string& text,
                                          const std::string& origin) {
    KeyValueConfig config;
    config.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string_view stripped = trim_view(line);
        if (stripped.empty() || stripped.front() == '#') {
            continue;
        }
        const std::size_t eq = stripped.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(origin + ":" + std::to_string(line_number) +
                             ": expected 'key = value'");
        }
        const std::string key(trim_view(stripped.substr(0, eq)));
        const std::string value(trim_view(stripped.substr(eq + 1)));
        if (key.empty()) {
            throw ParseError(origin + ":" + std::to_string(line_number) +
                             ": empty key");
        }
        if (!config.entries_.emplace(key, value).second) {
            throw ParseError(origin + ":" + std::to_string(line_number) +
                             ": duplicate key '" + key + "'");
        }
    }
    return config;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string KeyValueConfig::get_string(const std::string& key,
                                       std::string fallback) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? std::move(fallback) : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& value = it->second;
    double parsed = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(origin_ + ": key '" + key + "': expected a number, got '" +
                         value + "'");
    }
    return parsed;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key,
                                       std::uint64_t fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& value = it->second;
    std::uint64_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ParseError(origin_ + ": key '" + key +
                         "': expected a non-negative integer, got '" + value + "'");
    }
    return parsed;
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& value = it->second;
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw ParseError(origin_ + ": key '" + key + "': expected a boolean, got '" +
                     value + "'");
}

std::vector<std::string> KeyValueConfig::get_list(const std::string& key) const {
    std::vector<std::string> out;
    auto it = entries_.find(key);
    if (it == entries_.end() || it->second.empty()) {
        return out;
    }
    std::string_view rest = it->second;
    for (;;) {
        const std::size_t comma = rest.find(',');
        const std::string_view piece = trim_view(rest.substr(0, comma));
        if (piece.empty()) {
            throw ParseError(origin_ + ": key '" + key + "': empty list element");
        }
        out.emplace_back(piece);
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return out;
}

void KeyValueConfig::reject_unknown(const std::vector<std::string>& known,
                                    const std::vector<std::string>& known_prefixes) const {
    std::string unknown;
    for (const auto& [key, value] : entries_) {
        bool ok = false;
        for (const std::string& k : known) {
            if (key == k) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            for (const std::string& prefix : known_prefixes) {
                if (key.size() > prefix.size() && key.compare(0, prefix.size(), prefix) == 0) {
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) {
            if (!unknown.empty()) {
                unknown += ", ";
            }
            unknown += "'" + key + "'";
        }
    }
    if (!unknown.empty()) {
        throw ParseError(origin_ + ": unknown key(s): " + unknown);
    }
}

}  // namespace icsmine
