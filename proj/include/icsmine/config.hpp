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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace icsmine {

/// Flat key/value configuration file:
///
///   # comment
///   flow_threshold = 0.5
///   attributes = FIT101,MV101,P101
///
/// Keys are unique; values keep internal spaces but are trimmed at the
/// ends. Consumers validate their own schema and reject keys they do not
/// know, so typos fail loudly instead of silently using a default.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;

    std::string get_string(const std::string& key, std::string fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    /// Comma-separated list; empty value yields an empty list.
    std::vector<std::string> get_list(const std::string& key) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }
    const std::string& origin() const { return origin_; }

    /// Throws listing every key that is neither in `known` nor carries one
    /// of the `known_prefixes` (for families like "pair." and "code.").
    void reject_unknown(const std::vector<std::string>& known,
                        const std::vector<std::string>& known_prefixes) const;

private:
    std::map<std::string, std::string> entries_;
    std::string origin_ = "<none>";
};

}  // namespace icsmine
