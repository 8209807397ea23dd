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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "icsmine/rule.hpp"

namespace icsmine {

/// A canonical, order-independent collection of rules with set semantics on
/// the structural key (antecedent, consequent). Support and confidence are
/// payload, not identity: inserting a rule whose key is already present is
/// a no-op and the first metrics win.
///
/// Iteration is deterministic: antecedent size first, then lexicographic
/// key order.
class RuleSet {
public:
    RuleSet() = default;
    explicit RuleSet(std::vector<Rule> rules);

    /// Returns false when the key was already present.
    bool insert(Rule rule);

    bool contains(const Rule& rule) const { return contains_key(rule.key()); }
    bool contains_key(std::string_view key) const;

    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }

    /// Rules in canonical order.
    const std::vector<Rule>& rules() const { return rules_; }

    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }

    /// Count of rules per antecedent size. Counts partition the set.
    std::map<std::size_t, std::uint64_t> tally_by_antecedent_size() const;

    /// Attributes mentioned by any rule, sorted. This is the vocabulary the
    /// differ compares when warning about alphabet mismatches.
    std::vector<std::string> attributes() const;

private:
    std::size_t lower_bound_index(std::size_t antecedent_size,
                                  std::string_view key) const;

    std::vector<Rule> rules_;  // sorted by (antecedent size, key), unique keys
};

}  // namespace icsmine
