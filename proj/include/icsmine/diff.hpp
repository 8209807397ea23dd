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
#include <string>
#include <vector>

#include "icsmine/rule.hpp"
#include "icsmine/ruleset.hpp"

namespace icsmine {

/// Set difference attack \ normal over rule keys (antecedent and
/// consequent only; metrics are ignored for membership and the surviving
/// rules keep the attack-side metrics). Also records how the two rule
/// vocabularies relate, since a rule can be absent from the normal side
/// merely because an attribute never appears there.
struct DiffResult {
    RuleSet difference;
    std::uint64_t attack_rule_count = 0;
    std::uint64_t normal_rule_count = 0;
    std::uint64_t overlap_count = 0;
    std::vector<std::string> attributes_only_in_attack;
    std::vector<std::string> attributes_only_in_normal;
    /// Rules in the difference that mention an attribute the normal side
    /// never saw. Their absence from the normal rules says nothing about
    /// behaviour, only about vocabulary.
    std::uint64_t foreign_attribute_rule_count = 0;
};

DiffResult diff(const RuleSet& attack, const RuleSet& normal);

enum class RuleOrigin { attack_only, normal_only };

struct TaggedRule {
    Rule rule;
    RuleOrigin origin;
};

/// Both one-sided differences, merged in canonical rule order and tagged
/// with the side each rule came from.
std::vector<TaggedRule> symmetric_diff(const RuleSet& attack, const RuleSet& normal);

/// True when the rule's antecedent or consequent uses any of the given
/// attribute names (which must be sorted).
bool mentions_any_attribute(const Rule& rule, const std::vector<std::string>& attributes);

struct DiffReport {
    std::uint64_t attack_rule_count = 0;
    std::uint64_t normal_rule_count = 0;
    std::uint64_t diff_count = 0;
    std::uint64_t overlap_count = 0;
    std::map<std::size_t, std::uint64_t> per_size_tally;
    /// Up to samples_per_size display strings per antecedent size, in
    /// canonical order.
    std::map<std::size_t, std::vector<std::string>> samples;
    std::vector<std::string> attributes_only_in_attack;
    std::vector<std::string> attributes_only_in_normal;
    std::uint64_t foreign_attribute_rule_count = 0;

    std::string to_text() const;
};

DiffReport report(const DiffResult& result, std::size_t samples_per_size = 3);

/// Per-size tally plus sample rules for a single rule set, used when
/// reporting on one file rather than a comparison.
std::string tally_text(const RuleSet& rules, std::size_t samples_per_size = 3);

}  // namespace icsmine
