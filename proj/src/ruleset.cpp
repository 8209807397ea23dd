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

#include "icsmine/ruleset.hpp"

#include <algorithm>
#include <set>

namespace icsmine {

namespace {

bool rule_order(const Rule& a, const Rule& b) {
    if (a.antecedent_size() != b.antecedent_size()) {
        return a.antecedent_size() < b.antecedent_size();
    }
    return a.key() < b.key();
}

}  // namespace

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
    std::stable_sort(rules_.begin(), rules_.end(), rule_order);
    // Keep the first occurrence of each key.
    auto last = std::unique(rules_.begin(), rules_.end(),
                            [](const Rule& a, const Rule& b) { return a.key() == b.key(); });
    rules_.erase(last, rules_.end());
}

std::size_t RuleSet::lower_bound_index(std::size_t antecedent_size,
                                       std::string_view key) const {
    auto it = std::lower_bound(
        rules_.begin(), rules_.end(), std::make_pair(antecedent_size, key),
        [](const Rule& r, const std::pair<std::size_t, std::string_view>& probe) {
            if (r.antecedent_size() != probe.first) {
                return r.antecedent_size() < probe.first;
            }
            return std::string_view(r.key()) < probe.second;
        });
    return std::size_t(it - rules_.begin());
}

bool RuleSet::insert(Rule rule) {
    std::size_t idx = lower_bound_index(rule.antecedent_size(), rule.key());
    if (idx < rules_.size() && rules_[idx].key() == rule.key()) {
        return false;
    }
    rules_.insert(rules_.begin() + std::ptrdiff_t(idx), std::move(rule));
    return true;
}

bool RuleSet::contains_key(std::string_view key) const {
    // The key embeds the antecedent: items before "=>" separated by commas.
    auto arrow = key.find("=>");
    std::size_t size = 0;
    if (arrow != std::string_view::npos && arrow > 0) {
        size = 1 + std::size_t(std::count(key.begin(), key.begin() + std::ptrdiff_t(arrow), ','));
    }
    std::size_t idx = lower_bound_index(size, key);
    return idx < rules_.size() && rules_[idx].key() == key;
}

std::map<std::size_t, std::uint64_t> RuleSet::tally_by_antecedent_size() const {
    std::map<std::size_t, std::uint64_t> tally;
    for (const Rule& r : rules_) {
        ++tally[r.antecedent_size()];
    }
    return tally;
}

std::vector<std::string> RuleSet::attributes() const {
    std::set<std::string> attrs;
    for (const Rule& r : rules_) {
        for (const Item& i : r.antecedent().items()) {
            attrs.insert(i.attribute());
        }
        attrs.insert(r.consequent().attribute());
    }
    return {attrs.begin(), attrs.end()};
}

}  // namespace icsmine
