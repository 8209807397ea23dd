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
#include <string>

#include "icsmine/item.hpp"
#include "icsmine/itemset.hpp"
#include "icsmine/ratio.hpp"

namespace icsmine {

/// An association rule: antecedent itemset implies a single consequent item.
/// Metrics are exact integer counts; support and confidence are derived
/// rationals, never stored as floats.
///
/// Rule identity is structural: the canonical (antecedent, consequent) pair.
/// The same rule mined from two datasets carries different counts but keys
/// equal, which is what rule-set difference operates on.
class Rule {
public:
    /// union_count is the support count of antecedent + consequent together.
    /// dataset_size may be 0 when unknown (rules parsed back from files).
    Rule(Itemset antecedent, Item consequent, std::uint64_t union_count,
         std::uint64_t antecedent_count, std::uint64_t dataset_size);

    const Itemset& antecedent() const { return antecedent_; }
    const Item& consequent() const { return consequent_; }
    std::size_t antecedent_size() const { return antecedent_.size(); }

    std::uint64_t support_count() const { return union_count_; }
    std::uint64_t antecedent_count() const { return antecedent_count_; }
    std::uint64_t dataset_size() const { return dataset_size_; }

    /// support_count / dataset_size. Requires dataset_size > 0.
    Ratio support() const;
    /// support_count / antecedent_count, exactly 1 iff the counts are equal.
    Ratio confidence() const { return Ratio(union_count_, antecedent_count_); }

    /// Canonical byte string, injective over (antecedent, consequent) pairs
    /// and stable across runs and platforms:
    ///   "FIT301<0.5,MV304=Close=>P302=Off"
    const std::string& key() const { return key_; }

    /// Human form: "MV304=Close, FIT301<0.5 -> P302=Off" rendered with the
    /// UTF-8 arrow used in reports.
    std::string display() const;

private:
    Itemset antecedent_;
    Item consequent_;
    std::uint64_t union_count_;
    std::uint64_t antecedent_count_;
    std::uint64_t dataset_size_;
    std::string key_;
};

/// Free-function spelling of rule.key().
inline const std::string& rule_key(const Rule& rule) { return rule.key(); }

}  // namespace icsmine
