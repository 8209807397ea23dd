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
#include <optional>
#include <unordered_map>
#include <vector>

#include "icsmine/fpgrowth.hpp"
#include "icsmine/ratio.hpp"
#include "icsmine/rule.hpp"
#include "icsmine/ruleset.hpp"

namespace icsmine {

struct RuleParams {
    /// Keep rules whose confidence is >= this. The default keeps only
    /// exact implications.
    Ratio min_confidence{1, 1};
    std::size_t min_antecedent_size = 1;
    /// No upper bound unless set.
    std::optional<std::size_t> max_antecedent_size;

    void validate() const;
};

/// Exact counts of mined itemsets, keyed by their canonically sorted ids.
/// Rule generation reads every antecedent count from here; a miss means
/// the miner's output was not downward closed and is reported as an error
/// rather than patched over.
class SupportLookup {
public:
    explicit SupportLookup(const MineResult& result);

    std::optional<std::uint64_t> count_of(const std::vector<ItemId>& items) const;

    const ItemCatalog& catalog() const { return result_->catalog; }
    std::uint64_t dataset_size() const { return result_->dataset_size; }
    const std::vector<std::uint32_t>& ranks() const { return ranks_; }

private:
    struct IdVecHash {
        std::size_t operator()(const std::vector<ItemId>& v) const;
    };

    const MineResult* result_;
    std::vector<std::uint32_t> ranks_;
    std::unordered_map<std::vector<ItemId>, std::uint64_t, IdVecHash> counts_;
};

/// Confidence of antecedent => consequent from tabulated counts:
/// count(antecedent + consequent) / count(antecedent), exact. Throws
/// MissingSupportError when either count is untabulated and
/// ZeroAntecedentSupportError when the antecedent never occurs.
Ratio confidence(const Itemset& antecedent, const Item& consequent,
                 const SupportLookup& supports);

/// Rules of the form (Z minus one item) => item over every mined itemset
/// of size >= 2, filtered by the confidence and antecedent-size bounds.
/// Output order is canonical regardless of input order.
RuleSet generate_rules(const MineResult& result, const RuleParams& params);

}  // namespace icsmine
