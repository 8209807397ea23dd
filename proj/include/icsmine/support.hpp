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
#include <span>
#include <vector>

#include "icsmine/dataset.hpp"
#include "icsmine/ratio.hpp"
#include "icsmine/rule.hpp"

namespace icsmine {

/// Vertical bitmap index: one bitmap per item, bit r set iff transaction r
/// contains the item. Support of an itemset is the popcount of the AND of
/// its item bitmaps, which is where the simd kernels earn their keep when
/// re-verifying hundreds of thousands of rules against historian-scale
/// datasets.
class VerticalIndex {
public:
    explicit VerticalIndex(const Dataset& dataset);

    std::size_t dataset_size() const { return rows_; }

    std::span<const std::uint64_t> bitmap(ItemId id) const {
        return {bitmaps_[id].data(), words_};
    }

    /// Transactions containing every listed item. Duplicates are harmless.
    /// Empty list counts every transaction.
    std::uint64_t count(std::span<const ItemId> items) const;

    /// Re-scoring helper for items that may be foreign to this dataset's
    /// catalog: unknown items have zero support by definition.
    std::uint64_t count_items(const std::vector<Item>& items) const;

private:
    const ItemCatalog* catalog_;
    std::size_t rows_ = 0;
    std::size_t words_ = 0;
    std::vector<std::vector<std::uint64_t>> bitmaps_;
};

struct SupportValue {
    std::uint64_t count = 0;
    std::uint64_t dataset_size = 0;

    Ratio fraction() const { return Ratio(count, dataset_size); }
};

/// Fraction of transactions containing the itemset, as an exact rational
/// with the raw count exposed. Throws EmptyDatasetError when the dataset
/// has no rows.
SupportValue support(const Itemset& itemset, const Dataset& dataset);

struct RuleCheck {
    std::uint64_t antecedent_count = 0;
    std::uint64_t union_count = 0;
    std::uint64_t dataset_size = 0;

    bool holds_at(const Ratio& min_confidence) const {
        return antecedent_count > 0 &&
               Ratio(union_count, antecedent_count) >= min_confidence;
    }
};

/// Exact antecedent and union counts of a rule against an indexed dataset.
/// Items absent from the dataset's vocabulary contribute zero support.
RuleCheck check_rule(const Rule& rule, const VerticalIndex& index);

}  // namespace icsmine
