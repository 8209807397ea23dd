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

#include "icsmine/support.hpp"

#include <algorithm>

#include "icsmine/error.hpp"
#include "icsmine/simd/kernels.hpp"

namespace icsmine {

VerticalIndex::VerticalIndex(const Dataset& dataset)
    : catalog_(&dataset.catalog()),
      rows_(dataset.size()),
      words_((dataset.size() + 63) / 64) {
    bitmaps_.assign(catalog_->item_count(), std::vector<std::uint64_t>(words_, 0));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (ItemId id : dataset.row(r)) {
            bitmaps_[id][r / 64] |= std::uint64_t(1) << (r % 64);
        }
    }
}

std::uint64_t VerticalIndex::count(std::span<const ItemId> items) const {
    if (items.empty()) {
        return rows_;
    }
    if (items.size() == 1) {
        return simd::popcount(bitmap(items[0]));
    }
    if (items.size() == 2) {
        return simd::and_popcount(bitmap(items[0]), bitmap(items[1]));
    }
    thread_local std::vector<std::uint64_t> scratch;
    scratch.assign(bitmaps_[items[0]].begin(), bitmaps_[items[0]].end());
    std::uint64_t count = 0;
    for (std::size_t i = 1; i < items.size(); ++i) {
        count = simd::and_into_popcount({scratch.data(), words_}, bitmap(items[i]));
        if (count == 0) {
            return 0;
        }
    }
    return count;
}

std::uint64_t VerticalIndex::count_items(const std::vector<Item>& items) const {
    std::vector<ItemId> ids;
    ids.reserve(items.size());
    for (const Item& item : items) {
        auto id = catalog_->find(item);
        if (!id.has_value()) {
            return 0;
        }
        ids.push_back(*id);
    }
    return count(ids);
}

SupportValue support(const Itemset& itemset, const Dataset& dataset) {
    if (dataset.empty()) {
        throw EmptyDatasetError("support over an empty dataset");
    }
    VerticalIndex index(dataset);
    return {index.count_items(itemset.items()), dataset.size()};
}

RuleCheck check_rule(const Rule& rule, const VerticalIndex& index) {
    RuleCheck check;
    check.dataset_size = index.dataset_size();
    check.antecedent_count = index.count_items(rule.antecedent().items());
    if (check.antecedent_count == 0) {
        return check;
    }
    std::vector<Item> with_consequent = rule.antecedent().items();
    with_consequent.push_back(rule.consequent());
    check.union_count = index.count_items(with_consequent);
    return check;
}

}  // namespace icsmine
