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

#include "icsmine/rulegen.hpp"

#include <algorithm>

#include "icsmine/error.hpp"

namespace icsmine {

void RuleParams::validate() const {
    if (min_confidence.num() == 0 || min_confidence > Ratio(1, 1)) {
        throw Error("min_confidence must be in (0, 1], got " + min_confidence.str());
    }
    if (min_antecedent_size < 1) {
        throw Error("min_antecedent_size must be at least 1");
    }
    if (max_antecedent_size && *max_antecedent_size < min_antecedent_size) {
        throw Error("max_antecedent_size must be >= min_antecedent_size");
    }
}

std::size_t SupportLookup::IdVecHash::operator()(const std::vector<ItemId>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (ItemId id : v) {
        h ^= id;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

SupportLookup::SupportLookup(const MineResult& result)
    : result_(&result), ranks_(result.catalog.canonical_ranks()) {
    counts_.reserve(result.itemsets.size() * 2);
    for (const FrequentItemset& fi : result.itemsets) {
        counts_.emplace(fi.items, fi.count);
    }
}

std::optional<std::uint64_t> SupportLookup::count_of(
    const std::vector<ItemId>& items) const {
    auto it = counts_.find(items);
    if (it == counts_.end()) {
        return std::nullopt;
    }
    return it->second;
}

Ratio confidence(const Itemset& antecedent, const Item& consequent,
                 const SupportLookup& supports) {
    const ItemCatalog& catalog = supports.catalog();
    const auto& ranks = supports.ranks();

    auto ids_of = [&](const Itemset& set) {
        std::vector<ItemId> ids;
        ids.reserve(set.size());
        for (const Item& item : set.items()) {
            std::optional<ItemId> id = catalog.find(item);
            if (!id) {
                throw MissingSupportError("no tabulated support involving item '" +
                                          item.text() + "'");
            }
            ids.push_back(*id);
        }
        std::sort(ids.begin(), ids.end(),
                  [&](ItemId a, ItemId b) { return ranks[a] < ranks[b]; });
        return ids;
    };

    const std::vector<ItemId> ante_ids = ids_of(antecedent);
    std::vector<Item> union_items(antecedent.items().begin(), antecedent.items().end());
    union_items.push_back(consequent);
    const std::vector<ItemId> union_ids =
        ids_of(Itemset::canonical(std::move(union_items)));

    const std::optional<std::uint64_t> ante_count = supports.count_of(ante_ids);
    if (!ante_count) {
        throw MissingSupportError("no tabulated support for antecedent {" +
                                  antecedent.text() + "}");
    }
    if (*ante_count == 0) {
        throw ZeroAntecedentSupportError("antecedent {" + antecedent.text() +
                                         "} never occurs; confidence is undefined");
    }
    const std::optional<std::uint64_t> union_count = supports.count_of(union_ids);
    if (!union_count) {
        throw MissingSupportError("no tabulated support for {" + antecedent.text() +
                                  "," + consequent.text() + "}");
    }
    return Ratio(*union_count, *ante_count);
}

RuleSet generate_rules(const MineResult& result, const RuleParams& params) {
    params.validate();
    const SupportLookup lookup(result);
    const ItemCatalog& catalog = result.catalog;

    std::vector<Rule> rules;
    std::vector<ItemId> ante_ids;
    for (const FrequentItemset& fi : result.itemsets) {
        if (fi.items.size() < 2) {
            continue;
        }
        const std::size_t ante_size = fi.items.size() - 1;
        if (ante_size < params.min_antecedent_size ||
            (params.max_antecedent_size && ante_size > *params.max_antecedent_size)) {
            continue;
        }
        for (std::size_t drop = 0; drop < fi.items.size(); ++drop) {
            ante_ids.clear();
            for (std::size_t i = 0; i < fi.items.size(); ++i) {
                if (i != drop) {
                    ante_ids.push_back(fi.items[i]);
                }
            }
            const std::optional<std::uint64_t> ante_count = lookup.count_of(ante_ids);
            if (!ante_count) {
                std::vector<Item> items;
                for (ItemId id : ante_ids) items.push_back(catalog.item(id));
                throw MissingSupportError(
                    "mined output is missing the subset {" +
                    Itemset::canonical(std::move(items)).text() + "}");
            }
            if (Ratio(fi.count, *ante_count) < params.min_confidence) {
                continue;
            }
            std::vector<Item> ante_items;
            ante_items.reserve(ante_ids.size());
            for (ItemId id : ante_ids) {
                ante_items.push_back(catalog.item(id));
            }
            rules.emplace_back(Itemset::canonical(std::move(ante_items), *ante_count),
                               catalog.item(fi.items[drop]), fi.count, *ante_count,
                               result.dataset_size);
        }
    }
    return RuleSet(std::move(rules));
}

}  // namespace icsmine
