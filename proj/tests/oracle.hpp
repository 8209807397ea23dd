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

// Brute-force reference implementations the real miner and rule generator
// are checked against. Deliberately naive: support comes from scanning
// every transaction with std::includes, itemsets come from enumerating the
// whole per-attribute state space, and rules from trying every (Z, y)
// split. Nothing here touches the FP-tree, the bitmap index, or the simd
// kernels.

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "icsmine/dataset.hpp"
#include "icsmine/fpgrowth.hpp"
#include "icsmine/ratio.hpp"

namespace oracle {

using icsmine::Dataset;
using icsmine::FrequentItemset;
using icsmine::Item;
using icsmine::ItemId;
using icsmine::Ratio;

inline std::uint64_t support_count(const Dataset& dataset,
                                   const std::vector<ItemId>& sorted_ids) {
    std::uint64_t count = 0;
    for (std::size_t r = 0; r < dataset.size(); ++r) {
        const auto row = dataset.row(r);
        if (std::includes(row.begin(), row.end(), sorted_ids.begin(),
                          sorted_ids.end())) {
            ++count;
        }
    }
    return count;
}

/// Every nonempty itemset with at most one state per attribute whose count
/// meets min_count, in the miner's canonical order.
inline std::vector<FrequentItemset> frequent_itemsets(const Dataset& dataset,
                                                      std::uint64_t min_count) {
    const auto& catalog = dataset.catalog();
    // Group item ids by attribute.
    std::vector<std::vector<ItemId>> by_attribute(catalog.attribute_count());
    for (ItemId id = 0; id < catalog.item_count(); ++id) {
        by_attribute[catalog.attribute_of(id)].push_back(id);
    }

    std::vector<FrequentItemset> out;
    std::vector<ItemId> chosen;
    auto recurse = [&](auto&& self, std::size_t attr) -> void {
        if (attr == by_attribute.size()) {
            if (chosen.empty()) {
                return;
            }
            std::vector<ItemId> ids = chosen;
            std::sort(ids.begin(), ids.end());
            const std::uint64_t count = support_count(dataset, ids);
            if (count >= min_count) {
                out.push_back(FrequentItemset{ids, count});
            }
            return;
        }
        self(self, attr + 1);  // attribute absent
        for (ItemId id : by_attribute[attr]) {
            chosen.push_back(id);
            self(self, attr + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);

    const std::vector<std::uint32_t> ranks = catalog.canonical_ranks();
    for (FrequentItemset& fi : out) {
        std::sort(fi.items.begin(), fi.items.end(),
                  [&](ItemId a, ItemId b) { return ranks[a] < ranks[b]; });
    }
    std::sort(out.begin(), out.end(),
              [&](const FrequentItemset& a, const FrequentItemset& b) {
                  if (a.items.size() != b.items.size()) {
                      return a.items.size() < b.items.size();
                  }
                  return std::lexicographical_compare(
                      a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                      [&](ItemId x, ItemId y) { return ranks[x] < ranks[y]; });
              });
    return out;
}

struct OracleRule {
    std::vector<ItemId> antecedent;  // sorted by id
    ItemId consequent;
    std::uint64_t union_count;
    std::uint64_t antecedent_count;
};

/// Every rule (Z minus y => y) over itemsets Z of size >= 2 meeting
/// min_count, filtered by exact-rational confidence. Counts recomputed by
/// scanning, not taken from the itemset list.
inline std::vector<OracleRule> rules(const Dataset& dataset, std::uint64_t min_count,
                                     const Ratio& min_confidence,
                                     std::size_t min_antecedent = 1,
                                     std::size_t max_antecedent = SIZE_MAX) {
    std::vector<OracleRule> out;
    for (const FrequentItemset& fi : frequent_itemsets(dataset, min_count)) {
        if (fi.items.size() < 2) {
            continue;
        }
        const std::size_t ante_size = fi.items.size() - 1;
        if (ante_size < min_antecedent || ante_size > max_antecedent) {
            continue;
        }
        for (std::size_t drop = 0; drop < fi.items.size(); ++drop) {
            OracleRule rule;
            for (std::size_t i = 0; i < fi.items.size(); ++i) {
                if (i != drop) {
                    rule.antecedent.push_back(fi.items[i]);
                }
            }
            std::sort(rule.antecedent.begin(), rule.antecedent.end());
            rule.consequent = fi.items[drop];
            std::vector<ItemId> whole = rule.antecedent;
            whole.push_back(rule.consequent);
            std::sort(whole.begin(), whole.end());
            rule.union_count = support_count(dataset, whole);
            rule.antecedent_count = support_count(dataset, rule.antecedent);
            if (rule.antecedent_count == 0) {
                continue;
            }
            if (Ratio(rule.union_count, rule.antecedent_count) >= min_confidence) {
                out.push_back(std::move(rule));
            }
        }
    }
    return out;
}

/// Canonical key string for an oracle rule, identical in shape to
/// Rule::key().
inline std::string rule_key(const Dataset& dataset, const OracleRule& rule) {
    std::vector<Item> items;
    for (ItemId id : rule.antecedent) {
        items.push_back(dataset.catalog().item(id));
    }
    std::sort(items.begin(), items.end());
    std::string key;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) key += ',';
        key += items[i].text();
    }
    key += "=>";
    key += dataset.catalog().item(rule.consequent).text();
    return key;
}

/// Random small dataset: up to max_attrs binary attributes, up to max_rows
/// transactions, attributes occasionally missing from a row.
inline Dataset random_dataset(std::mt19937& rng, std::size_t max_attrs = 8,
                              std::size_t max_rows = 12) {
    const std::size_t attrs = 1 + rng() % max_attrs;
    const std::size_t rows = 1 + rng() % max_rows;
    const char* states[2] = {"On", "Off"};
    Dataset dataset;
    for (std::size_t r = 0; r < rows; ++r) {
        std::vector<Item> items;
        for (std::size_t a = 0; a < attrs; ++a) {
            if (rng() % 10 == 0) {
                continue;  // attribute missing from this transaction
            }
            items.emplace_back(std::string(1, static_cast<char>('A' + a)),
                               states[rng() % 2]);
        }
        dataset.add_row(items);
    }
    return dataset;
}

}  // namespace oracle
