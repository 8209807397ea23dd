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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "icsmine/item.hpp"
#include "icsmine/itemset.hpp"

namespace icsmine {

using ItemId = std::uint32_t;

/// Dense item <-> id mapping shared by all transactions of a dataset.
/// Enforces the binary alphabet: at most two states may ever be registered
/// for one attribute. Immutable once the dataset is built; mining threads
/// share it read-only.
class ItemCatalog {
public:
    /// Registers the item if new. Throws when the attribute already carries
    /// two other states.
    ItemId intern(const Item& item);

    std::optional<ItemId> find(const Item& item) const;

    const Item& item(ItemId id) const { return items_[id]; }
    std::size_t item_count() const { return items_.size(); }
    std::size_t attribute_count() const { return attribute_ids_.size(); }

    /// Attribute index of an item, for one-state-per-attribute checks.
    std::uint32_t attribute_of(ItemId id) const { return attribute_of_[id]; }

    /// Rank permutation: rank(a) < rank(b) iff item(a) < item(b). Sorting
    /// ids by rank yields the canonical item order.
    std::vector<std::uint32_t> canonical_ranks() const;

    /// All attribute names, sorted.
    std::vector<std::string> attributes() const;

private:
    std::vector<Item> items_;
    std::vector<std::uint32_t> attribute_of_;
    std::unordered_map<std::string, ItemId> by_text_;
    std::unordered_map<std::string, std::uint32_t> attribute_ids_;
    std::vector<std::uint32_t> states_per_attribute_;
};

/// Transactions over a shared catalog. One row per historian sample after
/// discretization; each row holds at most one item per attribute, stored as
/// sorted ids. Row index equals position in the source dataset.
class Dataset {
public:
    /// Validates the one-item-per-attribute invariant.
    void add_row(const std::vector<Item>& items);

    /// Bulk path for already-interned ids (the transformer's hot loop).
    /// Sorts, dedups, and applies the same attribute check as add_row.
    void add_row_ids(std::vector<ItemId> ids);

    /// Pre-registers an item so transformers can intern the alphabet once
    /// and then feed rows by id.
    ItemId intern(const Item& item) { return catalog_.intern(item); }

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    std::span<const ItemId> row(std::size_t index) const { return rows_[index]; }

    /// Row as canonical items (sorted by item order, not by id).
    Itemset row_items(std::size_t index) const;

    const ItemCatalog& catalog() const { return catalog_; }

private:
    ItemCatalog catalog_;
    std::vector<std::vector<ItemId>> rows_;  // each sorted by id
};

}  // namespace icsmine
