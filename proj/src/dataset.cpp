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

#include "icsmine/dataset.hpp"

#include <algorithm>
#include <numeric>

#include "icsmine/error.hpp"

namespace icsmine {

ItemId ItemCatalog::intern(const Item& item) {
    std::string text = item.text();
    if (auto it = by_text_.find(text); it != by_text_.end()) {
        return it->second;
    }
    std::uint32_t attr_id;
    if (auto it = attribute_ids_.find(item.attribute()); it != attribute_ids_.end()) {
        attr_id = it->second;
        if (states_per_attribute_[attr_id] >= 2) {
            throw Error("attribute '" + item.attribute() +
                        "' has more than two states; '" + item.state() +
                        "' would be the third");
        }
    } else {
        attr_id = std::uint32_t(attribute_ids_.size());
        attribute_ids_.emplace(item.attribute(), attr_id);
        states_per_attribute_.push_back(0);
    }
    ++states_per_attribute_[attr_id];
    ItemId id = ItemId(items_.size());
    items_.push_back(item);
    attribute_of_.push_back(attr_id);
    by_text_.emplace(std::move(text), id);
    return id;
}

std::optional<ItemId> ItemCatalog::find(const Item& item) const {
    auto it = by_text_.find(item.text());
    if (it == by_text_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::uint32_t> ItemCatalog::canonical_ranks() const {
    std::vector<ItemId> order(items_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](ItemId a, ItemId b) { return items_[a] < items_[b]; });
    std::vector<std::uint32_t> ranks(items_.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
        ranks[order[r]] = r;
    }
    return ranks;
}

std::vector<std::string> ItemCatalog::attributes() const {
    std::vector<std::string> names(attribute_ids_.size());
    for (const auto& [name, id] : attribute_ids_) {
        names[id] = name;
    }
    std::sort(names.begin(), names.end());
    return names;
}

void Dataset::add_row(const std::vector<Item>& items) {
    std::vector<ItemId> ids;
    ids.reserve(items.size());
    for (const Item& item : items) {
        ids.push_back(catalog_.intern(item));
    }
    add_row_ids(std::move(ids));
}

void Dataset::add_row_ids(std::vector<ItemId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!ids.empty() && ids.back() >= catalog_.item_count()) {
        throw Error("row " + std::to_string(rows_.size()) +
                    ": item id out of range");
    }
    std::vector<std::uint32_t> attrs;
    attrs.reserve(ids.size());
    for (ItemId id : ids) {
        attrs.push_back(catalog_.attribute_of(id));
    }
    std::sort(attrs.begin(), attrs.end());
    if (std::adjacent_find(attrs.begin(), attrs.end()) != attrs.end()) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                if (catalog_.attribute_of(ids[i]) == catalog_.attribute_of(ids[j])) {
                    throw InconsistentItemsetError(
                        "row " + std::to_string(rows_.size()) + ": attribute '" +
                        catalog_.item(ids[i]).attribute() + "' appears twice");
                }
            }
        }
    }
    rows_.push_back(std::move(ids));
}

Itemset Dataset::row_items(std::size_t index) const {
    std::vector<Item> items;
    items.reserve(rows_[index].size());
    for (ItemId id : rows_[index]) {
        items.push_back(catalog_.item(id));
    }
    return Itemset::canonical(std::move(items));
}

}  // namespace icsmine
