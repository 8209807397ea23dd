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

#include "icsmine/itemset.hpp"

#include <algorithm>

#include "icsmine/error.hpp"

namespace icsmine {

Itemset Itemset::canonical(std::vector<Item> items, std::uint64_t support_count) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    for (std::size_t i = 1; i < items.size(); ++i) {
        if (items[i].attribute() == items[i - 1].attribute()) {
            throw InconsistentItemsetError(
                "inconsistent itemset: attribute '" + items[i].attribute() +
                "' appears with states '" + items[i - 1].state() + "' and '" +
                items[i].state() + "'");
        }
    }
    Itemset set;
    set.items_ = std::move(items);
    set.support_count_ = support_count;
    return set;
}

bool Itemset::contains(const Item& item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::contains_attribute(const std::string& attribute) const {
    return std::any_of(items_.begin(), items_.end(), [&](const Item& i) {
        return i.attribute() == attribute;
    });
}

std::string Itemset::text() const {
    std::string out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += items_[i].text();
    }
    return out;
}

Itemset Itemset::with_support(std::uint64_t support_count) const {
    Itemset copy = *this;
    copy.support_count_ = support_count;
    return copy;
}

bool operator<(const Itemset& a, const Itemset& b) {
    if (a.items_.size() != b.items_.size()) {
        return a.items_.size() < b.items_.size();
    }
    return a.items_ < b.items_;
}

}  // namespace icsmine
