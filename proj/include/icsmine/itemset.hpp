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
#include <vector>

#include "icsmine/item.hpp"

namespace icsmine {

/// A canonical (sorted, duplicate-free) set of items with an associated
/// support count. At most one state per attribute; two states of one
/// attribute never co-occur in a transaction, so such a set is rejected
/// as inconsistent rather than carried around with support zero.
class Itemset {
public:
    Itemset() = default;

    /// Sorts and deduplicates. Idempotent. Throws InconsistentItemsetError
    /// when two distinct states of one attribute are present.
    static Itemset canonical(std::vector<Item> items, std::uint64_t support_count = 0);

    const std::vector<Item>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    std::uint64_t support_count() const { return support_count_; }

    bool contains(const Item& item) const;
    bool contains_attribute(const std::string& attribute) const;

    /// Item texts joined by ',': "FIT301<0.5,MV304=Close". Empty set -> "".
    std::string text() const;

    /// Same items, different count. Canonical form is preserved.
    Itemset with_support(std::uint64_t support_count) const;

    /// Canonical order: size first, then lexicographic item sequence.
    friend bool operator<(const Itemset& a, const Itemset& b);
    friend bool operator==(const Itemset& a, const Itemset& b) {
        return a.items_ == b.items_;
    }

private:
    std::vector<Item> items_;
    std::uint64_t support_count_ = 0;
};

/// Free-function spelling of Itemset::canonical for call sites that read
/// better with a verb.
inline Itemset canonicalize(std::vector<Item> items, std::uint64_t support_count = 0) {
    return Itemset::canonical(std::move(items), support_count);
}

}  // namespace icsmine
