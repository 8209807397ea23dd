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
#include <string>
#include <vector>

#include "icsmine/dataset.hpp"
#include "icsmine/itemset.hpp"
#include "icsmine/ratio.hpp"

namespace icsmine {

/// Minimum support, given either as a fraction of the dataset or as an
/// absolute transaction count. A fraction resolves to ceil(f * |D|); an
/// itemset is frequent when its count is >= the resolved value (inclusive
/// threshold).
class MiningParams {
public:
    static MiningParams from_fraction(Ratio fraction);
    static MiningParams from_count(std::uint64_t count);

    /// "0.007" (contains '.') parses as a fraction, "3164" as a count.
    static MiningParams parse(std::string_view text);

    bool is_fraction() const { return is_fraction_; }
    Ratio fraction() const { return fraction_; }
    std::uint64_t absolute_count() const { return count_; }

    std::uint64_t resolve_min_count(std::uint64_t dataset_size) const;

    /// Threshold echoed as both fraction and count: "0.007 (count 35 of 5000)".
    std::string describe(std::uint64_t dataset_size) const;

    std::optional<std::size_t> max_itemset_size;
    unsigned workers = 1;

private:
    bool is_fraction_ = true;
    Ratio fraction_{7, 1000};  // 0.7%, the published default
    std::uint64_t count_ = 0;
};

/// Frequent itemset as dense ids, sorted canonically, with its exact count.
struct FrequentItemset {
    std::vector<ItemId> items;
    std::uint64_t count = 0;
};

/// Output of mine(): every itemset meeting the threshold, in canonical
/// order (size, then lexicographic item order), self-contained via a copy
/// of the dataset's catalog.
struct MineResult {
    std::vector<FrequentItemset> itemsets;
    ItemCatalog catalog;
    std::uint64_t dataset_size = 0;
    std::uint64_t min_count = 0;

    Itemset to_itemset(std::size_t index) const;
};

namespace detail {

inline constexpr std::uint32_t npos32 = 0xffffffffu;

struct TreeNode {
    std::uint32_t item_slot;
    std::uint32_t parent;
    std::uint32_t first_child;
    std::uint32_t next_sibling;
    std::uint32_t header_next;
    std::uint64_t count;
};

struct HeaderSlot {
    ItemId item;
    std::uint64_t total;
    std::uint32_t head;
};

/// Prefix tree over header slots. Slots are ordered by descending
/// frequency (ties by canonical item order) and every root-to-node path
/// lists slots strictly ascending, so common prefixes share nodes.
struct Tree {
    std::vector<TreeNode> nodes;   // nodes[0] is the root sentinel
    std::vector<HeaderSlot> slots;

    Tree();
    void insert_path(const std::uint32_t* path, std::size_t len, std::uint64_t count);

    /// Conditional tree for one slot: paths above its node chain,
    /// re-filtered at min_count. Empty slots means nothing frequent.
    Tree conditional(std::uint32_t slot, std::uint64_t min_count) const;
};

}  // namespace detail

/// FP-tree over a dataset at an absolute minimum count. Exposed for
/// structural inspection; mine() drives the recursion.
class FpTree {
public:
    FpTree(const Dataset& dataset, std::uint64_t min_count);

    /// Nodes excluding the root.
    std::size_t node_count() const { return tree_.nodes.size() - 1; }

    /// (item, frequency) per header slot, in tree order.
    std::vector<std::pair<Item, std::uint64_t>> header_totals() const;

    const detail::Tree& tree() const { return tree_; }

private:
    const Dataset* dataset_;
    detail::Tree tree_;
};

/// Convenience spelling matching the two-phase description of the
/// algorithm. Throws EmptyDatasetError on an empty dataset.
FpTree build_tree(const Dataset& dataset, const MiningParams& params);

/// All frequent itemsets with exact counts. Parallelism (params.workers)
/// fans out over header items; output is identical at any worker count.
MineResult mine(const Dataset& dataset, const MiningParams& params);

}  // namespace icsmine
