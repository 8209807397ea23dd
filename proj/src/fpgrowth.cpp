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

#include "icsmine/fpgrowth.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "icsmine/error.hpp"

namespace icsmine {

MiningParams MiningParams::from_fraction(Ratio fraction) {
    if (fraction.num() == 0 || fraction > Ratio(1, 1)) {
        throw Error("min_support fraction must be in (0, 1], got " + fraction.str());
    }
    MiningParams params;
    params.is_fraction_ = true;
    params.fraction_ = fraction;
    return params;
}

MiningParams MiningParams::from_count(std::uint64_t count) {
    if (count == 0) {
        throw Error("min_support count must be at least 1");
    }
    MiningParams params;
    params.is_fraction_ = false;
    params.count_ = count;
    return params;
}

MiningParams MiningParams::parse(std::string_view text) {
    if (text.find('.') != std::string_view::npos) {
        return from_fraction(Ratio::parse_decimal(text));
    }
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error("min_support must be a fraction like 0.007 or a count like 3164, got '" +
                    std::string(text) + "'");
    }
    return from_count(count);
}

std::uint64_t MiningParams::resolve_min_count(std::uint64_t dataset_size) const {
    if (dataset_size == 0) {
        throw EmptyDatasetError("cannot resolve a support threshold on an empty dataset");
    }
    if (!is_fraction_) {
        return count_;
    }
    return ceil_mul(fraction_, dataset_size);
}

std::string MiningParams::describe(std::uint64_t dataset_size) const {
    std::string out;
    if (is_fraction_) {
        out = fraction_.decimal_str();
        out += " (count ";
        out += std::to_string(resolve_min_count(dataset_size));
        out += " of ";
        out += std::to_string(dataset_size);
        out += ")";
    } else {
        out = "count ";
        out += std::to_string(count_);
        out += " of ";
        out += std::to_string(dataset_size);
    }
    return out;
}

Itemset MineResult::to_itemset(std::size_t index) const {
    const FrequentItemset& fi = itemsets.at(index);
    std::vector<Item> items;
    items.reserve(fi.items.size());
    for (ItemId id : fi.items) {
        items.push_back(catalog.item(id));
    }
    return Itemset::canonical(std::move(items), fi.count);
}

namespace detail {

Tree::Tree() {
    nodes.push_back(TreeNode{npos32, npos32, npos32, npos32, npos32, 0});
}

void Tree::insert_path(const std::uint32_t* path, std::size_t len, std::uint64_t count) {
    std::uint32_t cur = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const std::uint32_t slot = path[i];
        std::uint32_t child = nodes[cur].first_child;
        while (child != npos32 && nodes[child].item_slot != slot) {
            child = nodes[child].next_sibling;
        }
        if (child == npos32) {
            child = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(TreeNode{slot, cur, npos32, nodes[cur].first_child,
                                     slots[slot].head, 0});
            nodes[cur].first_child = child;
            slots[slot].head = child;
        }
        nodes[child].count += count;
        cur = child;
    }
}

Tree Tree::conditional(std::uint32_t slot, std::uint64_t min_count) const {
    std::vector<std::uint64_t> local(slots.size(), 0);
    for (std::uint32_t n = slots[slot].head; n != npos32; n = nodes[n].header_next) {
        const std::uint64_t count = nodes[n].count;
        for (std::uint32_t p = nodes[n].parent; p != 0; p = nodes[p].parent) {
            local[nodes[p].item_slot] += count;
        }
    }

    Tree cond;
    std::vector<std::uint32_t> remap(slots.size(), npos32);
    for (std::uint32_t k = 0; k < slots.size(); ++k) {
        if (local[k] >= min_count) {
            remap[k] = static_cast<std::uint32_t>(cond.slots.size());
            cond.slots.push_back(HeaderSlot{slots[k].item, local[k], npos32});
        }
    }
    if (cond.slots.empty()) {
        return cond;
    }

    std::vector<std::uint32_t> path;
    for (std::uint32_t n = slots[slot].head; n != npos32; n = nodes[n].header_next) {
        path.clear();
        for (std::uint32_t p = nodes[n].parent; p != 0; p = nodes[p].parent) {
            if (remap[nodes[p].item_slot] != npos32) {
                path.push_back(remap[nodes[p].item_slot]);
            }
        }
        if (!path.empty()) {
            std::reverse(path.begin(), path.end());
            cond.insert_path(path.data(), path.size(), nodes[n].count);
        }
    }
    return cond;
}

namespace {

// Root tree: count items, keep the frequent ones ordered by descending
// frequency (canonical item order on ties), re-insert each transaction
// filtered to that alphabet.
Tree build_root(const Dataset& dataset, std::uint64_t min_count) {
    const ItemCatalog& catalog = dataset.catalog();
    std::vector<std::uint64_t> freq(catalog.item_count(), 0);
    for (std::size_t r = 0; r < dataset.size(); ++r) {
        for (ItemId id : dataset.row(r)) {
            ++freq[id];
        }
    }

    const std::vector<std::uint32_t> ranks = catalog.canonical_ranks();
    std::vector<ItemId> order;
    for (ItemId id = 0; id < freq.size(); ++id) {
        if (freq[id] >= min_count) {
            order.push_back(id);
        }
    }
    std::sort(order.begin(), order.end(), [&](ItemId a, ItemId b) {
        if (freq[a] != freq[b]) return freq[a] > freq[b];
        return ranks[a] < ranks[b];
    });

    Tree tree;
    std::vector<std::uint32_t> slot_of(catalog.item_count(), npos32);
    for (std::uint32_t s = 0; s < order.size(); ++s) {
        slot_of[order[s]] = s;
        tree.slots.push_back(HeaderSlot{order[s], freq[order[s]], npos32});
    }
    if (tree.slots.empty()) {
        return tree;
    }

    std::vector<std::uint32_t> path;
    for (std::size_t r = 0; r < dataset.size(); ++r) {
        path.clear();
        for (ItemId id : dataset.row(r)) {
            if (slot_of[id] != npos32) {
                path.push_back(slot_of[id]);
            }
        }
        if (path.empty()) {
            continue;
        }
        std::sort(path.begin(), path.end());
        tree.insert_path(path.data(), path.size(), 1);
    }
    return tree;
}

// Depth-first growth from the least frequent slot upward. Emits the
// suffix extended by each slot, then recurses into its conditional tree
// unless the size cap has been reached.
void grow(const Tree& tree, std::uint64_t min_count,
          const std::optional<std::size_t>& cap, std::vector<ItemId>& suffix,
          std::vector<FrequentItemset>& out) {
    for (std::uint32_t s = static_cast<std::uint32_t>(tree.slots.size()); s-- > 0;) {
        suffix.push_back(tree.slots[s].item);
        out.push_back(FrequentItemset{suffix, tree.slots[s].total});
        if (!cap || suffix.size() < *cap) {
            Tree cond = tree.conditional(s, min_count);
            if (!cond.slots.empty()) {
                grow(cond, min_count, cap, suffix, out);
            }
        }
        suffix.pop_back();
    }
}

}  // namespace

}  // namespace detail

FpTree::FpTree(const Dataset& dataset, std::uint64_t min_count) : dataset_(&dataset) {
    if (dataset.size() == 0) {
        throw EmptyDatasetError("cannot build a tree over an empty dataset");
    }
    tree_ = detail::build_root(dataset, min_count);
}

std::vector<std::pair<Item, std::uint64_t>> FpTree::header_totals() const {
    std::vector<std::pair<Item, std::uint64_t>> totals;
    totals.reserve(tree_.slots.size());
    for (const detail::HeaderSlot& slot : tree_.slots) {
        totals.emplace_back(dataset_->catalog().item(slot.item), slot.total);
    }
    return totals;
}

FpTree build_tree(const Dataset& dataset, const MiningParams& params) {
    return FpTree(dataset, params.resolve_min_count(dataset.size()));
}

MineResult mine(const Dataset& dataset, const MiningParams& params) {
    if (params.max_itemset_size && *params.max_itemset_size == 0) {
        throw Error("max_itemset_size must be at least 1");
    }
    const std::uint64_t min_count = params.resolve_min_count(dataset.size());
    const FpTree fptree(dataset, min_count);
    const detail::Tree& root = fptree.tree();

    // One task per header slot; each task mines its slot's conditional
    // subtree into a private bucket, so the merge order is fixed no
    // matter how tasks land on threads.
    const std::size_t tasks = root.slots.size();
    std::vector<std::vector<FrequentItemset>> buckets(tasks);
    auto run_task = [&](std::uint32_t s) {
        std::vector<ItemId> suffix{root.slots[s].item};
        std::vector<FrequentItemset>& out = buckets[s];
        out.push_back(FrequentItemset{suffix, root.slots[s].total});
        if (!params.max_itemset_size || *params.max_itemset_size > 1) {
            detail::Tree cond = root.conditional(s, min_count);
            if (!cond.slots.empty()) {
                detail::grow(cond, min_count, params.max_itemset_size, suffix, out);
            }
        }
    };

    const unsigned workers = std::max(1u, params.workers);
    if (workers == 1 || tasks <= 1) {
        for (std::uint32_t s = 0; s < tasks; ++s) {
            run_task(s);
        }
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::uint32_t s = next.fetch_add(1, std::memory_order_relaxed);
                if (s >= tasks) break;
                run_task(s);
            }
        };
        std::vector<std::thread> pool;
        const unsigned spawn = static_cast<unsigned>(
            std::min<std::size_t>(workers, tasks));
        pool.reserve(spawn - 1);
        for (unsigned t = 1; t < spawn; ++t) {
            pool.emplace_back(worker);
        }
        worker();
        for (std::thread& t : pool) {
            t.join();
        }
    }

    MineResult result;
    result.catalog = dataset.catalog();
    result.dataset_size = dataset.size();
    result.min_count = min_count;
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    result.itemsets.reserve(total);
    for (auto& b : buckets) {
        for (auto& fi : b) {
            result.itemsets.push_back(std::move(fi));
        }
    }

    const std::vector<std::uint32_t> ranks = result.catalog.canonical_ranks();
    for (FrequentItemset& fi : result.itemsets) {
        std::sort(fi.items.begin(), fi.items.end(),
                  [&](ItemId a, ItemId b) { return ranks[a] < ranks[b]; });
    }
    std::sort(result.itemsets.begin(), result.itemsets.end(),
              [&](const FrequentItemset& a, const FrequentItemset& b) {
                  if (a.items.size() != b.items.size()) {
                      return a.items.size() < b.items.size();
                  }
                  return std::lexicographical_compare(
                      a.items.begin(), a.items.end(), b.items.begin(), b.items.end(),
                      [&](ItemId x, ItemId y) { return ranks[x] < ranks[y]; });
              });
    return result;
}

}  // namespace icsmine
