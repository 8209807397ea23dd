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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "icsmine/dataset.hpp"
#include "icsmine/error.hpp"
#include "icsmine/support.hpp"
#include "oracle.hpp"

using namespace icsmine;

namespace {

Dataset three_row_example() {
    // {A=On, B=Off}, {A=On, B=On}, {A=Off, B=Off}
    Dataset d;
    d.add_row({Item("A", "On"), Item("B", "Off")});
    d.add_row({Item("A", "On"), Item("B", "On")});
    d.add_row({Item("A", "Off"), Item("B", "Off")});
    return d;
}

}  // namespace

TEST_CASE("catalog interning is idempotent and capped at two states") {
    ItemCatalog catalog;
    const ItemId on = catalog.intern(Item("P101", "On"));
    const ItemId off = catalog.intern(Item("P101", "Off"));
    CHECK(on != off);
    CHECK(catalog.intern(Item("P101", "On")) == on);
    CHECK(catalog.item_count() == 2);
    CHECK(catalog.attribute_count() == 1);
    CHECK(catalog.attribute_of(on) == catalog.attribute_of(off));
    CHECK_THROWS_AS(catalog.intern(Item("P101", "Transition")), Error);
    CHECK(catalog.find(Item("P101", "Off")) == off);
    CHECK_FALSE(catalog.find(Item("P101", "Transition")).has_value());
    CHECK_FALSE(catalog.find(Item("FIT101", ">=0.5")).has_value());
}

TEST_CASE("canonical ranks order ids by item, not by interning order") {
    ItemCatalog catalog;
    const ItemId z = catalog.intern(Item("Z", "On"));
    const ItemId a = catalog.intern(Item("A", "On"));
    const ItemId a2 = catalog.intern(Item("A", "Off"));
    const auto ranks = catalog.canonical_ranks();
    REQUIRE(ranks.size() == 3);
    // Canonical item order: A=Off, A=On, Z=On.
    CHECK(ranks[a2] == 0);
    CHECK(ranks[a] == 1);
    CHECK(ranks[z] == 2);
    CHECK(catalog.attributes() == std::vector<std::string>{"A", "Z"});
}

TEST_CASE("rows are stored sorted and deduplicated") {
    Dataset d;
    d.add_row({Item("B", "On"), Item("A", "On"), Item("B", "On")});
    REQUIRE(d.size() == 1);
    const auto row = d.row(0);
    REQUIRE(row.size() == 2);
    CHECK(std::is_sorted(row.begin(), row.end()));
    const Itemset items = d.row_items(0);
    CHECK(items.text() == "A=On,B=On");
}

TEST_CASE("a row may not carry two states of one attribute") {
    Dataset d;
    CHECK_THROWS_AS(d.add_row({Item("MV101", "Open"), Item("MV101", "Close")}),
                    InconsistentItemsetError);
    // Same check on the id path, including non-adjacent ids.
    Dataset e;
    const ItemId a_on = e.intern(Item("A", "On"));
    const ItemId b_on = e.intern(Item("B", "On"));
    const ItemId a_off = e.intern(Item("A", "Off"));
    CHECK_THROWS_AS(e.add_row_ids({a_on, b_on, a_off}), InconsistentItemsetError);
    CHECK_THROWS_AS(e.add_row_ids({17}), Error);  // id out of range
    e.add_row_ids({b_on, a_on, a_on});
    REQUIRE(e.size() == 1);
    CHECK(e.row(0).size() == 2);
}

TEST_CASE("empty rows are valid transactions") {
    Dataset d;
    d.add_row({});
    d.add_row({Item("A", "On")});
    CHECK(d.size() == 2);
    CHECK(d.row(0).empty());
    CHECK(d.row_items(0).empty());
}

TEST_CASE("support on the three-row example") {
    const Dataset d = three_row_example();
    const auto s = support(Itemset::canonical({Item("A", "On"), Item("B", "Off")}), d);
    CHECK(s.count == 1);
    CHECK(s.dataset_size == 3);
    CHECK(s.fraction() == Ratio(1, 3));

    CHECK(support(Itemset::canonical({Item("A", "On")}), d).count == 2);
    CHECK(support(Itemset::canonical({Item("B", "Off")}), d).count == 2);

    // The empty itemset is contained in every transaction.
    CHECK(support(Itemset(), d).fraction() == Ratio(1, 1));

    // Items outside the vocabulary have support zero, not an error.
    CHECK(support(Itemset::canonical({Item("C", "On")}), d).count == 0);
    CHECK(support(Itemset::canonical({Item("A", "On"), Item("C", "On")}), d).count == 0);
}

TEST_CASE("support of an empty dataset is undefined") {
    Dataset d;
    CHECK_THROWS_AS(support(Itemset::canonical({Item("A", "On")}), d),
                    EmptyDatasetError);
    CHECK_THROWS_AS(support(Itemset(), d), EmptyDatasetError);
}

TEST_CASE("vertical index matches naive row scans") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 30; ++round) {
        const Dataset d = oracle::random_dataset(rng);
        if (d.empty()) continue;
        const VerticalIndex index(d);
        CHECK(index.dataset_size() == d.size());

        const std::size_t items = d.catalog().item_count();
        for (ItemId a = 0; a < items; ++a) {
            CHECK(index.count(std::vector<ItemId>{a}) ==
                  oracle::support_count(d, {a}));
            for (ItemId b = a + 1; b < items; ++b) {
                std::vector<ItemId> pair{a, b};
                CHECK(index.count(pair) == oracle::support_count(d, pair));
            }
        }
        CHECK(index.count({}) == d.size());
    }
}

TEST_CASE("vertical index bitmap width covers every row") {
    Dataset d;
    for (int i = 0; i < 130; ++i) {
        d.add_row({Item("A", i % 2 == 0 ? "On" : "Off")});
    }
    const VerticalIndex index(d);
    const ItemId on = *d.catalog().find(Item("A", "On"));
    CHECK(index.bitmap(on).size() == (130 + 63) / 64);
    CHECK(index.count(std::vector<ItemId>{on}) == 65);
}

TEST_CASE("check_rule reports exact counts") {
    const Dataset d = three_row_example();
    const VerticalIndex index(d);

    const Rule holds(Itemset::canonical({Item("A", "Off")}), Item("B", "Off"),
                     1, 1, 3);
    auto c = check_rule(holds, index);
    CHECK(c.antecedent_count == 1);
    CHECK(c.union_count == 1);
    CHECK(c.dataset_size == 3);
    CHECK(c.holds_at(Ratio(1, 1)));

    const Rule partial(Itemset::canonical({Item("A", "On")}), Item("B", "Off"),
                       1, 2, 3);
    c = check_rule(partial, index);
    CHECK(c.antecedent_count == 2);
    CHECK(c.union_count == 1);
    CHECK_FALSE(c.holds_at(Ratio(1, 1)));
    CHECK(c.holds_at(Ratio(1, 2)));

    // Foreign vocabulary: zero antecedent support fails every threshold.
    const Rule foreign(Itemset::canonical({Item("X", "On")}), Item("B", "Off"),
                       1, 1, 0);
    c = check_rule(foreign, index);
    CHECK(c.antecedent_count == 0);
    CHECK(c.union_count == 0);
    CHECK_FALSE(c.holds_at(Ratio(1, 2)));
}
