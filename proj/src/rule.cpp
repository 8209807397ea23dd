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

#include "icsmine/rule.hpp"

#include "icsmine/error.hpp"

namespace icsmine {

Rule::Rule(Itemset antecedent, Item consequent, std::uint64_t union_count,
           std::uint64_t antecedent_count, std::uint64_t dataset_size)
    : antecedent_(std::move(antecedent)),
      consequent_(std::move(consequent)),
      union_count_(union_count),
      antecedent_count_(antecedent_count),
      dataset_size_(dataset_size) {
    if (antecedent_.empty()) {
        throw Error("rule with empty antecedent");
    }
    if (antecedent_.contains_attribute(consequent_.attribute())) {
        throw Error("rule consequent attribute '" + consequent_.attribute() +
                    "' also appears in the antecedent");
    }
    if (antecedent_count_ == 0) {
        throw ZeroAntecedentSupportError("rule '" + antecedent_.text() + " => " +
                                         consequent_.text() +
                                         "' has zero antecedent support");
    }
    if (union_count_ > antecedent_count_) {
        throw Error("rule support count exceeds antecedent count");
    }
    if (dataset_size_ > 0 && antecedent_count_ > dataset_size_) {
        throw Error("rule antecedent count exceeds dataset size");
    }
    key_ = antecedent_.text() + "=>" + consequent_.text();
}

Ratio Rule::support() const {
    if (dataset_size_ == 0) {
        throw Error("rule support requested but dataset size is unknown");
    }
    return Ratio(union_count_, dataset_size_);
}

std::string Rule::display() const {
    std::string out;
    const auto& items = antecedent_.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += items[i].text();
    }
    out += " → ";
    out += consequent_.text();
    return out;
}

}  // namespace icsmine
