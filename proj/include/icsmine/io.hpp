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

#include <iosfwd>
#include <string>

#include "icsmine/dataset.hpp"
#include "icsmine/diff.hpp"
#include "icsmine/fpgrowth.hpp"
#include "icsmine/ruleset.hpp"

namespace icsmine {

// Transaction file: one line per transaction, the canonical comma-joined
// item list; an empty line is an empty transaction. Byte-stable given the
// same dataset.
void write_transactions(const Dataset& dataset, std::ostream& out);
void write_transactions_file(const Dataset& dataset, const std::string& path);
Dataset read_transactions(std::istream& in, const std::string& origin);
Dataset read_transactions_file(const std::string& path);

// Itemset file: "# transactions=N min_count=M" header, then one line per
// itemset, "items<TAB>count", canonical order.
void write_itemsets(const MineResult& result, std::ostream& out);
void write_itemsets_file(const MineResult& result, const std::string& path);
MineResult read_itemsets(std::istream& in, const std::string& origin);
MineResult read_itemsets_file(const std::string& path);

// Rule file: "# transactions=N" header, then one line per rule,
// "items => item<TAB>support_count<TAB>confidence" with the confidence
// written as the exact unreduced fraction support/antecedent so the counts
// round-trip. Canonical order.
struct RuleFile {
    RuleSet rules;
    std::uint64_t dataset_size = 0;  // 0 when the header was absent
};

void write_rules(const RuleSet& rules, std::uint64_t dataset_size, std::ostream& out);
void write_rules_file(const RuleSet& rules, std::uint64_t dataset_size,
                      const std::string& path);
RuleFile read_rules(std::istream& in, const std::string& origin);
RuleFile read_rules_file(const std::string& path);

// Line-delimited structured formats (one JSON object per line).
void write_rules_jsonl(const RuleSet& rules, std::uint64_t dataset_size,
                       std::ostream& out);
void write_report_jsonl(const DiffReport& report, std::ostream& out);

/// Writes via a temp file plus rename so readers never observe a partial
/// file. Throws Error on I/O failure.
void atomic_write_file(const std::string& path, const std::string& contents);

}  // namespace icsmine
