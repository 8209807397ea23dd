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

#include "icsmine/io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "icsmine/error.hpp"

namespace icsmine {

namespace {

std::uint64_t parse_count(std::string_view text, const std::string& context) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(context + ": expected a count, got '" + std::string(text) +
                         "'");
    }
    return value;
}

std::vector<Item> parse_item_list(std::string_view text, const std::string& context) {
    std::vector<Item> items;
    if (text.empty()) {
        return items;
    }
    for (;;) {
        const std::size_t comma = text.find(',');
        const std::string_view piece = text.substr(0, comma);
        try {
            items.push_back(Item::parse(piece));
        } catch (const Error& e) {
            throw ParseError(context + ": " + e.what());
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return items;
}

/// "# key=value key=value" metadata lines at the top of itemset and rule
/// files.
void parse_header_line(std::string_view line,
                       std::map<std::string, std::uint64_t>& meta,
                       const std::string& context) {
    line.remove_prefix(1);  // '#'
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) {
            continue;  // free-form comment text
        }
        meta[token.substr(0, eq)] =
            parse_count(std::string_view(token).substr(eq + 1), context);
    }
}

}  // namespace

void write_transactions(const Dataset& dataset, std::ostream& out) {
    std::string buffer;
    for (std::size_t r = 0; r < dataset.size(); ++r) {
        buffer.clear();
        buffer += dataset.row_items(r).text();
        buffer += '\n';
        out << buffer;
    }
}

void write_transactions_file(const Dataset& dataset, const std::string& path) {
    std::ostringstream out;
    write_transactions(dataset, out);
    atomic_write_file(path, out.str());
}

Dataset read_transactions(std::istream& in, const std::string& origin) {
    Dataset dataset;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const std::string context = origin + ":" + std::to_string(line_number);
        try {
            dataset.add_row(parse_item_list(line, context));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(context + ": " + e.what());
        }
    }
    return dataset;
}

Dataset read_transactions_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_transactions(in, path);
}

void write_itemsets(const MineResult& result, std::ostream& out) {
    out << "# transactions=" << result.dataset_size
        << " min_count=" << result.min_count << "\n";
    std::string buffer;
    for (std::size_t i = 0; i < result.itemsets.size(); ++i) {
        buffer.clear();
        buffer += result.to_itemset(i).text();
        buffer += '\t';
        buffer += std::to_string(result.itemsets[i].count);
        buffer += '\n';
        out << buffer;
    }
}

void write_itemsets_file(const MineResult& result, const std::string& path) {
    std::ostringstream out;
    write_itemsets(result, out);
    atomic_write_file(path, out.str());
}

MineResult read_itemsets(std::istream& in, const std::string& origin) {
    MineResult result;
    std::map<std::string, std::uint64_t> meta;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::string context = origin + ":" + std::to_string(line_number);
        if (line.front() == '#') {
            parse_header_line(line, meta, context);
            continue;
        }
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(context + ": expected 'items<TAB>count'");
        }
        const std::vector<Item> items =
            parse_item_list(std::string_view(line).substr(0, tab), context);
        if (items.empty()) {
            throw ParseError(context + ": empty itemset");
        }
        FrequentItemset fi;
        fi.count = parse_count(std::string_view(line).substr(tab + 1), context);
        fi.items.reserve(items.size());
        try {
            for (const Item& item : items) {
                fi.items.push_back(result.catalog.intern(item));
            }
        } catch (const Error& e) {
            throw ParseError(context + ": " + e.what());
        }
        std::sort(fi.items.begin(), fi.items.end());
        if (std::adjacent_find(fi.items.begin(), fi.items.end()) != fi.items.end()) {
            throw ParseError(context + ": duplicate item in itemset");
        }
        std::vector<std::uint32_t> attrs;
        attrs.reserve(fi.items.size());
        for (const ItemId id : fi.items) {
            attrs.push_back(result.catalog.attribute_of(id));
        }
        std::sort(attrs.begin(), attrs.end());
        if (std::adjacent_find(attrs.begin(), attrs.end()) != attrs.end()) {
            throw ParseError(context + ": two states of one attribute in itemset");
        }
        result.itemsets.push_back(std::move(fi));
    }
    result.dataset_size = meta.count("transactions") ? meta["transactions"] : 0;
    result.min_count = meta.count("min_count") ? meta["min_count"] : 0;

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
    auto same = [](const FrequentItemset& a, const FrequentItemset& b) {
        return a.items == b.items;
    };
    if (std::adjacent_find(result.itemsets.begin(), result.itemsets.end(), same) !=
        result.itemsets.end()) {
        throw ParseError(origin + ": duplicate itemset lines");
    }
    return result;
}

MineResult read_itemsets_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_itemsets(in, path);
}

void write_rules(const RuleSet& rules, std::uint64_t dataset_size, std::ostream& out) {
    if (dataset_size > 0) {
        out << "# transactions=" << dataset_size << "\n";
    }
    std::string buffer;
    for (const Rule& rule : rules) {
        buffer.clear();
        buffer += rule.antecedent().text();
        buffer += " => ";
        buffer += rule.consequent().text();
        buffer += '\t';
        buffer += std::to_string(rule.support_count());
        buffer += '\t';
        buffer += std::to_string(rule.support_count());
        buffer += '/';
        buffer += std::to_string(rule.antecedent_count());
        buffer += '\n';
        out << buffer;
    }
}

void write_rules_file(const RuleSet& rules, std::uint64_t dataset_size,
                      const std::string& path) {
    std::ostringstream out;
    write_rules(rules, dataset_size, out);
    atomic_write_file(path, out.str());
}

RuleFile read_rules(std::istream& in, const std::string& origin) {
    RuleFile file;
    std::map<std::string, std::uint64_t> meta;
    std::vector<Rule> rules;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const std::string context = origin + ":" + std::to_string(line_number);
        if (line.front() == '#') {
            parse_header_line(line, meta, context);
            continue;
        }
        const std::string_view view(line);
        const std::size_t tab1 = view.find('\t');
        const std::size_t tab2 =
            tab1 == std::string_view::npos ? tab1 : view.find('\t', tab1 + 1);
        if (tab2 == std::string_view::npos) {
            throw ParseError(context +
                             ": expected 'items => item<TAB>count<TAB>confidence'");
        }
        const std::string_view rule_text = view.substr(0, tab1);
        const std::size_t arrow = rule_text.find(" => ");
        if (arrow == std::string_view::npos) {
            throw ParseError(context + ": no ' => ' separator");
        }
        const std::vector<Item> ante_items =
            parse_item_list(rule_text.substr(0, arrow), context);
        std::vector<Item> consequent_items =
            parse_item_list(rule_text.substr(arrow + 4), context);
        if (consequent_items.size() != 1) {
            throw ParseError(context + ": consequent must be a single item");
        }
        const std::uint64_t support_count =
            parse_count(view.substr(tab1 + 1, tab2 - tab1 - 1), context);

        const std::string_view conf = view.substr(tab2 + 1);
        std::uint64_t conf_num = 0;
        std::uint64_t conf_den = 0;
        const std::size_t slash = conf.find('/');
        if (slash == std::string_view::npos) {
            // A bare "1" means the antecedent count equals the support count.
            if (conf != "1") {
                throw ParseError(context +
                                 ": confidence must be 'support/antecedent' or '1'");
            }
            conf_num = conf_den = support_count;
        } else {
            conf_num = parse_count(conf.substr(0, slash), context);
            conf_den = parse_count(conf.substr(slash + 1), context);
        }
        if (conf_num != support_count) {
            throw ParseError(context + ": confidence numerator " +
                             std::to_string(conf_num) +
                             " does not match the support count " +
                             std::to_string(support_count));
        }
        const std::uint64_t dataset_size =
            meta.count("transactions") ? meta["transactions"] : 0;
        try {
            Rule rule(Itemset::canonical(ante_items, conf_den),
                      consequent_items.front(), support_count, conf_den, dataset_size);
            rules.push_back(std::move(rule));
        } catch (const Error& e) {
            throw ParseError(context + ": " + e.what());
        }
    }
    const std::size_t parsed = rules.size();
    file.rules = RuleSet(std::move(rules));
    if (file.rules.size() != parsed) {
        throw ParseError(origin + ": duplicate rule lines");
    }
    file.dataset_size = meta.count("transactions") ? meta["transactions"] : 0;
    return file;
}

RuleFile read_rules_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path + "'");
    }
    return read_rules(in, path);
}

void write_rules_jsonl(const RuleSet& rules, std::uint64_t dataset_size,
                       std::ostream& out) {
    for (const Rule& rule : rules) {
        nlohmann::json j;
        std::vector<std::string> antecedent;
        antecedent.reserve(rule.antecedent().size());
        for (const Item& item : rule.antecedent().items()) {
            antecedent.push_back(item.text());
        }
        j["antecedent"] = antecedent;
        j["consequent"] = rule.consequent().text();
        j["support_count"] = rule.support_count();
        j["antecedent_count"] = rule.antecedent_count();
        if (dataset_size > 0) {
            j["dataset_size"] = dataset_size;
        }
        out << j.dump() << "\n";
    }
}

void write_report_jsonl(const DiffReport& report, std::ostream& out) {
    nlohmann::json summary;
    summary["attack_rules"] = report.attack_rule_count;
    summary["normal_rules"] = report.normal_rule_count;
    summary["diff"] = report.diff_count;
    summary["overlap"] = report.overlap_count;
    summary["attributes_only_in_attack"] = report.attributes_only_in_attack;
    summary["attributes_only_in_normal"] = report.attributes_only_in_normal;
    summary["foreign_attribute_rules"] = report.foreign_attribute_rule_count;
    out << summary.dump() << "\n";
    for (const auto& [size, count] : report.per_size_tally) {
        nlohmann::json j;
        j["antecedent_size"] = size;
        j["count"] = count;
        auto it = report.samples.find(size);
        j["samples"] = it == report.samples.end() ? std::vector<std::string>{}
                                                  : it->second;
        out << j.dump() << "\n";
    }
}

void atomic_write_file(const std::string& path, const std::string& contents) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write '" + tmp + "'");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw Error("short write to '" + tmp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw Error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

}  // namespace icsmine
