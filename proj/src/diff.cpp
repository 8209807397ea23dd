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

#include "icsmine/diff.hpp"

#include <algorithm>
#include <sstream>

namespace icsmine {

namespace {

std::vector<std::string> sorted_difference(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string describe_rule(const Rule& rule) {
    std::string out = rule.display();
    out += "   [count ";
    out += std::to_string(rule.support_count());
    if (rule.dataset_size() > 0) {
        out += "/";
        out += std::to_string(rule.dataset_size());
    }
    out += ", confidence ";
    out += rule.confidence().str();
    out += "]";
    return out;
}

void append_attribute_list(std::string& out, const char* label,
                           const std::vector<std::string>& attrs) {
    out += label;
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        out += i == 0 ? " " : ", ";
        out += attrs[i];
    }
    out += "\n";
}

}  // namespace

bool mentions_any_attribute(const Rule& rule,
                            const std::vector<std::string>& attributes) {
    if (std::binary_search(attributes.begin(), attributes.end(),
                           rule.consequent().attribute())) {
        return true;
    }
    for (const Item& item : rule.antecedent().items()) {
        if (std::binary_search(attributes.begin(), attributes.end(),
                               item.attribute())) {
            return true;
        }
    }
    return false;
}

DiffResult diff(const RuleSet& attack, const RuleSet& normal) {
    DiffResult result;
    result.attack_rule_count = attack.size();
    result.normal_rule_count = normal.size();

    std::vector<Rule> kept;
    for (const Rule& rule : attack) {
        if (!normal.contains_key(rule.key())) {
            kept.push_back(rule);
        }
    }
    result.overlap_count = attack.size() - kept.size();
    result.difference = RuleSet(std::move(kept));

    result.attributes_only_in_attack =
        sorted_difference(attack.attributes(), normal.attributes());
    result.attributes_only_in_normal =
        sorted_difference(normal.attributes(), attack.attributes());
    if (!result.attributes_only_in_attack.empty()) {
        for (const Rule& rule : result.difference) {
            if (mentions_any_attribute(rule, result.attributes_only_in_attack)) {
                ++result.foreign_attribute_rule_count;
            }
        }
    }
    return result;
}

std::vector<TaggedRule> symmetric_diff(const RuleSet& attack, const RuleSet& normal) {
    std::vector<TaggedRule> out;
    auto a = attack.begin();
    auto b = normal.begin();
    auto precedes = [](const Rule& x, const Rule& y) {
        if (x.antecedent_size() != y.antecedent_size()) {
            return x.antecedent_size() < y.antecedent_size();
        }
        return x.key() < y.key();
    };
    while (a != attack.end() && b != normal.end()) {
        if (a->key() == b->key()) {
            ++a;
            ++b;
        } else if (precedes(*a, *b)) {
            out.push_back(TaggedRule{*a, RuleOrigin::attack_only});
            ++a;
        } else {
            out.push_back(TaggedRule{*b, RuleOrigin::normal_only});
            ++b;
        }
    }
    for (; a != attack.end(); ++a) {
        out.push_back(TaggedRule{*a, RuleOrigin::attack_only});
    }
    for (; b != normal.end(); ++b) {
        out.push_back(TaggedRule{*b, RuleOrigin::normal_only});
    }
    return out;
}

DiffReport report(const DiffResult& result, std::size_t samples_per_size) {
    DiffReport rep;
    rep.attack_rule_count = result.attack_rule_count;
    rep.normal_rule_count = result.normal_rule_count;
    rep.diff_count = result.difference.size();
    rep.overlap_count = result.overlap_count;
    rep.per_size_tally = result.difference.tally_by_antecedent_size();
    for (const Rule& rule : result.difference) {
        std::vector<std::string>& bucket = rep.samples[rule.antecedent_size()];
        if (bucket.size() < samples_per_size) {
            bucket.push_back(describe_rule(rule));
        }
    }
    rep.attributes_only_in_attack = result.attributes_only_in_attack;
    rep.attributes_only_in_normal = result.attributes_only_in_normal;
    rep.foreign_attribute_rule_count = result.foreign_attribute_rule_count;
    return rep;
}

std::string DiffReport::to_text() const {
    std::ostringstream out;
    out << "attack rules:      " << attack_rule_count << "\n";
    out << "normal rules:      " << normal_rule_count << "\n";
    out << "attack-only rules: " << diff_count << " (overlap " << overlap_count
        << ")\n";
    if (!per_size_tally.empty()) {
        out << "by antecedent size:\n";
        for (const auto& [size, count] : per_size_tally) {
            out << "  " << size << ": " << count << "\n";
        }
    }
    if (!samples.empty()) {
        out << "samples:\n";
        for (const auto& [size, lines] : samples) {
            out << "  size " << size << ":\n";
            for (const std::string& line : lines) {
                out << "    " << line << "\n";
            }
        }
    }
    std::string text = out.str();
    if (!attributes_only_in_attack.empty()) {
        append_attribute_list(text, "warning: attributes only in attack rules:",
                              attributes_only_in_attack);
        text += "warning: " + std::to_string(foreign_attribute_rule_count) +
                " attack-only rule(s) mention them; their absence from the "
                "normal rules reflects vocabulary, not behaviour\n";
    }
    if (!attributes_only_in_normal.empty()) {
        append_attribute_list(text, "warning: attributes only in normal rules:",
                              attributes_only_in_normal);
    }
    return text;
}

std::string tally_text(const RuleSet& rules, std::size_t samples_per_size) {
    std::ostringstream out;
    out << "rules: " << rules.size() << "\n";
    const auto tally = rules.tally_by_antecedent_size();
    if (!tally.empty()) {
        out << "by antecedent size:\n";
        for (const auto& [size, count] : tally) {
            out << "  " << size << ": " << count << "\n";
        }
    }
    if (samples_per_size > 0 && !rules.empty()) {
        out << "samples:\n";
        std::size_t current_size = 0;
        std::size_t emitted = 0;
        bool first = true;
        for (const Rule& rule : rules) {
            if (first || rule.antecedent_size() != current_size) {
                current_size = rule.antecedent_size();
                emitted = 0;
                first = false;
                out << "  size " << current_size << ":\n";
            }
            if (emitted < samples_per_size) {
                out << "    " << describe_rule(rule) << "\n";
                ++emitted;
            }
        }
    }
    return out.str();
}

}  // namespace icsmine
