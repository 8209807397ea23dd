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

#include "icsmine/transform.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "icsmine/csv.hpp"
#include "icsmine/config.hpp"
#include "icsmine/error.hpp"
#include "icsmine/simd/kernels.hpp"

namespace icsmine {

namespace {

std::string format_threshold(double threshold) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", threshold);
    return buffer;
}

const std::string kOpen = "Open";
const std::string kClose = "Close";
const std::string kTransition = "Transition";
const std::string kOn = "On";
const std::string kOff = "Off";

bool starts_with(const std::string& text, std::string_view prefix) {
    return text.size() >= prefix.size() &&
           text.compare(0, prefix.size(), prefix) == 0;
}

AttributeClass parse_class(const std::string& text, const std::string& context) {
    if (text == "flow") return AttributeClass::flow;
    if (text == "valve") return AttributeClass::valve;
    if (text == "pump") return AttributeClass::pump;
    throw ParseError(context + ": expected flow, valve, or pump, got '" + text + "'");
}

const char* class_name(AttributeClass c) {
    switch (c) {
        case AttributeClass::flow: return "flow";
        case AttributeClass::valve: return "valve";
        default: return "pump";
    }
}

}  // namespace

TransformConfig TransformConfig::swat_defaults() {
    TransformConfig config;
    config.selected_attributes = {"FIT101", "MV101", "P101",  "FIT201", "MV201",
                                  "P203",   "P205",  "FIT301", "MV301", "MV302",
                                  "MV303",  "MV304", "P302",  "FIT601", "P602"};
    config.valve_flow_pairing = {{"MV101", "FIT101"}, {"MV201", "FIT201"},
                                 {"MV301", "FIT301"}, {"MV302", "FIT301"},
                                 {"MV303", "FIT301"}, {"MV304", "FIT301"}};
    config.flow_threshold = 0.5;
    return config;
}

TransformConfig TransformConfig::simulator_defaults() {
    TransformConfig config;
    config.selected_attributes = {"FIT101", "MV101", "P101", "FIT201", "LIT101"};
    config.valve_flow_pairing = {{"MV101", "FIT101"}};
    config.flow_threshold = 0.5;
    config.attribute_thresholds = {{"LIT101", 850.0}};
    return config;
}

TransformConfig TransformConfig::from_file(const std::string& path) {
    const KeyValueConfig kv = KeyValueConfig::parse_file(path);
    kv.reject_unknown({"preset", "attributes", "flow_threshold", "drop_constant",
                       "timestamp_column", "label_column"},
                      {"threshold.", "class.", "pair.", "code.valve.", "code.pump."});

    const std::string preset = kv.get_string("preset", "swat");
    TransformConfig config;
    if (preset == "swat") {
        config = swat_defaults();
    } else if (preset == "simulator") {
        config = simulator_defaults();
    } else {
        throw ParseError(path + ": preset must be swat or simulator, got '" + preset +
                         "'");
    }

    if (kv.has("attributes")) {
        config.selected_attributes = kv.get_list("attributes");
    }
    config.flow_threshold = kv.get_double("flow_threshold", config.flow_threshold);
    config.drop_constant_attributes =
        kv.get_bool("drop_constant", config.drop_constant_attributes);
    config.timestamp_column = kv.get_string("timestamp_column", config.timestamp_column);
    config.label_column = kv.get_string("label_column", config.label_column);

    for (const auto& [key, value] : kv.entries()) {
        if (starts_with(key, "threshold.")) {
            config.attribute_thresholds[key.substr(10)] =
                kv.get_double(key, 0.0);
        } else if (starts_with(key, "class.")) {
            config.attribute_classes[key.substr(6)] =
                parse_class(value, path + ": key '" + key + "'");
        } else if (starts_with(key, "pair.")) {
            config.valve_flow_pairing[key.substr(5)] = value;
        } else if (starts_with(key, "code.valve.") || starts_with(key, "code.pump.")) {
            const bool valve = starts_with(key, "code.valve.");
            const std::string code_text = key.substr(11);
            int code = 0;
            auto [ptr, ec] = std::from_chars(
                code_text.data(), code_text.data() + code_text.size(), code);
            if (ec != std::errc() || ptr != code_text.data() + code_text.size()) {
                throw ParseError(path + ": key '" + key +
                                 "': code must be an integer");
            }
            (valve ? config.valve_codes : config.pump_codes)[code] = value;
        }
    }
    config.validate();
    return config;
}

void TransformConfig::validate() const {
    if (selected_attributes.empty()) {
        throw Error("no attributes selected");
    }
    std::vector<std::string> sorted = selected_attributes;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw Error("attribute '" + *dup + "' selected twice");
    }
    if (!(flow_threshold > 0) || !std::isfinite(flow_threshold)) {
        throw Error("flow_threshold must be positive and finite");
    }
    for (const auto& [attr, threshold] : attribute_thresholds) {
        if (!(threshold > 0) || !std::isfinite(threshold)) {
            throw Error("threshold." + attr + " must be positive and finite");
        }
    }
    for (const std::string& attr : selected_attributes) {
        class_of(attr);  // throws when unclassifiable
    }
    auto selected = [&](const std::string& name) {
        return std::find(selected_attributes.begin(), selected_attributes.end(),
                         name) != selected_attributes.end();
    };
    for (const auto& [valve, flow] : valve_flow_pairing) {
        if (selected(valve) && !selected(flow)) {
            throw Error("valve '" + valve + "' is paired to '" + flow +
                        "', which is not a selected attribute");
        }
    }
    for (const auto& [code, state] : valve_codes) {
        if (state != kOpen && state != kClose && state != kTransition) {
            throw Error("code.valve." + std::to_string(code) +
                        " must map to Open, Close, or Transition, got '" + state + "'");
        }
    }
    for (const auto& [code, state] : pump_codes) {
        if (state != kOn && state != kOff) {
            throw Error("code.pump." + std::to_string(code) +
                        " must map to On or Off, got '" + state + "'");
        }
    }
}

AttributeClass TransformConfig::class_of(const std::string& attribute) const {
    if (auto it = attribute_classes.find(attribute); it != attribute_classes.end()) {
        return it->second;
    }
    if (starts_with(attribute, "FIT") || starts_with(attribute, "LIT")) {
        return AttributeClass::flow;
    }
    if (starts_with(attribute, "MV")) {
        return AttributeClass::valve;
    }
    if (attribute.size() >= 2 && attribute[0] == 'P' &&
        std::all_of(attribute.begin() + 1, attribute.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        return AttributeClass::pump;
    }
    throw Error("cannot classify attribute '" + attribute + "'; set class." +
                attribute + " = flow|valve|pump");
}

double TransformConfig::threshold_for(const std::string& attribute) const {
    if (auto it = attribute_thresholds.find(attribute);
        it != attribute_thresholds.end()) {
        return it->second;
    }
    return flow_threshold;
}

std::string TransformConfig::describe() const {
    std::ostringstream out;
    out << "attributes = ";
    for (std::size_t i = 0; i < selected_attributes.size(); ++i) {
        if (i) out << ",";
        out << selected_attributes[i];
    }
    out << "\n";
    out << "flow_threshold = " << format_threshold(flow_threshold) << "\n";
    for (const auto& [attr, threshold] : attribute_thresholds) {
        out << "threshold." << attr << " = " << format_threshold(threshold) << "\n";
    }
    for (const auto& [attr, cls] : attribute_classes) {
        out << "class." << attr << " = " << class_name(cls) << "\n";
    }
    for (const auto& [valve, flow] : valve_flow_pairing) {
        out << "pair." << valve << " = " << flow << "\n";
    }
    for (const auto& [code, state] : valve_codes) {
        out << "code.valve." << code << " = " << state << "\n";
    }
    for (const auto& [code, state] : pump_codes) {
        out << "code.pump." << code << " = " << state << "\n";
    }
    out << "drop_constant = " << (drop_constant_attributes ? "true" : "false") << "\n";
    out << "timestamp_column = " << timestamp_column << "\n";
    out << "label_column = " << label_column << "\n";
    return out.str();
}

std::vector<RawRecord> ingest(const std::string& path, const TransformConfig& config) {
    config.validate();
    CsvReader reader(path);

    std::vector<std::size_t> indices;
    indices.reserve(config.selected_attributes.size());
    for (const std::string& attr : config.selected_attributes) {
        const std::optional<std::size_t> idx = reader.column(attr);
        if (!idx) {
            throw MissingColumnError(attr, "'" + path + "'");
        }
        indices.push_back(*idx);
    }
    const std::optional<std::size_t> timestamp_idx =
        reader.column(config.timestamp_column);
    const std::optional<std::size_t> label_idx = reader.column(config.label_column);

    std::vector<RawRecord> records;
    std::vector<std::string> cells;
    while (reader.next(cells)) {
        if (cells.size() == 1 && trim_view(cells[0]).empty()) {
            continue;  // blank line
        }
        RawRecord record;
        record.values.reserve(indices.size());
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (indices[i] >= cells.size()) {
                throw ParseError("'" + path + "' row " +
                                 std::to_string(reader.row_number()) + ": only " +
                                 std::to_string(cells.size()) + " column(s), column '" +
                                 config.selected_attributes[i] + "' missing");
            }
            const std::string_view cell = trim_view(cells[indices[i]]);
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(),
                                             value);
            if (ec != std::errc() || ptr != cell.data() + cell.size()) {
                throw ParseError("'" + path + "' row " +
                                 std::to_string(reader.row_number()) + ", column '" +
                                 config.selected_attributes[i] + "': cannot parse '" +
                                 std::string(cell) + "' as a number");
            }
            record.values.push_back(value);
        }
        if (timestamp_idx && *timestamp_idx < cells.size()) {
            record.timestamp = cells[*timestamp_idx];
        }
        if (label_idx && *label_idx < cells.size()) {
            record.label = std::string(trim_view(cells[*label_idx]));
        }
        records.push_back(std::move(record));
    }
    if (records.empty()) {
        throw EmptyDatasetError("'" + path + "' has no data rows");
    }
    return records;
}

std::string binarize_flow(double value, double threshold) {
    if (!std::isfinite(threshold)) {
        throw Error("flow threshold must be finite");
    }
    if (!std::isfinite(value)) {
        throw NonFiniteValueError("non-finite flow reading");
    }
    const std::string t = format_threshold(threshold);
    return value >= threshold ? ">=" + t : "<" + t;
}

std::string resolve_valve(ValveCode code, double paired_flow, double threshold) {
    switch (code) {
        case ValveCode::open:
            return kOpen;
        case ValveCode::close:
            return kClose;
        default:
            break;
    }
    if (!std::isfinite(paired_flow)) {
        throw NonFiniteValueError("non-finite paired flow reading");
    }
    return paired_flow < threshold ? kClose : kOpen;
}

namespace {

struct RowContext {
    const std::string& attribute;
    std::size_t row;  // 1-based

    std::string where() const {
        return "row " + std::to_string(row) + ", column '" + attribute + "'";
    }
};

int actuator_code(double value, const RowContext& ctx) {
    if (!std::isfinite(value) || value != std::floor(value) || value < -1e9 ||
        value > 1e9) {
        throw ParseError(ctx.where() + ": actuator code must be a small integer, got " +
                         std::to_string(value));
    }
    return static_cast<int>(value);
}

}  // namespace

TransformResult transform(const std::vector<RawRecord>& records,
                          const TransformConfig& config) {
    config.validate();
    if (records.empty()) {
        throw EmptyDatasetError("no records to transform");
    }
    const std::size_t rows = records.size();
    const std::size_t attrs = config.selected_attributes.size();
    for (std::size_t r = 0; r < rows; ++r) {
        if (records[r].values.size() != attrs) {
            throw Error("record " + std::to_string(r + 1) + " carries " +
                        std::to_string(records[r].values.size()) + " values, expected " +
                        std::to_string(attrs));
        }
    }

    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < attrs; ++i) {
        by_name[config.selected_attributes[i]] = i;
    }

    const std::size_t words = (rows + 63) / 64;
    // bit r of column i = "true state" (>=t / Open / On) in row r.
    std::vector<std::vector<std::uint64_t>> bits(attrs);
    std::vector<std::pair<std::string, std::string>> state_names(attrs);  // true, false

    std::vector<double> column(rows);
    for (std::size_t i = 0; i < attrs; ++i) {
        const std::string& attr = config.selected_attributes[i];
        const AttributeClass cls = config.class_of(attr);
        bits[i].assign(words, 0);

        if (cls == AttributeClass::flow) {
            const double threshold = config.threshold_for(attr);
            for (std::size_t r = 0; r < rows; ++r) {
                const double value = records[r].values[i];
                if (!std::isfinite(value)) {
                    throw NonFiniteValueError("row " + std::to_string(r + 1) +
                                              ", column '" + attr +
                                              "': non-finite reading");
                }
                column[r] = value;
            }
            simd::threshold_ge(column, threshold, bits[i]);
            const std::string t = format_threshold(threshold);
            state_names[i] = {">=" + t, "<" + t};
            continue;
        }

        if (cls == AttributeClass::valve) {
            auto pair_it = config.valve_flow_pairing.find(attr);
            std::optional<std::size_t> flow_index;
            double flow_threshold = config.flow_threshold;
            if (pair_it != config.valve_flow_pairing.end()) {
                auto flow_it = by_name.find(pair_it->second);
                if (flow_it != by_name.end()) {
                    flow_index = flow_it->second;
                    flow_threshold = config.threshold_for(pair_it->second);
                }
            }
            for (std::size_t r = 0; r < rows; ++r) {
                const RowContext ctx{attr, r + 1};
                const int code = actuator_code(records[r].values[i], ctx);
                auto code_it = config.valve_codes.find(code);
                if (code_it == config.valve_codes.end()) {
                    throw ParseError(ctx.where() + ": unknown valve code " +
                                     std::to_string(code));
                }
                bool open;
                if (code_it->second == kTransition) {
                    if (!flow_index) {
                        throw MissingPairingError(
                            ctx.where() + ": valve is in Transition but has no "
                            "paired flow meter; set pair." + attr);
                    }
                    open = resolve_valve(ValveCode::transition,
                                         records[r].values[*flow_index],
                                         flow_threshold) == kOpen;
                } else {
                    open = code_it->second == kOpen;
                }
                if (open) {
                    bits[i][r / 64] |= std::uint64_t(1) << (r % 64);
                }
            }
            state_names[i] = {kOpen, kClose};
            continue;
        }

        for (std::size_t r = 0; r < rows; ++r) {
            const RowContext ctx{attr, r + 1};
            const int code = actuator_code(records[r].values[i], ctx);
            auto code_it = config.pump_codes.find(code);
            if (code_it == config.pump_codes.end()) {
                throw ParseError(ctx.where() + ": unknown pump code " +
                                 std::to_string(code));
            }
            if (code_it->second == kOn) {
                bits[i][r / 64] |= std::uint64_t(1) << (r % 64);
            }
        }
        state_names[i] = {kOn, kOff};
    }

    TransformResult result;
    TransformReport& report = result.report;
    report.row_count = rows;

    std::vector<bool> retained(attrs, true);
    for (std::size_t i = 0; i < attrs; ++i) {
        const std::uint64_t true_count = simd::popcount(bits[i]);
        const std::string& attr = config.selected_attributes[i];
        report.state_counts[attr][state_names[i].first] = true_count;
        report.state_counts[attr][state_names[i].second] = rows - true_count;
        if (config.drop_constant_attributes &&
            (true_count == 0 || true_count == rows)) {
            retained[i] = false;
            report.dropped_attributes.push_back(attr);
        }
    }

    Dataset& dataset = result.dataset;
    // Two item ids per retained attribute, interned on first occurrence so
    // the catalog order is a pure function of the data.
    std::vector<std::array<std::optional<ItemId>, 2>> ids(attrs);
    std::vector<ItemId> row_ids;
    for (std::size_t r = 0; r < rows; ++r) {
        row_ids.clear();
        for (std::size_t i = 0; i < attrs; ++i) {
            if (!retained[i]) {
                continue;
            }
            const bool truthy = (bits[i][r / 64] >> (r % 64)) & 1;
            std::optional<ItemId>& slot = ids[i][truthy ? 0 : 1];
            if (!slot) {
                slot = dataset.intern(Item(config.selected_attributes[i],
                                           truthy ? state_names[i].first
                                                  : state_names[i].second));
            }
            row_ids.push_back(*slot);
        }
        dataset.add_row_ids(row_ids);
    }

    report.retained_attribute_count =
        static_cast<std::size_t>(std::count(retained.begin(), retained.end(), true));
    return result;
}

std::string TransformReport::to_text() const {
    std::ostringstream out;
    out << "rows: " << row_count << "\n";
    out << "attributes: " << state_counts.size() << " selected, "
        << retained_attribute_count << " retained\n";
    out << "dropped (constant): ";
    if (dropped_attributes.empty()) {
        out << "none";
    } else {
        for (std::size_t i = 0; i < dropped_attributes.size(); ++i) {
            if (i) out << ", ";
            out << dropped_attributes[i];
        }
    }
    out << "\n";
    out << "state frequencies:\n";
    for (const auto& [attr, states] : state_counts) {
        out << "  " << attr << ":";
        for (const auto& [state, count] : states) {
            out << "  " << state << "=" << count;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace icsmine
