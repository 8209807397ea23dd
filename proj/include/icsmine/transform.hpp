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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icsmine/dataset.hpp"

namespace icsmine {

/// How an attribute is discretized.
///   flow:  real reading thresholded into ">=t" / "<t"
///   valve: ternary actuator code (Transition resolved via the paired flow)
///   pump:  binary actuator code
enum class AttributeClass { flow, valve, pump };

/// Selection plus discretization rules for one historian layout.
struct TransformConfig {
    std::vector<std::string> selected_attributes;
    /// Valve attribute -> flow attribute whose raw reading resolves a
    /// Transition. The flow attribute must itself be selected.
    std::map<std::string, std::string> valve_flow_pairing;
    double flow_threshold = 0.5;
    /// Per-attribute threshold overrides (level sensors need a different
    /// scale than flow meters).
    std::map<std::string, double> attribute_thresholds;
    /// Explicit class overrides; anything absent is classified by name
    /// prefix: FIT/LIT -> flow, MV -> valve, P -> pump.
    std::map<std::string, AttributeClass> attribute_classes;
    /// Raw actuator codes. Valves default to 0=Transition, 1=Close, 2=Open;
    /// pumps to 1=Off, 2=On.
    std::map<int, std::string> valve_codes{
        {0, "Transition"}, {1, "Close"}, {2, "Open"}};
    std::map<int, std::string> pump_codes{{1, "Off"}, {2, "On"}};
    bool drop_constant_attributes = true;
    std::string timestamp_column = "Timestamp";
    std::string label_column = "Normal/Attack";

    /// The fifteen-attribute water-treatment selection this tool was built
    /// around, with plant-topology valve pairings.
    static TransformConfig swat_defaults();
    /// Layout of the bundled tank simulator, including the binarized level
    /// sensor used by the end-to-end difference test.
    static TransformConfig simulator_defaults();
    /// Key/value file; unknown keys are rejected. Omitted keys fall back to
    /// swat_defaults() semantics for code maps and thresholds.
    static TransformConfig from_file(const std::string& path);

    void validate() const;
    AttributeClass class_of(const std::string& attribute) const;
    double threshold_for(const std::string& attribute) const;
    /// Resolved settings, one "key = value" line each, for config echo.
    std::string describe() const;
};

/// One source row restricted to the selected attributes. values[i] is the
/// raw reading of selected_attributes[i].
struct RawRecord {
    std::string timestamp;
    std::vector<double> values;
    std::optional<std::string> label;
};

/// Reads a historian CSV and keeps only the configured columns, preserving
/// row order. Throws MissingColumnError, ParseError (with row and column
/// context), or EmptyDatasetError.
std::vector<RawRecord> ingest(const std::string& path, const TransformConfig& config);

/// ">=t" when value >= threshold else "<t". Throws NonFiniteValueError.
std::string binarize_flow(double value, double threshold);

enum class ValveCode { open, close, transition };

/// Open/Close pass through; Transition resolves against the paired flow
/// reading: below the threshold the valve is effectively Close, else Open.
std::string resolve_valve(ValveCode code, double paired_flow, double threshold);

struct TransformReport {
    std::uint64_t row_count = 0;
    /// Attributes removed because they held one state across the dataset
    /// (in selection order).
    std::vector<std::string> dropped_attributes;
    /// attribute -> state -> occurrence count, before dropping.
    std::map<std::string, std::map<std::string, std::uint64_t>> state_counts;
    std::size_t retained_attribute_count = 0;

    std::string to_text() const;
};

struct TransformResult {
    Dataset dataset;
    TransformReport report;
};

/// Discretizes every record into one transaction. With
/// drop_constant_attributes set, attributes with a single observed state
/// vanish from all transactions and are listed in the report.
TransformResult transform(const std::vector<RawRecord>& records,
                          const TransformConfig& config);

}  // namespace icsmine
