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

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icsmine/config.hpp"
#include "icsmine/diff.hpp"
#include "icsmine/error.hpp"
#include "icsmine/fpgrowth.hpp"
#include "icsmine/io.hpp"
#include "icsmine/plantsim.hpp"
#include "icsmine/ratio.hpp"
#include "icsmine/rulegen.hpp"
#include "icsmine/simd/kernels.hpp"
#include "icsmine/support.hpp"
#include "icsmine/transform.hpp"

namespace {

using namespace icsmine;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct SimulateArgs {
    std::int64_t ticks = 5000;
    std::uint32_t seed = 1;
    std::string attack = "none";
    std::int64_t attack_start = 2000;
    std::int64_t attack_end = 3000;
    double spoof_value = 650.0;
    std::string config_path;
    std::string out;
};

SimConfig sim_config_from_file(const std::string& path) {
    SimConfig config;
    if (path.empty()) {
        return config;
    }
    const KeyValueConfig kv = KeyValueConfig::parse_file(path);
    kv.reject_unknown({"capacity", "low_setpoint", "high_setpoint", "inflow_rate",
                       "outflow_rate", "pump_rearm_band", "initial_level",
                       "transition_ticks", "noise_amplitude"},
                      {});
    config.capacity = kv.get_double("capacity", config.capacity);
    config.low_setpoint = kv.get_double("low_setpoint", config.low_setpoint);
    config.high_setpoint = kv.get_double("high_setpoint", config.high_setpoint);
    config.inflow_rate = kv.get_double("inflow_rate", config.inflow_rate);
    config.outflow_rate = kv.get_double("outflow_rate", config.outflow_rate);
    config.pump_rearm_band = kv.get_double("pump_rearm_band", config.pump_rearm_band);
    config.initial_level = kv.get_double("initial_level", config.initial_level);
    config.transition_ticks =
        static_cast<int>(kv.get_uint("transition_ticks",
                                     static_cast<std::uint64_t>(config.transition_ticks)));
    config.noise_amplitude = kv.get_double("noise_amplitude", config.noise_amplitude);
    return config;
}

AttackScenario scenario_from_args(const SimulateArgs& args) {
    AttackScenario scenario;
    if (args.attack == "none") {
        scenario.kind = AttackKind::none;
        return scenario;
    }
    if (args.attack == "force_valve_open") {
        scenario.kind = AttackKind::force_valve_open;
    } else if (args.attack == "spoof_level") {
        scenario.kind = AttackKind::spoof_level;
        scenario.spoof_value = args.spoof_value;
    } else {
        throw Error("unknown attack kind '" + args.attack +
                    "' (expected none, force_valve_open, or spoof_level)");
    }
    scenario.start_tick = args.attack_start;
    scenario.end_tick = args.attack_end;
    return scenario;
}

int cmd_simulate(const SimulateArgs& args) {
    const SimConfig config = sim_config_from_file(args.config_path);
    const AttackScenario scenario = scenario_from_args(args);
    config.validate();
    scenario.validate();

    std::cout << "config:\n";
    std::cout << "  ticks = " << args.ticks << "\n";
    std::cout << "  seed = " << args.seed << "\n";
    std::cout << "  attack = " << scenario.describe() << "\n";
    std::cout << "  capacity = " << config.capacity << "\n";
    std::cout << "  low_setpoint = " << config.low_setpoint << "\n";
    std::cout << "  high_setpoint = " << config.high_setpoint << "\n";
    std::cout << "  inflow_rate = " << config.inflow_rate << "\n";
    std::cout << "  outflow_rate = " << config.outflow_rate << "\n";
    std::cout << "  pump_rearm_band = " << config.pump_rearm_band << "\n";
    std::cout << "  initial_level = " << config.initial_level << "\n";
    std::cout << "  transition_ticks = " << config.transition_ticks << "\n";
    std::cout << "  noise_amplitude = " << config.noise_amplitude << "\n";

    atomic_write_file(args.out, generate_traces(args.ticks, scenario, args.seed, config));
    std::cout << "wrote " << args.ticks << " rows to " << args.out << "\n";
    return kExitOk;
}

struct TransformArgs {
    std::string input;
    std::string out;
    std::string preset = "swat";
    std::string config_path;
};

int cmd_transform(const TransformArgs& args) {
    TransformConfig config;
    if (!args.config_path.empty()) {
        config = TransformConfig::from_file(args.config_path);
    } else if (args.preset == "swat") {
        config = TransformConfig::swat_defaults();
    } else if (args.preset == "simulator") {
        config = TransformConfig::simulator_defaults();
    } else {
        throw Error("unknown preset '" + args.preset +
                    "' (expected swat or simulator)");
    }

    std::cout << "config:\n";
    std::istringstream lines(config.describe());
    for (std::string line; std::getline(lines, line);) {
        std::cout << "  " << line << "\n";
    }
    std::cout << "  input = " << args.input << "\n";
    std::cout << "  out = " << args.out << "\n";

    const std::vector<RawRecord> records = ingest(args.input, config);
    TransformResult result = transform(records, config);
    write_transactions_file(result.dataset, args.out);
    std::cout << result.report.to_text();
    std::cout << "wrote " << result.dataset.size() << " transactions to " << args.out
              << "\n";
    return kExitOk;
}

struct MineArgs {
    std::string input;
    std::string out;
    std::string min_support = "0.007";
    std::uint64_t max_size = 0;
    unsigned workers = 1;
};

int cmd_mine(const MineArgs& args) {
    MiningParams params = MiningParams::parse(args.min_support);
    if (args.max_size > 0) {
        params.max_itemset_size = args.max_size;
    }
    params.workers = args.workers;

    const Dataset dataset = read_transactions_file(args.input);
    if (dataset.empty()) {
        throw EmptyDatasetError("'" + args.input + "' holds no transactions");
    }

    std::cout << "config:\n";
    std::cout << "  input = " << args.input << " (" << dataset.size()
              << " transactions)\n";
    std::cout << "  min_support = " << params.describe(dataset.size()) << "\n";
    std::cout << "  max_itemset_size = "
              << (params.max_itemset_size ? std::to_string(*params.max_itemset_size)
                                          : std::string("unbounded"))
              << "\n";
    std::cout << "  workers = " << params.workers << "\n";
    std::cout << "  simd = " << simd::backend_name(simd::active_backend()) << "\n";
    std::cout << "  out = " << args.out << "\n";

    const MineResult result = mine(dataset, params);
    std::ostringstream buffer;
    write_itemsets(result, buffer);
    atomic_write_file(args.out, buffer.str());
    std::cout << "frequent itemsets: " << result.itemsets.size() << "\n";
    return kExitOk;
}

struct RulesArgs {
    std::string input;
    std::string out;
    std::string min_confidence = "1";
    std::uint64_t min_antecedent = 1;
    std::uint64_t max_antecedent = 0;
    std::string jsonl;
};

int cmd_rules(const RulesArgs& args) {
    RuleParams params;
    params.min_confidence = Ratio::parse_decimal(args.min_confidence);
    params.min_antecedent_size = args.min_antecedent;
    if (args.max_antecedent > 0) {
        params.max_antecedent_size = args.max_antecedent;
    }
    params.validate();

    const MineResult result = read_itemsets_file(args.input);

    std::cout << "config:\n";
    std::cout << "  input = " << args.input << " (" << result.itemsets.size()
              << " itemsets over " << result.dataset_size << " transactions)\n";
    std::cout << "  min_confidence = " << params.min_confidence.str() << "\n";
    std::cout << "  min_antecedent = " << params.min_antecedent_size << "\n";
    std::cout << "  max_antecedent = "
              << (params.max_antecedent_size
                      ? std::to_string(*params.max_antecedent_size)
                      : std::string("unbounded"))
              << "\n";
    std::cout << "  out = " << args.out << "\n";

    const RuleSet rules = generate_rules(result, params);
    write_rules_file(rules, result.dataset_size, args.out);
    if (!args.jsonl.empty()) {
        std::ostringstream buffer;
        write_rules_jsonl(rules, result.dataset_size, buffer);
        atomic_write_file(args.jsonl, buffer.str());
    }
    std::cout << "rules: " << rules.size() << "\n";
    return kExitOk;
}

struct DiffArgs {
    std::string attack;
    std::string normal;
    std::string out;
    std::string out_normal_only;
    std::string verify_against;
    std::string min_confidence = "1";
    std::string report_jsonl;
    std::uint64_t samples_per_size = 3;
};

int cmd_diff(const DiffArgs& args) {
    const RuleFile attack = read_rules_file(args.attack);
    const RuleFile normal = read_rules_file(args.normal);

    std::cout << "config:\n";
    std::cout << "  attack = " << args.attack << " (" << attack.rules.size()
              << " rules)\n";
    std::cout << "  normal = " << args.normal << " (" << normal.rules.size()
              << " rules)\n";
    std::cout << "  samples_per_size = " << args.samples_per_size << "\n";
    std::cout << "  out = " << args.out << "\n";

    const DiffResult result = diff(attack.rules, normal.rules);
    write_rules_file(result.difference, attack.dataset_size, args.out);

    if (!args.out_normal_only.empty()) {
        const DiffResult reverse = diff(normal.rules, attack.rules);
        write_rules_file(reverse.difference, normal.dataset_size,
                         args.out_normal_only);
        std::cout << "normal-only rules: " << reverse.difference.size() << " -> "
                  << args.out_normal_only << "\n";
    }

    const DiffReport rep = report(result, args.samples_per_size);
    std::cout << rep.to_text();
    if (!args.report_jsonl.empty()) {
        std::ostringstream buffer;
        write_report_jsonl(rep, buffer);
        atomic_write_file(args.report_jsonl, buffer.str());
    }

    if (!args.verify_against.empty()) {
        const Ratio min_confidence = Ratio::parse_decimal(args.min_confidence);
        const Dataset transactions = read_transactions_file(args.verify_against);
        if (transactions.empty()) {
            throw EmptyDatasetError("'" + args.verify_against +
                                    "' holds no transactions");
        }
        const VerticalIndex index(transactions);
        for (const Rule& rule : result.difference) {
            const RuleCheck check = check_rule(rule, index);
            if (!check.holds_at(min_confidence)) {
                throw Error("rule '" + rule.display() + "' fails verification: " +
                            std::to_string(check.union_count) + "/" +
                            std::to_string(check.antecedent_count) +
                            " below confidence " + min_confidence.str());
            }
        }
        std::cout << "verified " << result.difference.size()
                  << " rule(s) at confidence >= " << min_confidence.str() << " over "
                  << transactions.size() << " transactions\n";
    }
    return kExitOk;
}

struct ReportArgs {
    std::string input;
    std::uint64_t samples_per_size = 3;
    std::uint64_t min_size = 0;
    std::uint64_t max_size = 0;
    bool compare_swat = false;
    std::string jsonl;
};

int cmd_report(const ReportArgs& args) {
    const RuleFile file = read_rules_file(args.input);

    std::cout << "config:\n";
    std::cout << "  input = " << args.input << " (" << file.rules.size()
              << " rules)\n";
    std::cout << "  samples_per_size = " << args.samples_per_size << "\n";
    if (args.min_size > 0 || args.max_size > 0) {
        std::cout << "  size filter = " << (args.min_size > 0 ? args.min_size : 1)
                  << ".."
                  << (args.max_size > 0 ? std::to_string(args.max_size)
                                        : std::string("unbounded"))
                  << "\n";
    }

    std::vector<Rule> filtered;
    for (const Rule& rule : file.rules) {
        const std::uint64_t size = rule.antecedent_size();
        if (args.min_size > 0 && size < args.min_size) continue;
        if (args.max_size > 0 && size > args.max_size) continue;
        filtered.push_back(rule);
    }
    const RuleSet view(std::move(filtered));
    std::cout << tally_text(view, args.samples_per_size);

    if (args.compare_swat) {
        // Reference per-size attack-pattern counts from the SWaT water
        // treatment case study, antecedent sizes 2 through 14.
        static const std::map<std::uint64_t, std::uint64_t> kSwatReference = {
            {2, 96},     {3, 1554},   {4, 8133},  {5, 20485}, {6, 45006},
            {7, 68294},  {8, 74348},  {9, 58936}, {10, 33903}, {11, 13832},
            {12, 3802},  {13, 632},   {14, 48}};
        const auto tally = view.tally_by_antecedent_size();
        std::uint64_t ours_total = 0;
        std::uint64_t reference_total = 0;
        std::cout << "size  mined      reference\n";
        for (const auto& [size, expected] : kSwatReference) {
            const auto it = tally.find(size);
            const std::uint64_t mined = it == tally.end() ? 0 : it->second;
            ours_total += mined;
            reference_total += expected;
            std::cout << std::left << std::setw(6) << size << std::setw(11) << mined
                      << expected << "\n";
        }
        std::cout << std::left << std::setw(6) << "total" << std::setw(11)
                  << ours_total << reference_total << "\n";
    }

    if (!args.jsonl.empty()) {
        DiffResult as_diff;
        as_diff.difference = view;
        as_diff.attack_rule_count = view.size();
        std::ostringstream buffer;
        write_report_jsonl(report(as_diff, args.samples_per_size), buffer);
        atomic_write_file(args.jsonl, buffer.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Attack-pattern rule mining for industrial control historians"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    CLI::App* sim = app.add_subcommand(
        "simulate", "Generate a deterministic tank-process trace CSV");
    sim->add_option("--ticks", sim_args.ticks, "Rows to generate")
        ->check(CLI::PositiveNumber);
    sim->add_option("--seed", sim_args.seed, "Noise seed");
    sim->add_option("--attack", sim_args.attack,
                    "none, force_valve_open, or spoof_level");
    sim->add_option("--attack-start", sim_args.attack_start, "First attack tick");
    sim->add_option("--attack-end", sim_args.attack_end, "Last attack tick");
    sim->add_option("--spoof-value", sim_args.spoof_value,
                    "Reported level during spoof_level");
    sim->add_option("--config", sim_args.config_path, "Plant parameter file");
    sim->add_option("--out", sim_args.out, "Output CSV path")->required();

    TransformArgs transform_args;
    CLI::App* transform = app.add_subcommand(
        "transform", "Discretize a historian CSV into a transaction file");
    transform->add_option("--input", transform_args.input, "Historian CSV")
        ->required();
    transform->add_option("--out", transform_args.out, "Transaction file path")
        ->required();
    transform->add_option("--preset", transform_args.preset,
                          "Attribute layout: swat or simulator");
    transform->add_option("--config", transform_args.config_path,
                          "Transform config file (overrides --preset)");

    MineArgs mine_args;
    CLI::App* mine = app.add_subcommand(
        "mine", "Mine frequent itemsets from a transaction file");
    mine->add_option("--input", mine_args.input, "Transaction file")->required();
    mine->add_option("--out", mine_args.out, "Itemset file path")->required();
    mine->add_option("--min-support", mine_args.min_support,
                     "Fraction (0.007) or absolute count (3164)");
    mine->add_option("--max-size", mine_args.max_size,
                     "Largest itemset size to mine (0 = unbounded)");
    mine->add_option("--workers", mine_args.workers, "Mining threads")
        ->check(CLI::PositiveNumber);

    RulesArgs rules_args;
    CLI::App* rules = app.add_subcommand(
        "rules", "Generate association rules from mined itemsets");
    rules->add_option("--input", rules_args.input, "Itemset file")->required();
    rules->add_option("--out", rules_args.out, "Rule file path")->required();
    rules->add_option("--min-confidence", rules_args.min_confidence,
                      "Decimal confidence threshold");
    rules->add_option("--min-antecedent", rules_args.min_antecedent,
                      "Smallest antecedent size")
        ->check(CLI::PositiveNumber);
    rules->add_option("--max-antecedent", rules_args.max_antecedent,
                      "Largest antecedent size (0 = unbounded)");
    rules->add_option("--jsonl", rules_args.jsonl,
                      "Also write line-delimited JSON here");

    DiffArgs diff_args;
    CLI::App* diff_cmd = app.add_subcommand(
        "diff", "Attack rules minus normal rules, by rule key");
    diff_cmd->add_option("--attack", diff_args.attack, "Attack rule file")
        ->required();
    diff_cmd->add_option("--normal", diff_args.normal, "Normal rule file")
        ->required();
    diff_cmd->add_option("--out", diff_args.out, "Attack-only rule file path")
        ->required();
    diff_cmd->add_option("--out-normal-only", diff_args.out_normal_only,
                         "Also write normal-minus-attack here (symmetric difference)");
    diff_cmd->add_option("--verify-against", diff_args.verify_against,
                         "Re-check every diff rule against this transaction file");
    diff_cmd->add_option("--min-confidence", diff_args.min_confidence,
                         "Confidence the verification must reach");
    diff_cmd->add_option("--report-jsonl", diff_args.report_jsonl,
                         "Write the structured report here");
    diff_cmd->add_option("--samples-per-size", diff_args.samples_per_size,
                         "Sample rules listed per antecedent size");

    ReportArgs report_args;
    CLI::App* report_cmd = app.add_subcommand(
        "report", "Tally a rule file by antecedent size");
    report_cmd->add_option("--input", report_args.input, "Rule file")->required();
    report_cmd->add_option("--samples-per-size", report_args.samples_per_size,
                           "Sample rules listed per antecedent size");
    report_cmd->add_option("--min-size", report_args.min_size,
                           "Ignore antecedents smaller than this");
    report_cmd->add_option("--max-size", report_args.max_size,
                           "Ignore antecedents larger than this (0 = unbounded)");
    report_cmd->add_flag("--compare-swat", report_args.compare_swat,
                         "Print the SWaT case-study reference tally alongside");
    report_cmd->add_option("--jsonl", report_args.jsonl,
                           "Write the structured report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sim->parsed()) return cmd_simulate(sim_args);
        if (transform->parsed()) return cmd_transform(transform_args);
        if (mine->parsed()) return cmd_mine(mine_args);
        if (rules->parsed()) return cmd_rules(rules_args);
        if (diff_cmd->parsed()) return cmd_diff(diff_args);
        if (report_cmd->parsed()) return cmd_report(report_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
