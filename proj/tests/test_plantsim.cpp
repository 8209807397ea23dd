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
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "icsmine/error.hpp"
#include "icsmine/plantsim.hpp"

using namespace icsmine;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

}  // namespace

TEST_CASE("config converts to exact milli-units and validates") {
    const SimConfig config;
    CHECK(config.inflow_milli() == 2500);
    CHECK(config.outflow_milli() == 1800);
    CHECK(config.noise_milli() == 40);
    CHECK(SimConfig::to_milli(0.001) == 1);
    CHECK(SimConfig::to_milli(-1.5) == -1500);
    CHECK_THROWS_AS(SimConfig::to_milli(1.0 / 0.0), Error);
    CHECK_NOTHROW(config.validate());

    SimConfig bad = config;
    bad.low_setpoint = 900.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = config;
    bad.high_setpoint = 1200.0;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = config;
    bad.noise_amplitude = 2.0;  // would swamp the outflow reading
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = config;
    bad.transition_ticks = -1;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = config;
    bad.outflow_rate = 0.0;
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("attack scenarios validate their window and payload") {
    AttackScenario scenario;
    CHECK_NOTHROW(scenario.validate());  // none is always fine
    CHECK(scenario.describe() == "none");
    CHECK_FALSE(scenario.active(0));

    scenario.kind = AttackKind::force_valve_open;
    scenario.start_tick = 2000;
    scenario.end_tick = 3000;
    CHECK_NOTHROW(scenario.validate());
    CHECK(scenario.active(2000));
    CHECK(scenario.active(3000));
    CHECK_FALSE(scenario.active(1999));
    CHECK_FALSE(scenario.active(3001));
    CHECK(scenario.describe() == "force_valve_open ticks 2000..3000");

    scenario.end_tick = 1999;
    CHECK_THROWS_AS(scenario.validate(), Error);

    AttackScenario spoof;
    spoof.kind = AttackKind::spoof_level;
    spoof.start_tick = 10;
    spoof.end_tick = 20;
    CHECK_THROWS_AS(spoof.validate(), Error);  // value missing
    spoof.spoof_value = 650.0;
    CHECK_NOTHROW(spoof.validate());
}

TEST_CASE("level changes exactly by applied inflow minus outflow") {
    const SimConfig config;
    const AttackScenario none;
    std::mt19937 rng(1);
    PlantState state = initial_state(config, none, rng);
    for (int t = 0; t < 5000; ++t) {
        const std::int64_t inflow =
            state.effectively_open() ? config.inflow_milli() : 0;
        const std::int64_t outflow = state.p101_on ? config.outflow_milli() : 0;
        const PlantState next = step(state, none, config, rng);
        CHECK(next.level_milli - state.level_milli == inflow - outflow);
        CHECK(next.tick == state.tick + 1);
        state = next;
    }
}

TEST_CASE("unattacked operation stays near the setpoint band") {
    const SimConfig config;
    const AttackScenario none;
    std::mt19937 rng(7);
    PlantState state = initial_state(config, none, rng);
    std::int64_t min_level = state.level_milli;
    std::int64_t max_level = state.level_milli;
    for (int t = 0; t < 4000; ++t) {
        state = step(state, none, config, rng);
        if (t >= 700) {  // past the first fill/drain transient
            min_level = std::min(min_level, state.level_milli);
            max_level = std::max(max_level, state.level_milli);
        }
    }
    CHECK(min_level >= config.low_milli() - 10'000);
    CHECK(max_level <= config.high_milli() + 10'000);
    CHECK(max_level <= config.capacity_milli());
    // The loop actually cycles: both setpoints get approached.
    CHECK(min_level <= config.low_milli() + 30'000);
    CHECK(max_level >= config.high_milli() - 30'000);
}

TEST_CASE("flow readings are zero when nothing moves") {
    // Start inside the hysteresis gap: pump disarmed, valve shut, nothing
    // ever crosses a setpoint, so the plant deadlocks by design.
    SimConfig config;
    config.initial_level = 510.0;
    const AttackScenario none;
    std::mt19937 rng(3);
    PlantState state = initial_state(config, none, rng);
    for (int t = 0; t < 100; ++t) {
        CHECK(state.level_milli == 510'000);
        CHECK_FALSE(state.p101_on);
        CHECK(state.mv101 == ValvePosition::close);
        CHECK(state.fit101_milli == 0);
        CHECK(state.fit201_milli == 0);
        // Only the level sensor is noisy.
        CHECK(std::abs(state.sensor_milli - state.level_milli) <=
              config.noise_milli());
        state = step(state, none, config, rng);
    }
}

TEST_CASE("a forced inlet valve overfills the tank past capacity") {
    const SimConfig config;
    AttackScenario attack;
    attack.kind = AttackKind::force_valve_open;
    attack.start_tick = 2000;
    attack.end_tick = 3000;
    std::mt19937 rng(1);
    PlantState state = initial_state(config, attack, rng);
    std::int64_t max_level = state.level_milli;
    bool open_while_high = false;
    for (int t = 0; t < 3100; ++t) {
        state = step(state, attack, config, rng);
        max_level = std::max(max_level, state.level_milli);
        if (state.attack_active && state.mv101 == ValvePosition::open &&
            state.sensor_milli >= config.high_milli()) {
            open_while_high = true;
        }
    }
    CHECK(max_level > config.capacity_milli());
    CHECK(open_while_high);  // the signature the miner is meant to find
}

TEST_CASE("a spoofed level sensor drains the tank dry") {
    // Spoof starts at tick 10, while the valve is still closed and the pump
    // draining: a constant mid-band reading keeps the controller idle, so
    // the drain never stops.
    const SimConfig config;
    AttackScenario attack;
    attack.kind = AttackKind::spoof_level;
    attack.start_tick = 10;
    attack.end_tick = 700;
    attack.spoof_value = 650.0;
    std::mt19937 rng(5);
    PlantState state = initial_state(config, attack, rng);
    std::int64_t min_level = state.level_milli;
    for (int t = 0; t < 700; ++t) {
        state = step(state, attack, config, rng);
        min_level = std::min(min_level, state.level_milli);
        if (state.attack_active) {
            // The historian is fed the spoofed value, not the truth.
            CHECK(std::abs(state.sensor_milli - 650'000) <= config.noise_milli());
        }
    }
    CHECK(min_level < 0);  // drained past empty while the controller dozed
}

TEST_CASE("valve transitions pass water only while closing") {
    PlantState state;
    state.mv101 = ValvePosition::open;
    CHECK(state.effectively_open());
    state.mv101 = ValvePosition::close;
    CHECK_FALSE(state.effectively_open());
    state.mv101 = ValvePosition::transition;
    state.transition_to_open = false;  // closing: still passes water
    CHECK(state.effectively_open());
    state.transition_to_open = true;  // opening: not yet
    CHECK_FALSE(state.effectively_open());
}

TEST_CASE("traces are byte-identical per seed and diverge across seeds") {
    const SimConfig config;
    const AttackScenario none;
    const std::string a = generate_traces(500, none, 42, config);
    const std::string b = generate_traces(500, none, 42, config);
    CHECK(a == b);
    const std::string c = generate_traces(500, none, 43, config);
    CHECK(a != c);
    // Shorter runs are byte prefixes of longer ones.
    const std::string d = generate_traces(200, none, 42, config);
    CHECK(a.compare(0, d.size(), d) == 0);
}

TEST_CASE("trace format matches the historian layout") {
    const SimConfig config;
    const AttackScenario none;
    const auto lines = lines_of(generate_traces(3, none, 9, config));
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "Timestamp,FIT101,MV101,P101,FIT201,LIT101,Normal/Attack");
    const auto cells = split_csv(lines[1]);
    REQUIRE(cells.size() == 7);
    CHECK(cells[0] == "D0 00:00:00");
    CHECK(cells[1] == "0.000");           // valve closed at start
    CHECK(cells[2] == "1");               // Close
    CHECK(cells[3] == "2");               // pump on at 650
    CHECK(cells[6] == "Normal");
    // LIT101 is initial level plus at most the noise amplitude.
    const double lit = std::stod(cells[5]);
    CHECK(lit >= 649.9);
    CHECK(lit <= 650.1);
    CHECK(split_csv(lines[2])[0] == "D0 00:00:01");

    CHECK_THROWS_AS(generate_traces(0, none, 9, config), Error);
}

TEST_CASE("attack labels cover exactly the scenario window") {
    const SimConfig config;
    AttackScenario attack;
    attack.kind = AttackKind::force_valve_open;
    attack.start_tick = 5;
    attack.end_tick = 8;
    const auto lines = lines_of(generate_traces(12, attack, 11, config));
    REQUIRE(lines.size() == 13);
    for (int tick = 0; tick < 12; ++tick) {
        const auto cells = split_csv(lines[1 + tick]);
        REQUIRE(cells.size() == 7);
        const bool in_window = tick >= 5 && tick <= 8;
        CAPTURE(tick);
        CHECK(cells[6] == (in_window ? "Attack" : "Normal"));
    }
}

TEST_CASE("timestamps roll over days") {
    const SimConfig config;
    const AttackScenario none;
    const auto lines = lines_of(generate_traces(86402, none, 2, config));
    REQUIRE(lines.size() == 86403);
    CHECK(split_csv(lines[1])[0] == "D0 00:00:00");
    CHECK(split_csv(lines[86400])[0] == "D0 23:59:59");
    CHECK(split_csv(lines[86401])[0] == "D1 00:00:00");
    CHECK(split_csv(lines[86402])[0] == "D1 00:00:01");
}
