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
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

namespace icsmine {

/// Single-tank process: inlet valve MV101 fills the tank, pump P101 drains
/// it toward the next stage, flow meters FIT101/FIT201 sit on both pipes,
/// and level sensor LIT101 drives the control loop. Volumes are tracked in
/// integer thousandths of a unit so stepping is exact and traces are
/// byte-reproducible everywhere.
struct SimConfig {
    double capacity = 1000.0;
    double low_setpoint = 500.0;
    double high_setpoint = 800.0;
    double inflow_rate = 2.5;    // per tick while the valve is effectively open
    double outflow_rate = 1.8;   // per tick while the pump runs
    /// Pump restarts only this far above the low setpoint, so it does not
    /// chatter at the refill boundary.
    double pump_rearm_band = 20.0;
    double initial_level = 650.0;
    int transition_ticks = 2;    // valve travel time
    double noise_amplitude = 0.04;  // +- on reported readings, never on physics

    void validate() const;

    std::int64_t capacity_milli() const { return to_milli(capacity); }
    std::int64_t low_milli() const { return to_milli(low_setpoint); }
    std::int64_t high_milli() const { return to_milli(high_setpoint); }
    std::int64_t inflow_milli() const { return to_milli(inflow_rate); }
    std::int64_t outflow_milli() const { return to_milli(outflow_rate); }
    std::int64_t rearm_milli() const { return to_milli(pump_rearm_band); }
    std::int64_t initial_milli() const { return to_milli(initial_level); }
    std::int64_t noise_milli() const { return to_milli(noise_amplitude); }

    static std::int64_t to_milli(double value);
};

enum class AttackKind { none, force_valve_open, spoof_level };

/// Attack overlay, active on ticks start_tick..end_tick inclusive.
/// force_valve_open pins the valve command to Open regardless of level;
/// spoof_level feeds the controller (and the historian) spoof_value
/// instead of the real level while the tank keeps obeying physics.
struct AttackScenario {
    AttackKind kind = AttackKind::none;
    std::int64_t start_tick = 0;
    std::int64_t end_tick = 0;
    std::optional<double> spoof_value;

    bool active(std::int64_t tick) const {
        return kind != AttackKind::none && tick >= start_tick && tick <= end_tick;
    }
    void validate() const;
    std::string describe() const;
};

enum class ValvePosition { open, close, transition };

struct PlantState {
    std::int64_t tick = 0;
    std::int64_t level_milli = 0;    // true volume, exact
    std::int64_t sensor_milli = 0;   // what the historian sees
    ValvePosition mv101 = ValvePosition::close;
    bool transition_to_open = false;
    int transition_left = 0;
    bool p101_on = true;
    std::int64_t fit101_milli = 0;
    std::int64_t fit201_milli = 0;
    bool attack_active = false;

    double level() const { return static_cast<double>(level_milli) / 1000.0; }
    double sensor() const { return static_cast<double>(sensor_milli) / 1000.0; }
    double fit101() const { return static_cast<double>(fit101_milli) / 1000.0; }
    double fit201() const { return static_cast<double>(fit201_milli) / 1000.0; }

    /// Water passes the inlet while the valve is open, and still does while
    /// it travels toward Close.
    bool effectively_open() const {
        return mv101 == ValvePosition::open ||
               (mv101 == ValvePosition::transition && !transition_to_open);
    }
};

/// State at tick 0 with readings drawn from rng.
PlantState initial_state(const SimConfig& config, const AttackScenario& scenario,
                         std::mt19937& rng);

/// Advances one tick: integrates the tank exactly from the current
/// actuator states, then runs the level controller (and attack overlay) on
/// the new reported level, then refreshes the flow readings.
PlantState step(const PlantState& state, const AttackScenario& scenario,
                const SimConfig& config, std::mt19937& rng);

/// Historian-format CSV: header plus one row per tick, columns
/// Timestamp, FIT101, MV101, P101, FIT201, LIT101, Normal/Attack.
/// Identical (ticks, scenario, seed, config) give identical bytes.
void generate_traces(std::int64_t ticks, const AttackScenario& scenario,
                     std::uint32_t seed, const SimConfig& config, std::ostream& out);

std::string generate_traces(std::int64_t ticks, const AttackScenario& scenario,
                            std::uint32_t seed, const SimConfig& config);

}  // namespace icsmine
