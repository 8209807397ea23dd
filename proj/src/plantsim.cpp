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

#include "icsmine/plantsim.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "icsmine/error.hpp"

namespace icsmine {

std::int64_t SimConfig::to_milli(double value) {
    if (!std::isfinite(value) || std::abs(value) > 1e12) {
        throw Error("simulator quantity out of range: " + std::to_string(value));
    }
    return static_cast<std::int64_t>(std::llround(value * 1000.0));
}

void SimConfig::validate() const {
    if (!(0 < low_milli() && low_milli() < high_milli() &&
          high_milli() <= capacity_milli())) {
        throw Error("setpoints must satisfy 0 < low < high <= capacity");
    }
    if (inflow_milli() <= 0 || outflow_milli() <= 0) {
        throw Error("inflow and outflow rates must be positive");
    }
    if (initial_milli() < 0) {
        throw Error("initial level must be non-negative");
    }
    if (transition_ticks < 0) {
        throw Error("transition_ticks must be >= 0");
    }
    if (noise_milli() < 0) {
        throw Error("noise_amplitude must be >= 0");
    }
    if (noise_milli() >= inflow_milli() || noise_milli() >= outflow_milli()) {
        throw Error("noise_amplitude must stay below the flow rates");
    }
}

void AttackScenario::validate() const {
    if (kind == AttackKind::none) {
        return;
    }
    if (start_tick > end_tick) {
        throw Error("attack start_tick must be <= end_tick");
    }
    if (start_tick < 0) {
        throw Error("attack start_tick must be >= 0");
    }
    if (kind == AttackKind::spoof_level) {
        if (!spoof_value) {
            throw Error("spoof_level needs a spoof value");
        }
        if (SimConfig::to_milli(*spoof_value) < 0) {
            throw Error("spoof value must be non-negative");
        }
    }
}

std::string AttackScenario::describe() const {
    switch (kind) {
        case AttackKind::none:
            return "none";
        case AttackKind::force_valve_open: {
            return "force_valve_open ticks " + std::to_string(start_tick) + ".." +
                   std::to_string(end_tick);
        }
        default: {
            std::ostringstream out;
            out << "spoof_level ticks " << start_tick << ".." << end_tick << " value "
                << (spoof_value ? *spoof_value : 0.0);
            return out.str();
        }
    }
}

namespace {

std::int64_t draw_noise(std::mt19937& rng, std::int64_t amplitude) {
    // Raw modulo keeps the draw identical on every platform; the slight
    // bias is irrelevant for plausible-looking readings.
    const std::uint32_t span = static_cast<std::uint32_t>(2 * amplitude + 1);
    return static_cast<std::int64_t>(rng() % span) - amplitude;
}

void refresh_readings(PlantState& state, const AttackScenario& scenario,
                      const SimConfig& config, std::mt19937& rng) {
    const std::int64_t amplitude = config.noise_milli();
    const std::int64_t sensor_noise = draw_noise(rng, amplitude);
    const std::int64_t fit1_noise = draw_noise(rng, amplitude);
    const std::int64_t fit2_noise = draw_noise(rng, amplitude);

    const bool spoofed =
        scenario.kind == AttackKind::spoof_level && scenario.active(state.tick);
    const std::int64_t base =
        spoofed ? SimConfig::to_milli(*scenario.spoof_value) : state.level_milli;
    state.sensor_milli = base + sensor_noise;

    state.fit101_milli =
        state.effectively_open() ? config.inflow_milli() + fit1_noise : 0;
    state.fit201_milli = state.p101_on ? config.outflow_milli() + fit2_noise : 0;
}

void apply_control(PlantState& state, const AttackScenario& scenario,
                   const SimConfig& config) {
    state.attack_active = scenario.active(state.tick);

    // Pump: protect against dry running below the low setpoint, restart
    // once the refill has built a margin.
    if (state.sensor_milli < config.low_milli()) {
        state.p101_on = false;
    } else if (state.sensor_milli >= config.low_milli() + config.rearm_milli()) {
        state.p101_on = true;
    }

    if (state.mv101 == ValvePosition::transition) {
        if (--state.transition_left <= 0) {
            state.mv101 =
                state.transition_to_open ? ValvePosition::open : ValvePosition::close;
        }
        return;  // travel finishes before new commands are honoured
    }

    bool command_open = state.mv101 == ValvePosition::open;
    if (state.sensor_milli <= config.low_milli()) {
        command_open = true;
    } else if (state.sensor_milli >= config.high_milli()) {
        command_open = false;
    }
    if (state.attack_active && scenario.kind == AttackKind::force_valve_open) {
        command_open = true;
    }

    const bool is_open = state.mv101 == ValvePosition::open;
    if (command_open != is_open) {
        if (config.transition_ticks == 0) {
            state.mv101 = command_open ? ValvePosition::open : ValvePosition::close;
        } else {
            state.mv101 = ValvePosition::transition;
            state.transition_to_open = command_open;
            state.transition_left = config.transition_ticks;
        }
    }
}

}  // namespace

PlantState initial_state(const SimConfig& config, const AttackScenario& scenario,
                         std::mt19937& rng) {
    config.validate();
    scenario.validate();
    PlantState state;
    state.tick = 0;
    state.level_milli = config.initial_milli();
    state.sensor_milli = state.level_milli;
    state.mv101 = ValvePosition::close;
    state.p101_on = state.level_milli >= config.low_milli() + config.rearm_milli();
    apply_control(state, scenario, config);
    refresh_readings(state, scenario, config, rng);
    return state;
}

PlantState step(const PlantState& state, const AttackScenario& scenario,
                const SimConfig& config, std::mt19937& rng) {
    PlantState next = state;
    next.tick = state.tick + 1;

    // Exact physics from the outgoing states. The integrator is never
    // clamped: overflow past capacity (and drain past empty under a
    // spoofed sensor) are recorded outcomes, not errors.
    const std::int64_t inflow = state.effectively_open() ? config.inflow_milli() : 0;
    const std::int64_t outflow = state.p101_on ? config.outflow_milli() : 0;
    next.level_milli = state.level_milli + inflow - outflow;

    next.sensor_milli = next.level_milli;
    const bool spoofed =
        scenario.kind == AttackKind::spoof_level && scenario.active(next.tick);
    if (spoofed) {
        next.sensor_milli = SimConfig::to_milli(*scenario.spoof_value);
    }
    apply_control(next, scenario, config);
    refresh_readings(next, scenario, config, rng);
    return next;
}

namespace {

void append_milli(std::string& out, std::int64_t milli) {
    if (milli < 0) {
        out += '-';
        milli = -milli;
    }
    out += std::to_string(milli / 1000);
    const std::int64_t frac = milli % 1000;
    out += '.';
    out += static_cast<char>('0' + frac / 100);
    out += static_cast<char>('0' + (frac / 10) % 10);
    out += static_cast<char>('0' + frac % 10);
}

void append_two(std::string& out, std::int64_t v) {
    out += static_cast<char>('0' + v / 10);
    out += static_cast<char>('0' + v % 10);
}

void append_row(std::string& out, const PlantState& state) {
    // Synthetic but historian-shaped timestamp: day counter plus wall time.
    const std::int64_t seconds = state.tick;
    out += 'D';
    out += std::to_string(seconds / 86400);
    out += ' ';
    append_two(out, (seconds / 3600) % 24);
    out += ':';
    append_two(out, (seconds / 60) % 60);
    out += ':';
    append_two(out, seconds % 60);
    out += ',';
    append_milli(out, state.fit101_milli);
    out += ',';
    switch (state.mv101) {
        case ValvePosition::open: out += '2'; break;
        case ValvePosition::close: out += '1'; break;
        default: out += '0'; break;
    }
    out += ',';
    out += state.p101_on ? '2' : '1';
    out += ',';
    append_milli(out, state.fit201_milli);
    out += ',';
    append_milli(out, state.sensor_milli);
    out += ',';
    out += state.attack_active ? "Attack" : "Normal";
    out += '\n';
}

}  // namespace

void generate_traces(std::int64_t ticks, const AttackScenario& scenario,
                     std::uint32_t seed, const SimConfig& config, std::ostream& out) {
    if (ticks < 1) {
        throw Error("ticks must be >= 1");
    }
    std::mt19937 rng(seed);
    PlantState state = initial_state(config, scenario, rng);
    std::string buffer;
    buffer.reserve(4096);
    buffer += "Timestamp,FIT101,MV101,P101,FIT201,LIT101,Normal/Attack\n";
    append_row(buffer, state);
    out << buffer;
    for (std::int64_t t = 1; t < ticks; ++t) {
        buffer.clear();
        state = step(state, scenario, config, rng);
        append_row(buffer, state);
        out << buffer;
    }
}

std::string generate_traces(std::int64_t ticks, const AttackScenario& scenario,
                            std::uint32_t seed, const SimConfig& config) {
    std::ostringstream out;
    generate_traces(ticks, scenario, seed, config, out);
    return out.str();
}

}  // namespace icsmine
