// SPDX-License-Identifier: Apache-2.0
//
// mmwear: location-dependent SINR coverage for indoor mmWave wearable networks
// Copyright (C) 2026 mmwear contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMWEAR_CONFIG_HPP
#define MMWEAR_CONFIG_HPP

#include "mmwear/analytic.hpp"
#include "mmwear/blockage.hpp"
#include "mmwear/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwear
{

enum class Command : std::uint8_t
{
    Ccdf,
    RateOrientation,
    Heatmap,
    Validate
};

std::string_view command_name(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

struct Position
{
    std::string label; // "center", "corner" or "x,y"
    Point z;
};

// Threshold grid A:B:STEP in dB, endpoints inclusive.
struct GammaRange
{
    double first = -10.0;
    double last = 30.0;
    double step = 0.5;

    std::vector<double> values() const;
};

// Everything a run depends on. Unset optionals take a per-command default when resolved.
struct ExperimentConfig
{
    Enclosure enclosure;
    SystemParams params;      // lambda and noise_sigma2 here are superseded by the fields below
    double self_block_db = 40.0;
    std::optional<double> sigma2;
    std::optional<std::vector<double>> lambdas;
    std::optional<std::vector<Position>> positions;
    std::optional<double> psi_deg;
    double psi_step_deg = 15.0;
    GammaRange gamma;
    double threshold_db = 3.0;
    std::size_t realizations = 10'000;
    std::uint64_t seed = 1;
    GridResolution grid;
    unsigned workers = 1;

    // Model parameters for one density, with dB values converted and sigma2 resolved.
    SystemParams system(double lambda) const;
    double resolved_sigma2() const;

    // Fills every optional with the default for `cmd` and checks the result.
    // Throws ConfigError naming the offending field.
    void resolve(Command cmd);

    // Canonical key = value text; parsing it back gives an identical configuration.
    std::string serialize() const;
};

// Applies one key = value assignment. `line` is used only for diagnostics.
void set_config_value(ExperimentConfig &cfg, std::string_view key, std::string_view value, int line = 0);

// Parses the flat text format ('#' comments, blank lines ignored) over the built-in defaults.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

Position parse_position(std::string_view text);

std::string format_double(double v);

} // namespace mmwear

#endif
