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

#ifndef MMWEAR_EXPERIMENTS_HPP
#define MMWEAR_EXPERIMENTS_HPP

#include "mmwear/analytic.hpp"
#include "mmwear/config.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mmwear
{

// The runners expect a configuration already resolved for their command. Each writes its CSV
// output plus the resolved configuration (<command>.config) into out_dir.

struct CcdfRun
{
    double lambda = 0.0;
    CoverageCurve analytic;
    CoverageCurve montecarlo;
    std::filesystem::path file;
};

struct RateRow
{
    double psi_deg = 0.0;
    std::string position_label;
    double analytic_bps = 0.0;
    double mc_bps = 0.0;
    double mc_ci_halfwidth = 0.0;
};

struct RateRun
{
    std::vector<RateRow> rows;
    std::filesystem::path file;
    std::vector<std::string> warnings;
};

struct HeatmapRun
{
    Heatmap map;
    std::filesystem::path file;
};

std::string ccdf_file_name(double lambda);
inline constexpr const char *kRateFileName = "rate_orientation.csv";
inline constexpr const char *kHeatmapFileName = "heatmap.csv";

std::vector<CcdfRun> run_ccdf(const ExperimentConfig &cfg, const std::filesystem::path &out_dir);
RateRun run_rate_orientation(const ExperimentConfig &cfg, const std::filesystem::path &out_dir);
HeatmapRun run_heatmap(const ExperimentConfig &cfg, const std::filesystem::path &out_dir);

// ψ values swept by rate-orientation: the configured angle alone, or 0..360 in psi_step_deg steps.
std::vector<double> orientation_sweep(const ExperimentConfig &cfg);

std::filesystem::path write_sidecar(const ExperimentConfig &cfg, Command cmd, const std::filesystem::path &out_dir);

} // namespace mmwear

#endif
