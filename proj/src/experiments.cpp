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

#include "mmwear/experiments.hpp"

#include "mmwear/csv.hpp"
#include "mmwear/montecarlo.hpp"

#include <cmath>

namespace mmwear
{

namespace
{

double radians(double deg) noexcept
{
    return deg * kPi / 180.0;
}

McRun mc_run(const ExperimentConfig &cfg)
{
    McRun run;
    run.realizations = cfg.realizations;
    run.base_seed = cfg.seed;
    run.workers = cfg.workers;
    return run;
}

} // namespace

std::string ccdf_file_name(double lambda)
{
    return "ccdf_lambda_" + format_double(lambda) + ".csv";
}

std::filesystem::path write_sidecar(const ExperimentConfig &cfg, Command cmd, const std::filesystem::path &out_dir)
{
    const auto path = out_dir / (std::string(command_name(cmd)) + ".config");
    write_file_atomic(path, "# mmwear " + std::string(command_name(cmd)) + " resolved configuration\n" +
                                cfg.serialize());
    return path;
}

std::vector<CcdfRun> run_ccdf(const ExperimentConfig &cfg, const std::filesystem::path &out_dir)
{
    const Position &pos = cfg.positions->front();
    const double psi = radians(*cfg.psi_deg);
    const std::vector<double> gamma = cfg.gamma.values();

    std::vector<CcdfRun> runs;
    for (const double lambda : *cfg.lambdas)
    {
        const SystemParams params = cfg.system(lambda);
        CcdfRun run;
        run.lambda = lambda;
        run.analytic = coverage_ccdf(pos.z, psi, gamma, cfg.enclosure, params);
        run.montecarlo = empirical_ccdf(pos.z, psi, gamma, mc_run(cfg), cfg.enclosure, params);

        std::vector<std::vector<CsvCell>> rows;
        for (std::size_t i = 0; i < gamma.size(); ++i)
            rows.push_back({gamma[i], run.analytic.coverage[i], run.montecarlo.coverage[i],
                            run.montecarlo.ci_halfwidth[i]});
        run.file = out_dir / ccdf_file_name(lambda);
        write_csv(run.file, {"gamma_db", "coverage_analytic", "coverage_mc", "mc_ci_halfwidth"}, rows);
        runs.push_back(std::move(run));
    }
    write_sidecar(cfg, Command::Ccdf, out_dir);
    return runs;
}

std::vector<double> orientation_sweep(const ExperimentConfig &cfg)
{
    if (cfg.psi_deg)
        return {*cfg.psi_deg};
    std::vector<double> out;
    const auto n = static_cast<int>(std::floor(360.0 / cfg.psi_step_deg + 1e-9));
    for (int i = 0; i <= n; ++i)
        out.push_back(static_cast<double>(i) * cfg.psi_step_deg);
    return out;
}

RateRun run_rate_orientation(const ExperimentConfig &cfg, const std::filesystem::path &out_dir)
{
    const SystemParams params = cfg.system(cfg.lambdas->front());
    const std::vector<double> sweep = orientation_sweep(cfg);
    std::vector<double> psi;
    for (const double deg : sweep)
        psi.push_back(radians(deg));

    RateRun run;
    std::vector<std::vector<CsvCell>> rows;
    for (const Position &pos : *cfg.positions)
    {
        const auto analytic = ergodic_rates(pos.z, psi, cfg.enclosure, params, cfg.workers);
        for (std::size_t i = 0; i < psi.size(); ++i)
        {
            // Same base seed for every orientation: only the reference body moves between rows.
            const auto sinr = sinr_samples(pos.z, psi[i], mc_run(cfg), cfg.enclosure, params);
            const EmpiricalRate mc = rate_from_samples(sinr, params);
            if (mc.infinite > 0)
                run.warnings.push_back(std::to_string(mc.infinite) + " realizations with unbounded SINR left out of the rate at " +
                                       pos.label + ", psi " + format_double(sweep[i]));
            run.rows.push_back({sweep[i], pos.label, analytic[i].bps, mc.bps, mc.ci_halfwidth});
            rows.push_back({sweep[i], pos.label, analytic[i].bps, mc.bps});
        }
    }
    run.file = out_dir / kRateFileName;
    write_csv(run.file, {"psi_deg", "position_label", "rate_bps_analytic", "rate_bps_mc"}, rows);
    write_sidecar(cfg, Command::RateOrientation, out_dir);
    return run;
}

HeatmapRun run_heatmap(const ExperimentConfig &cfg, const std::filesystem::path &out_dir)
{
    const SystemParams params = cfg.system(cfg.lambdas->front());
    HeatmapRun run;
    run.map = coverage_heatmap(cfg.grid, cfg.threshold_db, radians(*cfg.psi_deg), cfg.enclosure, params, cfg.workers);
    std::vector<std::vector<CsvCell>> rows;
    for (std::size_t iy = 0; iy < run.map.y.size(); ++iy)
        for (std::size_t ix = 0; ix < run.map.x.size(); ++ix)
            rows.push_back({run.map.x[ix], run.map.y[iy], run.map.at(ix, iy)});
    run.file = out_dir / kHeatmapFileName;
    write_csv(run.file, {"x_m", "y_m", "coverage"}, rows);
    write_sidecar(cfg, Command::Heatmap, out_dir);
    return run;
}

} // namespace mmwear
