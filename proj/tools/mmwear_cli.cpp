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

// mmwear command line: ccdf, rate-orientation, heatmap and validate.
//
// Exit status: 0 success, 1 validation criteria failed, 2 usage or configuration error,
// 3 I/O error, 4 numerical failure, 5 internal error.

#include "mmwear/mmwear.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

enum Exit
{
    kOk = 0,
    kValidationFailed = 1,
    kUsage = 2,
    kIo = 3,
    kNumerical = 4,
    kInternal = 5
};

int exit_code(mw_status s)
{
    switch (s)
    {
    case MW_OK:
        return kOk;
    case MW_ERR_INVALID_ARGUMENT:
    case MW_ERR_CONFIG:
        return kUsage;
    case MW_ERR_IO:
        return kIo;
    case MW_ERR_NUMERICAL:
    case MW_ERR_DIVERGENCE:
        return kNumerical;
    case MW_ERR_INTERNAL:
        break;
    }
    return kInternal;
}

int report(mw_status s)
{
    std::cerr << "mmwear: error: " << mw_last_error() << "\n";
    return exit_code(s);
}

struct ConfigDeleter
{
    void operator()(mw_config *c) const { mw_config_free(c); }
};
using ConfigPtr = std::unique_ptr<mw_config, ConfigDeleter>;

struct Options
{
    std::string config;
    std::string out;
    std::map<std::string, std::string> overrides; // config key -> value
    std::vector<std::string> sets;
    std::vector<int> only;
};

void add_shared(CLI::App *cmd, Options &opt)
{
    auto value = [&opt, cmd](const char *flag, const char *key, const char *help) {
        cmd->add_option_function<std::string>(flag, [&opt, key](const std::string &v) { opt.overrides[key] = v; }, help);
    };
    cmd->add_option("--config", opt.config, "Configuration file (key = value lines)");
    cmd->add_option("--out", opt.out, "Output directory")->required();
    value("--seed", "seed", "Base seed (unsigned 64-bit)");
    value("--realizations", "realizations", "Monte Carlo realizations");
    value("--lambda", "lambda", "User densities, comma separated (users/m^2)");
    value("--pos", "position", "Receiver position: center, corner or X,Y (';' separates several)");
    value("--psi-deg", "psi_deg", "Receiver body orientation, degrees");
    value("--psi-step-deg", "psi_step_deg", "Orientation sweep step, degrees");
    value("--gamma-db", "gamma_db", "SINR threshold grid A:B:STEP in dB");
    value("--threshold-db", "threshold_db", "Heat-map SINR threshold, dB");
    value("--sigma2", "sigma2", "Normalized noise power");
    value("--grid", "grid", "Heat-map resolution NXxNY");
    value("--workers", "workers", "Worker threads (0 = all cores)");
    cmd->add_option("--set", opt.sets, "Any configuration key as KEY=VALUE (repeatable)");
}

int build_config(const Options &opt, ConfigPtr &cfg)
{
    mw_config *raw = nullptr;
    const mw_status s = opt.config.empty() ? mw_config_new(&raw) : mw_config_load(opt.config.c_str(), &raw);
    if (s != MW_OK)
        return report(s);
    cfg.reset(raw);
    for (const std::string &kv : opt.sets)
    {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
        {
            std::cerr << "mmwear: error: --set expects KEY=VALUE, got '" << kv << "'\n";
            return kUsage;
        }
        if (const mw_status e = mw_config_set(cfg.get(), kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str()); e != MW_OK)
            return report(e);
    }
    for (const auto &[key, value] : opt.overrides)
        if (const mw_status e = mw_config_set(cfg.get(), key.c_str(), value.c_str()); e != MW_OK)
            return report(e);
    return kOk;
}

void print_criterion(void *, int id, const char *name, mw_verdict verdict, double measured, double threshold,
                     const char *detail, double seconds)
{
    const char *tag = verdict == MW_PASS ? "PASS" : (verdict == MW_FAIL ? "FAIL" : "SKIP");
    std::printf("[%s] %d %s: measured %.6g, threshold %.6g (%.1f s) - %s\n", tag, id, name, measured, threshold, seconds,
                detail);
    std::fflush(stdout);
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Location-dependent SINR coverage for indoor mmWave wearable networks"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Options opt;
    auto *ccdf = app.add_subcommand("ccdf", "Analytic and simulated SINR CCDF, one CSV per density");
    auto *rate = app.add_subcommand("rate-orientation", "Ergodic rate against body orientation");
    auto *heat = app.add_subcommand("heatmap", "Coverage at one threshold over receiver positions");
    auto *validate = app.add_subcommand("validate", "Run the acceptance checks and write a JSON report");
    for (auto *cmd : {ccdf, rate, heat, validate})
        add_shared(cmd, opt);
    validate->add_option("--only", opt.only, "Run only these criterion numbers");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return kUsage;
    }

    ConfigPtr cfg;
    if (const int rc = build_config(opt, cfg); rc != kOk)
        return rc;

    if (validate->parsed())
    {
        int all_passed = 0;
        const mw_status s = mw_validate(cfg.get(), opt.out.c_str(), opt.only.data(), opt.only.size(), print_criterion,
                                        nullptr, &all_passed);
        if (s != MW_OK)
            return report(s);
        std::printf("report: %s/validation_report.json\n", opt.out.c_str());
        return all_passed ? kOk : kValidationFailed;
    }

    const mw_command cmd = ccdf->parsed() ? MW_CMD_CCDF : (rate->parsed() ? MW_CMD_RATE_ORIENTATION : MW_CMD_HEATMAP);
    if (const mw_status s = mw_run(cfg.get(), cmd, opt.out.c_str()); s != MW_OK)
        return report(s);
    std::istringstream warnings(mw_last_warnings());
    for (std::string line; std::getline(warnings, line);)
        if (!line.empty())
            std::cerr << "mmwear: warning: " << line << '\n';
    std::printf("wrote results to %s\n", opt.out.c_str());
    return kOk;
}
