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

#include "mmwear/mmwear.h"

#include "mmwear/analytic.hpp"
#include "mmwear/config.hpp"
#include "mmwear/errors.hpp"
#include "mmwear/experiments.hpp"
#include "mmwear/montecarlo.hpp"
#include "mmwear/validation.hpp"

#include <cstring>
#include <new>
#include <string>
#include <vector>

struct mw_config
{
    mmwear::ExperimentConfig cfg;
};

struct mw_model
{
    mmwear::Enclosure enclosure;
    mmwear::SystemParams params;
    mmwear::LocationModel model;
};

namespace
{

thread_local std::string g_error;
thread_local std::string g_field;
thread_local int g_line = 0;
thread_local std::string g_warnings;

mw_status fail(mw_status status, const std::string &message, int line = 0, std::string field = {})
{
    g_error = message;
    g_line = line;
    g_field = std::move(field);
    return status;
}

template <class Fn>
mw_status guarded(Fn &&fn) noexcept
{
    try
    {
        g_error.clear();
        g_field.clear();
        g_line = 0;
        fn();
        return MW_OK;
    }
    catch (const mmwear::ConfigError &e)
    {
        return fail(MW_ERR_CONFIG, e.what(), e.line(), e.field());
    }
    catch (const mmwear::IoError &e)
    {
        return fail(MW_ERR_IO, e.what());
    }
    catch (const mmwear::DivergenceError &e)
    {
        return fail(MW_ERR_DIVERGENCE, e.what());
    }
    catch (const mmwear::NumericalError &e)
    {
        return fail(MW_ERR_NUMERICAL, e.what());
    }
    catch (const std::invalid_argument &e)
    {
        return fail(MW_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::domain_error &e)
    {
        return fail(MW_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::out_of_range &e)
    {
        return fail(MW_ERR_INVALID_ARGUMENT, e.what());
    }
    catch (const std::filesystem::filesystem_error &e)
    {
        return fail(MW_ERR_IO, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(MW_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception &e)
    {
        return fail(MW_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(MW_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char *what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

mmwear::Command to_command(mw_command cmd)
{
    switch (cmd)
    {
    case MW_CMD_CCDF:
        return mmwear::Command::Ccdf;
    case MW_CMD_RATE_ORIENTATION:
        return mmwear::Command::RateOrientation;
    case MW_CMD_HEATMAP:
        return mmwear::Command::Heatmap;
    case MW_CMD_VALIDATE:
        return mmwear::Command::Validate;
    }
    throw std::invalid_argument("unknown command");
}

double radians(double deg)
{
    return deg * mmwear::kPi / 180.0;
}

} // namespace

extern "C" {

const char *mw_version(void)
{
    return "0.1.0";
}

const char *mw_last_error(void)
{
    return g_error.c_str();
}

int mw_last_error_line(void)
{
    return g_line;
}

const char *mw_last_error_field(void)
{
    return g_field.c_str();
}

const char *mw_last_warnings(void)
{
    return g_warnings.c_str();
}

mw_status mw_config_new(mw_config **out)
{
    return guarded([&] {
        require(out != nullptr, "null output pointer");
        *out = new mw_config{};
    });
}

mw_status mw_config_parse(const char *text, mw_config **out)
{
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new mw_config{mmwear::parse_config(text)};
    });
}

mw_status mw_config_load(const char *path, mw_config **out)
{
    return guarded([&] {
        require(path != nullptr && out != nullptr, "null argument");
        *out = new mw_config{mmwear::load_config(path)};
    });
}

void mw_config_free(mw_config *cfg)
{
    delete cfg;
}

mw_status mw_config_set(mw_config *cfg, const char *key, const char *value)
{
    return guarded([&] {
        require(cfg != nullptr && key != nullptr && value != nullptr, "null argument");
        mmwear::set_config_value(cfg->cfg, key, value);
    });
}

mw_status mw_config_resolve(mw_config *cfg, mw_command cmd)
{
    return guarded([&] {
        require(cfg != nullptr, "null config");
        cfg->cfg.resolve(to_command(cmd));
    });
}

mw_status mw_config_serialize(const mw_config *cfg, char *buf, size_t capacity, size_t *needed)
{
    return guarded([&] {
        require(cfg != nullptr, "null config");
        const std::string text = cfg->cfg.serialize();
        if (needed)
            *needed = text.size() + 1;
        if (buf && capacity > text.size())
            std::memcpy(buf, text.c_str(), text.size() + 1);
        else if (buf)
            throw std::invalid_argument("buffer too small for the configuration text");
    });
}

mw_status mw_run(const mw_config *cfg, mw_command cmd, const char *out_dir)
{
    return guarded([&] {
        require(cfg != nullptr && out_dir != nullptr, "null argument");
        require(cmd != MW_CMD_VALIDATE, "use mw_validate for the validate command");
        g_warnings.clear();
        mmwear::ExperimentConfig resolved = cfg->cfg;
        const mmwear::Command command = to_command(cmd);
        resolved.resolve(command);
        std::vector<std::string> warnings;
        switch (command)
        {
        case mmwear::Command::Ccdf:
            for (const auto &run : mmwear::run_ccdf(resolved, out_dir))
                for (const auto *curve : {&run.analytic, &run.montecarlo})
                    warnings.insert(warnings.end(), curve->warnings.begin(), curve->warnings.end());
            break;
        case mmwear::Command::RateOrientation:
            warnings = mmwear::run_rate_orientation(resolved, out_dir).warnings;
            break;
        case mmwear::Command::Heatmap:
            mmwear::run_heatmap(resolved, out_dir);
            break;
        case mmwear::Command::Validate:
            break;
        }
        for (const auto &w : warnings)
            g_warnings += w + "\n";
    });
}

mw_status mw_validate(const mw_config *cfg, const char *out_dir, const int *only, size_t n_only,
                      mw_criterion_fn on_result, void *user, int *all_passed)
{
    return guarded([&] {
        require(cfg != nullptr && out_dir != nullptr, "null argument");
        require(n_only == 0 || only != nullptr, "null criterion list");
        mmwear::ExperimentConfig resolved = cfg->cfg;
        resolved.resolve(mmwear::Command::Validate);
        const auto report = mmwear::run_validation(resolved, out_dir, std::span<const int>(only, n_only));
        if (on_result)
            for (const auto &c : report.criteria)
                on_result(user, c.id, c.name.c_str(), static_cast<mw_verdict>(c.verdict), c.measured, c.threshold,
                          c.detail.c_str(), c.seconds);
        if (all_passed)
            *all_passed = report.all_passed() ? 1 : 0;
    });
}

mw_status mw_model_new(const mw_config *cfg, double lambda, double x, double y, mw_model **out)
{
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "null argument");
        const mmwear::SystemParams params = cfg->cfg.system(lambda);
        params.validate();
        cfg->cfg.enclosure.validate();
        *out = new mw_model{cfg->cfg.enclosure, params, mmwear::LocationModel({x, y}, cfg->cfg.enclosure, params)};
    });
}

void mw_model_free(mw_model *model)
{
    delete model;
}

mw_status mw_model_threshold_radius(const mw_model *model, double *radius)
{
    return guarded([&] {
        require(model != nullptr && radius != nullptr, "null argument");
        *radius = model->model.threshold_radius();
    });
}

mw_status mw_model_coverage(const mw_model *model, double psi_deg, const double *gamma_db, size_t n, double *coverage)
{
    return guarded([&] {
        require(model != nullptr && (n == 0 || (gamma_db != nullptr && coverage != nullptr)), "null argument");
        const double q = model->model.q(radians(psi_deg));
        for (size_t i = 0; i < n; ++i)
            coverage[i] = model->model.coverage(model->model.laplace_terms(mmwear::db_to_linear(gamma_db[i])), q);
    });
}

mw_status mw_model_rate(const mw_model *model, double psi_deg, double *bps)
{
    return guarded([&] {
        require(model != nullptr && bps != nullptr, "null argument");
        *bps = mmwear::ergodic_rate(model->model.position(), radians(psi_deg), model->enclosure, model->params).bps;
    });
}

mw_status mw_simulate_coverage(const mw_config *cfg, double lambda, double x, double y, double psi_deg,
                               const double *gamma_db, size_t n, double *coverage, double *ci_halfwidth)
{
    return guarded([&] {
        require(cfg != nullptr && (n == 0 || (gamma_db != nullptr && coverage != nullptr)), "null argument");
        mmwear::McRun run;
        run.realizations = cfg->cfg.realizations;
        run.base_seed = cfg->cfg.seed;
        run.workers = cfg->cfg.workers;
        const auto curve = mmwear::empirical_ccdf({x, y}, radians(psi_deg), std::span<const double>(gamma_db, n), run,
                                                  cfg->cfg.enclosure, cfg->cfg.system(lambda));
        for (size_t i = 0; i < n; ++i)
        {
            coverage[i] = curve.coverage[i];
            if (ci_halfwidth)
                ci_halfwidth[i] = curve.ci_halfwidth[i];
        }
    });
}

} // extern "C"
