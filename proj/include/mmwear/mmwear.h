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

#ifndef MMWEAR_H
#define MMWEAR_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef MMWEAR_BUILDING_LIBRARY
#    define MMWEAR_API __declspec(dllexport)
#  else
#    define MMWEAR_API __declspec(dllimport)
#  endif
#else
#  define MMWEAR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mw_status
{
    MW_OK = 0,
    MW_ERR_INVALID_ARGUMENT = 1, // bad pointer, out-of-range value, model precondition
    MW_ERR_CONFIG = 2,           // configuration text or value rejected
    MW_ERR_IO = 3,
    MW_ERR_NUMERICAL = 4,        // quadrature did not converge
    MW_ERR_DIVERGENCE = 5,       // quantity has no finite value (noise- and interference-free rate)
    MW_ERR_INTERNAL = 6
} mw_status;

typedef enum mw_command
{
    MW_CMD_CCDF = 0,
    MW_CMD_RATE_ORIENTATION = 1,
    MW_CMD_HEATMAP = 2,
    MW_CMD_VALIDATE = 3
} mw_command;

typedef enum mw_verdict
{
    MW_PASS = 0,
    MW_FAIL = 1,
    MW_SKIPPED = 2
} mw_verdict;

typedef struct mw_config mw_config;
typedef struct mw_model mw_model;

MMWEAR_API const char *mw_version(void);

// Message, line and field of the last failure on the calling thread.
MMWEAR_API const char *mw_last_error(void);
MMWEAR_API int mw_last_error_line(void);
MMWEAR_API const char *mw_last_error_field(void);

// Warnings raised by the last mw_run on the calling thread, one per line; "" when none.
MMWEAR_API const char *mw_last_warnings(void);

// Configuration: built-in defaults, then file text, then single-key overrides.
MMWEAR_API mw_status mw_config_new(mw_config **out);
MMWEAR_API mw_status mw_config_parse(const char *text, mw_config **out);
MMWEAR_API mw_status mw_config_load(const char *path, mw_config **out);
MMWEAR_API void mw_config_free(mw_config *cfg);
MMWEAR_API mw_status mw_config_set(mw_config *cfg, const char *key, const char *value);
MMWEAR_API mw_status mw_config_resolve(mw_config *cfg, mw_command cmd);

// Copies the canonical text (NUL-terminated) into buf when it fits; *needed gets the full size
// including the terminator.
MMWEAR_API mw_status mw_config_serialize(const mw_config *cfg, char *buf, size_t capacity, size_t *needed);

// Runs ccdf, rate-orientation or heatmap into out_dir. The configuration is resolved for the
// command on a copy.
MMWEAR_API mw_status mw_run(const mw_config *cfg, mw_command cmd, const char *out_dir);

typedef void (*mw_criterion_fn)(void *user, int id, const char *name, mw_verdict verdict, double measured,
                                double threshold, const char *detail, double seconds);

// Runs the acceptance criteria listed in `only` (all when n_only is 0), writes the JSON report
// and artifacts into out_dir, and calls `on_result` once per criterion (may be NULL).
// *all_passed is 1 when no criterion failed.
MMWEAR_API mw_status mw_validate(const mw_config *cfg, const char *out_dir, const int *only, size_t n_only,
                                 mw_criterion_fn on_result, void *user, int *all_passed);

// Analytic model at one receiver position (meters) and density.
MMWEAR_API mw_status mw_model_new(const mw_config *cfg, double lambda, double x, double y, mw_model **out);
MMWEAR_API void mw_model_free(mw_model *model);
MMWEAR_API mw_status mw_model_threshold_radius(const mw_model *model, double *radius);
MMWEAR_API mw_status mw_model_coverage(const mw_model *model, double psi_deg, const double *gamma_db, size_t n,
                                       double *coverage);
MMWEAR_API mw_status mw_model_rate(const mw_model *model, double psi_deg, double *bps);

// Empirical CCDF from the configured realization count and seed.
MMWEAR_API mw_status mw_simulate_coverage(const mw_config *cfg, double lambda, double x, double y, double psi_deg,
                                          const double *gamma_db, size_t n, double *coverage, double *ci_halfwidth);

#ifdef __cplusplus
}
#endif

#endif
