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

#ifndef MMWEAR_VALIDATION_HPP
#define MMWEAR_VALIDATION_HPP

#include "mmwear/config.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace mmwear
{

enum class Verdict : std::uint8_t
{
    Pass,
    Fail,
    Skipped
};

std::string_view verdict_name(Verdict v) noexcept;

struct CriterionResult
{
    int id = 0;
    std::string name;
    Verdict verdict = Verdict::Fail;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct ValidationReport
{
    std::vector<CriterionResult> criteria;
    std::string config; // resolved configuration text

    // Skipped criteria do not count as failures.
    bool all_passed() const noexcept;
    std::string to_json() const;
};

inline constexpr int kCriterionCount = 9;
inline constexpr const char *kReportFileName = "validation_report.json";

// Runs the acceptance criteria (all of them when `only` is empty) against a configuration resolved
// for Command::Validate. CSV artifacts of criteria 1, 5 and 6 and the JSON report go to out_dir.
ValidationReport run_validation(const ExperimentConfig &cfg, const std::filesystem::path &out_dir,
                                std::span<const int> only = {});

} // namespace mmwear

#endif
