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

#ifndef MMWEAR_ERRORS_HPP
#define MMWEAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mmwear
{

// Precondition violations are reported with std::invalid_argument or std::domain_error.
// The types below cover failures that are not caller mistakes.

class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// An integral or mean that has no finite value (e.g. the rate of a noiseless, interference-free link).
class DivergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error
{
  public:
    ConfigError(const std::string &message, int line = 0, std::string field = {})
        : std::runtime_error(format(message, line, field)), line_(line), field_(std::move(field))
    {
    }

    int line() const noexcept { return line_; }
    const std::string &field() const noexcept { return field_; }

  private:
    static std::string format(const std::string &message, int line, const std::string &field)
    {
        std::string out;
        if (line > 0)
            out += "line " + std::to_string(line) + ": ";
        if (!field.empty())
            out += "'" + field + "': ";
        return out + message;
    }

    int line_;
    std::string field_;
};

} // namespace mmwear

#endif
