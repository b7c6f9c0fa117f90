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

#ifndef MMWEAR_CSV_HPP
#define MMWEAR_CSV_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mmwear
{

using CsvCell = std::variant<double, std::string>;

struct CsvTable
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a named column; throws IoError if absent.
    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::size_t col) const;
};

// Writes to a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

// Header row, ',' separator, shortest round-trip formatting for numbers. Fields containing
// commas or quotes are quoted.
std::string format_csv(const std::vector<std::string> &header, const std::vector<std::vector<CsvCell>> &rows);
void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<CsvCell>> &rows);

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path &path);

std::string read_file(const std::filesystem::path &path);

} // namespace mmwear

#endif
