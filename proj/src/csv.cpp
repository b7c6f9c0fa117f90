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

#include "mmwear/csv.hpp"

#include "mmwear/config.hpp"
#include "mmwear/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace mmwear
{

namespace
{

std::string quote(std::string_view s)
{
    if (s.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (const char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::size_t CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw IoError("CSV has no column '" + std::string(name) + "'");
}

double CsvTable::number(std::size_t row, std::size_t col) const
{
    const std::string &s = rows.at(row).at(col);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw IoError("CSV cell '" + s + "' is not a number");
    return v;
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (path.has_parent_path())
    {
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
        {
            out.close();
            fs::remove(tmp, ec);
            throw IoError("write failed for " + tmp.string());
        }
    }
    fs::rename(tmp, path, ec);
    if (ec)
    {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw IoError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

std::string format_csv(const std::vector<std::string> &header, const std::vector<std::vector<CsvCell>> &rows)
{
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out += (i ? "," : "") + quote(header[i]);
    out += '\n';
    for (const auto &row : rows)
    {
        if (row.size() != header.size())
            throw std::invalid_argument("CSV row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ',';
            if (const double *v = std::get_if<double>(&row[i]))
                out += format_double(*v);
            else
                out += quote(std::get<std::string>(row[i]));
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path &path, const std::vector<std::string> &header,
               const std::vector<std::vector<CsvCell>> &rows)
{
    write_file_atomic(path, format_csv(header, rows));
}

CsvTable parse_csv(std::string_view text)
{
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (quoted)
        {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"')
            {
                field += '"';
                ++i;
            }
            else if (c == '"')
                quoted = false;
            else
                field += c;
            continue;
        }
        any = true;
        if (c == '"')
            quoted = true;
        else if (c == ',')
        {
            record.push_back(std::move(field));
            field.clear();
        }
        else if (c == '\n')
        {
            record.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        }
        else if (c != '\r')
            field += c;
    }
    if (quoted)
        throw IoError("CSV ends inside a quoted field");
    if (any)
    {
        record.push_back(std::move(field));
        records.push_back(std::move(record));
    }
    if (records.empty())
        throw IoError("CSV has no header row");

    CsvTable table;
    table.header = std::move(records.front());
    for (std::size_t r = 1; r < records.size(); ++r)
    {
        if (records[r].size() != table.header.size())
            throw IoError("CSV row " + std::to_string(r + 1) + " has " + std::to_string(records[r].size()) +
                          " fields, expected " + std::to_string(table.header.size()));
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CsvTable read_csv(const std::filesystem::path &path)
{
    return parse_csv(read_file(path));
}

} // namespace mmwear
