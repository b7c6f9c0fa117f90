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

#include "mmwear/config.hpp"

#include "mmwear/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace mmwear
{

namespace
{

std::string_view trim(std::string_view s) noexcept
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;)
    {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

std::optional<double> to_double(std::string_view s) noexcept
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

struct FieldParser
{
    std::string_view key;
    int line;

    [[noreturn]] void fail(const std::string &msg) const { throw ConfigError(msg, line, std::string(key)); }

    double real(std::string_view s) const
    {
        const auto v = to_double(s);
        if (!v)
            fail("expected a number, got '" + std::string(s) + "'");
        return *v;
    }

    double positive(std::string_view s) const
    {
        const double v = real(s);
        if (!(v > 0.0))
            fail("must be positive");
        return v;
    }

    template <class Int>
    Int integer(std::string_view s) const
    {
        s = trim(s);
        Int v{};
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size() && !s.empty())
            return v;
        if (to_double(s))
            fail("must be an integer, got '" + std::string(s) + "'");
        fail("expected a non-negative integer, got '" + std::string(s) + "'");
    }
};

Point named_position(std::string_view label, const Enclosure &enc)
{
    if (label == "center")
        return enc.center();
    return {0.5, 0.5};
}

} // namespace

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string_view command_name(Command c) noexcept
{
    switch (c)
    {
    case Command::Ccdf:
        return "ccdf";
    case Command::RateOrientation:
        return "rate-orientation";
    case Command::Heatmap:
        return "heatmap";
    case Command::Validate:
        return "validate";
    }
    return "";
}

std::optional<Command> parse_command(std::string_view name) noexcept
{
    for (const Command c : {Command::Ccdf, Command::RateOrientation, Command::Heatmap, Command::Validate})
        if (command_name(c) == name)
            return c;
    return std::nullopt;
}

std::vector<double> GammaRange::values() const
{
    std::vector<double> out;
    const auto n = static_cast<long long>(std::floor((last - first) / step + 1e-9));
    for (long long i = 0; i <= n; ++i)
        out.push_back(first + static_cast<double>(i) * step);
    return out;
}

Position parse_position(std::string_view text)
{
    text = trim(text);
    if (text == "center" || text == "corner")
        return {std::string(text), {}};
    const auto parts = split(text, ',');
    if (parts.size() == 2)
    {
        const auto x = to_double(parts[0]);
        const auto y = to_double(parts[1]);
        if (x && y)
            return {format_double(*x) + "," + format_double(*y), {*x, *y}};
    }
    throw ConfigError("expected center, corner or X,Y; got '" + std::string(text) + "'", 0, "position");
}

double ExperimentConfig::resolved_sigma2() const
{
    if (sigma2)
        return *sigma2;
    return noise_for_reference_snr(params.ref_link, params.alpha_los, kDefaultReferenceSnrDb);
}

SystemParams ExperimentConfig::system(double lambda) const
{
    SystemParams p = params;
    p.lambda = lambda;
    p.self_block_attenuation = db_to_linear(self_block_db);
    p.noise_sigma2 = resolved_sigma2();
    return p;
}

void ExperimentConfig::resolve(Command cmd)
{
    auto check = [](const char *field, auto &&fn) {
        try
        {
            fn();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError(e.what(), 0, field);
        }
        catch (const std::domain_error &e)
        {
            throw ConfigError(e.what(), 0, field);
        }
    };

    if (!lambdas)
        lambdas = cmd == Command::Ccdf ? std::vector<double>{0.5, 1.0, 2.0, 4.0} : std::vector<double>{1.0};
    if (!positions)
    {
        if (cmd == Command::RateOrientation)
            positions = std::vector<Position>{{"center", {}}, {"corner", {}}};
        else
            positions = std::vector<Position>{{"center", {}}};
    }
    if (!psi_deg && cmd == Command::Ccdf)
        psi_deg = 0.0;
    if (!psi_deg && cmd == Command::Heatmap)
        psi_deg = 180.0;
    sigma2 = resolved_sigma2();

    check("enclosure", [&] { enclosure.validate(); });
    if (lambdas->empty())
        throw ConfigError("at least one density is required", 0, "lambda");
    for (const double l : *lambdas)
        check("lambda", [&] { system(l).validate(); });
    if (params.nakagami_m > kMaxNakagamiM)
        throw ConfigError("Nakagami m above 30 is not supported", 0, "nakagami_m");
    if (*sigma2 < 0.0)
        throw ConfigError("noise power must be non-negative", 0, "sigma2");
    if (!(params.bandwidth_hz > 0.0))
        throw ConfigError("bandwidth must be positive", 0, "bandwidth_hz");
    if ((cmd == Command::RateOrientation || cmd == Command::Heatmap) && lambdas->size() != 1)
        throw ConfigError("this command takes a single density", 0, "lambda");
    if (cmd == Command::Ccdf && positions->size() != 1)
        throw ConfigError("ccdf takes a single position", 0, "position");

    const double d = params.device_radius;
    for (Position &p : *positions)
    {
        if (p.label == "center" || p.label == "corner")
            p.z = named_position(p.label, enclosure);
        if (p.z.x < d - kGeomEps || p.z.x > enclosure.length - d + kGeomEps || p.z.y < d - kGeomEps ||
            p.z.y > enclosure.breadth - d + kGeomEps)
            throw ConfigError("position " + p.label + " must be at least the device radius from every wall", 0,
                              "position");
    }
    if (!(gamma.step > 0.0) || gamma.last < gamma.first)
        throw ConfigError("expected A:B:STEP with A <= B and STEP > 0", 0, "gamma_db");
    if (gamma.values().size() > 100'000)
        throw ConfigError("threshold grid has too many points", 0, "gamma_db");
    if (!(psi_step_deg > 0.0) || psi_step_deg > 360.0)
        throw ConfigError("step must be in (0, 360]", 0, "psi_step_deg");
    if (realizations < 1000)
        throw ConfigError("at least 1000 realizations are required", 0, "realizations");
    if (cmd == Command::Heatmap && (grid.nx < 10 || grid.ny < 10))
        throw ConfigError("heat-map grid must be at least 10x10", 0, "grid");
}

std::string ExperimentConfig::serialize() const
{
    std::ostringstream out;
    auto kv = [&](const char *k, const std::string &v) { out << k << " = " << v << '\n'; };
    kv("length_m", format_double(enclosure.length));
    kv("breadth_m", format_double(enclosure.breadth));
    kv("height_m", format_double(enclosure.height));
    kv("plane_depth_m", format_double(enclosure.plane_depth));
    kv("body_width_m", format_double(params.body_width));
    kv("device_radius_m", format_double(params.device_radius));
    kv("ref_link_m", format_double(params.ref_link));
    kv("alpha_los", format_double(params.alpha_los));
    kv("alpha_nlos", format_double(params.alpha_nlos));
    kv("nakagami_m", std::to_string(params.nakagami_m));
    kv("self_block_db", format_double(self_block_db));
    if (sigma2)
        kv("sigma2", format_double(*sigma2));
    kv("bandwidth_hz", format_double(params.bandwidth_hz));
    if (lambdas)
    {
        std::string s;
        for (std::size_t i = 0; i < lambdas->size(); ++i)
            s += (i ? "," : "") + format_double((*lambdas)[i]);
        kv("lambda", s);
    }
    if (positions)
    {
        std::string s;
        for (std::size_t i = 0; i < positions->size(); ++i)
            s += (i ? ";" : "") + (*positions)[i].label;
        kv("position", s);
    }
    if (psi_deg)
        kv("psi_deg", format_double(*psi_deg));
    kv("psi_step_deg", format_double(psi_step_deg));
    kv("gamma_db", format_double(gamma.first) + ":" + format_double(gamma.last) + ":" + format_double(gamma.step));
    kv("threshold_db", format_double(threshold_db));
    kv("realizations", std::to_string(realizations));
    kv("seed", std::to_string(seed));
    kv("grid", std::to_string(grid.nx) + "x" + std::to_string(grid.ny));
    kv("workers", std::to_string(workers));
    return out.str();
}

void set_config_value(ExperimentConfig &cfg, std::string_view key, std::string_view value, int line)
{
    const FieldParser f{key, line};
    value = trim(value);
    if (key == "length_m")
        cfg.enclosure.length = f.positive(value);
    else if (key == "breadth_m")
        cfg.enclosure.breadth = f.positive(value);
    else if (key == "height_m")
        cfg.enclosure.height = f.positive(value);
    else if (key == "plane_depth_m")
        cfg.enclosure.plane_depth = f.positive(value);
    else if (key == "body_width_m")
        cfg.params.body_width = f.positive(value);
    else if (key == "device_radius_m")
        cfg.params.device_radius = f.positive(value);
    else if (key == "ref_link_m")
        cfg.params.ref_link = f.positive(value);
    else if (key == "alpha_los")
        cfg.params.alpha_los = f.positive(value);
    else if (key == "alpha_nlos")
        cfg.params.alpha_nlos = f.positive(value);
    else if (key == "nakagami_m")
    {
        const int m = f.integer<int>(value);
        if (m < 1)
            f.fail("must be a positive integer");
        cfg.params.nakagami_m = m;
    }
    else if (key == "self_block_db")
        cfg.self_block_db = f.positive(value);
    else if (key == "sigma2")
    {
        const double s = f.real(value);
        if (s < 0.0)
            f.fail("must be non-negative");
        cfg.sigma2 = s;
    }
    else if (key == "bandwidth_hz")
        cfg.params.bandwidth_hz = f.positive(value);
    else if (key == "lambda")
    {
        std::vector<double> list;
        for (const auto part : split(value, ','))
        {
            const double l = f.real(part);
            if (l < 0.0)
                f.fail("densities must be non-negative");
            list.push_back(l);
        }
        cfg.lambdas = std::move(list);
    }
    else if (key == "position")
    {
        std::vector<Position> list;
        for (const auto part : split(value, ';'))
        {
            try
            {
                list.push_back(parse_position(part));
            }
            catch (const ConfigError &)
            {
                throw ConfigError("expected center, corner or X,Y; got '" + std::string(part) + "'", line,
                                  std::string(key));
            }
        }
        cfg.positions = std::move(list);
    }
    else if (key == "psi_deg")
        cfg.psi_deg = f.real(value);
    else if (key == "psi_step_deg")
        cfg.psi_step_deg = f.positive(value);
    else if (key == "gamma_db")
    {
        const auto parts = split(value, ':');
        if (parts.size() != 3)
            f.fail("expected A:B:STEP");
        cfg.gamma = {f.real(parts[0]), f.real(parts[1]), f.positive(parts[2])};
        if (cfg.gamma.last < cfg.gamma.first)
            f.fail("expected A <= B");
    }
    else if (key == "threshold_db")
        cfg.threshold_db = f.real(value);
    else if (key == "realizations")
        cfg.realizations = f.integer<std::size_t>(value);
    else if (key == "seed")
        cfg.seed = f.integer<std::uint64_t>(value);
    else if (key == "grid")
    {
        const auto parts = split(value, 'x');
        if (parts.size() != 2)
            f.fail("expected NXxNY");
        cfg.grid = {f.integer<int>(parts[0]), f.integer<int>(parts[1])};
    }
    else if (key == "workers")
        cfg.workers = f.integer<unsigned>(value);
    else
        throw ConfigError("unknown key", line, std::string(key));
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig cfg;
    int line_no = 0;
    for (auto line : split(text, '\n'))
    {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected key = value", line_no);
        const auto key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("missing key before '='", line_no);
        set_config_value(cfg, key, line.substr(eq + 1), line_no);
    }
    return cfg;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

} // namespace mmwear
