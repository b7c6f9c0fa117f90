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
#include "mmwear/csv.hpp"
#include "mmwear/errors.hpp"
#include "mmwear/experiments.hpp"

#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <limits>
#include <unistd.h>

using namespace mmwear;
namespace fs = std::filesystem;

namespace
{

fs::path scratch(const char *name)
{
    const fs::path dir = fs::temp_directory_path() / ("mmwear_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("defaults")
{
    ExperimentConfig cfg;
    CHECK(cfg.enclosure.length == 15.0);
    CHECK(cfg.enclosure.breadth == 5.0);
    CHECK(cfg.enclosure.height == 2.5);
    CHECK(cfg.enclosure.plane_depth == 1.0);
    CHECK(cfg.params.body_width == 0.45);
    CHECK(cfg.params.device_radius == 0.325);
    CHECK(cfg.params.ref_link == 0.25);
    CHECK(cfg.params.alpha_los == 2.0);
    CHECK(cfg.params.alpha_nlos == 4.0);
    CHECK(cfg.params.nakagami_m == 7);
    CHECK(cfg.self_block_db == 40.0);
    CHECK(cfg.params.bandwidth_hz == 1.76e9);
    CHECK(cfg.resolved_sigma2() == doctest::Approx(0.16).epsilon(1e-14));
    CHECK(cfg.system(1.0).self_block_attenuation == doctest::Approx(1e4).epsilon(1e-14));
    CHECK(cfg.system(2.0).lambda == 2.0);

    ExperimentConfig ccdf = cfg;
    ccdf.resolve(Command::Ccdf);
    CHECK(*ccdf.lambdas == std::vector<double>{0.5, 1.0, 2.0, 4.0});
    CHECK(*ccdf.psi_deg == 0.0);
    CHECK(ccdf.positions->front().label == "center");
    CHECK(ccdf.positions->front().z == Point{7.5, 2.5});

    ExperimentConfig rate = cfg;
    rate.resolve(Command::RateOrientation);
    REQUIRE(rate.positions->size() == 2);
    CHECK(rate.positions->at(1).z == Point{0.5, 0.5});
    CHECK_FALSE(rate.psi_deg.has_value());
    CHECK(orientation_sweep(rate).size() == 25);
    CHECK(orientation_sweep(rate).back() == 360.0);

    ExperimentConfig heat = cfg;
    heat.resolve(Command::Heatmap);
    CHECK(*heat.psi_deg == 180.0);
    CHECK(heat.threshold_db == 3.0);

    CHECK(GammaRange{}.values().size() == 81);
    CHECK(GammaRange{-10, 30, 0.5}.values().back() == 30.0);
}

TEST_CASE("commands")
{
    for (const Command c : {Command::Ccdf, Command::RateOrientation, Command::Heatmap, Command::Validate})
        CHECK(parse_command(command_name(c)) == c);
    CHECK(command_name(Command::RateOrientation) == "rate-orientation");
    CHECK_FALSE(parse_command("plot").has_value());
}

TEST_CASE("parsing and serialization round trip")
{
    const std::string text = "# room\n"
                             "length_m = 12\n"
                             "   \n"
                             "lambda = 0.5, 2 # two densities\n"
                             "position = 3.25,1.5\n"
                             "gamma_db = -5:20:0.25\n"
                             "self_block_db = 30\n"
                             "sigma2 = 0.01\n"
                             "nakagami_m = 3\n"
                             "seed = 18446744073709551615\n"
                             "grid = 30x12\n";
    ExperimentConfig cfg = parse_config(text);
    CHECK(cfg.enclosure.length == 12.0);
    CHECK(*cfg.lambdas == std::vector<double>{0.5, 2.0});
    CHECK(cfg.positions->front().z == Point{3.25, 1.5});
    CHECK(cfg.gamma.step == 0.25);
    CHECK(cfg.system(1.0).self_block_attenuation == doctest::Approx(1e3));
    CHECK(cfg.seed == std::numeric_limits<std::uint64_t>::max());
    CHECK(cfg.grid.nx == 30);
    CHECK(cfg.grid.ny == 12);
    cfg.resolve(Command::Ccdf);

    const std::string once = cfg.serialize();
    ExperimentConfig again = parse_config(once);
    again.resolve(Command::Ccdf);
    CHECK(again.serialize() == once);

    ExperimentConfig odd;
    set_config_value(odd, "sigma2", "0.1");
    set_config_value(odd, "psi_deg", "33.3");
    odd.resolve(Command::Heatmap);
    CHECK(parse_config(odd.serialize()).serialize() == odd.serialize());
    CHECK(std::stod(format_double(0.1)) == 0.1);
    CHECK(format_double(1.0 / 3.0).size() <= 20);
}

TEST_CASE("configuration errors name the line and field")
{
    try
    {
        parse_config("length_m = 15\nwidth = 3\n");
        FAIL("accepted an unknown key");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.line() == 2);
        CHECK(e.field() == "width");
    }
    try
    {
        parse_config("\n\nlambda = one\n");
        FAIL("accepted a bad number");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.line() == 3);
        CHECK(e.field() == "lambda");
    }
    CHECK_THROWS_AS(parse_config("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("nakagami_m = 2.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("grid = 10by10\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("gamma_db = 1:2\n"), ConfigError);
    CHECK_THROWS_AS(parse_position("middle"), ConfigError);

    auto resolve = [](const std::string &text, Command cmd) {
        ExperimentConfig c = parse_config(text);
        c.resolve(cmd);
    };
    CHECK_THROWS_AS(resolve("lambda = 1,2\n", Command::Heatmap), ConfigError);
    CHECK_THROWS_AS(resolve("position = center;corner\n", Command::Ccdf), ConfigError);
    CHECK_THROWS_AS(resolve("grid = 9x10\n", Command::Heatmap), ConfigError);
    CHECK_THROWS_AS(resolve("realizations = 999\n", Command::Ccdf), ConfigError);
    CHECK_THROWS_AS(resolve("position = 0.1,2\n", Command::Ccdf), ConfigError);
    CHECK_THROWS_AS(resolve("device_radius_m = 0.1\n", Command::Ccdf), ConfigError);
    CHECK_THROWS_AS(resolve("gamma_db = 5:1:1\n", Command::Ccdf), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/mmwear.config"), IoError);
}

TEST_CASE("CSV formatting and parsing")
{
    const std::vector<std::string> header{"a", "label", "b"};
    const std::vector<std::vector<CsvCell>> rows{{0.1, std::string("plain"), 1e-300},
                                                 {1.0 / 3.0, std::string("with,comma"), -0.0},
                                                 {2.5, std::string("say \"hi\""), 123456789.125}};
    const std::string text = format_csv(header, rows);
    const CsvTable t = parse_csv(text);
    CHECK(t.header == header);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.number(0, 0) == 0.1);
    CHECK(t.number(0, 2) == 1e-300);
    CHECK(t.number(1, 0) == 1.0 / 3.0);
    CHECK(t.rows[1][1] == "with,comma");
    CHECK(t.rows[2][1] == "say \"hi\"");
    CHECK(t.number(2, t.column("b")) == 123456789.125);
    CHECK_THROWS_AS(t.column("missing"), IoError);
    CHECK(format_csv(t.header, {{0.1, std::string("plain"), 1e-300}}) ==
          format_csv(header, {rows[0]}));
}

TEST_CASE("atomic writes")
{
    const fs::path dir = scratch("atomic");
    const fs::path target = dir / "nested" / "out.csv";
    write_file_atomic(target, "first\n");
    CHECK(read_file(target) == "first\n");
    write_file_atomic(target, "second\n");
    CHECK(read_file(target) == "second\n");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto &e : fs::directory_iterator(target.parent_path()))
        ++entries;
    CHECK(entries == 1);

    write_csv(dir / "t.csv", {"x"}, {{1.5}, {2.5}});
    CHECK(read_csv(dir / "t.csv").number(1, 0) == 2.5);

    const fs::path blocker = dir / "file";
    write_file_atomic(blocker, "x");
    CHECK_THROWS_AS(write_file_atomic(blocker / "below.csv", "y"), IoError);
    CHECK_THROWS_AS(read_file(dir / "absent.csv"), IoError);
    fs::remove_all(dir.parent_path());
}
