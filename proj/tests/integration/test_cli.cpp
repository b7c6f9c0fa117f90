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
#include "oracles/oracles.hpp"

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

using namespace mmwear;
namespace fs = std::filesystem;

namespace
{

struct Outcome
{
    int code = -1;
    std::string output;
};

Outcome run(const std::string &args)
{
    const std::string cmd = std::string(MMWEAR_CLI) + " " + args + " 2>&1";
    Outcome out;
    FILE *pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
        out.output.append(buf, n);
    const int status = ::pclose(pipe);
    out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("mmwear_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::vector<double> column(const CsvTable &t, const char *name)
{
    const std::size_t c = t.column(name);
    std::vector<double> v;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        v.push_back(t.number(r, c));
    return v;
}

bool non_increasing(const std::vector<double> &v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1])
            return false;
    return true;
}

} // namespace

TEST_CASE("usage errors")
{
    const Outcome none = run("");
    CHECK(none.code == 2);
    const Outcome missing = run("ccdf --lambda 1");
    CHECK(missing.code == 2);
    CHECK(missing.output.find("--out") != std::string::npos);
    CHECK(missing.output.find("Usage") != std::string::npos);
    CHECK(run("ccdf --out /tmp/x --lambda abc").code == 2);
    CHECK(run("ccdf --out /tmp/x --set nonsense=1").code == 2);
    CHECK(run("heatmap --out /tmp/x --grid 5x5").code == 2);
    CHECK(run("ccdf --out /proc/mmwear-denied --lambda 0 --realizations 1000 --gamma-db 0:1:1").code == 3);
}

TEST_CASE("ccdf across densities")
{
    const fs::path dir = scratch("ccdf");
    const Outcome r = run("ccdf --lambda 0.5,2,4 --pos center --psi-deg 0 --realizations 1000 --out " + dir.string());
    REQUIRE(r.code == 0);
    std::vector<std::vector<double>> analytic;
    for (const char *name : {"ccdf_lambda_0.5.csv", "ccdf_lambda_2.csv", "ccdf_lambda_4.csv"})
    {
        const CsvTable t = read_csv(dir / name);
        CHECK(t.header == std::vector<std::string>{"gamma_db", "coverage_analytic", "coverage_mc", "mc_ci_halfwidth"});
        CHECK(t.rows.size() == 81);
        CHECK(non_increasing(column(t, "coverage_analytic")));
        CHECK(non_increasing(column(t, "coverage_mc")));
        analytic.push_back(column(t, "coverage_analytic"));

        // Cells survive a parse and re-format unchanged.
        for (const auto &row : t.rows)
            for (const auto &cell : row)
                CHECK(format_double(std::stod(cell)) == cell);
    }
    for (std::size_t i = 0; i < analytic[0].size(); ++i)
        CHECK(analytic[0][i] >= analytic[2][i]);

    // Rerunning from the sidecar reproduces every file byte for byte.
    const fs::path again = scratch("ccdf_again");
    REQUIRE(run("ccdf --config " + (dir / "ccdf.config").string() + " --out " + again.string()).code == 0);
    for (const char *name : {"ccdf_lambda_0.5.csv", "ccdf_lambda_2.csv", "ccdf_lambda_4.csv", "ccdf.config"})
        CHECK(read_file(dir / name) == read_file(again / name));
}

TEST_CASE("ccdf without interferers")
{
    const fs::path dir = scratch("ccdf0");
    REQUIRE(run("ccdf --lambda 0 --set nakagami_m=1 --realizations 100000 --out " + dir.string()).code == 0);
    CsvTable t = read_csv(dir / "ccdf_lambda_0.csv");
    auto a = column(t, "coverage_analytic");
    auto m = column(t, "coverage_mc");
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        gap = std::max(gap, std::abs(a[i] - m[i]));
    CHECK(gap <= 0.01);

    // With m = 7 the analytic column is the Alzer bound and the simulation follows the exact
    // Gamma law; each is checked against its own closed form.
    REQUIRE(run("ccdf --lambda 0 --realizations 100000 --out " + dir.string()).code == 0);
    t = read_csv(dir / "ccdf_lambda_0.csv");
    a = column(t, "coverage_analytic");
    m = column(t, "coverage_mc");
    const auto g = column(t, "gamma_db");
    double sim_gap = 0.0, bound_gap = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        const double gamma = std::pow(10.0, g[i] / 10.0);
        sim_gap = std::max(sim_gap, std::abs(m[i] - oracle::gamma_ccdf(7, gamma * 0.16 / 16.0)));
        bound_gap = std::max(bound_gap, std::abs(a[i] - oracle::alzer_coverage_noise_only(7, gamma * 0.0625, 0.16)));
    }
    CHECK(sim_gap <= 0.01);
    CHECK(bound_gap <= 1e-12);
}

TEST_CASE("rate against orientation")
{
    const fs::path dir = scratch("rate");
    REQUIRE(run("rate-orientation --realizations 1000 --psi-step-deg 90 --out " + dir.string()).code == 0);
    const CsvTable t = read_csv(dir / "rate_orientation.csv");
    CHECK(t.header == std::vector<std::string>{"psi_deg", "position_label", "rate_bps_analytic", "rate_bps_mc"});
    REQUIRE(t.rows.size() == 10);
    const std::size_t label = t.column("position_label");
    const auto psi = column(t, "psi_deg");
    const auto rate = column(t, "rate_bps_analytic");
    double center_max = 0.0, corner_max = 0.0, at90 = 0.0, at270 = 0.0;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
    {
        if (t.rows[r][label] == "center")
        {
            center_max = std::max(center_max, rate[r]);
            if (psi[r] == 90.0)
                at90 = rate[r];
            if (psi[r] == 270.0)
                at270 = rate[r];
        }
        else
        {
            CHECK(t.rows[r][label] == "corner");
            corner_max = std::max(corner_max, rate[r]);
        }
    }
    CHECK(corner_max > center_max);
    CHECK(at90 == doctest::Approx(at270).epsilon(1e-6));

    const fs::path quiet = scratch("rate0");
    REQUIRE(run("rate-orientation --lambda 0 --realizations 1000 --psi-step-deg 45 --out " + quiet.string()).code == 0);
    const CsvTable q = read_csv(quiet / "rate_orientation.csv");
    const auto qa = column(q, "rate_bps_analytic");
    const auto qm = column(q, "rate_bps_mc");
    for (std::size_t r = 0; r < q.rows.size(); ++r)
    {
        CHECK(qa[r] == doctest::Approx(qa[0]).epsilon(1e-12));
        CHECK(qm[r] == qm[0]);
    }
}

TEST_CASE("heat map")
{
    const fs::path dir = scratch("heat");
    REQUIRE(run("heatmap --grid 15x10 --out " + dir.string()).code == 0);
    const CsvTable t = read_csv(dir / "heatmap.csv");
    CHECK(t.header == std::vector<std::string>{"x_m", "y_m", "coverage"});
    REQUIRE(t.rows.size() == 150);
    const auto x = column(t, "x_m");
    const auto c = column(t, "coverage");
    const auto best = std::max_element(c.begin(), c.end()) - c.begin();
    CHECK(x[best] <= 0.2 * 15.0);

    const fs::path flat = scratch("heat0");
    REQUIRE(run("heatmap --lambda 0 --grid 10x10 --out " + flat.string()).code == 0);
    const auto f = column(read_csv(flat / "heatmap.csv"), "coverage");
    CHECK(f.size() == 100);
    for (const double v : f)
        CHECK(v == doctest::Approx(f.front()).epsilon(1e-12));
}

TEST_CASE("validate exit codes")
{
    const fs::path dir = scratch("validate");
    const fs::path bad = dir / "bad.config";
    write_file_atomic(bad, "lambda = 1\nthis line is not a setting\n");
    const Outcome corrupt = run("validate --config " + bad.string() + " --out " + dir.string());
    CHECK(corrupt.code == 2);
    CHECK(corrupt.output.find("line 2") != std::string::npos);

    const Outcome skipped = run("validate --only 2 --sigma2 1e6 --out " + dir.string());
    CHECK(skipped.code == 0);
    CHECK(skipped.output.find("[SKIP] 2") != std::string::npos);

    const Outcome quad = run("validate --only 8 --out " + dir.string());
    CHECK(quad.code == 0);
    CHECK(quad.output.find("[PASS] 8") != std::string::npos);
    const std::string report = read_file(dir / "validation_report.json");
    CHECK(report.find("\"all_passed\": true") != std::string::npos);
    CHECK(fs::exists(dir / "validate.config"));
}
