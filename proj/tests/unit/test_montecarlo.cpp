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

#include "mmwear/errors.hpp"
#include "mmwear/montecarlo.hpp"
#include "oracles/oracles.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

using namespace mmwear;

namespace
{

const Enclosure kRoom{};
const Point kCenter{7.5, 2.5};

SystemParams with_lambda(double lambda)
{
    SystemParams p;
    p.lambda = lambda;
    return p;
}

UserDrop drop(Point device, double psi, const SystemParams &p)
{
    return {body_center_for(device, psi, p), device, psi};
}

// Reference at the centre facing +x, one interferer 2 m away on the x axis.
NetworkRealization pair(double interferer_psi, const SystemParams &p)
{
    NetworkRealization net;
    net.reference = drop(kCenter, 0.0, p);
    net.interferers.push_back(drop({9.5, 2.5}, interferer_psi, p));
    net.seed = 99;
    return net;
}

// Adds a body 0.6 m from the reference along each arrival direction of interferer 0.
void ring(NetworkRealization &net, const SystemParams &p)
{
    const Point zi = net.interferers[0].device;
    std::vector<Point> sources{zi};
    for (const Point q : mirror_images(zi, kRoom))
        sources.push_back(q);
    for (const Point s : sources)
    {
        const double dir = arg(s - kCenter);
        const Point body = kCenter + 0.6 * unit(dir);
        net.interferers.push_back({body, body + p.device_radius * unit(dir + kPi / 2.0), dir + kPi / 2.0});
    }
}

bool brute_blocked(const NetworkRealization &net, Point a, Point b, std::size_t skip, std::optional<Wall> wall,
                   const SystemParams &p)
{
    for (std::size_t j = 0; j < net.interferers.size(); ++j)
    {
        if (j == skip)
            continue;
        const Point c = net.interferers[j].body_center;
        if (segment_blocked_by_disk(a, b, BodyDisk{c, p.body_width}))
            return true;
        if (wall && segment_blocked_by_disk(a, b, BodyDisk{reflect(c, *wall, kRoom), p.body_width}))
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("realizations")
{
    const SystemParams none = with_lambda(0.0);
    for (std::uint64_t s = 0; s < 200; ++s)
        CHECK(sample_realization(s, kRoom, none, kCenter, 0.0).interferers.empty());

    const SystemParams p = with_lambda(1.0);
    double total = 0.0;
    const int n = 10'000;
    for (int i = 0; i < n; ++i)
        total += static_cast<double>(sample_realization(realization_seed(5, i), kRoom, p, kCenter, 0.0).interferers.size());
    CHECK(std::abs(total / n - 75.0) <= 3.0 * std::sqrt(75.0) / 100.0);

    const auto a = sample_realization(1234, kRoom, p, kCenter, 0.3);
    const auto b = sample_realization(1234, kRoom, p, kCenter, 0.3);
    REQUIRE(a.interferers.size() == b.interferers.size());
    for (std::size_t i = 0; i < a.interferers.size(); ++i)
    {
        CHECK(a.interferers[i].body_center == b.interferers[i].body_center);
        CHECK(a.interferers[i].device == b.interferers[i].device);
        CHECK(a.interferers[i].facing_psi == b.interferers[i].facing_psi);
        CHECK(kRoom.contains(a.interferers[i].body_center, 0.0));
        CHECK(abs(a.interferers[i].device - a.interferers[i].body_center) == doctest::Approx(0.325));
        CHECK(angular_distance(arg(a.interferers[i].device - a.interferers[i].body_center),
                               a.interferers[i].facing_psi) < 1e-12);
    }
    CHECK(a.reference.device == kCenter);
    CHECK(approx_equal(a.reference.body_center, kCenter - 0.325 * unit(0.3)));
    CHECK(a.seed == 1234);

    CHECK(realization_seed(1, 0) != realization_seed(1, 1));
    CHECK(realization_seed(1, 0) != realization_seed(2, 0));
    CHECK_THROWS_AS(sample_realization(1, kRoom, p, {0.2, 2.5}, 0.0), std::invalid_argument);
}

TEST_CASE("hand-built links")
{
    const SystemParams p;
    SUBCASE("facing each other")
    {
        const auto net = pair(kPi, p);
        const LinkState l = classify_link(net, 0, kRoom, p);
        CHECK(l.self_blocks == 0);
        CHECK(l.path == PathKind::Direct);
        CHECK(l.gain == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(sinr_sample(net, kRoom, p, FadeMode::Unit) == doctest::Approx(16.0 / (0.16 + 0.25)).epsilon(1e-14));
    }
    SUBCASE("own body in the way")
    {
        const auto net = pair(0.0, p);
        const LinkState l = classify_link(net, 0, kRoom, p);
        CHECK(l.self_blocks == 1);
        CHECK(l.path == PathKind::Direct);
        CHECK(l.gain == doctest::Approx(0.25 / 1e4).epsilon(1e-14));
    }
    SUBCASE("both bodies in the way")
    {
        auto net = pair(0.0, p);
        net.reference = drop(kCenter, kPi, p);
        CHECK(classify_link(net, 0, kRoom, p).self_blocks == 2);
    }
    SUBCASE("every path occluded, no self-blockage")
    {
        auto net = pair(kPi, p);
        ring(net, p);
        const LinkState l = classify_link(net, 0, kRoom, p);
        CHECK(l.self_blocks == 0);
        CHECK(l.path == PathKind::Ceiling);
        CHECK(l.gain == doctest::Approx(1.0 / (4.0 + 4.0)).epsilon(1e-14));
        // The ceiling bounce is longer than the direct path would be.
        CHECK(l.gain < std::pow(2.0, -p.alpha_los));
    }
    SUBCASE("every path occluded with self-blockage")
    {
        auto net = pair(0.0, p);
        ring(net, p);
        const LinkState l = classify_link(net, 0, kRoom, p);
        CHECK(l.self_blocks == 1);
        CHECK(l.path == PathKind::Nlos);
        CHECK(l.gain == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
    }
    SUBCASE("direct path occluded, a wall image is not")
    {
        auto net = pair(kPi, p);
        const Point body{8.5, 2.5};
        net.interferers.push_back({body, body + Point{0.0, 0.325}, kPi / 2.0});
        const LinkState l = classify_link(net, 0, kRoom, p);
        CHECK(l.path == PathKind::WallImage);
        // Images across the bottom and top walls are equally long; the bottom one comes first.
        CHECK(l.wall == Wall::Bottom);
        CHECK(l.gain == doctest::Approx(1.0 / (4.0 + 25.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(classify_link(pair(0.0, p), 3, kRoom, p), std::out_of_range);
}

TEST_CASE("occluder index agrees with brute force")
{
    const SystemParams p = with_lambda(2.0);
    std::size_t checked = 0, hits = 0;
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        const auto net = sample_realization(realization_seed(17, s), kRoom, p, kCenter, 0.0);
        const OccluderIndex index(net, kRoom, p);
        for (std::size_t i = 0; i < net.interferers.size(); i += 3)
        {
            const Point zi = net.interferers[i].device;
            REQUIRE(index.blocked(zi, kCenter, i, std::nullopt) == brute_blocked(net, zi, kCenter, i, std::nullopt, p));
            for (const Wall w : kWalls)
            {
                const Point img = reflect(zi, w, kRoom);
                const bool b = index.blocked(img, kCenter, i, w);
                REQUIRE(b == brute_blocked(net, img, kCenter, i, w, p));
                hits += b ? 1 : 0;
            }
            checked += 5;
        }
    }
    CHECK(checked > 1000);
    CHECK(hits > 0);
}

TEST_CASE("SINR samples")
{
    SystemParams p = with_lambda(0.0);
    McRun run;
    run.realizations = 200'000;
    const auto s = sinr_samples(kCenter, 0.0, run, kRoom, p);
    std::vector<double> fades;
    for (const double v : s)
        fades.push_back(v * p.noise_sigma2 / 16.0);
    CHECK(oracle::ks_distance_gamma(fades, 7) < 0.005);

    run.fades = FadeMode::Unit;
    run.realizations = 1000;
    for (const double v : sinr_samples(kCenter, 0.0, run, kRoom, p))
        CHECK(v == doctest::Approx(100.0).epsilon(1e-14));
    const EmpiricalRate unit = empirical_rate(kCenter, 0.0, run, kRoom, p);
    CHECK(unit.bps == doctest::Approx(p.bandwidth_hz * std::log2(1.0 + 100.0)).epsilon(1e-12));
    CHECK(unit.ci_halfwidth == doctest::Approx(0.0).epsilon(1e-6));

    p.noise_sigma2 = 0.0;
    NetworkRealization quiet;
    quiet.reference = drop(kCenter, 0.0, p);
    CHECK(sinr_sample(quiet, kRoom, p) == std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(empirical_rate(kCenter, 0.0, run, kRoom, p), DivergenceError);
    const std::vector<double> mixed{std::numeric_limits<double>::infinity(), 1.0, 3.0};
    const EmpiricalRate r = rate_from_samples(mixed, p);
    CHECK(r.used == 2);
    CHECK(r.infinite == 1);
    CHECK(r.bps == doctest::Approx(p.bandwidth_hz * 1.5));

    run.realizations = 999;
    CHECK_THROWS_AS(sinr_samples(kCenter, 0.0, run, kRoom, p), std::invalid_argument);
}

TEST_CASE("empirical coverage")
{
    const std::vector<double> g{-40.0, -10.0, 0.0, 3.0, 10.0, 30.0};
    McRun run;
    run.realizations = 2000;
    run.base_seed = 8;
    const SystemParams p = with_lambda(1.0);
    const CoverageCurve one = empirical_ccdf(kCenter, 0.0, g, run, kRoom, p);
    run.workers = 3;
    const CoverageCurve three = empirical_ccdf(kCenter, 0.0, g, run, kRoom, p);
    CHECK(one.coverage == three.coverage);
    CHECK(one.ci_halfwidth == three.ci_halfwidth);
    CHECK(one.meta.source == CurveSource::MonteCarlo);
    CHECK_NOTHROW(one.check_invariants());
    CHECK(one.coverage.front() >= one.coverage.back());
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        const double c = one.coverage[i];
        CHECK(one.ci_halfwidth[i] == doctest::Approx(1.96 * std::sqrt(c * (1 - c) / 2000.0)));
    }

    const std::vector<double> samples{0.5, 1.0, 2.0, 4.0};
    const CoverageCurve c = ccdf_from_samples(samples, std::vector<double>{0.0});
    CHECK(c.coverage[0] == 0.5);
}

TEST_CASE("density lowers the simulated rate")
{
    McRun run;
    run.realizations = 2000;
    const EmpiricalRate sparse = empirical_rate(kCenter, 0.0, run, kRoom, with_lambda(0.5));
    const EmpiricalRate dense = empirical_rate(kCenter, 0.0, run, kRoom, with_lambda(4.0));
    CHECK(dense.bps + dense.ci_halfwidth < sparse.bps - sparse.ci_halfwidth);
}

TEST_CASE("self-blockage frequency among nearby interferers")
{
    const SystemParams p;
    const double target = 1.0 - self_block_counts(p).p0;
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto reference = drop(kCenter, 0.0, p);
    const int n = 100'000;
    int hit = 0;
    for (int i = 0; i < n; ++i)
    {
        const double r = 5.0 * std::sqrt(u(rng));
        const Point z = kCenter + r * unit(2.0 * kPi * u(rng));
        if (abs(z - reference.body_center) <= 0.225)
        {
            --i;
            continue;
        }
        const UserDrop tx = drop(z, 2.0 * kPi * u(rng), p);
        hit += self_block_count(tx, reference, p) >= 1 ? 1 : 0;
    }
    const double frac = static_cast<double>(hit) / n;
    CHECK(std::abs(frac - target) <= 3.0 * std::sqrt(target * (1 - target) / n));
}
