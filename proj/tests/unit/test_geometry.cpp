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

#include "mmwear/geometry.hpp"

#include "doctest.h"

#include <random>

using namespace mmwear;

namespace
{

const Enclosure kRoom{};

bool same(Point a, Point b) { return approx_equal(a, b); }

} // namespace

TEST_CASE("mirror images come in wall order")
{
    auto im = mirror_images({1.0, 1.0}, kRoom);
    CHECK(same(im[0], {-1.0, 1.0}));
    CHECK(same(im[1], {29.0, 1.0}));
    CHECK(same(im[2], {1.0, -1.0}));
    CHECK(same(im[3], {1.0, 9.0}));

    im = mirror_images(kRoom.center(), kRoom);
    CHECK(same(im[0], {-7.5, 2.5}));
    CHECK(same(im[1], {22.5, 2.5}));
    CHECK(same(im[2], {7.5, -2.5}));
    CHECK(same(im[3], {7.5, 7.5}));

    CHECK(same(mirror_images({0.0, 2.0}, kRoom)[0], {0.0, 2.0}));
    CHECK_THROWS_AS(mirror_images({-0.1, 2.0}, kRoom), std::invalid_argument);
    CHECK_NOTHROW(mirror_images({15.0 + 1e-10, 2.0}, kRoom));
}

TEST_CASE("reflecting twice across a wall is the identity")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ux(0.0, kRoom.length), uy(0.0, kRoom.breadth);
    for (int i = 0; i < 1000; ++i)
    {
        const Point p{ux(rng), uy(rng)};
        for (const Wall w : kWalls)
            CHECK(same(reflect(reflect(p, w, kRoom), w, kRoom), p));
    }
}

TEST_CASE("blocking cone examples")
{
    const BodyDisk b{{1.0, 0.0}, 0.45};
    CHECK(in_blocking_cone({2.0, 0.0}, b, {0.0, 0.0}));
    CHECK_FALSE(in_blocking_cone({0.0, 2.0}, b, {0.0, 0.0}));
    CHECK_FALSE(in_blocking_cone({0.5, 0.0}, b, {0.0, 0.0}));
    // Boundary points are inside.
    const double tangent = std::sqrt(1.0 - 0.225 * 0.225);
    CHECK(in_blocking_cone({tangent, 0.0}, b, {0.0, 0.0}));
    CHECK_THROWS_AS(in_blocking_cone({2.0, 0.0}, b, {1.1, 0.0}), std::domain_error);
}

TEST_CASE("segment against disk examples")
{
    CHECK(segment_blocked_by_disk({0, 0}, {2, 0}, BodyDisk{{1.0, 0.1}, 0.45}));
    CHECK_FALSE(segment_blocked_by_disk({0, 0}, {2, 0}, BodyDisk{{1.0, 1.0}, 0.45}));
    CHECK_FALSE(segment_blocked_by_disk({0, 0}, {2, 0}, BodyDisk{{3.0, 0.0}, 0.45}));
    CHECK(segment_blocked_by_disk({0, 0}, {2, 0}, BodyDisk{{2.1, 0.0}, 0.45}));
    CHECK(distance_to_segment({3.0, 0.0}, {0, 0}, {2, 0}) == doctest::Approx(1.0));
}

TEST_CASE("cone membership matches segment occlusion beyond the disk")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-5.0, 5.0), ang(0.0, 2.0 * kPi), w(0.05, 1.0), extra(0.0, 4.0);
    int blocked = 0;
    for (int i = 0; i < 10'000; ++i)
    {
        const Point zR{u(rng), u(rng)};
        const double width = w(rng);
        const double dist = 0.5 * width + 1e-6 + extra(rng);
        const BodyDisk disk{zR + dist * unit(ang(rng)), width};
        const double reach = dist + 0.5 * width + 1e-6 + extra(rng);
        const Point z = zR + reach * unit(ang(rng));
        const bool cone = in_blocking_cone(z, disk, zR);
        REQUIRE(cone == segment_blocked_by_disk(zR, z, disk));
        blocked += cone ? 1 : 0;
    }
    // Both outcomes are exercised.
    CHECK(blocked > 100);
    CHECK(blocked < 9'900);
}

TEST_CASE("cone membership is invariant under rigid motions")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0), ang(0.0, 2.0 * kPi);
    const auto move = [](Point p, double theta, Point t) {
        return Point{std::cos(theta) * p.x - std::sin(theta) * p.y, std::sin(theta) * p.x + std::cos(theta) * p.y} +
               t;
    };
    int checked = 0;
    for (int i = 0; i < 5000; ++i)
    {
        const Point zR{u(rng), u(rng)};
        const BodyDisk b{{u(rng), u(rng)}, 0.45};
        if (abs(b.center - zR) <= 0.3)
            continue;
        const Point z{u(rng), u(rng)};
        const double theta = ang(rng);
        const Point t{u(rng), u(rng)};
        // Skip configurations within rounding of the cone boundary.
        const double d2 = norm2(b.center - zR);
        const double radial = norm2(z - zR) - (d2 - 0.225 * 0.225);
        const double angular =
            angular_distance(arg(z - zR), arg(b.center - zR)) - std::asin(0.225 / std::sqrt(d2));
        if (std::abs(radial) < 1e-9 || std::abs(angular) < 1e-9)
            continue;
        const bool before = in_blocking_cone(z, b, zR);
        const bool after = in_blocking_cone(move(z, theta, t), BodyDisk{move(b.center, theta, t), 0.45},
                                            move(zR, theta, t));
        CHECK(before == after);
        ++checked;
    }
    CHECK(checked > 4000);
}

TEST_CASE("area estimator")
{
    const Rect box{-2.0, -2.0, 2.0, 2.0};
    const auto disk = [](Point p) { return norm2(p) <= 1.0; };
    const auto est = region_area_montecarlo(disk, box, 100'000, 3);
    CHECK(std::abs(est.area - kPi) <= 3.0 * est.std_error);
    CHECK(est.samples == 100'000);

    CHECK(region_area_montecarlo([](Point) { return false; }, box, 10'000, 3).area == 0.0);

    const Rect plane{0.0, 0.0, kRoom.length, kRoom.breadth};
    const auto half = region_area_montecarlo([](Point p) { return p.x < 7.5; }, plane, 200'000, 5);
    CHECK(std::abs(half.area - 37.5) <= 3.0 * half.std_error);

    // Same seed, same answer.
    CHECK(region_area_montecarlo(disk, box, 20'000, 9).area == region_area_montecarlo(disk, box, 20'000, 9).area);

    // Doubling the sample count shrinks the reported error by about 1/sqrt(2).
    const auto a = region_area_montecarlo(disk, box, 200'000, 21);
    const auto b = region_area_montecarlo(disk, box, 400'000, 22);
    CHECK(b.std_error / a.std_error == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.02));

    CHECK_THROWS_AS(region_area_montecarlo(disk, box, 9'999, 1), std::invalid_argument);
    CHECK_THROWS_AS(region_area_montecarlo(disk, Rect{0, 0, 0, 1}, 10'000, 1), std::invalid_argument);
}

TEST_CASE("arc length of a circle inside the plane")
{
    CHECK(arc_inside(kRoom.center(), 1.0, kRoom) == doctest::Approx(2.0 * kPi));
    CHECK(arc_inside({0.0, 0.0}, 1.0, kRoom) == doctest::Approx(0.5 * kPi));
    CHECK(arc_inside({7.5, 0.0}, 1.0, kRoom) == doctest::Approx(kPi));
    CHECK(arc_inside(kRoom.center(), 20.0, kRoom) == doctest::Approx(0.0));
    // A quarter wedge pointing into the room from the corner is fully inside.
    CHECK(arc_inside_wedge({0.0, 0.0}, 1.0, kRoom, 0.25 * kPi, 0.25 * kPi) == doctest::Approx(0.5 * kPi));
    CHECK(arc_inside_wedge({0.0, 0.0}, 1.0, kRoom, 1.25 * kPi, 0.25 * kPi) == doctest::Approx(0.0).epsilon(1e-12));

    // Against sampling: fraction of random points of the circle that land inside.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    const Point c{1.0, 4.2};
    const double r = 1.7;
    int in = 0;
    const int n = 200'000;
    for (int i = 0; i < n; ++i)
        in += kRoom.contains(c + r * unit(ang(rng)), 0.0) ? 1 : 0;
    const double frac = static_cast<double>(in) / n;
    CHECK(std::abs(arc_inside(c, r, kRoom) / (2.0 * kPi) - frac) < 4.0 * std::sqrt(frac * (1 - frac) / n));
}
