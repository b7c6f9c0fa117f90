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

#ifndef MMWEAR_GEOMETRY_HPP
#define MMWEAR_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace mmwear
{

// Absolute tolerance for point comparisons, in meters.
inline constexpr double kGeomEps = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;

// Position in the device plane. Behaves like the complex number x + jy.
struct Point
{
    double x = 0.0;
    double y = 0.0;

    constexpr Point &operator+=(Point o) noexcept { x += o.x; y += o.y; return *this; }
    constexpr Point &operator-=(Point o) noexcept { x -= o.x; y -= o.y; return *this; }
    friend constexpr Point operator+(Point a, Point b) noexcept { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) noexcept { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(double s, Point p) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr Point operator*(Point p, double s) noexcept { return {s * p.x, s * p.y}; }
    friend constexpr bool operator==(Point a, Point b) noexcept = default;
};

inline double norm2(Point p) noexcept { return p.x * p.x + p.y * p.y; }
inline double abs(Point p) noexcept { return std::hypot(p.x, p.y); }
inline double arg(Point p) noexcept { return std::atan2(p.y, p.x); }
inline double dot(Point a, Point b) noexcept { return a.x * b.x + a.y * b.y; }
inline Point unit(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }
inline bool approx_equal(Point a, Point b, double eps = kGeomEps) noexcept
{
    return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

// Smallest absolute difference between two angles, in [0, pi].
double angular_distance(double a, double b) noexcept;

// The walls of the device-plane rectangle, in mirror-image order.
enum class Wall : std::uint8_t
{
    Left = 0,   // x = 0
    Right = 1,  // x = L
    Bottom = 2, // y = 0
    Top = 3     // y = B
};

inline constexpr std::array<Wall, 4> kWalls{Wall::Left, Wall::Right, Wall::Bottom, Wall::Top};

// L x B x H room with reflective walls and ceiling. Devices live in the plane
// plane_depth below the ceiling, modeled as the rectangle [0,L]x[0,B].
struct Enclosure
{
    double length = 15.0;
    double breadth = 5.0;
    double height = 2.5;
    double plane_depth = 1.0;

    void validate() const;
    double area() const noexcept { return length * breadth; }
    Point center() const noexcept { return {0.5 * length, 0.5 * breadth}; }
    bool contains(Point p, double eps = kGeomEps) const noexcept
    {
        return p.x >= -eps && p.x <= length + eps && p.y >= -eps && p.y <= breadth + eps;
    }
    // Distance from p to the given wall line.
    double wall_distance(Point p, Wall w) const noexcept;
    std::array<Point, 4> corners() const noexcept
    {
        return {Point{0.0, 0.0}, Point{length, 0.0}, Point{0.0, breadth}, Point{length, breadth}};
    }
};

struct BodyDisk
{
    Point center;
    double diameter = 0.45;

    double radius() const noexcept { return 0.5 * diameter; }
};

// Reflection of p across a wall line. No containment check; used for phantom bodies and devices.
Point reflect(Point p, Wall w, const Enclosure &enc) noexcept;

// First-order images of p across x=0, x=L, y=0, y=B (in that order).
// Throws std::invalid_argument when p lies outside the rectangle by more than kGeomEps.
std::array<Point, 4> mirror_images(Point p, const Enclosure &enc);

// Membership of z in the blocking cone of `blocker` as seen from zR: z is at least as far
// as the blocker's tangent points and within the blocker's angular half-width.
// Boundaries are inclusive. Throws std::domain_error when zR is not strictly outside the disk.
bool in_blocking_cone(Point z, const BodyDisk &blocker, Point zR);

double distance_to_segment(Point p, Point a, Point b) noexcept;

// True iff the closed segment a-b comes within the disk radius of its center.
bool segment_blocked_by_disk(Point a, Point b, const BodyDisk &disk) noexcept;

struct Rect
{
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;

    double width() const noexcept { return x1 - x0; }
    double height() const noexcept { return y1 - y0; }
    double area() const noexcept { return width() * height(); }
};

struct AreaEstimate
{
    double area = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

inline constexpr std::size_t kMinAreaSamples = 10'000;

// Hit-count estimate of the area of {p in box : pred(p)}. Deterministic for a given seed.
template <class Predicate>
AreaEstimate region_area_montecarlo(Predicate &&pred, const Rect &box, std::size_t n_samples,
                                    std::uint64_t seed)
{
    if (!(box.width() > 0.0) || !(box.height() > 0.0) || !std::isfinite(box.area()))
        throw std::invalid_argument("region_area_montecarlo: degenerate bounding rectangle");
    if (n_samples < kMinAreaSamples)
        throw std::invalid_argument("region_area_montecarlo: need at least 10^4 samples");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(box.x0, box.x1);
    std::uniform_real_distribution<double> uy(box.y0, box.y1);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_samples; ++i)
    {
        const Point p{ux(rng), uy(rng)};
        if (pred(p))
            ++hits;
    }
    const double n = static_cast<double>(n_samples);
    const double frac = static_cast<double>(hits) / n;
    return {frac * box.area(), box.area() * std::sqrt(frac * (1.0 - frac) / n), n_samples};
}

// --- Polar measures around a point inside the rectangle ---
//
// All radially symmetric integrals over the device plane reduce to one-dimensional
// integrals in r weighted by the angular measure of the circle |z - c| = r inside it.

// Angular measure (radians, in [0, 2pi]) of the circle of radius r about c that lies inside the
// rectangle. c must be inside the rectangle.
double arc_inside(Point c, double r, const Enclosure &enc) noexcept;

// Same, restricted to directions within half_width of `direction`.
double arc_inside_wedge(Point c, double r, const Enclosure &enc, double direction, double half_width) noexcept;

// Sorted distances from c to the four walls and four corners; the points where arc_inside loses
// smoothness. The last entry is the farthest-corner distance.
std::vector<double> radial_breakpoints(Point c, const Enclosure &enc);

} // namespace mmwear

#endif
