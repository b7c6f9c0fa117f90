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

#include <algorithm>
#include <utility>

namespace mmwear
{

namespace
{

constexpr double kTwoPi = 2.0 * kPi;

using Interval = std::pair<double, double>;

// Appends [center - half, center + half] as one or two pieces inside [0, 2pi).
void push_wrapped(std::vector<Interval> &out, double center, double half)
{
    if (half >= kPi)
    {
        out.emplace_back(0.0, kTwoPi);
        return;
    }
    double lo = std::fmod(center - half, kTwoPi);
    if (lo < 0.0)
        lo += kTwoPi;
    const double hi = lo + 2.0 * half;
    if (hi <= kTwoPi)
    {
        out.emplace_back(lo, hi);
    }
    else
    {
        out.emplace_back(lo, kTwoPi);
        out.emplace_back(0.0, hi - kTwoPi);
    }
}

std::vector<Interval> merged(std::vector<Interval> v)
{
    std::sort(v.begin(), v.end());
    std::vector<Interval> out;
    for (const auto &iv : v)
    {
        if (!out.empty() && iv.first <= out.back().second)
            out.back().second = std::max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    return out;
}

double total_length(const std::vector<Interval> &v)
{
    double s = 0.0;
    for (const auto &iv : v)
        s += iv.second - iv.first;
    return s;
}

double overlap_length(const std::vector<Interval> &a, const std::vector<Interval> &b)
{
    double s = 0.0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size())
    {
        const double lo = std::max(a[i].first, b[j].first);
        const double hi = std::min(a[i].second, b[j].second);
        if (hi > lo)
            s += hi - lo;
        if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
    return s;
}

// Directions (as arcs of the circle) that fall beyond at least one wall.
std::vector<Interval> outside_arcs(Point c, double r, const Enclosure &enc)
{
    static constexpr std::array<double, 4> kNormal{kPi, 0.0, 1.5 * kPi, 0.5 * kPi};
    std::vector<Interval> arcs;
    for (const Wall w : kWalls)
    {
        const double delta = std::max(0.0, enc.wall_distance(c, w));
        if (delta < r)
            push_wrapped(arcs, kNormal[static_cast<int>(w)], std::acos(delta / r));
    }
    return merged(std::move(arcs));
}

} // namespace

double angular_distance(double a, double b) noexcept
{
    return std::abs(std::remainder(a - b, kTwoPi));
}

void Enclosure::validate() const
{
    if (!(length > 0.0) || !(breadth > 0.0) || !(height > 0.0) || !(plane_depth > 0.0))
        throw std::invalid_argument("enclosure dimensions must be positive");
    if (!(plane_depth < height))
        throw std::invalid_argument("device plane depth must be less than the enclosure height");
    if (!std::isfinite(length) || !std::isfinite(breadth) || !std::isfinite(height))
        throw std::invalid_argument("enclosure dimensions must be finite");
}

double Enclosure::wall_distance(Point p, Wall w) const noexcept
{
    switch (w)
    {
    case Wall::Left:
        return p.x;
    case Wall::Right:
        return length - p.x;
    case Wall::Bottom:
        return p.y;
    case Wall::Top:
        return breadth - p.y;
    }
    return 0.0;
}

Point reflect(Point p, Wall w, const Enclosure &enc) noexcept
{
    switch (w)
    {
    case Wall::Left:
        return {-p.x, p.y};
    case Wall::Right:
        return {2.0 * enc.length - p.x, p.y};
    case Wall::Bottom:
        return {p.x, -p.y};
    case Wall::Top:
        return {p.x, 2.0 * enc.breadth - p.y};
    }
    return p;
}

std::array<Point, 4> mirror_images(Point p, const Enclosure &enc)
{
    if (!enc.contains(p))
        throw std::invalid_argument("mirror_images: point outside the device plane");
    return {reflect(p, Wall::Left, enc), reflect(p, Wall::Right, enc), reflect(p, Wall::Bottom, enc),
            reflect(p, Wall::Top, enc)};
}

bool in_blocking_cone(Point z, const BodyDisk &blocker, Point zR)
{
    const Point to_blocker = blocker.center - zR;
    const double dist2 = norm2(to_blocker);
    const double half_w = blocker.radius();
    if (!(dist2 > half_w * half_w))
        throw std::domain_error("in_blocking_cone: receiver lies inside the blocker disk");

    const Point to_z = z - zR;
    if (norm2(to_z) < dist2 - half_w * half_w)
        return false;
    const double half_angle = std::asin(half_w / std::sqrt(dist2));
    return angular_distance(arg(to_z), arg(to_blocker)) <= half_angle;
}

double distance_to_segment(Point p, Point a, Point b) noexcept
{
    const Point ab = b - a;
    const double len2 = norm2(ab);
    if (len2 == 0.0)
        return abs(p - a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return abs(p - (a + t * ab));
}

bool segment_blocked_by_disk(Point a, Point b, const BodyDisk &disk) noexcept
{
    return distance_to_segment(disk.center, a, b) <= disk.radius();
}

double arc_inside(Point c, double r, const Enclosure &enc) noexcept
{
    if (r <= 0.0)
        return kTwoPi;
    return std::max(0.0, kTwoPi - total_length(outside_arcs(c, r, enc)));
}

double arc_inside_wedge(Point c, double r, const Enclosure &enc, double direction, double half_width) noexcept
{
    if (half_width <= 0.0)
        return 0.0;
    std::vector<Interval> wedge;
    push_wrapped(wedge, direction, half_width);
    wedge = merged(std::move(wedge));
    const double wedge_len = total_length(wedge);
    if (r <= 0.0)
        return wedge_len;
    return std::max(0.0, wedge_len - overlap_length(outside_arcs(c, r, enc), wedge));
}

std::vector<double> radial_breakpoints(Point c, const Enclosure &enc)
{
    std::vector<double> out;
    out.reserve(8);
    for (const Wall w : kWalls)
        out.push_back(std::max(0.0, enc.wall_distance(c, w)));
    for (const Point corner : enc.corners())
        out.push_back(abs(corner - c));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mmwear
