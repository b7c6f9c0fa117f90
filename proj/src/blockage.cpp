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

#include "mmwear/blockage.hpp"

#include "mmwear/errors.hpp"
#include "mmwear/quadrature.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

namespace mmwear
{

namespace
{

constexpr double kRhoRelTol = 1e-6;
constexpr double kAreaRelTol = 1e-10;

// Distance from c (inside the rectangle) to the boundary along direction theta.
double ray_exit_distance(Point c, double theta, const Enclosure &enc) noexcept
{
    const Point u = unit(theta);
    double t = std::numeric_limits<double>::infinity();
    if (u.x > 0.0)
        t = std::min(t, (enc.length - c.x) / u.x);
    else if (u.x < 0.0)
        t = std::min(t, -c.x / u.x);
    if (u.y > 0.0)
        t = std::min(t, (enc.breadth - c.y) / u.y);
    else if (u.y < 0.0)
        t = std::min(t, -c.y / u.y);
    return std::max(0.0, t);
}

void require_inside(Point zR, const Enclosure &enc, const char *what)
{
    if (!enc.contains(zR))
        throw std::invalid_argument(std::string(what) + ": reference position outside the device plane");
}

} // namespace

void SystemParams::validate() const
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be a finite non-negative density");
    if (!(body_width > 0.0))
        throw std::invalid_argument("body width must be positive");
    if (!(device_radius >= 0.5 * body_width))
        throw std::invalid_argument("device radius must be at least half the body width");
    if (!(ref_link > 0.0))
        throw std::invalid_argument("reference link length must be positive");
    if (!(alpha_los > 0.0))
        throw std::invalid_argument("LOS path-loss exponent must be positive");
    if (!(alpha_nlos > alpha_los))
        throw std::invalid_argument("NLOS path-loss exponent must exceed the LOS exponent");
    if (nakagami_m < 1)
        throw std::invalid_argument("Nakagami m must be a positive integer");
    if (!(self_block_attenuation > 1.0))
        throw std::invalid_argument("self-blockage attenuation must exceed 1 (0 dB)");
    if (!(noise_sigma2 >= 0.0) || !std::isfinite(noise_sigma2))
        throw std::invalid_argument("noise power must be finite and non-negative");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
}

double noise_for_reference_snr(double ref_link, double alpha_los, double snr_db)
{
    return std::pow(ref_link, -alpha_los) / std::pow(10.0, snr_db / 10.0);
}

double pair_block_prob(double dist, const SystemParams &params)
{
    if (!(dist >= 0.0))
        throw std::invalid_argument("pair_block_prob: negative distance");
    const double w = params.body_width;
    return -std::expm1(-params.lambda * (dist * w + 0.25 * kPi * w * w));
}

double mean_strong_count(Point zR, const Enclosure &enc, const SystemParams &params)
{
    require_inside(zR, enc, "mean_strong_count");
    if (params.lambda == 0.0)
        return 0.0;
    const double lam = params.lambda;
    const double w = params.body_width;
    const double base = std::exp(-lam * 0.25 * kPi * w * w);
    const auto integrand = [&](double x, double y) { return std::exp(-lam * w * std::hypot(x - zR.x, y - zR.y)); };

    // Split at zR so the kink of |z - zR| sits on cell corners.
    const double xs[3] = {0.0, std::clamp(zR.x, 0.0, enc.length), enc.length};
    const double ys[3] = {0.0, std::clamp(zR.y, 0.0, enc.breadth), enc.breadth};
    double integral = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
        {
            const Rect cell{xs[i], ys[j], xs[i + 1], ys[j + 1]};
            if (cell.area() > 0.0)
                integral += quad::integrate_rect(integrand, cell, kRhoRelTol);
        }
    return lam * base * integral;
}

double threshold_radius(Point zR, const Enclosure &enc, const SystemParams &params)
{
    return std::sqrt(mean_strong_count(zR, enc, params) / kPi);
}

double self_block_prob(const SystemParams &params)
{
    const double ratio = params.body_width / (2.0 * params.device_radius);
    if (!(ratio >= 0.0 && ratio <= 1.0))
        throw std::domain_error("self_block_prob: W/(2d) outside [0, 1]");
    return std::asin(ratio) / kPi;
}

SelfBlockDist self_block_counts(const SystemParams &params)
{
    const double p = self_block_prob(params);
    const double q = 1.0 - p;
    SelfBlockDist out{q * q, 2.0 * p * q, p * p};
    // Put the rounding residue on the middle term so the three sum to one.
    out.p1 = 1.0 - out.p0 - out.p2;
    return out;
}

Point body_center_for(Point device, double psi, const SystemParams &params) noexcept
{
    return device - params.device_radius * unit(psi);
}

double disk_area_in_plane(Point zR, double radius, const Enclosure &enc)
{
    require_inside(zR, enc, "disk_area_in_plane");
    const auto breaks = radial_breakpoints(zR, enc);
    if (radius >= breaks.back())
        return enc.area();
    if (radius <= 0.0)
        return 0.0;
    return quad::integrate([&](double r) { return r * arc_inside(zR, r, enc); }, 0.0, radius, kAreaRelTol, breaks);
}

double cone_area_outside_disk(Point zR, const BodyDisk &blocker, double radius, const Enclosure &enc)
{
    require_inside(zR, enc, "cone_area_outside_disk");
    const Point axis = blocker.center - zR;
    const double dist2 = norm2(axis);
    const double half_w = blocker.radius();
    if (!(dist2 > half_w * half_w))
        throw std::domain_error("cone_area_outside_disk: receiver lies inside the blocker disk");

    const double direction = arg(axis);
    const double half_angle = std::asin(half_w / std::sqrt(dist2));
    const double inner = std::sqrt(dist2 - half_w * half_w);

    auto breaks = radial_breakpoints(zR, enc);
    breaks.push_back(ray_exit_distance(zR, direction - half_angle, enc));
    breaks.push_back(ray_exit_distance(zR, direction + half_angle, enc));
    breaks.push_back(ray_exit_distance(zR, direction, enc));
    const double outer = *std::max_element(breaks.begin(), breaks.end());
    const double start = std::max(inner, radius);
    if (start >= outer)
        return 0.0;
    return quad::integrate([&](double r) { return r * arc_inside_wedge(zR, r, enc, direction, half_angle); },
                           start, outer, kAreaRelTol, breaks);
}

double q1(Point zR, double psiR, double radius, const Enclosure &enc, const SystemParams &params)
{
    const double denom = enc.area() - disk_area_in_plane(zR, radius, enc);
    if (!(denom > 1e-12 * enc.area()))
        throw NumericalError("q1: the strong-interferer disk covers the whole device plane");
    const BodyDisk body{body_center_for(zR, psiR, params), params.body_width};
    const double num = cone_area_outside_disk(zR, body, radius, enc);
    return std::clamp(num / denom, 0.0, 1.0);
}

double q1(Point zR, double psiR, const Enclosure &enc, const SystemParams &params)
{
    return q1(zR, psiR, threshold_radius(zR, enc, params), enc, params);
}

double q_facing(Point zR, double psiR, const Enclosure &enc, const SystemParams &params)
{
    return q_facing(self_block_prob(params), q1(zR, psiR, enc, params));
}

} // namespace mmwear
