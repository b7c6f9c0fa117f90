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

#include "oracles/oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

namespace mmwear::oracle
{

namespace
{

Estimate summarize(double sum, double sum_sq, std::size_t n)
{
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    const double var = std::max(0.0, (sum_sq - dn * mean * mean) / (dn - 1.0));
    return {mean, std::sqrt(var / dn), n};
}

} // namespace

double rho_riemann(Point zR, const Enclosure &enc, double lambda, double body_width, int n)
{
    const double hx = enc.length / n;
    const double hy = enc.breadth / n;
    const double disk = kPi * body_width * body_width / 4.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = (i + 0.5) * hx;
        for (int j = 0; j < n; ++j)
        {
            const double y = (j + 0.5) * hy;
            const double dist = std::sqrt((x - zR.x) * (x - zR.x) + (y - zR.y) * (y - zR.y));
            sum += std::exp(-lambda * (dist * body_width + disk));
        }
    }
    return lambda * sum * hx * hy;
}

Areas weak_areas_riemann(Point zR, double radius, double c, int m, double alpha_los, double alpha_nlos,
                         const Enclosure &enc, int n)
{
    const double hx = enc.length / n;
    const double hy = enc.breadth / n;
    const double dh2 = 4.0 * enc.plane_depth * enc.plane_depth;
    double s1 = 0.0;
    double s2 = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = (i + 0.5) * hx;
        for (int j = 0; j < n; ++j)
        {
            const double y = (j + 0.5) * hy;
            const double r2 = (x - zR.x) * (x - zR.x) + (y - zR.y) * (y - zR.y);
            if (r2 <= radius * radius)
                continue;
            s1 += 1.0 - std::pow(1.0 + c / std::pow(r2 + dh2, alpha_los / 2.0), -m);
            s2 += 1.0 - std::pow(1.0 + c / std::pow(r2, alpha_nlos / 2.0), -m);
        }
    }
    return {s1 * hx * hy, s2 * hx * hy};
}

Estimate strong_laplace_mc(double lambda, double radius, double t, int m, double alpha_los, double attenuation,
                           std::array<double, 3> p_s, std::size_t draws, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::poisson_distribution<int> count(std::max(lambda * kPi * radius * radius, 1e-300));
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::gamma_distribution<double> fade(m, 1.0 / m);
    std::discrete_distribution<int> blocks({p_s[0], p_s[1], p_s[2]});
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t n = 0; n < draws; ++n)
    {
        const int k = lambda > 0.0 ? count(rng) : 0;
        double interference = 0.0;
        for (int i = 0; i < k; ++i)
        {
            const double r = radius * std::sqrt(u01(rng));
            const int s = blocks(rng);
            interference += fade(rng) * std::pow(r, -alpha_los) * std::pow(attenuation, -s);
        }
        const double v = std::exp(-t * interference);
        sum += v;
        sum_sq += v * v;
    }
    return summarize(sum, sum_sq, draws);
}

Estimate weak_laplace_mc(Point zR, double radius, double q, double lambda, double t, int m, double alpha_los,
                         double alpha_nlos, const Enclosure &enc, std::size_t draws, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::poisson_distribution<int> count(std::max(lambda * enc.length * enc.breadth, 1e-300));
    std::uniform_real_distribution<double> ux(0.0, enc.length);
    std::uniform_real_distribution<double> uy(0.0, enc.breadth);
    std::bernoulli_distribution facing(q);
    std::gamma_distribution<double> fade(m, 1.0 / m);
    const double dh2 = 4.0 * enc.plane_depth * enc.plane_depth;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t n = 0; n < draws; ++n)
    {
        const int k = lambda > 0.0 ? count(rng) : 0;
        double interference = 0.0;
        for (int i = 0; i < k; ++i)
        {
            const double x = ux(rng);
            const double y = uy(rng);
            const double r2 = (x - zR.x) * (x - zR.x) + (y - zR.y) * (y - zR.y);
            if (r2 <= radius * radius)
                continue;
            const double gain = facing(rng) ? std::pow(r2 + dh2, -alpha_los / 2.0) : std::pow(r2, -alpha_nlos / 2.0);
            interference += fade(rng) * gain;
        }
        const double v = std::exp(-t * interference);
        sum += v;
        sum_sq += v * v;
    }
    return summarize(sum, sum_sq, draws);
}

double self_block_fraction(double body_width, double device_radius, std::size_t n)
{
    // Body at the origin, receiver far along +x. Line from device to receiver is blocked when it
    // passes within W/2 of the body center.
    const double far = 1e9;
    const double r = body_width / 2.0;
    std::size_t blocked = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double psi = 2.0 * kPi * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double ax = device_radius * std::cos(psi);
        const double ay = device_radius * std::sin(psi);
        const double dx = far - ax;
        const double dy = -ay;
        const double tt = std::clamp(-(ax * dx + ay * dy) / (dx * dx + dy * dy), 0.0, 1.0);
        const double px = ax + tt * dx;
        const double py = ay + tt * dy;
        if (px * px + py * py <= r * r)
            ++blocked;
    }
    return static_cast<double>(blocked) / static_cast<double>(n);
}

Estimate q1_hitcount(Point zR, Point body, double body_width, double radius, const Enclosure &enc, std::size_t n,
                     std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, enc.length);
    std::uniform_real_distribution<double> uy(0.0, enc.breadth);
    const double bx = body.x - zR.x;
    const double by = body.y - zR.y;
    const double b2 = bx * bx + by * by;
    const double half = std::asin(body_width / (2.0 * std::sqrt(b2)));
    const double axis = std::atan2(by, bx);
    std::size_t outside = 0;
    std::size_t cone = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double dx = ux(rng) - zR.x;
        const double dy = uy(rng) - zR.y;
        const double r2 = dx * dx + dy * dy;
        if (r2 <= radius * radius)
            continue;
        ++outside;
        double off = std::abs(std::atan2(dy, dx) - axis);
        if (off > kPi)
            off = 2.0 * kPi - off;
        if (r2 >= b2 - body_width * body_width / 4.0 && off <= half)
            ++cone;
    }
    if (outside == 0)
        return {0.0, 0.0, n};
    const double p = static_cast<double>(cone) / static_cast<double>(outside);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(outside)), n};
}

double gamma_ccdf(int m, double x)
{
    if (x <= 0.0)
        return 1.0;
    return boost::math::gamma_q(static_cast<double>(m), m * x);
}

double ks_distance_gamma(std::span<const double> samples, int m)
{
    std::vector<double> s(samples.begin(), samples.end());
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        const double f = 1.0 - gamma_ccdf(m, s[i]);
        d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

double alzer_coverage_noise_only(int m, double gamma_tilde, double sigma2)
{
    const double mt = std::pow(std::tgamma(m + 1.0), -1.0 / m);
    return 1.0 - std::pow(1.0 - std::exp(-m * mt * gamma_tilde * sigma2), m);
}

double rate_noise_only(int m, double ref_link, double alpha_los, double sigma2, double bandwidth_hz)
{
    const double scale = std::pow(ref_link, alpha_los);
    auto f = [&](double g) { return alzer_coverage_noise_only(m, g * scale, sigma2) / (1.0 + g); };
    boost::math::quadrature::exp_sinh<double> integrator;
    const double integral = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
    return bandwidth_hz * integral / std::log(2.0);
}

} // namespace mmwear::oracle
