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

#include "mmwear/montecarlo.hpp"

#include "mmwear/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mmwear
{

namespace
{

constexpr std::uint64_t kFadeStreamSalt = 0x6a09e667f3bcc909ULL;

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

UserDrop make_user(Point body, double psi, const SystemParams &params) noexcept
{
    return {body, body + params.device_radius * unit(psi), psi};
}

struct Candidate
{
    double length;
    std::optional<Wall> wall;
};

} // namespace

std::uint64_t realization_seed(std::uint64_t base_seed, std::uint64_t index) noexcept
{
    return splitmix64(splitmix64(base_seed) ^ index);
}

NetworkRealization sample_realization(std::uint64_t seed, const Enclosure &enc, const SystemParams &params,
                                      Point zR, double psiR)
{
    const double d = params.device_radius;
    if (zR.x < d - kGeomEps || zR.x > enc.length - d + kGeomEps || zR.y < d - kGeomEps ||
        zR.y > enc.breadth - d + kGeomEps)
        throw std::invalid_argument("sample_realization: reference device must be at least d from every wall");

    NetworkRealization net;
    net.seed = seed;
    net.reference = {body_center_for(zR, psiR, params), zR, psiR};

    std::mt19937_64 rng(seed);
    const double mean = params.lambda * enc.area();
    if (mean > 0.0)
    {
        std::poisson_distribution<std::size_t> count(mean);
        const std::size_t n = count(rng);
        std::uniform_real_distribution<double> ux(0.0, enc.length);
        std::uniform_real_distribution<double> uy(0.0, enc.breadth);
        std::uniform_real_distribution<double> upsi(0.0, 2.0 * kPi);
        net.interferers.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double x = ux(rng);
            const double y = uy(rng);
            const double psi = upsi(rng);
            net.interferers.push_back(make_user({x, y}, psi, params));
        }
    }
    return net;
}

int self_block_count(const UserDrop &tx, const UserDrop &reference, const SystemParams &params)
{
    const Point zR = reference.device;
    const BodyDisk own{tx.body_center, params.body_width};
    int s = 0;
    if (abs(own.center - zR) <= own.radius())
        ++s;
    else if (in_blocking_cone(tx.device, own, zR))
        ++s;
    if (in_blocking_cone(tx.device, BodyDisk{reference.body_center, params.body_width}, zR))
        ++s;
    return s;
}

OccluderIndex::OccluderIndex(const NetworkRealization &net, const Enclosure &enc, const SystemParams &params)
    : x0_(-enc.length), y0_(-enc.breadth), radius_(0.5 * params.body_width)
{
    // Cells of about a metre, never more than 256 per side.
    const double w = 3.0 * enc.length;
    const double h = 3.0 * enc.breadth;
    cell_ = std::max({1.0, w / 256.0, h / 256.0});
    nx_ = static_cast<std::size_t>(std::ceil(w / cell_));
    ny_ = static_cast<std::size_t>(std::ceil(h / cell_));
    cells_.assign(nx_ * ny_, {});

    auto insert = [&](Entry e) {
        const std::size_t ix0 = cell_x(e.center.x - radius_);
        const std::size_t ix1 = cell_x(e.center.x + radius_);
        const std::size_t iy0 = cell_y(e.center.y - radius_);
        const std::size_t iy1 = cell_y(e.center.y + radius_);
        for (std::size_t iy = iy0; iy <= iy1; ++iy)
            for (std::size_t ix = ix0; ix <= ix1; ++ix)
                cells_[iy * nx_ + ix].push_back(e);
    };
    for (std::size_t i = 0; i < net.interferers.size(); ++i)
    {
        const Point b = net.interferers[i].body_center;
        const auto owner = static_cast<std::uint32_t>(i);
        insert({owner, -1, b});
        for (const Wall wall : kWalls)
            insert({owner, static_cast<std::int8_t>(wall), reflect(b, wall, enc)});
    }
}

std::size_t OccluderIndex::cell_x(double x) const noexcept
{
    const double c = std::floor((x - x0_) / cell_);
    return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(nx_ - 1)));
}

std::size_t OccluderIndex::cell_y(double y) const noexcept
{
    const double c = std::floor((y - y0_) / cell_);
    return static_cast<std::size_t>(std::clamp(c, 0.0, static_cast<double>(ny_ - 1)));
}

bool OccluderIndex::blocked(Point a, Point b, std::size_t skip, std::optional<Wall> wall) const
{
    const std::int8_t tag = wall ? static_cast<std::int8_t>(*wall) : std::int8_t{-1};
    const BodyDisk probe{{}, 2.0 * radius_};
    auto hits = [&](const Entry &e) {
        if (e.owner == skip || (e.wall != -1 && e.wall != tag))
            return false;
        return segment_blocked_by_disk(a, b, BodyDisk{e.center, probe.diameter});
    };

    // Walk the cell rows the segment crosses; within a row, only the columns spanned by the
    // part of the segment inside that row.
    const std::size_t iy0 = cell_y(std::min(a.y, b.y));
    const std::size_t iy1 = cell_y(std::max(a.y, b.y));
    const double dy = b.y - a.y;
    for (std::size_t iy = iy0; iy <= iy1; ++iy)
    {
        double xa = a.x;
        double xb = b.x;
        if (iy0 != iy1)
        {
            // Clamped end rows also own whatever lies beyond the grid.
            const double inf = std::numeric_limits<double>::infinity();
            const double lo = iy == iy0 ? -inf : y0_ + static_cast<double>(iy) * cell_;
            const double hi = iy == iy1 ? inf : y0_ + static_cast<double>(iy + 1) * cell_;
            const double ta = std::clamp((lo - a.y) / dy, 0.0, 1.0);
            const double tb = std::clamp((hi - a.y) / dy, 0.0, 1.0);
            xa = a.x + std::min(ta, tb) * (b.x - a.x);
            xb = a.x + std::max(ta, tb) * (b.x - a.x);
        }
        const std::size_t ix0 = cell_x(std::min(xa, xb));
        const std::size_t ix1 = cell_x(std::max(xa, xb));
        for (std::size_t ix = ix0; ix <= ix1; ++ix)
            for (const Entry &e : cells_[iy * nx_ + ix])
                if (hits(e))
                    return true;
    }
    return false;
}

LinkState classify_link(const NetworkRealization &net, std::size_t index, const Enclosure &enc,
                        const SystemParams &params)
{
    return classify_link(net, OccluderIndex(net, enc, params), index, enc, params);
}

LinkState classify_link(const NetworkRealization &net, const OccluderIndex &occluders, std::size_t index,
                        const Enclosure &enc, const SystemParams &params)
{
    if (index >= net.interferers.size())
        throw std::out_of_range("classify_link: interferer index out of range");
    const UserDrop &tx = net.interferers[index];
    const Point zR = net.reference.device;
    const Point zi = tx.device;

    LinkState link;
    link.self_blocks = self_block_count(tx, net.reference, params);
    const double attenuation = std::pow(params.self_block_attenuation, -link.self_blocks);

    std::array<Candidate, 5> paths{};
    std::array<Point, 5> sources{};
    paths[0] = {abs(zi - zR), std::nullopt};
    sources[0] = zi;
    for (std::size_t w = 0; w < 4; ++w)
    {
        sources[w + 1] = reflect(zi, kWalls[w], enc);
        paths[w + 1] = {abs(sources[w + 1] - zR), kWalls[w]};
    }
    std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return paths[a].length < paths[b].length; });

    for (const std::size_t p : order)
    {
        if (occluders.blocked(sources[p], zR, index, paths[p].wall))
            continue;
        link.path = paths[p].wall ? PathKind::WallImage : PathKind::Direct;
        if (paths[p].wall)
            link.wall = *paths[p].wall;
        link.gain = std::pow(paths[p].length, -params.alpha_los) * attenuation;
        return link;
    }

    const double r2 = norm2(zi - zR);
    if (link.self_blocks == 0)
    {
        const double dh2 = 4.0 * enc.plane_depth * enc.plane_depth;
        link.path = PathKind::Ceiling;
        link.gain = std::pow(r2 + dh2, -0.5 * params.alpha_los);
    }
    else
    {
        link.path = PathKind::Nlos;
        link.gain = std::pow(r2, -0.5 * params.alpha_nlos);
    }
    return link;
}

double sinr_sample(const NetworkRealization &net, const Enclosure &enc, const SystemParams &params, FadeMode fades)
{
    std::mt19937_64 rng(splitmix64(net.seed ^ kFadeStreamSalt));
    const double m = params.nakagami_m;
    std::gamma_distribution<double> fade(m, 1.0 / m);
    auto draw = [&] { return fades == FadeMode::Unit ? 1.0 : fade(rng); };

    const double signal = draw() * std::pow(params.ref_link, -params.alpha_los);
    double interference = 0.0;
    if (!net.interferers.empty())
    {
        const OccluderIndex occluders(net, enc, params);
        for (std::size_t i = 0; i < net.interferers.size(); ++i)
        {
            const LinkState link = classify_link(net, occluders, i, enc, params);
            interference += draw() * link.gain;
        }
    }
    const double denom = params.noise_sigma2 + interference;
    if (denom <= 0.0)
        return std::numeric_limits<double>::infinity();
    return signal / denom;
}

std::vector<double> sinr_samples(Point zR, double psiR, const McRun &run, const Enclosure &enc,
                                 const SystemParams &params)
{
    if (run.realizations < kMinRealizations)
        throw std::invalid_argument("Monte Carlo runs need at least 1000 realizations");
    params.validate();
    enc.validate();
    std::vector<double> out(run.realizations);
    parallel_for(run.realizations, run.workers, [&](std::size_t i) {
        const NetworkRealization net = sample_realization(realization_seed(run.base_seed, i), enc, params, zR, psiR);
        out[i] = sinr_sample(net, enc, params, run.fades);
    });
    return out;
}

CoverageCurve ccdf_from_samples(std::span<const double> sinr, std::span<const double> gamma_db)
{
    if (sinr.empty())
        throw std::invalid_argument("ccdf_from_samples: no samples");
    std::vector<double> sorted(sinr.begin(), sinr.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    CoverageCurve curve;
    curve.meta.source = CurveSource::MonteCarlo;
    curve.gamma_db.assign(gamma_db.begin(), gamma_db.end());
    for (const double g : gamma_db)
    {
        const auto above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), db_to_linear(g));
        const double p = static_cast<double>(above) / n;
        curve.coverage.push_back(p);
        curve.ci_halfwidth.push_back(1.96 * std::sqrt(p * (1.0 - p) / n));
    }
    return curve;
}

CoverageCurve empirical_ccdf(Point zR, double psiR, std::span<const double> gamma_db, const McRun &run,
                             const Enclosure &enc, const SystemParams &params)
{
    CoverageCurve curve = ccdf_from_samples(sinr_samples(zR, psiR, run, enc, params), gamma_db);
    curve.meta = {zR, psiR, params.lambda, CurveSource::MonteCarlo};
    curve.check_invariants();
    return curve;
}

EmpiricalRate rate_from_samples(std::span<const double> sinr, const SystemParams &params)
{
    EmpiricalRate rate;
    double mean = 0.0;
    double m2 = 0.0;
    for (const double s : sinr)
    {
        if (!std::isfinite(s))
        {
            ++rate.infinite;
            continue;
        }
        const double v = std::log2(1.0 + s);
        ++rate.used;
        const double delta = v - mean;
        mean += delta / static_cast<double>(rate.used);
        m2 += delta * (v - mean);
    }
    if (rate.used == 0)
        throw DivergenceError("empirical rate: every realization has unbounded SINR");
    const double n = static_cast<double>(rate.used);
    const double var = rate.used > 1 ? m2 / (n - 1.0) : 0.0;
    rate.bps = params.bandwidth_hz * mean;
    rate.ci_halfwidth = params.bandwidth_hz * 1.96 * std::sqrt(var / n);
    return rate;
}

EmpiricalRate empirical_rate(Point zR, double psiR, const McRun &run, const Enclosure &enc,
                             const SystemParams &params)
{
    if (params.noise_sigma2 <= 0.0 && params.lambda <= 0.0)
        throw DivergenceError("empirical rate diverges: no noise and no interference");
    return rate_from_samples(sinr_samples(zR, psiR, run, enc, params), params);
}

} // namespace mmwear
