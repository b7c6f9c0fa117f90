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

#include "mmwear/quadrature.hpp"

#include "mmwear/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace mmwear::quad
{

namespace
{

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

constexpr unsigned kMaxDepth1d = 18;

double tensor_gauss(const std::function<double(double, double)> &f, const Rect &r)
{
    return gauss<double, 10>::integrate(
        [&](double x) { return gauss<double, 10>::integrate([&](double y) { return f(x, y); }, r.y0, r.y1); },
        r.x0, r.x1);
}

std::array<Rect, 4> quarters(const Rect &r)
{
    const double xm = 0.5 * (r.x0 + r.x1);
    const double ym = 0.5 * (r.y0 + r.y1);
    return {Rect{r.x0, r.y0, xm, ym}, Rect{xm, r.y0, r.x1, ym}, Rect{r.x0, ym, xm, r.y1}, Rect{xm, ym, r.x1, r.y1}};
}

double refine(const std::function<double(double, double)> &f, const Rect &r, double coarse, double abs_tol,
              double total_area, int depth)
{
    const auto kids = quarters(r);
    std::array<double, 4> fine{};
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        fine[i] = tensor_gauss(f, kids[i]);
        sum += fine[i];
    }
    const double local_tol = abs_tol * r.area() / total_area;
    if (std::abs(sum - coarse) <= local_tol)
        return sum;
    if (depth == 0)
        throw NumericalError("integrate_rect: tolerance not met at maximum refinement");
    double out = 0.0;
    for (int i = 0; i < 4; ++i)
        out += refine(f, kids[i], fine[i], abs_tol, total_area, depth - 1);
    return out;
}

} // namespace

double integrate(const std::function<double(double)> &f, double a, double b, double rel_tol,
                 std::span<const double> breakpoints, double abs_tol)
{
    if (!(b > a))
        return 0.0;
    std::vector<double> edges{a};
    for (const double p : breakpoints)
        if (p > a && p < b)
            edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    // Breakpoints a few ulps apart (e.g. two equal wall distances) would leave slivers whose
    // error estimate is pure roundoff.
    const double merge = 1e-12 * (b - a);
    edges.erase(std::unique(edges.begin(), edges.end(), [&](double u, double v) { return v - u <= merge; }),
                edges.end());
    edges.back() = b;

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    {
        double error = 0.0;
        double l1 = 0.0;
        // Smoothstep map r = a + h (3u^2 - 2u^3): square-root behaviour at either end of a piece
        // (circles grazing a wall or a corner) becomes analytic in u.
        const double lo = edges[i];
        const double h = edges[i + 1] - lo;
        const auto g = [&](double u) {
            const double w = 6.0 * u * (1.0 - u);
            return w == 0.0 ? 0.0 : h * w * f(lo + h * u * u * (3.0 - 2.0 * u));
        };
        const double piece = gauss_kronrod<double, 15>::integrate(g, 0.0, 1.0, kMaxDepth1d, rel_tol, &error, &l1);
        if (!std::isfinite(piece))
            throw NumericalError("integrate: non-finite integrand");
        if (error > rel_tol * l1 && error > abs_tol && error > 64.0 * std::numeric_limits<double>::min())
            throw NumericalError("integrate: tolerance not met at maximum refinement");
        total += piece;
    }
    return total;
}

double integrate_rect(const std::function<double(double, double)> &f, const Rect &box, double rel_tol,
                      int max_depth)
{
    if (!(box.area() > 0.0))
        return 0.0;
    // Seed the tolerance from a 4x4 partition so the first comparison is not against a single cell.
    double estimate = 0.0;
    std::vector<std::pair<Rect, double>> cells;
    for (const Rect &q : quarters(box))
        for (const Rect &c : quarters(q))
        {
            const double v = tensor_gauss(f, c);
            cells.emplace_back(c, v);
            estimate += v;
        }
    if (!std::isfinite(estimate))
        throw NumericalError("integrate_rect: non-finite integrand");
    const double abs_tol = rel_tol * std::max(std::abs(estimate), std::numeric_limits<double>::min());
    double total = 0.0;
    for (const auto &[cell, coarse] : cells)
        total += refine(f, cell, coarse, abs_tol, box.area(), max_depth);
    return total;
}

} // namespace mmwear::quad
