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

#include "mmwear/analytic.hpp"

#include "mmwear/errors.hpp"
#include "mmwear/quadrature.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmwear
{

namespace
{

constexpr double kStrongRelTol = 1e-8;
constexpr double kWeakRelTol = 1e-8;
constexpr double kExponentAbsTol = 1e-14;
constexpr double kClampWarnLevel = 1e-9;
constexpr double kMonotoneRepairLevel = 1e-6;

// 1 - (1 + x)^(-m) without cancellation for small x.
double one_minus_pow_neg(double x, int m) noexcept
{
    return -std::expm1(-static_cast<double>(m) * std::log1p(x));
}

double binomial(int n, int k) noexcept
{
    double c = 1.0;
    for (int i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(c);
}

void check_model_inputs(Point zR, const Enclosure &enc, const SystemParams &params)
{
    enc.validate();
    params.validate();
    if (params.nakagami_m > kMaxNakagamiM)
        throw std::invalid_argument("Nakagami m above 30 is not supported by the binomial expansion");
    if (!enc.contains(zR))
        throw std::invalid_argument("receiver position outside the device plane");
}

double strong_laplace_impl(double c, double radius, const SelfBlockDist &p_s, const SystemParams &params)
{
    if (params.lambda == 0.0 || radius <= 0.0 || c == 0.0)
        return 1.0;
    const int m = params.nakagami_m;
    const double alpha = params.alpha_los;
    const double bl = params.self_block_attenuation;
    const double scale[3] = {1.0, bl, bl * bl};
    const auto integrand = [&](double r) {
        const double path = std::pow(r, alpha);
        double s = 0.0;
        for (int k = 0; k < 3; ++k)
            if (p_s[k] > 0.0)
                s += p_s[k] * one_minus_pow_neg(c / (path * scale[k]), m);
        return s * r;
    };
    std::vector<double> breaks;
    for (const double sc : scale)
        breaks.push_back(std::pow(c / sc, 1.0 / alpha));
    // Absolute floor: an error below it moves the exponent by less than 1e-14.
    const double floor = kExponentAbsTol / (2.0 * kPi * params.lambda);
    const double integral = quad::integrate(integrand, 0.0, radius, kStrongRelTol, breaks, floor);
    return std::exp(-2.0 * kPi * params.lambda * integral);
}

WeakAreas weak_areas_impl(double c, Point zR, double radius, const Enclosure &enc, const SystemParams &params)
{
    const auto breaks = radial_breakpoints(zR, enc);
    const double outer = breaks.back();
    if (c == 0.0 || radius >= outer)
        return {};
    const int m = params.nakagami_m;
    const double ceiling2 = 4.0 * enc.plane_depth * enc.plane_depth;
    const double half_alpha = 0.5 * params.alpha_los;
    const double alpha_n = params.alpha_nlos;

    const auto ceiling = [&](double r) {
        return one_minus_pow_neg(c / std::pow(r * r + ceiling2, half_alpha), m) * r * arc_inside(zR, r, enc);
    };
    const auto nlos = [&](double r) {
        return one_minus_pow_neg(c / std::pow(r, alpha_n), m) * r * arc_inside(zR, r, enc);
    };
    const double floor = params.lambda > 0.0 ? kExponentAbsTol / params.lambda : 0.0;
    return {quad::integrate(ceiling, radius, outer, kWeakRelTol, breaks, floor),
            quad::integrate(nlos, radius, outer, kWeakRelTol, breaks, floor)};
}

// Neumaier summation after ordering by decreasing magnitude.
double compensated_sum(std::vector<double> terms)
{
    std::sort(terms.begin(), terms.end(), [](double a, double b) { return std::abs(a) > std::abs(b); });
    double sum = 0.0;
    double comp = 0.0;
    for (const double t : terms)
    {
        const double next = sum + t;
        if (std::abs(sum) >= std::abs(t))
            comp += (sum - next) + t;
        else
            comp += (t - next) + sum;
        sum = next;
    }
    return sum + comp;
}

// Coverage curves must not increase with the threshold. Differences at quadrature-noise level
// are projected away; anything larger is a bug.
void enforce_monotone(std::vector<double> &cov, std::vector<std::string> *warnings)
{
    double worst = 0.0;
    for (std::size_t i = 1; i < cov.size(); ++i)
    {
        if (cov[i] > cov[i - 1])
        {
            worst = std::max(worst, cov[i] - cov[i - 1]);
            cov[i] = cov[i - 1];
        }
    }
    if (worst > kMonotoneRepairLevel)
        throw std::logic_error("coverage increased with the threshold by " + std::to_string(worst));
    if (worst > 1e-12 && warnings)
        warnings->push_back("coverage projected to be non-increasing (max step " + std::to_string(worst) + ")");
}

} // namespace

void CoverageCurve::check_invariants() const
{
    if (coverage.size() != gamma_db.size())
        throw std::logic_error("coverage curve: length mismatch");
    if (!ci_halfwidth.empty() && ci_halfwidth.size() != gamma_db.size())
        throw std::logic_error("coverage curve: confidence vector length mismatch");
    for (std::size_t i = 0; i < coverage.size(); ++i)
    {
        if (!(coverage[i] >= 0.0 && coverage[i] <= 1.0))
            throw std::logic_error("coverage curve: value outside [0,1]");
        if (i > 0 && gamma_db[i] >= gamma_db[i - 1] && coverage[i] > coverage[i - 1])
            throw std::logic_error("coverage curve: increases with the threshold");
    }
}

double m_tilde(int m)
{
    if (m < 1)
        throw std::invalid_argument("m_tilde: m must be a positive integer");
    return std::exp(-std::lgamma(static_cast<double>(m) + 1.0) / static_cast<double>(m));
}

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

double gamma_tilde(double gamma_linear, const SystemParams &params)
{
    return gamma_linear * std::pow(params.ref_link, params.alpha_los);
}

// --- LocationModel ---

LocationModel::LocationModel(Point zR, const Enclosure &enc, const SystemParams &params)
    : zR_(zR), enc_(enc), params_(params)
{
    check_model_inputs(zR, enc, params);
    m_tilde_ = m_tilde(params.nakagami_m);
    R_B_ = params.lambda > 0.0 ? mmwear::threshold_radius(zR, enc, params) : 0.0;
    Q_area_ = std::max(0.0, enc.area() - disk_area_in_plane(zR, R_B_, enc));
    p_self_ = self_block_prob(params);
    p_s_ = self_block_counts(params);
}

double LocationModel::q1(double psiR) const
{
    return mmwear::q1(zR_, psiR, R_B_, enc_, params_);
}

double LocationModel::q(double psiR) const
{
    if (Q_area_ <= 1e-12 * enc_.area())
        return q_facing(p_self_, 0.0);
    return q_facing(p_self_, q1(psiR));
}

AnalyticContext LocationModel::context(double psiR, double gamma_linear) const
{
    return {m_tilde_, gamma_tilde(gamma_linear, params_), R_B_, Q_area_, p_s_, q(psiR)};
}

LocationModel::Terms LocationModel::laplace_terms(double gamma_linear) const
{
    const int m = params_.nakagami_m;
    Terms t;
    t.gamma_tilde = gamma_tilde(gamma_linear, params_);
    t.strong.resize(m);
    t.a1.resize(m);
    t.a2.resize(m);
    for (int k = 1; k <= m; ++k)
    {
        const double c = k * m_tilde_ * t.gamma_tilde;
        t.strong[k - 1] = strong_laplace_impl(c, R_B_, p_s_, params_);
        const WeakAreas a = (Q_area_ > 0.0 && params_.lambda > 0.0) ? weak_areas_impl(c, zR_, R_B_, enc_, params_)
                                                                    : WeakAreas{};
        t.a1[k - 1] = a.a1;
        t.a2[k - 1] = a.a2;
    }
    return t;
}

double LocationModel::coverage(const Terms &terms, double q, std::vector<std::string> *warnings) const
{
    const int m = params_.nakagami_m;
    const double lam = params_.lambda;
    std::vector<double> parts;
    parts.reserve(m);
    for (int k = 1; k <= m; ++k)
    {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        const double noise = std::exp(-(k * m * m_tilde_) * terms.gamma_tilde * params_.noise_sigma2);
        const double weak = std::exp(-lam * (q * terms.a1[k - 1] + (1.0 - q) * terms.a2[k - 1]));
        parts.push_back(sign * binomial(m, k) * noise * terms.strong[k - 1] * weak);
    }
    const double raw = compensated_sum(std::move(parts));
    if ((raw < -kClampWarnLevel || raw > 1.0 + kClampWarnLevel) && warnings)
        warnings->push_back("alternating binomial sum left [0,1] by more than 1e-9 and was clamped");
    return std::clamp(raw, 0.0, 1.0);
}

// --- free-function forms ---

AnalyticContext make_context(Point zR, double psiR, double gamma_db, const Enclosure &enc,
                             const SystemParams &params)
{
    return LocationModel(zR, enc, params).context(psiR, db_to_linear(gamma_db));
}

double strong_laplace(int k, const AnalyticContext &ctx, const SystemParams &params)
{
    if (k < 1 || k > params.nakagami_m)
        throw std::invalid_argument("strong_laplace: k outside [1, m]");
    if (!(ctx.gamma_tilde >= 0.0))
        throw std::invalid_argument("strong_laplace: negative threshold");
    return strong_laplace_impl(k * ctx.m_tilde * ctx.gamma_tilde, ctx.R_B, ctx.p_s, params);
}

WeakAreas weak_areas(int k, const AnalyticContext &ctx, Point zR, const Enclosure &enc, const SystemParams &params)
{
    if (k < 1 || k > params.nakagami_m)
        throw std::invalid_argument("weak_areas: k outside [1, m]");
    if (!(ctx.gamma_tilde >= 0.0))
        throw std::invalid_argument("weak_areas: negative threshold");
    if (!enc.contains(zR))
        throw std::invalid_argument("weak_areas: receiver position outside the device plane");
    if (ctx.Q_area <= 0.0)
        return {};
    return weak_areas_impl(k * ctx.m_tilde * ctx.gamma_tilde, zR, ctx.R_B, enc, params);
}

double weak_laplace(int k, const AnalyticContext &ctx, Point zR, double /*psiR*/, const Enclosure &enc,
                    const SystemParams &params)
{
    if (params.lambda == 0.0)
        return 1.0;
    const WeakAreas a = weak_areas(k, ctx, zR, enc, params);
    return std::exp(-params.lambda * (ctx.q * a.a1 + (1.0 - ctx.q) * a.a2));
}

CoverageCurve coverage_ccdf(Point zR, double psiR, std::span<const double> gamma_db, const Enclosure &enc,
                            const SystemParams &params)
{
    const LocationModel model(zR, enc, params);
    const double q = model.q(psiR);
    CoverageCurve curve;
    curve.meta = {zR, psiR, params.lambda, CurveSource::Analytic};
    curve.gamma_db.assign(gamma_db.begin(), gamma_db.end());
    curve.coverage.reserve(gamma_db.size());
    for (const double g : gamma_db)
        curve.coverage.push_back(model.coverage(model.laplace_terms(db_to_linear(g)), q, &curve.warnings));
    if (std::is_sorted(curve.gamma_db.begin(), curve.gamma_db.end()))
        enforce_monotone(curve.coverage, &curve.warnings);
    curve.check_invariants();
    return curve;
}

std::vector<RateResult> ergodic_rates(Point zR, std::span<const double> psi_list, const Enclosure &enc,
                                      const SystemParams &params, unsigned workers)
{
    const LocationModel model(zR, enc, params);
    if (params.noise_sigma2 == 0.0 && params.lambda == 0.0)
        throw DivergenceError("ergodic rate diverges: no noise and no interference");

    const int n = static_cast<int>(std::lround((kRateGridMaxDb - kRateGridMinDb) / kRateGridStepDb)) + 1;
    std::vector<double> gamma(n);
    for (int i = 0; i < n; ++i)
        gamma[i] = db_to_linear(kRateGridMinDb + i * kRateGridStepDb);

    std::vector<LocationModel::Terms> terms(n);
    parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t i) { terms[i] = model.laplace_terms(gamma[i]); });

    // Coverage of the noise-limited link bounds the model's coverage from above:
    // 1 - (1 - e^{-x})^m <= m e^{-x}, x = m m~ gamma d0^alpha sigma^2.
    const int m = params.nakagami_m;
    const double decay = m * m_tilde(m) * std::pow(params.ref_link, params.alpha_los) * params.noise_sigma2;

    std::vector<RateResult> out;
    out.reserve(psi_list.size());
    for (const double psi : psi_list)
    {
        const double q = model.q(psi);
        std::vector<double> cov(n);
        for (int i = 0; i < n; ++i)
            cov[i] = model.coverage(terms[i], q);
        enforce_monotone(cov, nullptr);

        // Trapezoid rule in t = ln(gamma): integrand cov * gamma / (1 + gamma).
        const double h = kRateGridStepDb * std::log(10.0) / 10.0;
        double integral = 0.0;
        for (int i = 0; i + 1 < n; ++i)
        {
            const double f0 = cov[i] * gamma[i] / (1.0 + gamma[i]);
            const double f1 = cov[i + 1] * gamma[i + 1] / (1.0 + gamma[i + 1]);
            integral += 0.5 * h * (f0 + f1);
        }
        // Below the grid coverage lies in [cov(gmin), 1].
        const double low_width = std::log1p(gamma.front());
        integral += cov.front() * low_width;
        double slack = (1.0 - cov.front()) * low_width;

        const double gmax = gamma.back();
        if (decay > 0.0)
        {
            slack += m * std::exp(-decay * gmax) / (decay * (1.0 + gmax));
        }
        else if (cov.back() > 1e-9)
        {
            throw NumericalError("ergodic rate: coverage has not decayed at the top of the threshold grid");
        }
        if (!(integral > 0.0))
            throw NumericalError("ergodic rate: empty coverage integral");
        const double bound = slack / integral;
        if (bound > kRateTruncationBudget)
            throw NumericalError("ergodic rate: tail truncation exceeds the 0.5% budget");

        RateResult r;
        r.spectral_efficiency = integral / std::log(2.0);
        r.bps = params.bandwidth_hz * r.spectral_efficiency;
        r.truncation_bound = bound;
        out.push_back(r);
    }
    return out;
}

RateResult ergodic_rate(Point zR, double psiR, const Enclosure &enc, const SystemParams &params)
{
    const double psi[1] = {psiR};
    return ergodic_rates(zR, psi, enc, params).front();
}

Heatmap coverage_heatmap(GridResolution grid, double gamma_db, double psiR, const Enclosure &enc,
                         const SystemParams &params, unsigned workers)
{
    if (grid.nx < 2 || grid.ny < 2)
        throw std::invalid_argument("coverage_heatmap: need at least 2 points per axis");
    enc.validate();
    params.validate();
    const double inset = params.device_radius;
    if (!(enc.length > 2.0 * inset) || !(enc.breadth > 2.0 * inset))
        throw std::invalid_argument("coverage_heatmap: enclosure too small for the device inset");

    Heatmap map;
    map.x.resize(grid.nx);
    map.y.resize(grid.ny);
    for (int i = 0; i < grid.nx; ++i)
        map.x[i] = inset + (enc.length - 2.0 * inset) * i / (grid.nx - 1);
    for (int j = 0; j < grid.ny; ++j)
        map.y[j] = inset + (enc.breadth - 2.0 * inset) * j / (grid.ny - 1);
    map.coverage.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0.0);

    const double gamma_lin = db_to_linear(gamma_db);
    parallel_for(map.coverage.size(), workers, [&](std::size_t cell) {
        const std::size_t ix = cell % grid.nx;
        const std::size_t iy = cell / grid.nx;
        const LocationModel model(Point{map.x[ix], map.y[iy]}, enc, params);
        map.coverage[cell] = model.coverage(model.laplace_terms(gamma_lin), model.q(psiR));
    });
    return map;
}

} // namespace mmwear
