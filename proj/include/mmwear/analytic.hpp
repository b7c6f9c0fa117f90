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

#ifndef MMWEAR_ANALYTIC_HPP
#define MMWEAR_ANALYTIC_HPP

#include "mmwear/blockage.hpp"
#include "mmwear/geometry.hpp"

#include <span>
#include <string>
#include <vector>

namespace mmwear
{

inline constexpr int kMaxNakagamiM = 30;

struct AnalyticContext
{
    double m_tilde = 1.0;     // (m!)^(-1/m)
    double gamma_tilde = 0.0; // gamma * d0^alpha_los
    double R_B = 0.0;         // threshold radius, m
    double Q_area = 0.0;      // |P \ disk(zR, R_B)|, m^2
    SelfBlockDist p_s;
    double q = 0.0;           // weak interferer and reference facing each other
};

enum class CurveSource
{
    Analytic,
    MonteCarlo
};

struct CurveMeta
{
    Point zR;
    double psiR = 0.0;
    double lambda = 0.0;
    CurveSource source = CurveSource::Analytic;
};

// SINR coverage probability P(SINR > gamma) on a threshold grid.
struct CoverageCurve
{
    std::vector<double> gamma_db;
    std::vector<double> coverage;
    std::vector<double> ci_halfwidth; // 95% half-width per point; empty for analytic curves
    CurveMeta meta;
    std::vector<std::string> warnings;

    // Throws std::logic_error unless sizes match, values are in [0,1] and coverage is
    // non-increasing in gamma.
    void check_invariants() const;
};

double m_tilde(int m);
double db_to_linear(double db) noexcept;
double gamma_tilde(double gamma_linear, const SystemParams &params);

AnalyticContext make_context(Point zR, double psiR, double gamma_db, const Enclosure &enc,
                             const SystemParams &params);

// E[exp(-k m m~ g~ I_strong)]: PPP Laplace functional over the full threshold disk with
// self-blockage counts drawn from p_s.
double strong_laplace(int k, const AnalyticContext &ctx, const SystemParams &params);

struct WeakAreas
{
    double a1 = 0.0; // ceiling-reflected (unblocked, facing) links
    double a2 = 0.0; // NLOS links
};

WeakAreas weak_areas(int k, const AnalyticContext &ctx, Point zR, const Enclosure &enc, const SystemParams &params);

// exp(-lambda (q A1 + (1-q) A2)).
double weak_laplace(int k, const AnalyticContext &ctx, Point zR, double psiR, const Enclosure &enc,
                    const SystemParams &params);

// Analytic model pinned to one receiver location. Everything that depends on the location but
// not on the threshold or the body orientation is evaluated once.
class LocationModel
{
  public:
    LocationModel(Point zR, const Enclosure &enc, const SystemParams &params);

    struct Terms
    {
        double gamma_tilde = 0.0;
        std::vector<double> strong; // index k-1
        std::vector<double> a1;
        std::vector<double> a2;
    };

    Point position() const noexcept { return zR_; }
    double threshold_radius() const noexcept { return R_B_; }
    double weak_region_area() const noexcept { return Q_area_; }
    double self_block_probability() const noexcept { return p_self_; }
    const SelfBlockDist &self_blocks() const noexcept { return p_s_; }

    double q1(double psiR) const;
    double q(double psiR) const;
    AnalyticContext context(double psiR, double gamma_linear) const;
    Terms laplace_terms(double gamma_linear) const;

    // Binomial-expansion coverage for precomputed terms and a facing probability q.
    double coverage(const Terms &terms, double q, std::vector<std::string> *warnings = nullptr) const;

  private:
    Point zR_;
    Enclosure enc_;
    SystemParams params_;
    double m_tilde_;
    double R_B_;
    double Q_area_;
    double p_self_;
    SelfBlockDist p_s_;
};

CoverageCurve coverage_ccdf(Point zR, double psiR, std::span<const double> gamma_db, const Enclosure &enc,
                            const SystemParams &params);

struct RateResult
{
    double bps = 0.0;
    double spectral_efficiency = 0.0; // bit/s/Hz
    double truncation_bound = 0.0;    // bound on the neglected tails, relative to the integral
};

// Rate-integral grid: thresholds from -40 dB to +60 dB in 0.2 dB steps.
inline constexpr double kRateGridMinDb = -40.0;
inline constexpr double kRateGridMaxDb = 60.0;
inline constexpr double kRateGridStepDb = 0.2;
inline constexpr double kRateTruncationBudget = 0.005;

RateResult ergodic_rate(Point zR, double psiR, const Enclosure &enc, const SystemParams &params);

// One rate per orientation; the threshold-dependent terms are shared across orientations.
std::vector<RateResult> ergodic_rates(Point zR, std::span<const double> psi_list, const Enclosure &enc,
                                      const SystemParams &params, unsigned workers = 1);

struct GridResolution
{
    int nx = 60;
    int ny = 20;
};

// Coverage on a grid of receiver positions inset by the device radius from every wall.
struct Heatmap
{
    std::vector<double> x;        // nx values
    std::vector<double> y;        // ny values
    std::vector<double> coverage; // row-major: coverage[iy * nx + ix]

    double at(std::size_t ix, std::size_t iy) const { return coverage.at(iy * x.size() + ix); }
};

Heatmap coverage_heatmap(GridResolution grid, double gamma_db, double psiR, const Enclosure &enc,
                         const SystemParams &params, unsigned workers = 1);

} // namespace mmwear

#endif
