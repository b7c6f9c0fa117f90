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

#ifndef MMWEAR_ORACLES_HPP
#define MMWEAR_ORACLES_HPP

// Reference computations for tests and the validate command. Written directly from the model
// definitions by brute force; they share data types with the library and nothing else.

#include "mmwear/geometry.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace mmwear::oracle
{

struct Estimate
{
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

// Midpoint sums on an n x n grid over the device plane.
double rho_riemann(Point zR, const Enclosure &enc, double lambda, double body_width, int n = 2000);

struct Areas
{
    double a1 = 0.0;
    double a2 = 0.0;
};

// c = k m~ g~. Cells whose midpoint lies within radius of zR are masked out.
Areas weak_areas_riemann(Point zR, double radius, double c, int m, double alpha_los, double alpha_nlos,
                         const Enclosure &enc, int n = 2000);

// E[exp(-t sum h_i g_i)] over a PPP of intensity lambda in the full disk of the given radius, with
// self-block counts drawn from p_s, fades Gamma(m, 1/m) and gain r^-alpha_los B_L^-s.
Estimate strong_laplace_mc(double lambda, double radius, double t, int m, double alpha_los, double attenuation,
                           std::array<double, 3> p_s, std::size_t draws, std::uint64_t seed);

// Same over a PPP in the plane minus the disk; each point is ceiling-reflected with
// probability q and NLOS otherwise.
Estimate weak_laplace_mc(Point zR, double radius, double q, double lambda, double t, int m, double alpha_los,
                         double alpha_nlos, const Enclosure &enc, std::size_t draws, std::uint64_t seed);

// Fraction of device orientations (on a uniform grid of n angles) for which a user's own body
// occludes the straight line to a receiver far away.
double self_block_fraction(double body_width, double device_radius, std::size_t n = 1'000'000);

// Hit-count estimate of |BC(body) \ disk(zR, radius)| / |P \ disk(zR, radius)| over the rectangle.
Estimate q1_hitcount(Point zR, Point body, double body_width, double radius, const Enclosure &enc, std::size_t n,
                     std::uint64_t seed);

// P(h > x) for h ~ Gamma(m, 1/m).
double gamma_ccdf(int m, double x);

// Kolmogorov-Smirnov distance between samples and Gamma(m, 1/m).
double ks_distance_gamma(std::span<const double> samples, int m);

// 1 - (1 - exp(-m m~ g~ sigma2))^m with m~ = Gamma(m+1)^(-1/m).
double alzer_coverage_noise_only(int m, double gamma_tilde, double sigma2);

// bandwidth * E[log2(1 + SINR)] for the noise-only Alzer coverage, by double-exponential quadrature.
double rate_noise_only(int m, double ref_link, double alpha_los, double sigma2, double bandwidth_hz);

} // namespace mmwear::oracle

#endif
