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

#ifndef MMWEAR_BLOCKAGE_HPP
#define MMWEAR_BLOCKAGE_HPP

#include "mmwear/geometry.hpp"

namespace mmwear
{

// Scalar model parameters. Transmit power is normalized out; noise_sigma2 is the noise power
// relative to the signal power at unit distance.
struct SystemParams
{
    double lambda = 1.0;                    // users per m^2
    double body_width = 0.45;               // W, m
    double device_radius = 0.325;           // d, m
    double ref_link = 0.25;                 // d0, m
    double alpha_los = 2.0;
    double alpha_nlos = 4.0;
    int nakagami_m = 7;
    double self_block_attenuation = 1.0e4;  // B_L, linear (40 dB)
    double noise_sigma2 = 0.16;             // 20 dB SNR at d0 for the defaults above
    double bandwidth_hz = 1.76e9;

    void validate() const;
};

// Noise power giving the stated noise-only SNR (dB) at the reference link length.
double noise_for_reference_snr(double ref_link, double alpha_los, double snr_db);

inline constexpr double kDefaultReferenceSnrDb = 20.0;

// Distribution of the number s of self-blockages on an interfering link.
struct SelfBlockDist
{
    double p0 = 1.0;
    double p1 = 0.0;
    double p2 = 0.0;

    double operator[](int s) const noexcept { return s == 0 ? p0 : (s == 1 ? p1 : p2); }
};

// Probability that some third body blocks a link of the given length, using the
// pair-blocking area dist*W + pi*W^2/4.
double pair_block_prob(double dist, const SystemParams &params);

// Mean number of strong (unblocked) interferers seen from zR.
double mean_strong_count(Point zR, const Enclosure &enc, const SystemParams &params);

// Radius of the disk about zR that holds, on average, the same number of users as
// mean_strong_count. The disk is not clipped to the device plane.
double threshold_radius(Point zR, const Enclosure &enc, const SystemParams &params);

double self_block_prob(const SystemParams &params);
SelfBlockDist self_block_counts(const SystemParams &params);

// Body center of a user whose device is at `device` and faces psi: device - d e^{j psi}.
Point body_center_for(Point device, double psi, const SystemParams &params) noexcept;

// |P intersect disk(zR, radius)|.
double disk_area_in_plane(Point zR, double radius, const Enclosure &enc);

// |(BC(blocker) intersect P) \ disk(zR, radius)| for the blocking cone seen from zR.
double cone_area_outside_disk(Point zR, const BodyDisk &blocker, double radius, const Enclosure &enc);

// Fraction of the weak-interferer region that falls in the reference body's blocking cone.
// The first overload evaluates the threshold radius itself.
double q1(Point zR, double psiR, const Enclosure &enc, const SystemParams &params);
double q1(Point zR, double psiR, double threshold_radius, const Enclosure &enc, const SystemParams &params);

// Probability that a weak interferer and the reference face each other.
double q_facing(Point zR, double psiR, const Enclosure &enc, const SystemParams &params);
inline double q_facing(double p_self, double q1_value) noexcept { return (1.0 - p_self) * (1.0 - q1_value); }

} // namespace mmwear

#endif
