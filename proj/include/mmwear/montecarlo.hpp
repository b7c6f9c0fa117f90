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

#ifndef MMWEAR_MONTECARLO_HPP
#define MMWEAR_MONTECARLO_HPP

#include "mmwear/analytic.hpp"
#include "mmwear/blockage.hpp"
#include "mmwear/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mmwear
{

// A user: body disk center, device on the circle of radius d around it, facing angle.
struct UserDrop
{
    Point body_center;
    Point device;
    double facing_psi = 0.0; // arg(device - body_center)
};

struct NetworkRealization
{
    std::vector<UserDrop> interferers;
    UserDrop reference;
    std::uint64_t seed = 0;
};

enum class PathKind : std::uint8_t
{
    Direct,
    WallImage,
    Ceiling,
    Nlos
};

struct LinkState
{
    int self_blocks = 0; // 0, 1 or 2
    PathKind path = PathKind::Direct;
    Wall wall = Wall::Left; // meaningful only for WallImage
    double gain = 0.0;      // path loss times B_L^-s where it applies
};

// Seed of realization `index` in a run started from `base_seed` (splitmix64 of both).
std::uint64_t realization_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

// Throws std::invalid_argument unless zR is at least d from every wall.
NetworkRealization sample_realization(std::uint64_t seed, const Enclosure &enc, const SystemParams &params,
                                      Point zR, double psiR);

// Number of bodies (the transmitter's own and the reference's) inside whose blocking cone, as
// seen from zR, the transmitting device sits. A reference device inside the transmitter's body
// disk counts as blocked by it.
int self_block_count(const UserDrop &tx, const UserDrop &reference, const SystemParams &params);

// Bucket grid over the device plane and its four first-order mirror copies. Holds every
// interferer body and its phantom across each wall.
class OccluderIndex
{
  public:
    OccluderIndex(const NetworkRealization &net, const Enclosure &enc, const SystemParams &params);

    // True if a body other than `skip` blocks segment a-b. Real bodies are always considered;
    // phantom bodies only for the given wall (none for direct paths).
    bool blocked(Point a, Point b, std::size_t skip, std::optional<Wall> wall) const;

  private:
    struct Entry
    {
        std::uint32_t owner;
        std::int8_t wall; // -1 for the real body
        Point center;
    };

    std::size_t cell_x(double x) const noexcept;
    std::size_t cell_y(double y) const noexcept;

    double x0_ = 0.0;
    double y0_ = 0.0;
    double cell_ = 1.0;
    std::size_t nx_ = 0;
    std::size_t ny_ = 0;
    double radius_ = 0.0;
    std::vector<std::vector<Entry>> cells_;
};

LinkState classify_link(const NetworkRealization &net, std::size_t index, const Enclosure &enc,
                        const SystemParams &params);
LinkState classify_link(const NetworkRealization &net, const OccluderIndex &occluders, std::size_t index,
                        const Enclosure &enc, const SystemParams &params);

enum class FadeMode : std::uint8_t
{
    Nakagami,
    Unit // every fade is 1; geometry-only checks
};

// h0 d0^-alpha_L / (sigma2 + sum h_i gain_i). +infinity when both noise and interference vanish.
double sinr_sample(const NetworkRealization &net, const Enclosure &enc, const SystemParams &params,
                   FadeMode fades = FadeMode::Nakagami);

struct McRun
{
    std::size_t realizations = 10'000;
    std::uint64_t base_seed = 1;
    unsigned workers = 1;
    FadeMode fades = FadeMode::Nakagami;
};

inline constexpr std::size_t kMinRealizations = 1'000;

// One SINR per realization, in realization order.
std::vector<double> sinr_samples(Point zR, double psiR, const McRun &run, const Enclosure &enc,
                                 const SystemParams &params);

CoverageCurve ccdf_from_samples(std::span<const double> sinr, std::span<const double> gamma_db);

CoverageCurve empirical_ccdf(Point zR, double psiR, std::span<const double> gamma_db, const McRun &run,
                             const Enclosure &enc, const SystemParams &params);

struct EmpiricalRate
{
    double bps = 0.0;
    double ci_halfwidth = 0.0; // 95%, bit/s
    std::size_t used = 0;
    std::size_t infinite = 0; // samples with unbounded SINR, left out of the mean
};

EmpiricalRate rate_from_samples(std::span<const double> sinr, const SystemParams &params);

// Throws DivergenceError when sigma2 = 0 and lambda = 0.
EmpiricalRate empirical_rate(Point zR, double psiR, const McRun &run, const Enclosure &enc,
                             const SystemParams &params);

} // namespace mmwear

#endif
