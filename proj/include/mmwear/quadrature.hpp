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

#ifndef MMWEAR_QUADRATURE_HPP
#define MMWEAR_QUADRATURE_HPP

#include "mmwear/geometry.hpp"

#include <functional>
#include <span>

namespace mmwear::quad
{

// Adaptive Gauss-Kronrod (7/15) on [a, b], split at any breakpoints strictly inside the
// interval. A piece is accepted when its error estimate is within rel_tol of its L1 norm or
// within abs_tol. Throws NumericalError otherwise.
double integrate(const std::function<double(double)> &f, double a, double b, double rel_tol,
                 std::span<const double> breakpoints = {}, double abs_tol = 0.0);

// Adaptive tensor-product Gauss-Legendre over a rectangle: each cell is compared against its
// four children until the difference is below its share of rel_tol times the integral.
double integrate_rect(const std::function<double(double, double)> &f, const Rect &box, double rel_tol,
                      int max_depth = 12);

} // namespace mmwear::quad

#endif
