// SPDX-License-Identifier: Apache-2.0
//
// swarmsim - distributed-aperture simulator for satellite swarms
// Copyright (C) 2026 The swarmsim authors
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

#ifndef SWARMSIM_KERNELS_HPP
#define SWARMSIM_KERNELS_HPP

#include "swarmsim/geometry.hpp"

#include <complex>
#include <span>

namespace swarmsim::kernels
{
    using cd = std::complex<double>;

    // In-plane direction cosines (u, v) = (sin t cos p, sin t sin p) of one far-field direction.
    struct DirectionCosines
    {
        double u = 0.0;
        double v = 0.0;
    };

    // Array factor in one direction:
    //   sum_n w_n * exp(j * (2*pi*(x_n*u + y_n*v) + phase_n))
    // Terms are accumulated in element order n = 0, 1, ..., so the result is bit-identical no matter
    // which thread evaluates it.
    cd array_factor_at(std::span<const Vec2> positions, std::span<const cd> weights,
                       std::span<const double> phases, DirectionCosines dir);

    // Reference implementation, one direction after another.
    void array_factor_serial(std::span<const Vec2> positions, std::span<const cd> weights,
                             std::span<const double> phases, std::span<const DirectionCosines> dirs,
                             std::span<cd> out);

    // OpenMP over directions; same per-direction arithmetic as the serial path.
    void array_factor_omp(std::span<const Vec2> positions, std::span<const cd> weights,
                          std::span<const double> phases, std::span<const DirectionCosines> dirs,
                          std::span<cd> out);

    int max_threads();
}

#endif
