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

#include "swarmsim/kernels.hpp"

#include <cstddef>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace swarmsim::kernels
{
    cd array_factor_at(std::span<const Vec2> positions, std::span<const cd> weights,
                       std::span<const double> phases, DirectionCosines dir)
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        double re = 0.0, im = 0.0;
        const std::size_t n = positions.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            const double arg = two_pi * (positions[i].x * dir.u + positions[i].y * dir.v) + phases[i];
            const double c = std::cos(arg), s = std::sin(arg);
            const double wr = weights[i].real(), wi = weights[i].imag();
            re += wr * c - wi * s;
            im += wr * s + wi * c;
        }
        return {re, im};
    }

    void array_factor_serial(std::span<const Vec2> positions, std::span<const cd> weights,
                             std::span<const double> phases, std::span<const DirectionCosines> dirs,
                             std::span<cd> out)
    {
        for (std::size_t s = 0; s < dirs.size(); ++s)
            out[s] = array_factor_at(positions, weights, phases, dirs[s]);
    }

    void array_factor_omp(std::span<const Vec2> positions, std::span<const cd> weights,
                          std::span<const double> phases, std::span<const DirectionCosines> dirs,
                          std::span<cd> out)
    {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dirs.size());
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t s = 0; s < n; ++s)
            out[s] = array_factor_at(positions, weights, phases, dirs[s]);
    }

    int max_threads()
    {
#ifdef _OPENMP
        return omp_get_max_threads();
#else
        return 1;
#endif
    }
}
