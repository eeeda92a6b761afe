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

#ifndef SWARMSIM_GEOMETRY_HPP
#define SWARMSIM_GEOMETRY_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace swarmsim
{
    // All lengths in this module are in units of the free-space wavelength.

    struct Vec2
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator==(const Vec2 &, const Vec2 &) = default;
    };

    inline double distance(const Vec2 &a, const Vec2 &b)
    {
        const double dx = a.x - b.x, dy = a.y - b.y;
        return std::sqrt(dx * dx + dy * dy);
    }

    // Element positions of one subarray.
    struct ApertureLattice
    {
        std::vector<Vec2> positions;
        double spacing_lambda = 0.0;
        double radius_lambda = 0.0;

        std::size_t size() const { return positions.size(); }
    };

    struct RadiusCalibration
    {
        double radius_lambda = 0.0;
        std::size_t achieved_count = 0;
        bool exact = false;
    };

    // Subarray centers of the swarm plus everything needed to regenerate them.
    struct SwarmLayout
    {
        std::vector<Vec2> centers;
        double sigma_lambda = 0.0;
        double r_max_lambda = 0.0;
        double d_min_lambda = 0.0;
        std::size_t count = 0;
        std::uint64_t seed = 0;

        std::size_t size() const { return centers.size(); }
    };

    // Equilateral triangular lattice clipped to a disk.
    //
    // Rows run parallel to the x-axis with pitch spacing*sqrt(3)/2; odd rows (by |row index|) are
    // shifted by spacing/2, so one element sits exactly at the origin. Positions are ordered row by
    // row from the most negative y upward, and by increasing x within a row. A point belongs to the
    // disk when its radius is at most radius_lambda + 1e-9*spacing_lambda, which keeps points on
    // a shell returned by calibrate_radius_for_count inside.
    ApertureLattice triangular_lattice(double radius_lambda, double spacing_lambda);

    // Smallest disk radius whose lattice holds exactly target_count elements.
    //
    // Lattice counts jump from shell to shell, and a disk centred on an element always holds an odd
    // number of elements. When the target is not reachable the radius of the largest count below it
    // is returned with exact == false. The returned radius is the shell radius itself, except for the
    // single-element case where half the first-shell radius is returned (radius must stay positive).
    RadiusCalibration calibrate_radius_for_count(std::size_t target_count, double spacing_lambda);

    // Rejection sampling of subarray centers.
    //
    // Each candidate consumes one Box-Muller pair from the placement stream of the seed and is scaled
    // by sigma_lambda. A candidate is rejected when it lies outside r_max_lambda, then when it is
    // closer than d_min_lambda to an accepted center (checked in acceptance order). Throws
    // PlacementInfeasible when max_attempts candidates were drawn without accepting count centers.
    SwarmLayout place_swarm(std::size_t count, double sigma_lambda, double r_max_lambda, double d_min_lambda,
                            std::uint64_t seed, std::size_t max_attempts);

    double min_pairwise_distance(std::span<const Vec2> points);

    inline double min_pairwise_distance(const SwarmLayout &layout)
    {
        return min_pairwise_distance(layout.centers);
    }
}

#endif
