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

#include "swarmsim/geometry.hpp"

#include "swarmsim/error.hpp"
#include "swarmsim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace swarmsim
{
    namespace
    {
        constexpr double kShellTolerance = 1e-9; // relative to the lattice spacing

        // Every lattice point with radius <= bound, in the documented row order.
        std::vector<Vec2> enumerate_lattice(double bound, double spacing)
        {
            const double pitch = spacing * std::sqrt(3.0) / 2.0;
            const long rows = static_cast<long>(std::floor(bound / pitch)) + 1;
            const long cols = static_cast<long>(std::floor(bound / spacing)) + 2;
            const double bound2 = bound * bound;

            std::vector<Vec2> points;
            for (long j = -rows; j <= rows; ++j)
            {
                const double shift = (std::labs(j) % 2 == 1) ? 0.5 : 0.0;
                const double y = pitch * static_cast<double>(j);
                for (long i = -cols; i <= cols; ++i)
                {
                    const double x = spacing * (static_cast<double>(i) + shift);
                    if (x * x + y * y <= bound2)
                        points.push_back({x, y});
                }
            }
            return points;
        }
    }

    ApertureLattice triangular_lattice(double radius_lambda, double spacing_lambda)
    {
        require(std::isfinite(radius_lambda) && radius_lambda > 0.0, "triangular_lattice: radius must be > 0");
        require(std::isfinite(spacing_lambda) && spacing_lambda > 0.0, "triangular_lattice: spacing must be > 0");

        ApertureLattice lattice;
        lattice.spacing_lambda = spacing_lambda;
        lattice.radius_lambda = radius_lambda;
        lattice.positions = enumerate_lattice(radius_lambda + kShellTolerance * spacing_lambda, spacing_lambda);
        return lattice;
    }

    RadiusCalibration calibrate_radius_for_count(std::size_t target_count, double spacing_lambda)
    {
        require(target_count >= 1, "calibrate_radius_for_count: target count must be >= 1");
        require(std::isfinite(spacing_lambda) && spacing_lambda > 0.0,
                "calibrate_radius_for_count: spacing must be > 0");

        // Disk of the same area as target_count unit cells, with generous margin
        const double cell_area = spacing_lambda * spacing_lambda * std::sqrt(3.0) / 2.0;
        const double estimate = std::sqrt(static_cast<double>(target_count) * cell_area / std::numbers::pi);
        const double bound = 1.5 * estimate + 3.0 * spacing_lambda;

        const auto points = enumerate_lattice(bound, spacing_lambda);
        std::vector<double> radii;
        radii.reserve(points.size());
        for (const auto &p : points)
            radii.push_back(std::hypot(p.x, p.y));
        std::sort(radii.begin(), radii.end());

        // Collapse into shells: (radius, cumulative count)
        const double tol = kShellTolerance * spacing_lambda;
        std::vector<std::pair<double, std::size_t>> shells;
        for (std::size_t i = 0; i < radii.size(); ++i)
        {
            if (!shells.empty() && radii[i] - shells.back().first <= tol)
                shells.back().second = i + 1;
            else
                shells.emplace_back(radii[i], i + 1);
        }

        std::size_t best = 0;
        for (std::size_t k = 0; k < shells.size(); ++k)
        {
            if (shells[k].second > target_count)
                break;
            best = k;
        }

        RadiusCalibration result;
        result.achieved_count = shells[best].second;
        result.exact = result.achieved_count == target_count;
        result.radius_lambda = shells[best].first;
        if (best == 0)
            result.radius_lambda = 0.5 * shells[1].first;
        return result;
    }

    SwarmLayout place_swarm(std::size_t count, double sigma_lambda, double r_max_lambda, double d_min_lambda,
                            std::uint64_t seed, std::size_t max_attempts)
    {
        require(count >= 1, "place_swarm: count must be >= 1");
        require(std::isfinite(sigma_lambda) && sigma_lambda > 0.0, "place_swarm: sigma must be > 0");
        require(std::isfinite(r_max_lambda) && r_max_lambda > 0.0, "place_swarm: r_max must be > 0");
        require(std::isfinite(d_min_lambda) && d_min_lambda > 0.0, "place_swarm: d_min must be > 0");
        require(max_attempts >= count, "place_swarm: max_attempts must be >= count");

        SwarmLayout layout;
        layout.sigma_lambda = sigma_lambda;
        layout.r_max_lambda = r_max_lambda;
        layout.d_min_lambda = d_min_lambda;
        layout.count = count;
        layout.seed = seed;
        layout.centers.reserve(count);

        SeededStream rng(seed, Stream::placement);
        const double r_max2 = r_max_lambda * r_max_lambda;
        const double d_min2 = d_min_lambda * d_min_lambda;

        std::size_t attempts = 0;
        while (layout.centers.size() < count)
        {
            if (attempts == max_attempts)
                throw PlacementInfeasible(layout.centers.size(), count, attempts);
            ++attempts;

            const auto [gx, gy] = rng.normal_pair();
            const Vec2 candidate{sigma_lambda * gx, sigma_lambda * gy};
            if (candidate.x * candidate.x + candidate.y * candidate.y > r_max2)
                continue;

            const bool crowded = std::any_of(layout.centers.begin(), layout.centers.end(), [&](const Vec2 &c)
                                             {
                const double dx = c.x - candidate.x, dy = c.y - candidate.y;
                return dx * dx + dy * dy < d_min2; });
            if (!crowded)
                layout.centers.push_back(candidate);
        }
        return layout;
    }

    double min_pairwise_distance(std::span<const Vec2> points)
    {
        require(points.size() >= 2, "min_pairwise_distance: need at least 2 points");
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                best = std::min(best, distance(points[i], points[j]));
        return best;
    }
}
