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

#include "swarmsim/error.hpp"
#include "swarmsim/geometry.hpp"
#include "swarmsim/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <vector>

using namespace swarmsim;

namespace
{
    // Independent enumeration in the skewed basis x = d (i + j/2), y = d j sqrt(3)/2.
    std::vector<double> skewed_basis_radii(double radius, double spacing, long reach)
    {
        std::vector<double> radii;
        for (long j = -reach; j <= reach; ++j)
            for (long i = -2 * reach; i <= 2 * reach; ++i)
            {
                const double x = spacing * (static_cast<double>(i) + 0.5 * static_cast<double>(j));
                const double y = spacing * static_cast<double>(j) * std::sqrt(3.0) / 2.0;
                const double r = std::hypot(x, y);
                if (r <= radius * (1.0 + 1e-12))
                    radii.push_back(r);
            }
        std::sort(radii.begin(), radii.end());
        return radii;
    }

    std::size_t skewed_basis_count(double radius, double spacing)
    {
        const long reach = static_cast<long>(std::ceil(radius / spacing * 2.0)) + 2;
        return skewed_basis_radii(radius, spacing, reach).size();
    }

    // Re-derivation of the placement procedure from its documented contract.
    std::vector<Vec2> reference_placement(std::size_t count, double sigma, double r_max, double d_min,
                                          std::uint64_t seed)
    {
        std::uint64_t z = seed; // placement stream offset is zero
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        std::mt19937_64 engine(z);
        const auto u = [&]
        { return static_cast<double>(engine() >> 11) / 9007199254740992.0; };

        std::vector<Vec2> out;
        while (out.size() < count)
        {
            const double u1 = 1.0 - u();
            const double u2 = u();
            const double rad = std::sqrt(-2.0 * std::log(u1));
            const double angle = 2.0 * std::numbers::pi * u2;
            const Vec2 c{sigma * (rad * std::cos(angle)), sigma * (rad * std::sin(angle))};
            if (c.x * c.x + c.y * c.y > r_max * r_max)
                continue;
            bool ok = true;
            for (const auto &p : out)
            {
                const double dx = p.x - c.x, dy = p.y - c.y;
                ok = ok && dx * dx + dy * dy >= d_min * d_min;
            }
            if (ok)
                out.push_back(c);
        }
        return out;
    }
}

TEST_CASE("lattice counts agree with an independent skewed-basis enumeration")
{
    for (double spacing : {0.5, 0.857, 1.0, 2.3})
        for (double radius : {0.1, 1.0, 2.5, 4.0, 7.77, 9.0696355})
        {
            CAPTURE(spacing);
            CAPTURE(radius);
            const auto lattice = triangular_lattice(radius * spacing, spacing);
            CHECK(lattice.size() == skewed_basis_count(radius * spacing, spacing));
        }
}

TEST_CASE("lattice basics")
{
    SUBCASE("radius below the spacing keeps only the origin")
    {
        const auto l = triangular_lattice(0.5, 0.857);
        REQUIRE(l.size() == 1);
        CHECK(l.positions[0] == Vec2{0.0, 0.0});
    }
    SUBCASE("radius equal to the spacing gives the hexagon")
    {
        CHECK(triangular_lattice(1.0, 1.0).size() == 7);
    }
    SUBCASE("nearest neighbour distance equals the spacing")
    {
        const auto l = triangular_lattice(5.0, 0.857);
        CHECK(min_pairwise_distance(l.positions) == doctest::Approx(0.857).epsilon(1e-12));
    }
    SUBCASE("all points within the disk, and the set is point symmetric")
    {
        const auto l = triangular_lattice(6.3, 0.857);
        std::set<std::pair<long long, long long>> keys;
        for (const auto &p : l.positions)
        {
            CHECK(std::hypot(p.x, p.y) <= 6.3 + 1e-9);
            keys.insert({std::llround(p.x * 1e6), std::llround(p.y * 1e6)});
        }
        for (const auto &p : l.positions)
            CHECK(keys.count({std::llround(-p.x * 1e6), std::llround(-p.y * 1e6)}) == 1);
        CHECK(l.size() % 2 == 1);
    }
    SUBCASE("enumeration order is row-major with ascending x")
    {
        const auto l = triangular_lattice(4.0, 1.0);
        for (std::size_t i = 1; i < l.size(); ++i)
        {
            const auto &a = l.positions[i - 1];
            const auto &b = l.positions[i];
            CHECK((b.y > a.y + 1e-12 || (std::abs(b.y - a.y) < 1e-12 && b.x > a.x)));
        }
    }
    SUBCASE("invalid arguments")
    {
        CHECK_THROWS_AS(triangular_lattice(0.0, 1.0), Error);
        CHECK_THROWS_AS(triangular_lattice(1.0, -1.0), Error);
        CHECK_THROWS_AS(triangular_lattice(std::nan(""), 1.0), Error);
    }
}

TEST_CASE("lattice count is monotone in the radius")
{
    std::size_t previous = 0;
    for (int k = 1; k <= 200; ++k)
    {
        const auto n = triangular_lattice(0.05 * k, 0.857).size();
        CHECK(n >= previous);
        previous = n;
    }
}

TEST_CASE("radius calibration")
{
    SUBCASE("single element")
    {
        const auto c = calibrate_radius_for_count(1, 0.857);
        CHECK(c.achieved_count == 1);
        CHECK(c.exact);
        CHECK(c.radius_lambda < 0.857);
        CHECK(triangular_lattice(c.radius_lambda, 0.857).size() == 1);
    }
    SUBCASE("hexagon")
    {
        const auto c = calibrate_radius_for_count(7, 1.0);
        CHECK(c.exact);
        CHECK(c.radius_lambda >= 1.0);
        CHECK(c.radius_lambda < std::sqrt(3.0));
    }
    SUBCASE("422 is not a shell count; the nearest count below is taken")
    {
        const auto c = calibrate_radius_for_count(422, 0.857);
        CHECK_FALSE(c.exact);
        CHECK(c.achieved_count == 421);
        const auto radii = skewed_basis_radii(30.0, 0.857, 60);
        CHECK(c.radius_lambda == doctest::Approx(radii[420]).epsilon(1e-12));
        CHECK(radii[421] > radii[420] + 1e-6);
        CHECK(triangular_lattice(c.radius_lambda, 0.857).size() == 421);
    }
    SUBCASE("calibrated radius reproduces every exact shell count")
    {
        const auto radii = skewed_basis_radii(12.0, 1.0, 30);
        for (std::size_t i = 0; i + 1 < radii.size() && radii[i + 1] < 11.0; ++i)
        {
            if (radii[i + 1] - radii[i] < 1e-9)
                continue;
            const auto c = calibrate_radius_for_count(i + 1, 1.0);
            CHECK(c.exact);
            CHECK(triangular_lattice(c.radius_lambda, 1.0).size() == i + 1);
        }
    }
}

TEST_CASE("placement reproduces the reference generator bit for bit")
{
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xFFFFFFFFFFFFFFFFULL})
    {
        CAPTURE(seed);
        const auto layout = place_swarm(64, 40000.0, 20000.0, 500.0, seed, 1'000'000);
        const auto expected = reference_placement(64, 40000.0, 20000.0, 500.0, seed);
        REQUIRE(layout.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(layout.centers[i] == expected[i]);
    }
}

TEST_CASE("placement properties over many seeds")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        const auto layout = place_swarm(256, 40000.0, 20000.0, 500.0, seed, 1'000'000);
        REQUIRE(layout.size() == 256);
        CHECK(min_pairwise_distance(layout) >= 500.0);
        for (const auto &c : layout.centers)
            CHECK(std::hypot(c.x, c.y) <= 20000.0);
    }
}

TEST_CASE("placement determinism and seed sensitivity")
{
    const auto a = place_swarm(32, 40000.0, 20000.0, 500.0, 7, 100000);
    const auto b = place_swarm(32, 40000.0, 20000.0, 500.0, 7, 100000);
    const auto c = place_swarm(32, 40000.0, 20000.0, 500.0, 8, 100000);
    CHECK(a.centers == b.centers);
    CHECK(a.centers != c.centers);
}

TEST_CASE("truncation acceptance fraction matches the normal distribution")
{
    // P(r <= R) for a 2D normal: 1 - exp(-R^2 / (2 sigma^2)) = 1 - exp(-1/8)
    const double expected = 1.0 - std::exp(-0.125);
    SeededStream rng(3, Stream::placement);
    const int n = 200000;
    int inside = 0;
    for (int i = 0; i < n; ++i)
    {
        const auto [gx, gy] = rng.normal_pair();
        inside += (gx * gx + gy * gy) * 40000.0 * 40000.0 <= 20000.0 * 20000.0;
    }
    CHECK(static_cast<double>(inside) / n == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("normal pairs have unit variance")
{
    SeededStream rng(11, Stream::placement);
    double sum = 0.0, sum2 = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
    {
        const auto [a, b] = rng.normal_pair();
        sum += a + b;
        sum2 += a * a + b * b;
    }
    CHECK(std::abs(sum / (2 * n)) < 0.01);
    CHECK(sum2 / (2 * n) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("infeasible placement reports progress")
{
    try
    {
        (void)place_swarm(200, 40000.0, 1000.0, 500.0, 1, 5000);
        FAIL("expected PlacementInfeasible");
    }
    catch (const PlacementInfeasible &e)
    {
        CHECK(e.kind() == ErrorKind::placement_infeasible);
        CHECK(e.accepted() < 200);
        CHECK(e.accepted() >= 1);
    }
}

TEST_CASE("single satellite and invalid placement arguments")
{
    const auto one = place_swarm(1, 10.0, 5.0, 1.0, 0, 1000);
    REQUIRE(one.size() == 1);
    CHECK(std::hypot(one.centers[0].x, one.centers[0].y) <= 5.0);
    CHECK_THROWS_AS(place_swarm(0, 1.0, 1.0, 1.0, 0, 10), Error);
    CHECK_THROWS_AS(place_swarm(2, -1.0, 1.0, 1.0, 0, 10), Error);
    CHECK_THROWS_AS(place_swarm(2, 1.0, 1.0, 0.0, 0, 10), Error);
    CHECK_THROWS_AS(min_pairwise_distance(std::span<const Vec2>{}), Error);
}
