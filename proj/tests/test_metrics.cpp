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
#include "swarmsim/metrics.hpp"
#include "swarmsim/radiation.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace swarmsim;

namespace
{
    constexpr double pi = std::numbers::pi;

    // Reference values for an 8-element, half-wavelength ULA at broadside, solved with a
    // bracketing root finder and bounded maximization on the closed-form kernel.
    constexpr double kUla8HpbwDeg = 12.802525796993503;
    constexpr double kUla8FirstSidelobeDeg = 21.069339030066196;
    constexpr double kUla8FirstSidelobeDb = 12.797347818635085;

    FieldCut sampled(const std::vector<double> &theta, auto &&field)
    {
        FieldCut f;
        f.cut = AngularCut{0.0, theta};
        for (double t : theta)
            f.values.push_back(field(t));
        return f;
    }

    std::vector<double> grid(double lo, double hi, std::size_t n)
    {
        return AngularCut::uniform(0.0, lo, hi, n).theta_deg;
    }

    FieldCut ula8(std::size_t samples)
    {
        const std::vector<Vec2> p{{0, 0}, {0.5, 0}, {1.0, 0}, {1.5, 0}, {2.0, 0}, {2.5, 0}, {3.0, 0}, {3.5, 0}};
        return array_factor(p, uniform_weights(p.size()), std::vector<double>(p.size(), 0.0),
                            AngularCut::uniform(0.0, -90.0, 90.0, samples));
    }
}

TEST_CASE("normalization and dB conversion")
{
    const auto f = sampled({0.0, 1.0}, [](double t)
                           { return t == 0.0 ? cd(1.0, 0.0) : cd(0.5, 0.0); });
    const auto db = to_db(f);
    CHECK(db.level_db[0] == 0.0);
    CHECK(db.level_db[1] == doctest::Approx(-6.020599913279624).epsilon(1e-12));
    CHECK(db.peak_index == 0);

    const auto g = sampled({0.0, 1.0, 2.0}, [](double t)
                           { return cd(0.0, 4.0 - t); });
    const auto once = normalize_to_peak(g);
    const auto twice = normalize_to_peak(once);
    CHECK(once.peak_magnitude == doctest::Approx(4.0));
    CHECK(twice.peak_magnitude == doctest::Approx(4.0));
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(std::abs(once.values[i] - twice.values[i]) == 0.0);
    CHECK(std::abs(once.values[0]) == doctest::Approx(1.0));

    const auto zero = sampled({0.0, 1.0}, [](double)
                              { return cd(0.0, 0.0); });
    CHECK_THROWS_AS(normalize_to_peak(zero), Error);
    CHECK_THROWS_AS(to_db(zero), Error);

    const auto with_null = sampled({0.0, 1.0}, [](double t)
                                   { return cd(1.0 - t, 0.0); });
    CHECK(to_db(with_null).level_db[1] == kDbFloor);
}

TEST_CASE("gaussian beam width")
{
    const double w = 0.1;
    const auto f = sampled(grid(-0.5, 0.5, 20001), [&](double t)
                           { return cd(std::exp(-(t / w) * (t / w)), 0.0); });
    const double expected = 2.0 * w * std::sqrt(std::log(2.0) / 2.0);
    CHECK(half_power_beamwidth(to_db(f)) == doctest::Approx(expected).epsilon(1e-6));
    const auto x = half_power_crossings(to_db(f));
    CHECK(x.left_deg == doctest::Approx(-expected / 2.0).epsilon(1e-6));
    CHECK(x.right_deg == doctest::Approx(expected / 2.0).epsilon(1e-6));
}

TEST_CASE("beam width is invariant under scaling and mirroring")
{
    const auto theta = grid(-2.0, 2.0, 4001);
    const auto base = sampled(theta, [](double t)
                              { return cd(std::exp(-t * t / 0.3) * (1.0 + 0.2 * t), 0.0); });
    const double hpbw = half_power_beamwidth(to_db(base));
    for (double scale : {1e-30, 1e-3, 7.0, 1e40})
    {
        auto scaled = base;
        for (auto &v : scaled.values)
            v *= cd(0.0, scale);
        CHECK(half_power_beamwidth(to_db(scaled)) == doctest::Approx(hpbw).epsilon(1e-12));
    }
    FieldCut mirrored = base;
    for (std::size_t i = 0; i < theta.size(); ++i)
        mirrored.values[i] = base.values[theta.size() - 1 - i];
    CHECK(half_power_beamwidth(to_db(mirrored)) == doctest::Approx(hpbw).epsilon(1e-9));
}

TEST_CASE("truncated main lobe is reported")
{
    const auto f = sampled(grid(-0.01, 0.01, 101), [](double t)
                           { return cd(std::exp(-t * t), 0.0); });
    try
    {
        (void)half_power_beamwidth(to_db(f));
        FAIL("expected beam_truncated");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::beam_truncated);
    }
}

TEST_CASE("one-sided crossing")
{
    const auto f = sampled(grid(0.0, 1.0, 1001), [](double t)
                           { return cd(std::cos(t), 0.0); });
    CHECK(crossing_above_peak(to_db(f), 20.0 * std::log10(std::cos(0.5))) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("eight-element array: beam width and first sidelobe")
{
    const auto db = to_db(ula8(1001));
    CHECK(half_power_beamwidth(db) == doctest::Approx(kUla8HpbwDeg).epsilon(0.005));
    const auto lobes = find_lobes(db);
    REQUIRE(lobes.size() >= 2);
    CHECK(lobes[0].level_db == doctest::Approx(kUla8FirstSidelobeDb).epsilon(0.1 / kUla8FirstSidelobeDb));
    CHECK(std::abs(lobes[0].theta_deg) == doctest::Approx(kUla8FirstSidelobeDeg).epsilon(0.01));
    // Both first sidelobes tie in level; the ordering must be stable.
    CHECK(std::abs(lobes[1].theta_deg) == doctest::Approx(kUla8FirstSidelobeDeg).epsilon(0.01));
}

TEST_CASE("lobe detection")
{
    // Main lobe at 0 plus two bumps: -10 dB at 1.0 and -20 dB at -2.0, and a tiny ripple.
    const auto theta = grid(-4.0, 4.0, 8001);
    const auto f = sampled(theta, [](double t)
                           {
        const double main = std::exp(-t * t / 0.02);
        const double a = std::pow(10.0, -10.0 / 20.0) * std::exp(-(t - 1.0) * (t - 1.0) / 0.01);
        const double b = std::pow(10.0, -20.0 / 20.0) * std::exp(-(t + 2.0) * (t + 2.0) / 0.01);
        const double ripple = 1e-3 * (1.0 + 0.001 * std::cos(200.0 * t));
        return cd(main + a + b + ripple, 0.0); });
    const auto lobes = find_lobes(to_db(f), 0.5);
    REQUIRE(lobes.size() == 2);
    CHECK(lobes[0].theta_deg == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(lobes[0].level_db == doctest::Approx(10.0).epsilon(1e-2));
    CHECK(lobes[1].theta_deg == doctest::Approx(-2.0).epsilon(1e-3));
    CHECK(lobes[1].level_db == doctest::Approx(20.0).epsilon(1e-2));
    for (const auto &l : lobes)
        CHECK(l.prominence_db >= 0.5);

    const auto m = extract_metrics(to_db(f), {1.5, 0.5});
    REQUIRE(m.sll);
    REQUIRE(m.gll);
    CHECK(m.sll->theta_deg == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(m.gll->theta_deg == doctest::Approx(-2.0).epsilon(1e-3));
}

TEST_CASE("lobe classification")
{
    const std::vector<Lobe> lobes{{0.05, 12.0, 3.0}, {-0.02, 18.0, 3.0}, {0.3, 15.0, 3.0}, {0.01, 18.0, 2.0}};
    SUBCASE("a lobe exactly on the boundary counts as far")
    {
        const auto m = classify_metrics(lobes, 0.0015, 0.05);
        REQUIRE(m.sll);
        REQUIRE(m.gll);
        CHECK(m.gll->theta_deg == 0.05);
        CHECK(m.gll->level_db == 12.0);
        CHECK(m.sll->level_db == 18.0);
        CHECK(m.sll->theta_deg == 0.01);
    }
    SUBCASE("boundary is measured from boresight, not from the beam peak")
    {
        const auto m = classify_metrics(lobes, 0.0015, 0.05, 0.01);
        REQUIRE(m.gll);
        CHECK(m.gll->theta_deg == 0.05);
        CHECK(m.peak_theta_deg == 0.01);
    }
    SUBCASE("no lobes on a side leaves that reading empty")
    {
        const std::vector<Lobe> near_only{{0.01, 20.0, 3.0}};
        const auto m = classify_metrics(near_only, 0.0015, 0.05);
        CHECK(m.sll);
        CHECK_FALSE(m.gll);
        const auto e = classify_metrics(std::vector<Lobe>{}, 0.0015, 0.05);
        CHECK_FALSE(e.sll);
        CHECK_FALSE(e.gll);
    }
    SUBCASE("boundary must exceed the beam width")
    {
        CHECK_THROWS_AS(classify_metrics(lobes, 0.1, 0.05), Error);
    }
}

TEST_CASE("patterns rebuilt from dB levels")
{
    const auto p = pattern_from_levels({-1.0, 0.0, 1.0}, {-10.0, -4.0, -10.0});
    CHECK(p.level_db[1] == 0.0);
    CHECK(p.level_db[0] == doctest::Approx(-6.0));
    CHECK(p.peak_index == 1);
    CHECK_THROWS_AS(pattern_from_levels({0.0}, {0.0}), Error);
}
