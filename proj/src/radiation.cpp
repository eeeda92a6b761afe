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

#include "swarmsim/radiation.hpp"

#include "swarmsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace swarmsim
{
    namespace
    {
        constexpr double kDegToRad = std::numbers::pi / 180.0;

        template <class... Ts>
        struct overloaded : Ts...
        {
            using Ts::operator()...;
        };

        std::vector<kernels::DirectionCosines> cut_cosines(const AngularCut &cut)
        {
            std::vector<kernels::DirectionCosines> dirs(cut.sample_count());
            for (std::size_t i = 0; i < dirs.size(); ++i)
                dirs[i] = direction_cosines(cut.direction(i));
            return dirs;
        }

        void check_lengths(std::size_t positions, std::size_t weights, const char *what)
        {
            if (positions != weights)
                fail(ErrorKind::invalid_parameter, std::string(what) + ": " + std::to_string(weights) +
                                                       " weights for " + std::to_string(positions) + " positions");
        }
    }

    kernels::DirectionCosines direction_cosines(const Direction &dir)
    {
        double theta = dir.theta_deg, phi = dir.phi_deg;
        if (theta < 0.0)
        {
            theta = -theta;
            phi = phi + 180.0;
        }
        const double st = std::sin(theta * kDegToRad);
        const double p = phi * kDegToRad;
        return {st * std::cos(p), st * std::sin(p)};
    }

    AngularCut AngularCut::uniform(double phi_deg, double theta_min_deg, double theta_max_deg, std::size_t samples)
    {
        require(samples >= 2, "AngularCut: need at least 2 samples");
        require(theta_max_deg > theta_min_deg, "AngularCut: theta_max must exceed theta_min");
        AngularCut cut;
        cut.phi_deg = phi_deg;
        cut.theta_deg.resize(samples);
        const double span = theta_max_deg - theta_min_deg;
        const double last = static_cast<double>(samples - 1);
        for (std::size_t i = 0; i < samples; ++i)
            cut.theta_deg[i] = theta_min_deg + span * static_cast<double>(i) / last;
        validate(cut);
        return cut;
    }

    void validate(const AngularCut &cut)
    {
        require(std::isfinite(cut.phi_deg), "AngularCut: phi must be finite");
        require(cut.sample_count() >= 2, "AngularCut: need at least 2 samples");
        for (std::size_t i = 0; i < cut.theta_deg.size(); ++i)
        {
            const double t = cut.theta_deg[i];
            require(std::isfinite(t) && std::abs(t) <= 90.0, "AngularCut: |theta| must be <= 90 deg");
            if (i > 0)
                require(t > cut.theta_deg[i - 1], "AngularCut: theta samples must be strictly increasing");
        }
    }

    void validate(const SteeringTarget &target)
    {
        require(std::isfinite(target.theta0_deg) && target.theta0_deg >= 0.0 && target.theta0_deg <= 90.0,
                "SteeringTarget: theta0 must lie in [0, 90] deg");
        require(std::isfinite(target.phi0_deg), "SteeringTarget: phi0 must be finite");
    }

    void validate(const ElementPatternModel &model)
    {
        std::visit(overloaded{
                       [](const IsotropicElement &) {},
                       [](const CosinePowerElement &m)
                       { require(std::isfinite(m.exponent) && m.exponent >= 0.0, "cosine_power: exponent must be >= 0"); },
                       [](const CircularApertureElement &m)
                       {
                           require(std::isfinite(m.radius_lambda) && m.radius_lambda > 0.0 &&
                                       m.radius_lambda <= kMaxApertureRadiusLambda,
                                   "circular_aperture: radius must lie in (0, 0.6098] wavelengths");
                       }},
                   model);
    }

    std::string describe(const ElementPatternModel &model)
    {
        std::ostringstream os;
        os.precision(12);
        std::visit(overloaded{
                       [&](const IsotropicElement &) { os << "isotropic"; },
                       [&](const CosinePowerElement &m) { os << "cosine_power(q=" << m.exponent << ")"; },
                       [&](const CircularApertureElement &m) { os << "circular_aperture(a=" << m.radius_lambda << ")"; }},
                   model);
        return os.str();
    }

    double element_amplitude(const ElementPatternModel &model, const Direction &dir)
    {
        const double theta = std::abs(dir.theta_deg) * kDegToRad;
        return std::visit(overloaded{
                              [](const IsotropicElement &) { return 1.0; },
                              [&](const CosinePowerElement &m)
                              {
                                  if (m.exponent == 0.0)
                                      return 1.0;
                                  return std::pow(std::max(0.0, std::cos(theta)), m.exponent);
                              },
                              [&](const CircularApertureElement &m)
                              {
                                  const double x = 2.0 * std::numbers::pi * m.radius_lambda * std::sin(theta);
                                  if (std::abs(x) < 1e-6)
                                      return 1.0 - x * x / 8.0;
                                  return std::abs(2.0 * std::cyl_bessel_j(1.0, x) / x);
                              }},
                          model);
    }

    std::vector<double> steering_phases(std::span<const Vec2> positions, const SteeringTarget &target)
    {
        require(!positions.empty(), "steering_phases: positions must not be empty");
        const auto dc = direction_cosines({target.theta0_deg, target.phi0_deg});
        std::vector<double> phases(positions.size());
        for (std::size_t i = 0; i < positions.size(); ++i)
            phases[i] = -2.0 * std::numbers::pi * (positions[i].x * dc.u + positions[i].y * dc.v);
        return phases;
    }

    std::vector<cd> uniform_weights(std::size_t n)
    {
        return std::vector<cd>(n, cd(1.0, 0.0));
    }

    FieldCut array_factor(std::span<const Vec2> positions, std::span<const cd> weights, std::span<const double> phases,
                          const AngularCut &cut)
    {
        check_lengths(positions.size(), weights.size(), "array_factor");
        check_lengths(positions.size(), phases.size(), "array_factor (phases)");
        validate(cut);

        FieldCut out;
        out.cut = cut;
        out.values.resize(cut.sample_count());
        const auto dirs = cut_cosines(cut);
        kernels::array_factor_omp(positions, weights, phases, dirs, out.values);
        return out;
    }

    CompositePattern::CompositePattern(ElementPatternModel element, const ApertureLattice &lattice,
                                       const SwarmLayout &swarm, const SteeringTarget &target,
                                       std::span<const cd> subarray_weights, std::span<const cd> swarm_weights)
        : element_(std::move(element)), target_(target), sub_positions_(lattice.positions),
          sub_weights_(subarray_weights.begin(), subarray_weights.end()), swarm_positions_(swarm.centers),
          swarm_weights_(swarm_weights.begin(), swarm_weights.end())
    {
        validate(element_);
        validate(target_);
        require(!sub_positions_.empty(), "composite pattern: empty lattice");
        require(!swarm_positions_.empty(), "composite pattern: empty swarm");
        check_lengths(sub_positions_.size(), sub_weights_.size(), "composite pattern (subarray)");
        check_lengths(swarm_positions_.size(), swarm_weights_.size(), "composite pattern (swarm)");
        sub_phases_ = steering_phases(sub_positions_, target_);
        swarm_phases_ = steering_phases(swarm_positions_, target_);
    }

    cd CompositePattern::field(const Direction &dir) const
    {
        const auto dc = direction_cosines(dir);
        const cd sub = kernels::array_factor_at(sub_positions_, sub_weights_, sub_phases_, dc);
        const cd swarm = kernels::array_factor_at(swarm_positions_, swarm_weights_, swarm_phases_, dc);
        return element_amplitude(element_, dir) * sub * swarm;
    }

    FieldCut CompositePattern::evaluate(const AngularCut &cut) const
    {
        validate(cut);
        const auto dirs = cut_cosines(cut);
        std::vector<cd> sub(dirs.size()), swarm(dirs.size());
        kernels::array_factor_omp(sub_positions_, sub_weights_, sub_phases_, dirs, sub);
        kernels::array_factor_omp(swarm_positions_, swarm_weights_, swarm_phases_, dirs, swarm);

        FieldCut out;
        out.cut = cut;
        out.values.resize(dirs.size());
        for (std::size_t i = 0; i < dirs.size(); ++i)
            out.values[i] = element_amplitude(element_, cut.direction(i)) * sub[i] * swarm[i];
        return out;
    }

    FieldCut composite_pattern_factorized(const ElementPatternModel &element, const ApertureLattice &lattice,
                                          const SwarmLayout &swarm, const SteeringTarget &target,
                                          std::span<const cd> subarray_weights, std::span<const cd> swarm_weights,
                                          const AngularCut &cut)
    {
        return CompositePattern(element, lattice, swarm, target, subarray_weights, swarm_weights).evaluate(cut);
    }

    std::size_t bruteforce_ceiling_from_env()
    {
        const char *env = std::getenv("SWARMSIM_BRUTEFORCE_CEILING");
        if (env == nullptr || *env == '\0')
            return kDefaultBruteforceCeiling;
        char *end = nullptr;
        const double value = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(value >= 1.0))
            fail(ErrorKind::validation, std::string("SWARMSIM_BRUTEFORCE_CEILING: not a positive number: ") + env);
        return static_cast<std::size_t>(value);
    }

    FieldCut composite_pattern_bruteforce(const ElementPatternModel &element, const ApertureLattice &lattice,
                                          const SwarmLayout &swarm, const SteeringTarget &target,
                                          std::span<const cd> subarray_weights, std::span<const cd> swarm_weights,
                                          const AngularCut &cut, std::size_t cost_ceiling)
    {
        validate(element);
        validate(target);
        validate(cut);
        check_lengths(lattice.size(), subarray_weights.size(), "brute force (subarray)");
        check_lengths(swarm.size(), swarm_weights.size(), "brute force (swarm)");

        const double cost = static_cast<double>(lattice.size()) * static_cast<double>(swarm.size()) *
                            static_cast<double>(cut.sample_count());
        if (cost > static_cast<double>(cost_ceiling))
        {
            std::ostringstream os;
            os << "brute force needs " << cost << " terms, above the ceiling of " << cost_ceiling
               << "; reduce satellites, elements or samples (or raise SWARMSIM_BRUTEFORCE_CEILING)";
            fail(ErrorKind::cost_ceiling, os.str());
        }

        const std::size_t n = lattice.size() * swarm.size();
        std::vector<Vec2> positions;
        std::vector<cd> weights;
        positions.reserve(n);
        weights.reserve(n);
        for (std::size_t s = 0; s < swarm.size(); ++s)
            for (std::size_t e = 0; e < lattice.size(); ++e)
            {
                positions.push_back({swarm.centers[s].x + lattice.positions[e].x,
                                     swarm.centers[s].y + lattice.positions[e].y});
                weights.push_back(swarm_weights[s] * subarray_weights[e]);
            }
        const auto phases = steering_phases(positions, target);

        FieldCut out = array_factor(positions, weights, phases, cut);
        for (std::size_t i = 0; i < out.values.size(); ++i)
            out.values[i] *= element_amplitude(element, cut.direction(i));
        return out;
    }

    double max_relative_deviation(const FieldCut &a, const FieldCut &b)
    {
        require(a.values.size() == b.values.size(), "max_relative_deviation: cuts differ in length");
        double peak = 0.0, worst = 0.0;
        for (std::size_t i = 0; i < a.values.size(); ++i)
        {
            peak = std::max(peak, std::abs(b.values[i]));
            worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
        }
        if (peak == 0.0)
            return worst == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return worst / peak;
    }
}
