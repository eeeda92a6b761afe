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

#ifndef SWARMSIM_RADIATION_HPP
#define SWARMSIM_RADIATION_HPP

#include "swarmsim/geometry.hpp"
#include "swarmsim/kernels.hpp"

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace swarmsim
{
    using cd = std::complex<double>;

    // Far-field direction. theta is measured from the array normal, phi in the aperture plane from +x.
    struct Direction
    {
        double theta_deg = 0.0;
        double phi_deg = 0.0;
    };

    // Maps a (possibly negative) theta to direction cosines; negative theta means |theta| at phi + 180.
    kernels::DirectionCosines direction_cosines(const Direction &dir);

    // One-dimensional sweep of signed theta at fixed phi.
    struct AngularCut
    {
        double phi_deg = 0.0;
        std::vector<double> theta_deg;

        std::size_t sample_count() const { return theta_deg.size(); }
        Direction direction(std::size_t i) const { return {theta_deg[i], phi_deg}; }

        // theta_min + (theta_max - theta_min) * i / (samples - 1), i = 0 .. samples-1
        static AngularCut uniform(double phi_deg, double theta_min_deg, double theta_max_deg, std::size_t samples);
    };

    void validate(const AngularCut &cut);

    struct SteeringTarget
    {
        double theta0_deg = 0.0;
        double phi0_deg = 0.0;
        friend bool operator==(const SteeringTarget &, const SteeringTarget &) = default;
    };

    void validate(const SteeringTarget &target);

    // Analytic element-pattern surrogates, all normalized to 1 at boresight.
    struct IsotropicElement
    {
        friend bool operator==(const IsotropicElement &, const IsotropicElement &) = default;
    };
    struct CosinePowerElement
    {
        double exponent = 1.0;
        friend bool operator==(const CosinePowerElement &, const CosinePowerElement &) = default;
    };
    // Uniformly illuminated circular aperture: |2 J1(x) / x|, x = 2 pi a sin(theta).
    // The radius is capped so the first null stays beyond 90 degrees (monotone amplitude).
    struct CircularApertureElement
    {
        double radius_lambda = 0.4;
        friend bool operator==(const CircularApertureElement &, const CircularApertureElement &) = default;
    };

    using ElementPatternModel = std::variant<IsotropicElement, CosinePowerElement, CircularApertureElement>;

    // Largest aperture radius with a monotone pattern over the forward hemisphere (j1,1 / 2pi).
    inline constexpr double kMaxApertureRadiusLambda = 3.8317059702075123 / (2.0 * 3.14159265358979323846);

    void validate(const ElementPatternModel &model);
    std::string describe(const ElementPatternModel &model);

    // Complex far-field samples along a cut. peak_magnitude is 0 until normalize_to_peak has run,
    // after which it holds the peak magnitude that was divided out.
    struct FieldCut
    {
        AngularCut cut;
        std::vector<cd> values;
        double peak_magnitude = 0.0;
    };

    double element_amplitude(const ElementPatternModel &model, const Direction &dir);

    // Conjugate-phase steering: phase_n = -2 pi (x_n sin t0 cos p0 + y_n sin t0 sin p0)
    std::vector<double> steering_phases(std::span<const Vec2> positions, const SteeringTarget &target);

    FieldCut array_factor(std::span<const Vec2> positions, std::span<const cd> weights, std::span<const double> phases,
                          const AngularCut &cut);

    std::vector<cd> uniform_weights(std::size_t n);

    // Two-level pattern by pattern multiplication: element * subarray AF * swarm AF.
    // Every satellite carries the same lattice with the same orientation.
    class CompositePattern
    {
    public:
        CompositePattern(ElementPatternModel element, const ApertureLattice &lattice, const SwarmLayout &swarm,
                         const SteeringTarget &target, std::span<const cd> subarray_weights,
                         std::span<const cd> swarm_weights);

        cd field(const Direction &dir) const;
        double magnitude(const Direction &dir) const { return std::abs(field(dir)); }

        FieldCut evaluate(const AngularCut &cut) const;

        const ElementPatternModel &element() const { return element_; }
        const SteeringTarget &target() const { return target_; }

    private:
        ElementPatternModel element_;
        SteeringTarget target_;
        std::vector<Vec2> sub_positions_;
        std::vector<cd> sub_weights_;
        std::vector<double> sub_phases_;
        std::vector<Vec2> swarm_positions_;
        std::vector<cd> swarm_weights_;
        std::vector<double> swarm_phases_;
    };

    FieldCut composite_pattern_factorized(const ElementPatternModel &element, const ApertureLattice &lattice,
                                          const SwarmLayout &swarm, const SteeringTarget &target,
                                          std::span<const cd> subarray_weights, std::span<const cd> swarm_weights,
                                          const AngularCut &cut);

    // Term count above which brute-force evaluation refuses to run. The environment variable
    // SWARMSIM_BRUTEFORCE_CEILING overrides the default of 1e8.
    inline constexpr std::size_t kDefaultBruteforceCeiling = 100'000'000;
    std::size_t bruteforce_ceiling_from_env();

    // Expands every satellite's elements (satellite-major order) and sums all terms directly.
    FieldCut composite_pattern_bruteforce(const ElementPatternModel &element, const ApertureLattice &lattice,
                                          const SwarmLayout &swarm, const SteeringTarget &target,
                                          std::span<const cd> subarray_weights, std::span<const cd> swarm_weights,
                                          const AngularCut &cut, std::size_t cost_ceiling = bruteforce_ceiling_from_env());

    // max_i |a_i - b_i| / max_i |b_i|
    double max_relative_deviation(const FieldCut &a, const FieldCut &b);
}

#endif
