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

#ifndef SWARMSIM_SCENARIO_HPP
#define SWARMSIM_SCENARIO_HPP

#include "swarmsim/geolink.hpp"
#include "swarmsim/geometry.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/radiation.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace swarmsim
{
    enum class SteeringMode
    {
        broadside,  // beam along the array normal, no ground geometry
        geo_target  // array normal pointed from the GEO slot at the ground target
    };

    // Defaults reproduce the reference swarm: 256 satellites at 19 GHz carrying 422-element
    // (nominal) triangular subarrays, observed over -1..1 deg with 15000 samples.
    struct ScenarioConfig
    {
        double frequency_ghz = 19.0;

        struct Subarray
        {
            double spacing_lambda = 0.857;
            std::size_t target_count = 422;
            bool operator==(const Subarray &) const = default;
        } subarray;

        struct Swarm
        {
            std::size_t count = 256;
            double sigma_lambda = 40000.0;
            double r_max_lambda = 20000.0;
            double d_min_lambda = 500.0;
            std::uint64_t seed = 1;
            std::size_t max_attempts = 1'000'000;
            bool operator==(const Swarm &) const = default;
        } swarm;

        ElementPatternModel element = CircularApertureElement{0.4};
        SteeringMode steering = SteeringMode::geo_target;

        struct Geo
        {
            double slot_lon_deg = 50.0;
            double target_lat_deg = 49.612;
            double target_lon_deg = 6.129;
            double orbit_radius_km = 42164.0;
            double earth_radius_km = 6371.0;
            bool operator==(const Geo &) const = default;
        } geo;

        struct Cut
        {
            double phi_deg = 0.0;
            double theta_min_deg = -1.0;
            double theta_max_deg = 1.0;
            std::size_t samples = 15000;
            bool operator==(const Cut &) const = default;
        } cut;

        struct Metrics
        {
            double lobe_boundary_deg = 0.05;
            double min_prominence_db = 0.5;
            bool operator==(const Metrics &) const = default;
        } metrics;

        struct Footprint
        {
            std::size_t azimuth_samples = 64;
            bool operator==(const Footprint &) const = default;
        } footprint;

        struct Output
        {
            bool plot = true;
            double plot_floor_db = -60.0;
            double zoom_center_deg = 0.0;
            double zoom_half_width_deg = 0.15;
            bool operator==(const Output &) const = default;
        } output;

        bool operator==(const ScenarioConfig &) const = default;

        OrbitSlot slot() const { return {geo.slot_lon_deg, geo.orbit_radius_km, geo.earth_radius_km}; }
        GeoPoint target() const { return {geo.target_lat_deg, geo.target_lon_deg}; }
        AngularCut angular_cut() const
        {
            return AngularCut::uniform(cut.phi_deg, cut.theta_min_deg, cut.theta_max_deg, cut.samples);
        }
    };

    // Parses a JSON configuration. Whitespace-only text yields the defaults; unknown keys, wrong types
    // and out-of-range values are rejected (ErrorKind::parse with line/column, ErrorKind::validation
    // naming the field).
    ScenarioConfig parse_config(const std::string &text);
    ScenarioConfig load_config(const std::filesystem::path &path);
    std::string config_to_json(const ScenarioConfig &config);

    // Throws ErrorKind::validation on the first field that breaks a module precondition.
    void validate(const ScenarioConfig &config);

    // Pipeline stages, shared by run_scenario and the CLI subcommands.
    struct SubarrayGeometry
    {
        ApertureLattice lattice;
        RadiusCalibration calibration;
    };

    SubarrayGeometry build_subarray(const ScenarioConfig &config);
    SwarmLayout build_swarm(const ScenarioConfig &config);

    // The aperture always points its normal at the beam target, so both modes steer to (0, 0).
    SteeringTarget steering_target(const ScenarioConfig &config);

    CompositePattern build_pattern(const ScenarioConfig &config, const ApertureLattice &lattice,
                                   const SwarmLayout &swarm);

    FootprintContour compute_footprint(const ScenarioConfig &config, const CompositePattern &pattern, double hpbw_deg);

    struct RunArtifacts
    {
        std::filesystem::path lattice;
        std::filesystem::path layout;
        std::filesystem::path pattern;
        std::optional<std::filesystem::path> plot;
        std::filesystem::path metrics;
        std::optional<std::filesystem::path> footprint;
        std::filesystem::path report;
    };

    struct RunReport
    {
        ScenarioConfig config;
        RunArtifacts files;
        RadiusCalibration calibration;
        PatternMetrics metrics;
        std::optional<FootprintContour> footprint;
        std::vector<std::pair<std::string, double>> stage_seconds;
    };

    // Geometry -> pattern -> metrics -> footprint (geo_target only), writing every artifact into
    // out_dir. On failure, files written so far are removed and the error carries the stage name.
    RunReport run_scenario(const ScenarioConfig &config, const std::filesystem::path &out_dir);

    struct ReducedScale
    {
        std::size_t satellites = 4;
        std::size_t elements = 19;
        std::size_t samples = 501;
        std::uint64_t seed = 0;
        bool random_weights = false;
    };

    struct OracleReport
    {
        ReducedScale scale;
        std::size_t achieved_elements = 0;
        double max_relative_deviation = 0.0;
        double tolerance = 1e-9;
        bool passed = false;
    };

    // Factorized versus brute-force evaluation on a scaled-down swarm. The steering direction is
    // drawn from the seed (theta0 up to 0.5 deg); with random_weights both weight vectors are
    // random complex numbers as well.
    OracleReport verify_oracle(const ScenarioConfig &config, const ReducedScale &scale,
                               std::size_t cost_ceiling = bruteforce_ceiling_from_env());

    std::string oracle_report_to_json(const OracleReport &report);
}

#endif
