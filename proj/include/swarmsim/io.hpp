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

#ifndef SWARMSIM_IO_HPP
#define SWARMSIM_IO_HPP

#include "swarmsim/geolink.hpp"
#include "swarmsim/geometry.hpp"
#include "swarmsim/metrics.hpp"
#include "swarmsim/radiation.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace swarmsim::io
{
    inline constexpr int kSchemaVersion = 1;

    // Rounds to 12 significant digits, the precision stored in layout documents.
    double round_significant12(double value);

    // Layout and lattice documents (JSON, lengths in wavelengths, 12 significant digits).
    std::string layout_to_json(const SwarmLayout &layout);
    SwarmLayout layout_from_json(const std::string &text);
    std::string lattice_to_json(const ApertureLattice &lattice);
    ApertureLattice lattice_from_json(const std::string &text);

    struct PatternHeader
    {
        double phi_deg = 0.0;
        SteeringTarget steering;
        std::uint64_t seed = 0;
        std::string element_model;
        double peak_magnitude = 0.0;
    };

    // Comma-separated table: '#'-prefixed metadata lines, a header row, then
    // theta_deg,re,im,magnitude_db per sample with the field normalized to its peak.
    std::string pattern_to_table(const FieldCut &cut, const PatternHeader &header);

    struct PatternTable
    {
        PatternHeader header;
        FieldCut cut;
    };

    PatternTable pattern_from_table(const std::string &text);

    struct MetricsContext
    {
        std::uint64_t seed = 0;
        std::size_t grid_samples = 0;
        double phi_deg = 0.0;
        double theta_min_deg = 0.0;
        double theta_max_deg = 0.0;
        double min_prominence_db = 0.0;
        std::string element_model;
        std::size_t subarray_elements = 0;
        std::size_t satellites = 0;
    };

    std::string metrics_to_json(const PatternMetrics &metrics, const MetricsContext &context);

    struct FootprintProperties
    {
        double hpbw_deg = 0.0;
        std::uint64_t seed = 0;
    };

    // GeoJSON Feature holding one Polygon, coordinates as [lon, lat] with a closed ring.
    std::string footprint_to_geojson(const FootprintContour &footprint, const FootprintProperties &properties);

    struct PlotOptions
    {
        double floor_db = -60.0;
        double zoom_center_deg = 0.0;
        double zoom_half_width_deg = 0.15;
        std::string title;
    };

    // Line chart of level (dB) versus theta with a zoomed inset.
    std::string pattern_to_svg(const NormalizedPattern &pattern, const PlotOptions &options);

    std::string read_file(const std::filesystem::path &path);
    void write_file(const std::filesystem::path &path, const std::string &content);
}

#endif
