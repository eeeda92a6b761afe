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

#ifndef SWARMSIM_METRICS_HPP
#define SWARMSIM_METRICS_HPP

#include "swarmsim/radiation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace swarmsim
{
    // 20*log10(1/sqrt(2))
    inline constexpr double kHalfPowerDb = -3.0102999566398120;

    // Level assigned to exact zeros so dB arithmetic stays finite.
    inline constexpr double kDbFloor = -400.0;

    // Divides every sample by the peak magnitude. The divided-out peak is accumulated into
    // peak_magnitude, so normalizing an already normalized cut leaves the values unchanged.
    FieldCut normalize_to_peak(const FieldCut &cut);

    // Cut levels in dB relative to the peak; the peak sample is exactly 0 dB.
    struct NormalizedPattern
    {
        double phi_deg = 0.0;
        std::vector<double> theta_deg;
        std::vector<double> level_db;
        std::size_t peak_index = 0;
    };

    NormalizedPattern to_db(const FieldCut &cut);

    // Builds a pattern from sampled dB levels (not necessarily peaking at 0 dB; they are re-referenced).
    NormalizedPattern pattern_from_levels(std::vector<double> theta_deg, std::vector<double> level_db, double phi_deg = 0.0);

    struct HalfPowerCrossings
    {
        double left_deg = 0.0;
        double right_deg = 0.0;
    };

    // Walks out from the global peak to the first samples below -3.0103 dB on both sides and
    // interpolates each crossing linearly in (theta, dB). Throws beam_truncated when a side has none.
    HalfPowerCrossings half_power_crossings(const NormalizedPattern &pattern);

    double half_power_beamwidth(const NormalizedPattern &pattern);

    // First crossing of level_db walking from the peak towards larger theta. Used for one-sided
    // cuts whose peak sits on the first sample.
    double crossing_above_peak(const NormalizedPattern &pattern, double level_db = kHalfPowerDb);

    struct Lobe
    {
        double theta_deg = 0.0;
        double level_db = 0.0;      // dB below the global peak (>= 0)
        double prominence_db = 0.0; // drop to the higher of the two adjacent minima
    };

    // Interior local maxima outside the main lobe with at least min_prominence_db prominence,
    // strongest first; equal levels are ordered by distance from boresight.
    std::vector<Lobe> find_lobes(const NormalizedPattern &pattern, double min_prominence_db = 0.5);

    struct LobeReading
    {
        double level_db = 0.0; // dB below peak
        double theta_deg = 0.0;
    };

    struct PatternMetrics
    {
        double hpbw_deg = 0.0;
        double peak_theta_deg = 0.0;
        std::optional<LobeReading> sll; // strongest lobe with |theta| <  boundary
        std::optional<LobeReading> gll; // strongest lobe with |theta| >= boundary
        double lobe_boundary_deg = 0.0;
    };

    PatternMetrics classify_metrics(std::span<const Lobe> lobes, double hpbw_deg, double lobe_boundary_deg,
                                    double peak_theta_deg = 0.0);

    struct MetricsOptions
    {
        double lobe_boundary_deg = 0.05;
        double min_prominence_db = 0.5;
    };

    PatternMetrics extract_metrics(const NormalizedPattern &pattern, const MetricsOptions &options = {});
}

#endif
