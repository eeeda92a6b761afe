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

#include "swarmsim/metrics.hpp"

#include "swarmsim/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace swarmsim
{
    namespace
    {
        double interpolate_crossing(double t_in, double d_in, double t_out, double d_out, double level)
        {
            return t_in + (level - d_in) * (t_out - t_in) / (d_out - d_in);
        }

        // Indices of the first samples below the half-power level on each side of the peak;
        // -1 / size() when the main lobe runs into the cut edge.
        std::pair<std::ptrdiff_t, std::ptrdiff_t> main_lobe_limits(const NormalizedPattern &p)
        {
            const auto n = static_cast<std::ptrdiff_t>(p.level_db.size());
            std::ptrdiff_t left = static_cast<std::ptrdiff_t>(p.peak_index);
            while (left >= 0 && p.level_db[left] >= kHalfPowerDb)
                --left;
            std::ptrdiff_t right = static_cast<std::ptrdiff_t>(p.peak_index);
            while (right < n && p.level_db[right] >= kHalfPowerDb)
                ++right;
            return {left, right};
        }
    }

    FieldCut normalize_to_peak(const FieldCut &cut)
    {
        double peak = 0.0;
        for (const auto &v : cut.values)
            peak = std::max(peak, std::abs(v));
        if (!(peak > 0.0) || !std::isfinite(peak))
            fail(ErrorKind::degenerate_pattern, "normalize_to_peak: cut has no nonzero finite sample");

        FieldCut out = cut;
        for (auto &v : out.values)
            v /= peak;
        out.peak_magnitude = (cut.peak_magnitude > 0.0 ? cut.peak_magnitude : 1.0) * peak;
        return out;
    }

    NormalizedPattern to_db(const FieldCut &cut)
    {
        require(cut.values.size() == cut.cut.sample_count(), "to_db: value count does not match the cut");
        std::vector<double> mag(cut.values.size());
        for (std::size_t i = 0; i < mag.size(); ++i)
            mag[i] = std::abs(cut.values[i]);
        const auto peak_it = std::max_element(mag.begin(), mag.end());
        if (peak_it == mag.end() || !(*peak_it > 0.0) || !std::isfinite(*peak_it))
            fail(ErrorKind::degenerate_pattern, "to_db: cut has no nonzero finite sample");

        NormalizedPattern p;
        p.phi_deg = cut.cut.phi_deg;
        p.theta_deg = cut.cut.theta_deg;
        p.peak_index = static_cast<std::size_t>(peak_it - mag.begin());
        p.level_db.resize(mag.size());
        const double peak = *peak_it;
        for (std::size_t i = 0; i < mag.size(); ++i)
            p.level_db[i] = mag[i] > 0.0 ? std::max(kDbFloor, 20.0 * std::log10(mag[i] / peak)) : kDbFloor;
        p.level_db[p.peak_index] = 0.0;
        return p;
    }

    NormalizedPattern pattern_from_levels(std::vector<double> theta_deg, std::vector<double> level_db, double phi_deg)
    {
        require(theta_deg.size() == level_db.size() && theta_deg.size() >= 2,
                "pattern_from_levels: need matching theta/level arrays with >= 2 samples");
        NormalizedPattern p;
        p.phi_deg = phi_deg;
        p.theta_deg = std::move(theta_deg);
        p.level_db = std::move(level_db);
        const auto peak_it = std::max_element(p.level_db.begin(), p.level_db.end());
        p.peak_index = static_cast<std::size_t>(peak_it - p.level_db.begin());
        const double peak = *peak_it;
        for (auto &v : p.level_db)
            v = std::max(kDbFloor, v - peak);
        p.level_db[p.peak_index] = 0.0;
        return p;
    }

    HalfPowerCrossings half_power_crossings(const NormalizedPattern &p)
    {
        const auto [left, right] = main_lobe_limits(p);
        if (left < 0 || right >= static_cast<std::ptrdiff_t>(p.level_db.size()))
            fail(ErrorKind::beam_truncated, "half-power crossing not found inside the cut; widen the cut");

        HalfPowerCrossings c;
        c.left_deg = interpolate_crossing(p.theta_deg[left + 1], p.level_db[left + 1], p.theta_deg[left],
                                          p.level_db[left], kHalfPowerDb);
        c.right_deg = interpolate_crossing(p.theta_deg[right - 1], p.level_db[right - 1], p.theta_deg[right],
                                           p.level_db[right], kHalfPowerDb);
        return c;
    }

    double half_power_beamwidth(const NormalizedPattern &p)
    {
        const auto c = half_power_crossings(p);
        return c.right_deg - c.left_deg;
    }

    double crossing_above_peak(const NormalizedPattern &p, double level_db)
    {
        std::size_t i = p.peak_index;
        while (i < p.level_db.size() && p.level_db[i] >= level_db)
            ++i;
        if (i == p.level_db.size())
            fail(ErrorKind::beam_truncated, "level crossing not found above the peak; widen the cut");
        return interpolate_crossing(p.theta_deg[i - 1], p.level_db[i - 1], p.theta_deg[i], p.level_db[i], level_db);
    }

    std::vector<Lobe> find_lobes(const NormalizedPattern &p, double min_prominence_db)
    {
        const auto &d = p.level_db;
        const std::size_t n = d.size();
        const auto [main_left, main_right] = main_lobe_limits(p);

        std::vector<Lobe> lobes;
        for (std::size_t i = 1; i + 1 < n; ++i)
        {
            if (!(d[i] > d[i - 1] && d[i] >= d[i + 1]))
                continue;
            const auto si = static_cast<std::ptrdiff_t>(i);
            if (si > main_left && si < main_right)
                continue;

            std::size_t l = i;
            while (l > 0 && d[l - 1] <= d[l])
                --l;
            std::size_t r = i;
            while (r + 1 < n && d[r + 1] <= d[r])
                ++r;
            const double prominence = d[i] - std::max(d[l], d[r]);
            if (prominence < min_prominence_db)
                continue;
            lobes.push_back({p.theta_deg[i], -d[i], prominence});
        }

        std::stable_sort(lobes.begin(), lobes.end(), [](const Lobe &a, const Lobe &b)
                         {
            if (a.level_db != b.level_db)
                return a.level_db < b.level_db;
            return std::abs(a.theta_deg) < std::abs(b.theta_deg); });
        return lobes;
    }

    PatternMetrics classify_metrics(std::span<const Lobe> lobes, double hpbw_deg, double lobe_boundary_deg,
                                    double peak_theta_deg)
    {
        require(hpbw_deg > 0.0, "classify_metrics: hpbw must be > 0");
        if (!(lobe_boundary_deg > hpbw_deg))
            fail(ErrorKind::degenerate_pattern, "lobe boundary " + std::to_string(lobe_boundary_deg) +
                                                    " deg lies inside the main lobe (hpbw " + std::to_string(hpbw_deg) +
                                                    " deg); raise metrics.lobe_boundary_deg");

        PatternMetrics m;
        m.hpbw_deg = hpbw_deg;
        m.peak_theta_deg = peak_theta_deg;
        m.lobe_boundary_deg = lobe_boundary_deg;
        for (const auto &lobe : lobes)
        {
            auto &slot = std::abs(lobe.theta_deg) < lobe_boundary_deg ? m.sll : m.gll;
            const LobeReading reading{lobe.level_db, lobe.theta_deg};
            if (!slot || reading.level_db < slot->level_db ||
                (reading.level_db == slot->level_db && std::abs(reading.theta_deg) < std::abs(slot->theta_deg)))
                slot = reading;
        }
        return m;
    }

    PatternMetrics extract_metrics(const NormalizedPattern &pattern, const MetricsOptions &options)
    {
        const double hpbw = half_power_beamwidth(pattern);
        const auto lobes = find_lobes(pattern, options.min_prominence_db);
        return classify_metrics(lobes, hpbw, options.lobe_boundary_deg, pattern.theta_deg[pattern.peak_index]);
    }
}
