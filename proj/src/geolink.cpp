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

#include "swarmsim/geolink.hpp"

#include "swarmsim/error.hpp"
#include "swarmsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace swarmsim
{
    namespace
    {
        constexpr double kDegToRad = std::numbers::pi / 180.0;
        constexpr double kRadToDeg = 180.0 / std::numbers::pi;

        // Tangent rays leave a round-off sized discriminant of either sign.
        constexpr double kTangentTolerance = 1e-12;

        Vec3 unit_from_geo(const GeoPoint &p)
        {
            return geo_to_ecef(p, 1.0);
        }

        double half_power_angle(const PatternSource &pattern, double peak, double phi_deg,
                                const FootprintOptions &options)
        {
            const double level = std::pow(10.0, kHalfPowerDb / 20.0);
            const auto inside = [&](double theta)
            { return pattern({theta, phi_deg}) / peak >= level; };

            double lo = 0.0, hi = 0.0;
            for (std::size_t k = 1;; ++k)
            {
                hi = static_cast<double>(k) * options.search_step_deg;
                if (hi > options.max_off_axis_deg)
                {
                    std::ostringstream os;
                    os << "no -3 dB crossing within " << options.max_off_axis_deg << " deg at azimuth " << phi_deg
                       << " deg";
                    fail(ErrorKind::beam_truncated, os.str());
                }
                if (!inside(hi))
                    break;
                lo = hi;
            }
            for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it)
            {
                const double mid = 0.5 * (lo + hi);
                if (inside(mid))
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }

        std::vector<GeoPoint> ground_ring(const BoresightGeometry &geom, const ApertureFrame &frame,
                                          std::span<const double> half_angles, double earth_radius_km)
        {
            const std::size_t n = half_angles.size();
            std::vector<GeoPoint> ring(n);
            for (std::size_t k = 0; k < n; ++k)
            {
                const double phi = 360.0 * static_cast<double>(k) / static_cast<double>(n);
                ring[k] = ray_sphere_ground_point(geom.satellite_ecef, frame.ray({half_angles[k], phi}), earth_radius_km);
            }
            return ring;
        }

        FootprintContour build_contour(const OrbitSlot &slot, const GeoPoint &target, std::vector<double> half_angles,
                                       std::size_t refinement)
        {
            const auto geom = boresight_geometry(slot, target);
            const auto frame = aperture_frame(geom.direction);

            FootprintContour fp;
            fp.slant_range_km = geom.slant_range_km;
            fp.incidence_angle_deg = geom.incidence_angle_deg;
            fp.boresight_ground_point = ray_sphere_ground_point(geom.satellite_ecef, geom.direction, slot.earth_radius_km);
            fp.contour = ground_ring(geom, frame, half_angles, slot.earth_radius_km);

            const std::size_t m = half_angles.size() * std::max<std::size_t>(1, refinement);
            const auto dense = trigonometric_resample(half_angles, m);
            const auto dense_ring = ground_ring(geom, frame, dense, slot.earth_radius_km);
            fp.area_km2 = spherical_polygon_area(dense_ring, slot.earth_radius_km);
            fp.half_angle_deg = std::move(half_angles);
            return fp;
        }
    }

    double wavelength_m(double frequency_ghz)
    {
        require(std::isfinite(frequency_ghz) && frequency_ghz > 0.0, "frequency must be > 0");
        return kSpeedOfLight / (frequency_ghz * 1e9);
    }

    double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

    Vec3 cross(const Vec3 &a, const Vec3 &b)
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

    Vec3 normalized(const Vec3 &a)
    {
        const double n = norm(a);
        require(n > 0.0, "cannot normalize a zero vector");
        return a * (1.0 / n);
    }

    double wrap_longitude(double lon_deg)
    {
        double l = std::fmod(lon_deg, 360.0);
        if (l <= -180.0)
            l += 360.0;
        else if (l > 180.0)
            l -= 360.0;
        return l;
    }

    void validate(const GeoPoint &p)
    {
        require(std::isfinite(p.lat_deg) && p.lat_deg >= -90.0 && p.lat_deg <= 90.0, "latitude must lie in [-90, 90]");
        require(std::isfinite(p.lon_deg), "longitude must be finite");
    }

    void validate(const OrbitSlot &slot)
    {
        require(std::isfinite(slot.lon_deg), "slot longitude must be finite");
        require(std::isfinite(slot.earth_radius_km) && slot.earth_radius_km > 0.0, "earth radius must be > 0");
        require(std::isfinite(slot.orbit_radius_km) && slot.orbit_radius_km > slot.earth_radius_km,
                "orbit radius must exceed the earth radius");
    }

    Vec3 geo_to_ecef(const GeoPoint &p, double radius_km)
    {
        const double lat = p.lat_deg * kDegToRad, lon = p.lon_deg * kDegToRad;
        return {radius_km * std::cos(lat) * std::cos(lon), radius_km * std::cos(lat) * std::sin(lon),
                radius_km * std::sin(lat)};
    }

    GeoPoint ecef_to_geo(const Vec3 &v)
    {
        return {std::atan2(v.z, std::hypot(v.x, v.y)) * kRadToDeg, wrap_longitude(std::atan2(v.y, v.x) * kRadToDeg)};
    }

    Vec3 slot_position(const OrbitSlot &slot)
    {
        return geo_to_ecef({0.0, slot.lon_deg}, slot.orbit_radius_km);
    }

    BoresightGeometry boresight_geometry(const OrbitSlot &slot, const GeoPoint &target)
    {
        validate(slot);
        validate(target);
        BoresightGeometry g;
        g.satellite_ecef = slot_position(slot);
        const Vec3 ground = geo_to_ecef(target, slot.earth_radius_km);
        const Vec3 up = normalized(ground);
        const Vec3 to_sat = g.satellite_ecef - ground;
        if (dot(to_sat, up) <= 0.0)
        {
            std::ostringstream os;
            os << "target (" << target.lat_deg << ", " << target.lon_deg << ") is below the horizon of the slot at "
               << slot.lon_deg << " deg";
            fail(ErrorKind::not_visible, os.str());
        }
        g.slant_range_km = norm(to_sat);
        g.direction = (ground - g.satellite_ecef) * (1.0 / g.slant_range_km);
        const double c = std::clamp(-dot(g.direction, up), -1.0, 1.0);
        g.incidence_angle_deg = std::acos(c) * kRadToDeg;
        return g;
    }

    GeoPoint ray_sphere_ground_point(const Vec3 &origin, const Vec3 &direction, double earth_radius_km)
    {
        require(earth_radius_km > 0.0, "earth radius must be > 0");
        const Vec3 d = normalized(direction);
        // |o + t d|^2 = R^2  ->  t^2 + 2 b t + c = 0
        const double b = dot(origin, d);
        const double o2 = dot(origin, origin);
        const double c = o2 - earth_radius_km * earth_radius_km;
        double disc = b * b - c;
        if (disc < -kTangentTolerance * o2 || (b >= 0.0 && c > 0.0))
            fail(ErrorKind::beam_misses_earth, "ray does not intersect the earth");
        disc = std::max(disc, 0.0);

        double t = 0.0;
        if (c > 0.0)
            t = c / (-b + std::sqrt(disc)); // near root, stable for b < 0
        else
            t = -b + std::sqrt(disc); // origin inside the sphere: the forward root
        return ecef_to_geo(origin + d * t);
    }

    Vec3 ApertureFrame::ray(const Direction &dir) const
    {
        const double t = dir.theta_deg * kDegToRad, p = dir.phi_deg * kDegToRad;
        const double st = std::sin(t);
        return normal * std::cos(t) + x_axis * (st * std::cos(p)) + y_axis * (st * std::sin(p));
    }

    ApertureFrame aperture_frame(const Vec3 &boresight_direction)
    {
        ApertureFrame f;
        f.normal = normalized(boresight_direction);
        Vec3 pole{0.0, 0.0, 1.0};
        if (std::abs(dot(pole, f.normal)) > 1.0 - 1e-12)
            pole = {1.0, 0.0, 0.0};
        f.y_axis = normalized(pole - f.normal * dot(pole, f.normal));
        f.x_axis = cross(f.normal, f.y_axis);
        return f;
    }

    FootprintContour half_power_footprint(const PatternSource &pattern, const OrbitSlot &slot, const GeoPoint &target,
                                          const FootprintOptions &options)
    {
        require(static_cast<bool>(pattern), "half_power_footprint: no pattern source");
        require(options.azimuth_samples >= 16, "half_power_footprint: need at least 16 azimuth samples");
        require(options.search_step_deg > 0.0 && options.max_off_axis_deg > options.search_step_deg,
                "half_power_footprint: search step must be > 0 and below the off-axis limit");
        // geometry errors (visibility) come before any pattern work
        (void)boresight_geometry(slot, target);

        const double peak = pattern({0.0, 0.0});
        if (!(peak > 0.0) || !std::isfinite(peak))
            fail(ErrorKind::degenerate_pattern, "half_power_footprint: pattern is zero at boresight");

        const std::size_t n = options.azimuth_samples;
        std::vector<double> half_angles(n);
        for (std::size_t k = 0; k < n; ++k)
            half_angles[k] = half_power_angle(pattern, peak, 360.0 * static_cast<double>(k) / static_cast<double>(n), options);

        return build_contour(slot, target, std::move(half_angles), options.area_refinement);
    }

    FootprintContour cone_footprint(const OrbitSlot &slot, const GeoPoint &target, double half_angle_deg,
                                    std::size_t azimuth_samples)
    {
        require(half_angle_deg > 0.0 && half_angle_deg < 90.0, "cone_footprint: half angle must lie in (0, 90)");
        require(azimuth_samples >= 16, "cone_footprint: need at least 16 azimuth samples");
        return build_contour(slot, target, std::vector<double>(azimuth_samples, half_angle_deg), 1);
    }

    double spherical_polygon_area(std::span<const GeoPoint> polygon, double radius_km)
    {
        require(polygon.size() >= 3, "spherical_polygon_area: need at least 3 vertices");
        std::vector<Vec3> v(polygon.size());
        Vec3 centroid;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            v[i] = unit_from_geo(polygon[i]);
            centroid = centroid + v[i];
        }
        const Vec3 r = normalized(centroid);

        // Signed excess of the fan triangles (r, v_i, v_i+1):
        // tan(E/2) = r.(a x b) / (1 + r.a + a.b + b.r), with r.(a x b) = r.((a - r) x (b - r)).
        double excess = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            const Vec3 &a = v[i];
            const Vec3 &b = v[(i + 1) % v.size()];
            const double triple = dot(r, cross(a - r, b - r));
            const double denom = 1.0 + dot(r, a) + dot(a, b) + dot(b, r);
            excess += 2.0 * std::atan2(triple, denom);
        }
        return std::abs(excess) * radius_km * radius_km;
    }

    bool contour_contains(std::span<const GeoPoint> polygon, const GeoPoint &point)
    {
        require(polygon.size() >= 3, "contour_contains: need at least 3 vertices");
        const Vec3 p = unit_from_geo(point);
        const auto frame = aperture_frame(p * -1.0);
        std::vector<std::pair<double, double>> xy(polygon.size());
        for (std::size_t i = 0; i < polygon.size(); ++i)
        {
            const Vec3 q = unit_from_geo(polygon[i]);
            const double h = dot(q, p);
            require(h > 0.0, "contour_contains: polygon spans more than a hemisphere");
            const Vec3 g = q * (1.0 / h) - p;
            xy[i] = {dot(g, frame.x_axis), dot(g, frame.y_axis)};
        }
        // crossing-number test for the origin
        bool inside = false;
        for (std::size_t i = 0, j = xy.size() - 1; i < xy.size(); j = i++)
        {
            const auto [xi, yi] = xy[i];
            const auto [xj, yj] = xy[j];
            if ((yi > 0.0) != (yj > 0.0))
            {
                const double x_at = xi + (0.0 - yi) * (xj - xi) / (yj - yi);
                if (x_at > 0.0)
                    inside = !inside;
            }
        }
        return inside;
    }

    std::vector<double> trigonometric_resample(std::span<const double> samples, std::size_t m)
    {
        const std::size_t n = samples.size();
        require(n >= 1 && m >= 1, "trigonometric_resample: empty input or output");
        const double two_pi = 2.0 * std::numbers::pi;
        const std::size_t harmonics = (n - 1) / 2;

        double mean = 0.0;
        for (double s : samples)
            mean += s;
        mean /= static_cast<double>(n);

        std::vector<double> a(harmonics + 1, 0.0), b(harmonics + 1, 0.0);
        for (std::size_t k = 1; k <= harmonics; ++k)
        {
            for (std::size_t j = 0; j < n; ++j)
            {
                const double ang = two_pi * static_cast<double>(k * j % n) / static_cast<double>(n);
                a[k] += samples[j] * std::cos(ang);
                b[k] += samples[j] * std::sin(ang);
            }
            a[k] *= 2.0 / static_cast<double>(n);
            b[k] *= 2.0 / static_cast<double>(n);
        }
        double nyquist = 0.0;
        if (n % 2 == 0)
        {
            for (std::size_t j = 0; j < n; ++j)
                nyquist += (j % 2 == 0 ? samples[j] : -samples[j]);
            nyquist /= static_cast<double>(n);
        }

        std::vector<double> out(m);
        for (std::size_t i = 0; i < m; ++i)
        {
            const double psi = two_pi * static_cast<double>(i) / static_cast<double>(m);
            double v = mean;
            for (std::size_t k = 1; k <= harmonics; ++k)
                v += a[k] * std::cos(static_cast<double>(k) * psi) + b[k] * std::sin(static_cast<double>(k) * psi);
            if (n % 2 == 0)
                v += nyquist * std::cos(static_cast<double>(n / 2) * psi);
            out[i] = v;
        }
        return out;
    }
}
