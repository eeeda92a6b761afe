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

#ifndef SWARMSIM_GEOLINK_HPP
#define SWARMSIM_GEOLINK_HPP

#include "swarmsim/radiation.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace swarmsim
{
    // Speed of light used to convert between frequency and wavelength.
    inline constexpr double kSpeedOfLight = 299792458.0;

    double wavelength_m(double frequency_ghz);

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0;

        Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    };

    double dot(const Vec3 &a, const Vec3 &b);
    Vec3 cross(const Vec3 &a, const Vec3 &b);
    double norm(const Vec3 &a);
    Vec3 normalized(const Vec3 &a);

    // Latitude/longitude on a spherical Earth, degrees.
    struct GeoPoint
    {
        double lat_deg = 0.0;
        double lon_deg = 0.0;
    };

    // Wraps into (-180, 180].
    double wrap_longitude(double lon_deg);
    void validate(const GeoPoint &p);

    struct OrbitSlot
    {
        double lon_deg = 50.0;
        double orbit_radius_km = 42164.0;
        double earth_radius_km = 6371.0;
    };

    void validate(const OrbitSlot &slot);

    // Earth-centred Cartesian coordinates: x through (0, 0), z through the north pole.
    Vec3 geo_to_ecef(const GeoPoint &p, double radius_km);
    GeoPoint ecef_to_geo(const Vec3 &v);

    // Satellite position of a geostationary slot (latitude 0).
    Vec3 slot_position(const OrbitSlot &slot);

    struct BoresightGeometry
    {
        Vec3 satellite_ecef;
        Vec3 direction;           // unit vector from the satellite toward the target
        double slant_range_km = 0.0;
        double incidence_angle_deg = 0.0; // between the reversed ray and the local vertical
    };

    // Throws not_visible when the target is on or below the horizon of the slot.
    BoresightGeometry boresight_geometry(const OrbitSlot &slot, const GeoPoint &target);

    // Nearest forward intersection of a ray with the sphere. A tangent ray (discriminant within
    // round-off of zero) returns its single touching point. Throws beam_misses_earth otherwise.
    GeoPoint ray_sphere_ground_point(const Vec3 &origin_ecef, const Vec3 &direction, double earth_radius_km);

    // In-plane axes of a swarm whose normal points along the boresight ray. y_axis is the component of
    // the Earth's rotation axis orthogonal to the normal (north-ish), x_axis = normal x y_axis (east-ish),
    // so growing azimuth sweeps counterclockwise on a map.
    struct ApertureFrame
    {
        Vec3 x_axis;
        Vec3 y_axis;
        Vec3 normal;

        // Ray direction of an off-axis angle theta at azimuth phi (degrees).
        Vec3 ray(const Direction &dir) const;
    };

    ApertureFrame aperture_frame(const Vec3 &boresight_direction);

    // Linear field magnitude of the steered pattern; the peak must be at (0, 0).
    using PatternSource = std::function<double(const Direction &)>;

    struct FootprintOptions
    {
        std::size_t azimuth_samples = 64;
        double search_step_deg = 1e-5;  // outward walk before bisection
        double max_off_axis_deg = 1.0;  // walk limit; beyond it the beam counts as truncated
        std::size_t area_refinement = 16;
    };

    struct FootprintContour
    {
        GeoPoint boresight_ground_point;
        std::vector<GeoPoint> contour;      // one vertex per azimuth sample, counterclockwise
        std::vector<double> half_angle_deg; // -3 dB off-axis angle per azimuth sample
        double area_km2 = 0.0;
        double slant_range_km = 0.0;
        double incidence_angle_deg = 0.0;
    };

    // Half-power ground contour of a pattern pointed at target from slot.
    //
    // For each azimuth phi_k = 360 k / N the off-axis angle where the pattern first drops to -3.0103 dB
    // below its boresight value is bracketed by an outward walk and refined by bisection. Tilting the
    // boresight ray by that angle and intersecting the sphere gives contour vertex k. The area is the
    // spherical-excess area of the contour after densifying the per-azimuth angles by trigonometric
    // interpolation (area_refinement vertices per sample), which removes the inscribed-polygon bias.
    FootprintContour half_power_footprint(const PatternSource &pattern, const OrbitSlot &slot, const GeoPoint &target,
                                          const FootprintOptions &options = {});

    // Circular-cone shortcut using one half-power angle for every azimuth.
    FootprintContour cone_footprint(const OrbitSlot &slot, const GeoPoint &target, double half_angle_deg,
                                    std::size_t azimuth_samples = 64);

    // Area of a simple spherical polygon (vertices in order, not repeated) on a sphere of the given radius.
    double spherical_polygon_area(std::span<const GeoPoint> polygon, double radius_km);

    // Point-in-polygon on the gnomonic projection about the point itself.
    bool contour_contains(std::span<const GeoPoint> polygon, const GeoPoint &point);

    // Periodic trigonometric interpolation of equispaced samples on [0, 2pi), evaluated at m equispaced points.
    std::vector<double> trigonometric_resample(std::span<const double> samples, std::size_t m);
}

#endif
