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

#include "swarmsim/io.hpp"

#include "swarmsim/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace swarmsim::io
{
    using json = nlohmann::ordered_json;

    namespace
    {
        std::string format_g(double value, int digits)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", digits, value);
            return buf;
        }

        json parse_document(const std::string &text, const char *what)
        {
            try
            {
                return json::parse(text);
            }
            catch (const json::parse_error &e)
            {
                fail(ErrorKind::parse, std::string(what) + ": " + e.what());
            }
        }

        void expect_header(const json &doc, const char *kind)
        {
            if (!doc.is_object())
                fail(ErrorKind::parse, std::string(kind) + ": document is not an object");
            if (doc.value("schema_version", 0) != kSchemaVersion)
                fail(ErrorKind::parse, std::string(kind) + ": unsupported schema_version");
            if (doc.value("kind", std::string()) != kind)
                fail(ErrorKind::parse, std::string("expected a '") + kind + "' document");
            if (doc.value("units", std::string()) != "lambda0")
                fail(ErrorKind::parse, std::string(kind) + ": units must be 'lambda0'");
        }

        json points_to_json(std::span<const Vec2> points)
        {
            json arr = json::array();
            for (const auto &p : points)
                arr.push_back(json::array({round_significant12(p.x), round_significant12(p.y)}));
            return arr;
        }

        std::vector<Vec2> points_from_json(const json &arr, const char *kind)
        {
            if (!arr.is_array())
                fail(ErrorKind::parse, std::string(kind) + ": positions must be an array");
            std::vector<Vec2> points;
            points.reserve(arr.size());
            for (const auto &p : arr)
            {
                if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                    fail(ErrorKind::parse, std::string(kind) + ": each position must be [x, y]");
                points.push_back({p[0].get<double>(), p[1].get<double>()});
            }
            return points;
        }

        template <class T>
        T get_field(const json &obj, const char *key, const char *kind)
        {
            if (!obj.contains(key))
                fail(ErrorKind::parse, std::string(kind) + ": missing field '" + key + "'");
            try
            {
                return obj.at(key).get<T>();
            }
            catch (const json::exception &)
            {
                fail(ErrorKind::parse, std::string(kind) + ": field '" + key + "' has the wrong type");
            }
        }

        std::string trim(std::string s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            const auto last = s.find_last_not_of(" \t\r");
            return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
        }

        double parse_double(const std::string &s, const std::string &what)
        {
            char *end = nullptr;
            const double v = std::strtod(s.c_str(), &end);
            if (s.empty() || end != s.c_str() + s.size())
                fail(ErrorKind::parse, "pattern table: bad number for " + what + ": '" + s + "'");
            return v;
        }
    }

    double round_significant12(double value)
    {
        if (!std::isfinite(value) || value == 0.0)
            return value;
        return std::strtod(format_g(value, 12).c_str(), nullptr);
    }

    std::string layout_to_json(const SwarmLayout &layout)
    {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["kind"] = "swarm_layout";
        doc["units"] = "lambda0";
        doc["parameters"] = {{"count", layout.count},
                             {"sigma_lambda", layout.sigma_lambda},
                             {"r_max_lambda", layout.r_max_lambda},
                             {"d_min_lambda", layout.d_min_lambda}};
        doc["seed"] = layout.seed;
        doc["positions"] = points_to_json(layout.centers);
        return doc.dump(2) + "\n";
    }

    SwarmLayout layout_from_json(const std::string &text)
    {
        const json doc = parse_document(text, "swarm layout");
        expect_header(doc, "swarm_layout");
        const json &params = doc.contains("parameters") ? doc["parameters"] : json::object();

        SwarmLayout layout;
        layout.count = get_field<std::size_t>(params, "count", "swarm_layout");
        layout.sigma_lambda = get_field<double>(params, "sigma_lambda", "swarm_layout");
        layout.r_max_lambda = get_field<double>(params, "r_max_lambda", "swarm_layout");
        layout.d_min_lambda = get_field<double>(params, "d_min_lambda", "swarm_layout");
        layout.seed = get_field<std::uint64_t>(doc, "seed", "swarm_layout");
        layout.centers = points_from_json(doc.value("positions", json()), "swarm_layout");
        if (layout.centers.size() != layout.count)
            fail(ErrorKind::parse, "swarm_layout: position count does not match parameters.count");
        return layout;
    }

    std::string lattice_to_json(const ApertureLattice &lattice)
    {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["kind"] = "aperture_lattice";
        doc["units"] = "lambda0";
        doc["spacing_lambda"] = lattice.spacing_lambda;
        doc["radius_lambda"] = round_significant12(lattice.radius_lambda);
        doc["element_count"] = lattice.size();
        doc["positions"] = points_to_json(lattice.positions);
        return doc.dump(2) + "\n";
    }

    ApertureLattice lattice_from_json(const std::string &text)
    {
        const json doc = parse_document(text, "aperture lattice");
        expect_header(doc, "aperture_lattice");
        ApertureLattice lattice;
        lattice.spacing_lambda = get_field<double>(doc, "spacing_lambda", "aperture_lattice");
        lattice.radius_lambda = get_field<double>(doc, "radius_lambda", "aperture_lattice");
        lattice.positions = points_from_json(doc.value("positions", json()), "aperture_lattice");
        return lattice;
    }

    std::string pattern_to_table(const FieldCut &cut, const PatternHeader &header)
    {
        require(cut.values.size() == cut.cut.sample_count(), "pattern_to_table: value count does not match the cut");
        std::ostringstream os;
        os << "# swarmsim field cut\n";
        os << "# schema_version=" << kSchemaVersion << "\n";
        os << "# phi_deg=" << format_g(header.phi_deg, 17) << "\n";
        os << "# steering_theta0_deg=" << format_g(header.steering.theta0_deg, 17) << "\n";
        os << "# steering_phi0_deg=" << format_g(header.steering.phi0_deg, 17) << "\n";
        os << "# seed=" << header.seed << "\n";
        os << "# element_model=" << header.element_model << "\n";
        os << "# peak_magnitude=" << format_g(header.peak_magnitude, 17) << "\n";
        os << "theta_deg,re,im,magnitude_db\n";

        const auto db = to_db(cut);
        double peak = 0.0;
        for (const auto &v : cut.values)
            peak = std::max(peak, std::abs(v));
        for (std::size_t i = 0; i < cut.values.size(); ++i)
        {
            const cd v = cut.values[i] / peak;
            os << format_g(cut.cut.theta_deg[i], 17) << ',' << format_g(v.real(), 17) << ','
               << format_g(v.imag(), 17) << ',' << format_g(db.level_db[i], 10) << '\n';
        }
        return os.str();
    }

    PatternTable pattern_from_table(const std::string &text)
    {
        PatternTable table;
        std::istringstream is(text);
        std::string line;
        bool saw_columns = false;
        int schema = 0;
        std::size_t line_no = 0;
        while (std::getline(is, line))
        {
            ++line_no;
            if (line.empty())
                continue;
            if (line[0] == '#')
            {
                const auto eq = line.find('=');
                if (eq == std::string::npos)
                    continue;
                const std::string key = trim(line.substr(1, eq - 1));
                const std::string value = trim(line.substr(eq + 1));
                if (key == "schema_version")
                    schema = static_cast<int>(parse_double(value, key));
                else if (key == "phi_deg")
                    table.header.phi_deg = parse_double(value, key);
                else if (key == "steering_theta0_deg")
                    table.header.steering.theta0_deg = parse_double(value, key);
                else if (key == "steering_phi0_deg")
                    table.header.steering.phi0_deg = parse_double(value, key);
                else if (key == "seed")
                {
                    std::size_t used = 0;
                    try
                    {
                        table.header.seed = std::stoull(value, &used);
                    }
                    catch (const std::exception &)
                    {
                        used = 0;
                    }
                    if (used == 0 || used != value.size())
                        fail(ErrorKind::parse, "pattern table: bad seed at line " + std::to_string(line_no));
                }
                else if (key == "element_model")
                    table.header.element_model = value;
                else if (key == "peak_magnitude")
                    table.header.peak_magnitude = parse_double(value, key);
                continue;
            }
            if (!saw_columns)
            {
                if (trim(line) != "theta_deg,re,im,magnitude_db")
                    fail(ErrorKind::parse, "pattern table: unexpected column header at line " + std::to_string(line_no));
                saw_columns = true;
                continue;
            }
            std::vector<std::string> cells;
            std::istringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ','))
                cells.push_back(trim(cell));
            if (cells.size() != 4)
                fail(ErrorKind::parse, "pattern table: expected 4 columns at line " + std::to_string(line_no));
            table.cut.cut.theta_deg.push_back(parse_double(cells[0], "theta_deg"));
            table.cut.values.emplace_back(parse_double(cells[1], "re"), parse_double(cells[2], "im"));
        }
        if (schema != kSchemaVersion)
            fail(ErrorKind::parse, "pattern table: unsupported or missing schema_version");
        if (!saw_columns)
            fail(ErrorKind::parse, "pattern table: missing column header");
        table.cut.cut.phi_deg = table.header.phi_deg;
        table.cut.peak_magnitude = table.header.peak_magnitude;
        validate(table.cut.cut);
        return table;
    }

    std::string metrics_to_json(const PatternMetrics &m, const MetricsContext &ctx)
    {
        const auto lobe = [](const std::optional<LobeReading> &r) -> json
        {
            if (!r)
                return nullptr;
            return {{"level_db_below_peak", r->level_db}, {"theta_deg", r->theta_deg}};
        };
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["kind"] = "pattern_metrics";
        doc["hpbw_deg"] = m.hpbw_deg;
        doc["peak_theta_deg"] = m.peak_theta_deg;
        doc["sll"] = lobe(m.sll);
        doc["gll"] = lobe(m.gll);
        doc["lobe_boundary_deg"] = m.lobe_boundary_deg;
        doc["scenario"] = {{"seed", ctx.seed},
                           {"grid_samples", ctx.grid_samples},
                           {"phi_deg", ctx.phi_deg},
                           {"theta_min_deg", ctx.theta_min_deg},
                           {"theta_max_deg", ctx.theta_max_deg},
                           {"min_prominence_db", ctx.min_prominence_db},
                           {"element_model", ctx.element_model},
                           {"subarray_elements", ctx.subarray_elements},
                           {"satellites", ctx.satellites}};
        return doc.dump(2) + "\n";
    }

    std::string footprint_to_geojson(const FootprintContour &fp, const FootprintProperties &props)
    {
        // exterior ring counterclockwise in (lon, lat), closed
        std::vector<GeoPoint> ring = fp.contour;
        double twice_area = 0.0;
        for (std::size_t i = 0; i < ring.size(); ++i)
        {
            const auto &a = ring[i];
            const auto &b = ring[(i + 1) % ring.size()];
            twice_area += a.lon_deg * b.lat_deg - b.lon_deg * a.lat_deg;
        }
        if (twice_area < 0.0)
            std::reverse(ring.begin(), ring.end());

        json coords = json::array();
        for (const auto &p : ring)
            coords.push_back(json::array({p.lon_deg, p.lat_deg}));
        if (!ring.empty())
            coords.push_back(json::array({ring.front().lon_deg, ring.front().lat_deg}));

        json doc;
        doc["type"] = "Feature";
        doc["geometry"] = {{"type", "Polygon"}, {"coordinates", json::array({coords})}};
        doc["properties"] = {{"schema_version", kSchemaVersion},
                             {"area_km2", fp.area_km2},
                             {"slant_range_km", fp.slant_range_km},
                             {"incidence_deg", fp.incidence_angle_deg},
                             {"hpbw_deg", props.hpbw_deg},
                             {"seed", props.seed},
                             {"azimuth_samples", fp.contour.size()},
                             {"boresight_lon_deg", fp.boresight_ground_point.lon_deg},
                             {"boresight_lat_deg", fp.boresight_ground_point.lat_deg}};
        return doc.dump(2) + "\n";
    }

    std::string pattern_to_svg(const NormalizedPattern &pattern, const PlotOptions &opt)
    {
        require(opt.floor_db < 0.0, "plot: floor must be below 0 dB");
        require(opt.zoom_half_width_deg > 0.0, "plot: zoom half width must be > 0");

        struct Panel
        {
            double x, y, w, h, t0, t1;
        };
        const double t_min = pattern.theta_deg.front(), t_max = pattern.theta_deg.back();
        const Panel main{70, 40, 700, 300, t_min, t_max};
        const Panel inset{70, 400, 700, 180, std::max(t_min, opt.zoom_center_deg - opt.zoom_half_width_deg),
                          std::min(t_max, opt.zoom_center_deg + opt.zoom_half_width_deg)};

        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"820\" height=\"620\" font-family=\"sans-serif\" "
              "font-size=\"11\">\n";
        os << "<rect width=\"820\" height=\"620\" fill=\"white\"/>\n";
        if (!opt.title.empty())
            os << "<text x=\"420\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << opt.title << "</text>\n";

        const auto draw = [&](const Panel &p)
        {
            const auto px = [&](double t)
            { return p.x + (t - p.t0) / (p.t1 - p.t0) * p.w; };
            const auto py = [&](double db)
            { return p.y + (std::max(db, opt.floor_db) / opt.floor_db) * p.h; };

            os << "<rect x=\"" << p.x << "\" y=\"" << p.y << "\" width=\"" << p.w << "\" height=\"" << p.h
               << "\" fill=\"none\" stroke=\"black\"/>\n";
            for (int k = 0; k <= 4; ++k)
            {
                const double t = p.t0 + (p.t1 - p.t0) * k / 4.0;
                os << "<text x=\"" << format_g(px(t), 6) << "\" y=\"" << p.y + p.h + 14
                   << "\" text-anchor=\"middle\">" << format_g(t, 4) << "</text>\n";
                const double db = opt.floor_db * k / 4.0;
                os << "<text x=\"" << p.x - 6 << "\" y=\"" << format_g(py(db) + 4, 6) << "\" text-anchor=\"end\">"
                   << format_g(db, 4) << "</text>\n";
            }
            os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.8\" points=\"";
            for (std::size_t i = 0; i < pattern.theta_deg.size(); ++i)
            {
                const double t = pattern.theta_deg[i];
                if (t < p.t0 || t > p.t1)
                    continue;
                char buf[48];
                std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(t), py(pattern.level_db[i]));
                os << buf;
            }
            os << "\"/>\n";
        };
        draw(main);
        draw(inset);
        os << "<text x=\"420\" y=\"" << main.y + main.h + 32 << "\" text-anchor=\"middle\">theta (deg), phi = "
           << format_g(pattern.phi_deg, 6) << " deg</text>\n";
        os << "<text x=\"420\" y=\"" << inset.y + inset.h + 32 << "\" text-anchor=\"middle\">zoom (deg)</text>\n";
        os << "<text x=\"18\" y=\"190\" transform=\"rotate(-90 18 190)\" text-anchor=\"middle\">level (dB)</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    std::string read_file(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorKind::io, "cannot read " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    void write_file(const std::filesystem::path &path, const std::string &content)
    {
        if (path.has_parent_path())
            std::filesystem::create_directories(path.parent_path());
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorKind::io, "cannot write " + path.string());
        out << content;
        if (!out)
            fail(ErrorKind::io, "write failed for " + path.string());
    }
}
