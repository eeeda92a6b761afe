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

#include "swarmsim/scenario.hpp"

#include "swarmsim/error.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <type_traits>
#include <sstream>

namespace swarmsim
{
    using json = nlohmann::ordered_json;

    namespace
    {
        // Typed, path-aware access to one JSON object of the configuration.
        class Section
        {
        public:
            Section(const json &obj, std::string path) : obj_(obj), path_(std::move(path))
            {
                if (!obj_.is_object())
                    fail(ErrorKind::validation, name() + ": must be an object");
            }

            std::string name(const std::string &key = {}) const
            {
                if (key.empty())
                    return path_.empty() ? std::string("config") : path_;
                return path_.empty() ? key : path_ + "." + key;
            }

            void allow_only(std::initializer_list<const char *> keys) const
            {
                for (const auto &item : obj_.items())
                {
                    const bool known = std::any_of(keys.begin(), keys.end(), [&](const char *k)
                                                   { return item.key() == k; });
                    if (!known)
                        fail(ErrorKind::validation, "unknown key '" + name(item.key()) + "'");
                }
            }

            bool has(const char *key) const { return obj_.contains(key); }

            Section child(const char *key) const
            {
                static const json empty = json::object();
                return Section(obj_.contains(key) ? obj_.at(key) : empty, name(key));
            }

            void read(const char *key, double &out) const
            {
                if (!has(key))
                    return;
                const auto &v = obj_.at(key);
                if (!v.is_number())
                    fail(ErrorKind::validation, name(key) + ": expected a number");
                out = v.get<double>();
            }

            void read(const char *key, std::uint64_t &out) const
            {
                static_assert(std::is_same_v<std::size_t, std::uint64_t>);
                read_unsigned(key, out);
            }

            void read_unsigned(const char *key, std::uint64_t &out) const
            {
                if (!has(key))
                    return;
                const auto &v = obj_.at(key);
                if (v.is_number_unsigned())
                    out = v.get<std::uint64_t>();
                else if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
                    out = static_cast<std::uint64_t>(v.get<std::int64_t>());
                else
                    fail(ErrorKind::validation, name(key) + ": expected a non-negative integer");
            }

            void read(const char *key, bool &out) const
            {
                if (!has(key))
                    return;
                const auto &v = obj_.at(key);
                if (!v.is_boolean())
                    fail(ErrorKind::validation, name(key) + ": expected true or false");
                out = v.get<bool>();
            }

            void read(const char *key, std::string &out) const
            {
                if (!has(key))
                    return;
                const auto &v = obj_.at(key);
                if (!v.is_string())
                    fail(ErrorKind::validation, name(key) + ": expected a string");
                out = v.get<std::string>();
            }

        private:
            const json &obj_;
            std::string path_;
        };

        void check(bool ok, const char *field, const char *constraint)
        {
            if (!ok)
                fail(ErrorKind::validation, std::string(field) + ": " + constraint);
        }

        bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

        ElementPatternModel parse_element(const Section &s)
        {
            std::string type = "circular_aperture";
            s.read("type", type);
            if (type == "isotropic")
            {
                s.allow_only({"type"});
                return IsotropicElement{};
            }
            if (type == "cosine_power")
            {
                s.allow_only({"type", "exponent"});
                CosinePowerElement e;
                s.read("exponent", e.exponent);
                return e;
            }
            if (type == "circular_aperture")
            {
                s.allow_only({"type", "radius_lambda"});
                CircularApertureElement e;
                s.read("radius_lambda", e.radius_lambda);
                return e;
            }
            fail(ErrorKind::validation, s.name("type") + ": expected isotropic, cosine_power or circular_aperture");
        }

        json element_to_json(const ElementPatternModel &model)
        {
            if (const auto *c = std::get_if<CosinePowerElement>(&model))
                return {{"type", "cosine_power"}, {"exponent", c->exponent}};
            if (const auto *a = std::get_if<CircularApertureElement>(&model))
                return {{"type", "circular_aperture"}, {"radius_lambda", a->radius_lambda}};
            return {{"type", "isotropic"}};
        }

        std::string line_column(const std::string &text, std::size_t byte)
        {
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    column = 1;
                }
                else
                    ++column;
            }
            return "line " + std::to_string(line) + ", column " + std::to_string(column);
        }

        double seconds_since(std::chrono::steady_clock::time_point t0)
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        }
    }

    ScenarioConfig parse_config(const std::string &text)
    {
        json doc;
        if (text.find_first_not_of(" \t\r\n") == std::string::npos)
            doc = json::object();
        else
        {
            try
            {
                doc = json::parse(text);
            }
            catch (const json::parse_error &e)
            {
                fail(ErrorKind::parse, "config parse error at " + line_column(text, e.byte) + ": " + e.what());
            }
        }

        ScenarioConfig c;
        const Section root(doc, "");
        root.allow_only({"frequency_ghz", "subarray", "swarm", "element_model", "steering", "geo", "cut", "metrics",
                         "footprint", "output"});
        root.read("frequency_ghz", c.frequency_ghz);

        const auto sub = root.child("subarray");
        sub.allow_only({"spacing_lambda", "target_count"});
        sub.read("spacing_lambda", c.subarray.spacing_lambda);
        sub.read("target_count", c.subarray.target_count);

        const auto sw = root.child("swarm");
        sw.allow_only({"count", "sigma_lambda", "r_max_lambda", "d_min_lambda", "seed", "max_attempts"});
        sw.read("count", c.swarm.count);
        sw.read("sigma_lambda", c.swarm.sigma_lambda);
        sw.read("r_max_lambda", c.swarm.r_max_lambda);
        sw.read("d_min_lambda", c.swarm.d_min_lambda);
        sw.read("seed", c.swarm.seed);
        sw.read("max_attempts", c.swarm.max_attempts);

        if (root.has("element_model"))
            c.element = parse_element(root.child("element_model"));

        const auto st = root.child("steering");
        st.allow_only({"mode"});
        std::string mode = "geo_target";
        st.read("mode", mode);
        if (mode == "broadside")
            c.steering = SteeringMode::broadside;
        else if (mode == "geo_target")
            c.steering = SteeringMode::geo_target;
        else
            fail(ErrorKind::validation, "steering.mode: expected broadside or geo_target");

        const auto geo = root.child("geo");
        geo.allow_only({"slot_lon_deg", "target_lat_deg", "target_lon_deg", "orbit_radius_km", "earth_radius_km"});
        geo.read("slot_lon_deg", c.geo.slot_lon_deg);
        geo.read("target_lat_deg", c.geo.target_lat_deg);
        geo.read("target_lon_deg", c.geo.target_lon_deg);
        geo.read("orbit_radius_km", c.geo.orbit_radius_km);
        geo.read("earth_radius_km", c.geo.earth_radius_km);

        const auto cut = root.child("cut");
        cut.allow_only({"phi_deg", "theta_min_deg", "theta_max_deg", "samples"});
        cut.read("phi_deg", c.cut.phi_deg);
        cut.read("theta_min_deg", c.cut.theta_min_deg);
        cut.read("theta_max_deg", c.cut.theta_max_deg);
        cut.read("samples", c.cut.samples);

        const auto met = root.child("metrics");
        met.allow_only({"lobe_boundary_deg", "min_prominence_db"});
        met.read("lobe_boundary_deg", c.metrics.lobe_boundary_deg);
        met.read("min_prominence_db", c.metrics.min_prominence_db);

        const auto fp = root.child("footprint");
        fp.allow_only({"azimuth_samples"});
        fp.read("azimuth_samples", c.footprint.azimuth_samples);

        const auto out = root.child("output");
        out.allow_only({"plot", "plot_floor_db", "zoom_center_deg", "zoom_half_width_deg"});
        out.read("plot", c.output.plot);
        out.read("plot_floor_db", c.output.plot_floor_db);
        out.read("zoom_center_deg", c.output.zoom_center_deg);
        out.read("zoom_half_width_deg", c.output.zoom_half_width_deg);

        validate(c);
        return c;
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        return parse_config(io::read_file(path));
    }

    std::string config_to_json(const ScenarioConfig &c)
    {
        json doc;
        doc["frequency_ghz"] = c.frequency_ghz;
        doc["subarray"] = {{"spacing_lambda", c.subarray.spacing_lambda}, {"target_count", c.subarray.target_count}};
        doc["swarm"] = {{"count", c.swarm.count},
                        {"sigma_lambda", c.swarm.sigma_lambda},
                        {"r_max_lambda", c.swarm.r_max_lambda},
                        {"d_min_lambda", c.swarm.d_min_lambda},
                        {"seed", c.swarm.seed},
                        {"max_attempts", c.swarm.max_attempts}};
        doc["element_model"] = element_to_json(c.element);
        doc["steering"] = {{"mode", c.steering == SteeringMode::broadside ? "broadside" : "geo_target"}};
        doc["geo"] = {{"slot_lon_deg", c.geo.slot_lon_deg},
                      {"target_lat_deg", c.geo.target_lat_deg},
                      {"target_lon_deg", c.geo.target_lon_deg},
                      {"orbit_radius_km", c.geo.orbit_radius_km},
                      {"earth_radius_km", c.geo.earth_radius_km}};
        doc["cut"] = {{"phi_deg", c.cut.phi_deg},
                      {"theta_min_deg", c.cut.theta_min_deg},
                      {"theta_max_deg", c.cut.theta_max_deg},
                      {"samples", c.cut.samples}};
        doc["metrics"] = {{"lobe_boundary_deg", c.metrics.lobe_boundary_deg},
                          {"min_prominence_db", c.metrics.min_prominence_db}};
        doc["footprint"] = {{"azimuth_samples", c.footprint.azimuth_samples}};
        doc["output"] = {{"plot", c.output.plot},
                         {"plot_floor_db", c.output.plot_floor_db},
                         {"zoom_center_deg", c.output.zoom_center_deg},
                         {"zoom_half_width_deg", c.output.zoom_half_width_deg}};
        return doc.dump(2) + "\n";
    }

    void validate(const ScenarioConfig &c)
    {
        check(finite_positive(c.frequency_ghz), "frequency_ghz", "must be > 0");

        check(finite_positive(c.subarray.spacing_lambda), "subarray.spacing_lambda", "must be > 0");
        check(c.subarray.target_count >= 1, "subarray.target_count", "must be >= 1");

        check(c.swarm.count >= 1, "swarm.count", "must be >= 1");
        check(finite_positive(c.swarm.sigma_lambda), "swarm.sigma_lambda", "must be > 0");
        check(finite_positive(c.swarm.r_max_lambda), "swarm.r_max_lambda", "must be > 0");
        check(finite_positive(c.swarm.d_min_lambda), "swarm.d_min_lambda", "must be > 0");
        check(c.swarm.max_attempts >= c.swarm.count, "swarm.max_attempts", "must be >= swarm.count");

        try
        {
            validate(c.element);
        }
        catch (const Error &e)
        {
            fail(ErrorKind::validation, std::string("element_model: ") + e.what());
        }

        check(std::isfinite(c.cut.phi_deg), "cut.phi_deg", "must be finite");
        check(c.cut.samples >= 2, "cut.samples", "must be >= 2");
        check(std::isfinite(c.cut.theta_min_deg) && c.cut.theta_min_deg >= -90.0, "cut.theta_min_deg",
              "must lie in [-90, 90]");
        check(std::isfinite(c.cut.theta_max_deg) && c.cut.theta_max_deg <= 90.0, "cut.theta_max_deg",
              "must lie in [-90, 90]");
        check(c.cut.theta_max_deg > c.cut.theta_min_deg, "cut.theta_max_deg", "must exceed cut.theta_min_deg");

        check(finite_positive(c.metrics.lobe_boundary_deg), "metrics.lobe_boundary_deg", "must be > 0");
        check(std::isfinite(c.metrics.min_prominence_db) && c.metrics.min_prominence_db >= 0.0,
              "metrics.min_prominence_db", "must be >= 0");

        check(c.footprint.azimuth_samples >= 16, "footprint.azimuth_samples", "must be >= 16");

        check(std::isfinite(c.geo.slot_lon_deg), "geo.slot_lon_deg", "must be finite");
        check(std::isfinite(c.geo.target_lat_deg) && std::abs(c.geo.target_lat_deg) <= 90.0, "geo.target_lat_deg",
              "must lie in [-90, 90]");
        check(std::isfinite(c.geo.target_lon_deg), "geo.target_lon_deg", "must be finite");
        check(finite_positive(c.geo.earth_radius_km), "geo.earth_radius_km", "must be > 0");
        check(std::isfinite(c.geo.orbit_radius_km) && c.geo.orbit_radius_km > c.geo.earth_radius_km,
              "geo.orbit_radius_km", "must exceed geo.earth_radius_km");
        if (c.steering == SteeringMode::geo_target)
        {
            try
            {
                (void)boresight_geometry(c.slot(), c.target());
            }
            catch (const Error &e)
            {
                fail(ErrorKind::validation, std::string("geo: ") + e.what());
            }
        }

        check(std::isfinite(c.output.plot_floor_db) && c.output.plot_floor_db < 0.0, "output.plot_floor_db",
              "must be < 0");
        check(std::isfinite(c.output.zoom_center_deg), "output.zoom_center_deg", "must be finite");
        check(finite_positive(c.output.zoom_half_width_deg), "output.zoom_half_width_deg", "must be > 0");
    }

    SubarrayGeometry build_subarray(const ScenarioConfig &config)
    {
        SubarrayGeometry g;
        g.calibration = calibrate_radius_for_count(config.subarray.target_count, config.subarray.spacing_lambda);
        g.lattice = triangular_lattice(g.calibration.radius_lambda, config.subarray.spacing_lambda);
        return g;
    }

    SwarmLayout build_swarm(const ScenarioConfig &config)
    {
        const auto &s = config.swarm;
        return place_swarm(s.count, s.sigma_lambda, s.r_max_lambda, s.d_min_lambda, s.seed, s.max_attempts);
    }

    SteeringTarget steering_target(const ScenarioConfig &)
    {
        return {0.0, 0.0};
    }

    CompositePattern build_pattern(const ScenarioConfig &config, const ApertureLattice &lattice,
                                   const SwarmLayout &swarm)
    {
        const auto sub_w = uniform_weights(lattice.size());
        const auto swarm_w = uniform_weights(swarm.size());
        return CompositePattern(config.element, lattice, swarm, steering_target(config), sub_w, swarm_w);
    }

    FootprintContour compute_footprint(const ScenarioConfig &config, const CompositePattern &pattern, double hpbw_deg)
    {
        require(hpbw_deg > 0.0, "compute_footprint: hpbw must be > 0");
        FootprintOptions options;
        options.azimuth_samples = config.footprint.azimuth_samples;
        options.search_step_deg = hpbw_deg / 20.0;
        options.max_off_axis_deg = std::max(std::abs(config.cut.theta_min_deg), std::abs(config.cut.theta_max_deg));
        const PatternSource source = [&pattern](const Direction &d)
        { return pattern.magnitude(d); };
        return half_power_footprint(source, config.slot(), config.target(), options);
    }

    RunReport run_scenario(const ScenarioConfig &config, const std::filesystem::path &out_dir)
    {
        validate(config);

        RunReport report;
        report.config = config;
        std::vector<std::filesystem::path> written;

        const auto cleanup = [&]
        {
            std::error_code ec;
            for (const auto &p : written)
                std::filesystem::remove(p, ec);
        };
        const auto emit = [&](const std::filesystem::path &path, const std::string &content)
        {
            io::write_file(path, content);
            written.push_back(path);
            return path;
        };
        const auto stage = [&](const char *name, auto &&fn)
        {
            const auto t0 = std::chrono::steady_clock::now();
            try
            {
                fn();
            }
            catch (const Error &e)
            {
                cleanup();
                throw Error(e.kind(), std::string("stage '") + name + "': " + e.what());
            }
            catch (const std::filesystem::filesystem_error &e)
            {
                cleanup();
                throw Error(ErrorKind::io, std::string("stage '") + name + "': " + e.what());
            }
            catch (...)
            {
                cleanup();
                throw;
            }
            report.stage_seconds.emplace_back(name, seconds_since(t0));
        };

        SubarrayGeometry subarray;
        SwarmLayout swarm;
        stage("geometry", [&]
              {
            subarray = build_subarray(config);
            swarm = build_swarm(config);
            report.calibration = subarray.calibration;
            report.files.lattice = emit(out_dir / "lattice.json", io::lattice_to_json(subarray.lattice));
            report.files.layout = emit(out_dir / "layout.json", io::layout_to_json(swarm)); });

        std::optional<CompositePattern> pattern;
        FieldCut field;
        stage("pattern", [&]
              {
            pattern.emplace(build_pattern(config, subarray.lattice, swarm));
            field = normalize_to_peak(pattern->evaluate(config.angular_cut()));
            io::PatternHeader header;
            header.phi_deg = config.cut.phi_deg;
            header.steering = steering_target(config);
            header.seed = config.swarm.seed;
            header.element_model = describe(config.element);
            header.peak_magnitude = field.peak_magnitude;
            report.files.pattern = emit(out_dir / "pattern.csv", io::pattern_to_table(field, header)); });

        NormalizedPattern levels;
        stage("metrics", [&]
              {
            levels = to_db(field);
            report.metrics = extract_metrics(levels, {config.metrics.lobe_boundary_deg, config.metrics.min_prominence_db});
            io::MetricsContext ctx;
            ctx.seed = config.swarm.seed;
            ctx.grid_samples = config.cut.samples;
            ctx.phi_deg = config.cut.phi_deg;
            ctx.theta_min_deg = config.cut.theta_min_deg;
            ctx.theta_max_deg = config.cut.theta_max_deg;
            ctx.min_prominence_db = config.metrics.min_prominence_db;
            ctx.element_model = describe(config.element);
            ctx.subarray_elements = subarray.lattice.size();
            ctx.satellites = swarm.size();
            report.files.metrics = emit(out_dir / "metrics.json", io::metrics_to_json(report.metrics, ctx)); });

        if (config.output.plot)
        {
            stage("plot", [&]
                  {
                io::PlotOptions opt;
                opt.floor_db = config.output.plot_floor_db;
                opt.zoom_center_deg = config.output.zoom_center_deg;
                opt.zoom_half_width_deg = config.output.zoom_half_width_deg;
                opt.title = "Normalized swarm pattern, seed " + std::to_string(config.swarm.seed);
                report.files.plot = emit(out_dir / "pattern.svg", io::pattern_to_svg(levels, opt)); });
        }

        if (config.steering == SteeringMode::geo_target)
        {
            stage("footprint", [&]
                  {
                report.footprint = compute_footprint(config, *pattern, report.metrics.hpbw_deg);
                report.files.footprint = emit(out_dir / "footprint.geojson",
                                              io::footprint_to_geojson(*report.footprint, {report.metrics.hpbw_deg, config.swarm.seed})); });
        }

        stage("report", [&]
              {
            json doc;
            doc["schema_version"] = io::kSchemaVersion;
            doc["kind"] = "run_report";
            doc["config"] = json::parse(config_to_json(config));
            doc["seed"] = config.swarm.seed;
            doc["subarray"] = {{"target_count", config.subarray.target_count},
                               {"achieved_count", report.calibration.achieved_count},
                               {"exact", report.calibration.exact},
                               {"radius_lambda", report.calibration.radius_lambda}};
            json files;
            files["lattice"] = report.files.lattice.string();
            files["layout"] = report.files.layout.string();
            files["pattern"] = report.files.pattern.string();
            if (report.files.plot)
                files["plot"] = report.files.plot->string();
            files["metrics"] = report.files.metrics.string();
            if (report.files.footprint)
                files["footprint"] = report.files.footprint->string();
            doc["files"] = files;
            doc["hpbw_deg"] = report.metrics.hpbw_deg;
            if (report.footprint)
                doc["footprint_area_km2"] = report.footprint->area_km2;
            json timings = json::object();
            for (const auto &[name, secs] : report.stage_seconds)
                timings[name] = secs;
            doc["stage_seconds"] = timings;
            report.files.report = out_dir / "report.json";
            emit(report.files.report, doc.dump(2) + "\n"); });

        return report;
    }

    OracleReport verify_oracle(const ScenarioConfig &config, const ReducedScale &scale, std::size_t cost_ceiling)
    {
        require(scale.satellites >= 1 && scale.elements >= 1, "verify: need at least one satellite and one element");
        require(scale.samples >= 2, "verify: need at least 2 samples");

        OracleReport report;
        report.scale = scale;

        const auto calibration = calibrate_radius_for_count(scale.elements, config.subarray.spacing_lambda);
        const auto lattice = triangular_lattice(calibration.radius_lambda, config.subarray.spacing_lambda);
        report.achieved_elements = lattice.size();

        const double terms = static_cast<double>(scale.satellites) * static_cast<double>(lattice.size()) *
                             static_cast<double>(scale.samples);
        if (terms > static_cast<double>(cost_ceiling))
        {
            std::ostringstream os;
            os << "verify: " << terms << " brute-force terms exceed the ceiling of " << cost_ceiling
               << "; use fewer satellites, elements or samples";
            fail(ErrorKind::cost_ceiling, os.str());
        }

        const auto swarm = place_swarm(scale.satellites, config.swarm.sigma_lambda, config.swarm.r_max_lambda,
                                       config.swarm.d_min_lambda, scale.seed,
                                       std::max(config.swarm.max_attempts, scale.satellites));

        SeededStream steer_rng(scale.seed, Stream::steering);
        const SteeringTarget target{0.5 * steer_rng.uniform(), 360.0 * steer_rng.uniform()};

        auto sub_w = uniform_weights(lattice.size());
        auto swarm_w = uniform_weights(swarm.size());
        if (scale.random_weights)
        {
            SeededStream w_rng(scale.seed, Stream::weights);
            const auto draw = [&]
            {
                const double amplitude = 0.5 + w_rng.uniform();
                const double phase = 2.0 * std::numbers::pi * w_rng.uniform();
                return std::polar(amplitude, phase);
            };
            for (auto &w : sub_w)
                w = draw();
            for (auto &w : swarm_w)
                w = draw();
        }

        const auto cut = AngularCut::uniform(config.cut.phi_deg, config.cut.theta_min_deg, config.cut.theta_max_deg,
                                             scale.samples);
        const auto fast = composite_pattern_factorized(config.element, lattice, swarm, target, sub_w, swarm_w, cut);
        const auto slow =
            composite_pattern_bruteforce(config.element, lattice, swarm, target, sub_w, swarm_w, cut, cost_ceiling);

        report.max_relative_deviation = max_relative_deviation(fast, slow);
        report.passed = report.max_relative_deviation <= report.tolerance;
        return report;
    }

    std::string oracle_report_to_json(const OracleReport &r)
    {
        json doc;
        doc["schema_version"] = io::kSchemaVersion;
        doc["kind"] = "oracle_report";
        doc["satellites"] = r.scale.satellites;
        doc["elements_requested"] = r.scale.elements;
        doc["elements"] = r.achieved_elements;
        doc["samples"] = r.scale.samples;
        doc["seed"] = r.scale.seed;
        doc["random_weights"] = r.scale.random_weights;
        doc["max_relative_deviation"] = r.max_relative_deviation;
        doc["tolerance"] = r.tolerance;
        doc["passed"] = r.passed;
        return doc.dump(2) + "\n";
    }
}
