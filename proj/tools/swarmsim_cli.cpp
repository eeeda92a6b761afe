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

// Command-line front end: one subcommand per pipeline stage, plus `run` and `verify`.

#include "swarmsim/error.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace
{
    using namespace swarmsim;

    enum ExitCode
    {
        exit_ok = 0,
        exit_validation = 2,
        exit_stage = 3,
        exit_oracle = 4
    };

    struct CommonOptions
    {
        std::string config_path;
        std::optional<std::uint64_t> seed;
        std::string out_dir = ".";
        std::optional<std::size_t> samples;
        bool quiet = false;
        bool data_only = false;
    };

    void add_common(CLI::App *cmd, CommonOptions &o)
    {
        cmd->add_option("--config", o.config_path, "Scenario configuration (JSON); defaults apply when omitted");
        cmd->add_option("--seed", o.seed, "Seed for swarm placement (overrides the config)");
        cmd->add_option("--out-dir", o.out_dir, "Directory receiving the output files")->capture_default_str();
        cmd->add_option("--samples", o.samples, "Number of samples on the angular cut (overrides the config)");
        cmd->add_flag("--quiet", o.quiet, "Suppress the summary on stdout");
    }

    int exit_code_for(ErrorKind kind)
    {
        switch (kind)
        {
        case ErrorKind::invalid_parameter:
        case ErrorKind::validation:
        case ErrorKind::parse:
            return exit_validation;
        case ErrorKind::oracle_mismatch:
            return exit_oracle;
        default:
            return exit_stage;
        }
    }

    ScenarioConfig load(const CommonOptions &o)
    {
        ScenarioConfig config;
        try
        {
            if (!o.config_path.empty())
                config = load_config(o.config_path);
        }
        catch (const Error &e)
        {
            // An unreadable config is a usage problem, not a numerical one.
            throw Error(e.kind() == ErrorKind::io ? ErrorKind::validation : e.kind(), e.what());
        }
        if (o.seed)
            config.swarm.seed = *o.seed;
        if (o.samples)
            config.cut.samples = *o.samples;
        if (o.data_only)
            config.output.plot = false;
        validate(config);
        return config;
    }

    std::filesystem::path prepare_dir(const CommonOptions &o)
    {
        std::filesystem::path dir(o.out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            fail(ErrorKind::io, "cannot create output directory '" + dir.string() + "': " + ec.message());
        return dir;
    }

    void say(const CommonOptions &o, const std::string &line)
    {
        if (!o.quiet)
            std::cout << line << '\n';
    }

    std::string fmt(const char *f, double v)
    {
        char buf[64];
        std::snprintf(buf, sizeof buf, f, v);
        return buf;
    }

    io::PatternHeader header_for(const ScenarioConfig &config, double peak)
    {
        io::PatternHeader h;
        h.phi_deg = config.cut.phi_deg;
        h.steering = steering_target(config);
        h.seed = config.swarm.seed;
        h.element_model = describe(config.element);
        h.peak_magnitude = peak;
        return h;
    }

    io::MetricsContext context_for(const ScenarioConfig &config, std::size_t elements, std::size_t satellites)
    {
        io::MetricsContext ctx;
        ctx.seed = config.swarm.seed;
        ctx.grid_samples = config.cut.samples;
        ctx.phi_deg = config.cut.phi_deg;
        ctx.theta_min_deg = config.cut.theta_min_deg;
        ctx.theta_max_deg = config.cut.theta_max_deg;
        ctx.min_prominence_db = config.metrics.min_prominence_db;
        ctx.element_model = describe(config.element);
        ctx.subarray_elements = elements;
        ctx.satellites = satellites;
        return ctx;
    }

    std::string describe_metrics(const PatternMetrics &m)
    {
        std::string s = "hpbw_deg=" + fmt("%.6g", m.hpbw_deg);
        s += m.sll ? " sll_db=" + fmt("%.3f", m.sll->level_db) + " at " + fmt("%.5f", m.sll->theta_deg) + " deg"
                   : std::string(" sll=none");
        s += m.gll ? " gll_db=" + fmt("%.3f", m.gll->level_db) + " at " + fmt("%.5f", m.gll->theta_deg) + " deg"
                   : std::string(" gll=none");
        return s;
    }

    int cmd_lattice(const CommonOptions &o)
    {
        const auto config = load(o);
        const auto dir = prepare_dir(o);
        const auto sub = build_subarray(config);
        io::write_file(dir / "lattice.json", io::lattice_to_json(sub.lattice));
        say(o, "lattice: " + std::to_string(sub.lattice.size()) + " elements (requested " +
                   std::to_string(config.subarray.target_count) + (sub.calibration.exact ? ", exact" : ", nearest") +
                   "), radius " + fmt("%.6f", sub.calibration.radius_lambda) + " lambda");
        return exit_ok;
    }

    int cmd_swarm(const CommonOptions &o)
    {
        const auto config = load(o);
        const auto dir = prepare_dir(o);
        const auto layout = build_swarm(config);
        io::write_file(dir / "layout.json", io::layout_to_json(layout));
        say(o, "swarm: " + std::to_string(layout.size()) + " satellites, seed " + std::to_string(layout.seed) +
                   ", min spacing " + fmt("%.3f", min_pairwise_distance(layout)) + " lambda");
        return exit_ok;
    }

    struct Evaluated
    {
        SubarrayGeometry sub;
        SwarmLayout layout;
        std::optional<CompositePattern> pattern;
        FieldCut field;
    };

    Evaluated evaluate(const ScenarioConfig &config)
    {
        Evaluated e;
        e.sub = build_subarray(config);
        e.layout = build_swarm(config);
        e.pattern.emplace(build_pattern(config, e.sub.lattice, e.layout));
        e.field = normalize_to_peak(e.pattern->evaluate(config.angular_cut()));
        return e;
    }

    io::PlotOptions plot_options(const ScenarioConfig &config)
    {
        io::PlotOptions p;
        p.floor_db = config.output.plot_floor_db;
        p.zoom_center_deg = config.output.zoom_center_deg;
        p.zoom_half_width_deg = config.output.zoom_half_width_deg;
        p.title = "Normalized swarm pattern, seed " + std::to_string(config.swarm.seed);
        return p;
    }

    int cmd_pattern(const CommonOptions &o)
    {
        const auto config = load(o);
        const auto dir = prepare_dir(o);
        const auto e = evaluate(config);
        io::write_file(dir / "pattern.csv", io::pattern_to_table(e.field, header_for(config, e.field.peak_magnitude)));
        if (config.output.plot)
            io::write_file(dir / "pattern.svg", io::pattern_to_svg(to_db(e.field), plot_options(config)));
        say(o, "pattern: " + std::to_string(e.field.values.size()) + " samples written");
        return exit_ok;
    }

    int cmd_metrics(const CommonOptions &o, const std::string &pattern_path)
    {
        const auto config = load(o);
        const auto dir = prepare_dir(o);
        const MetricsOptions mopt{config.metrics.lobe_boundary_deg, config.metrics.min_prominence_db};
        PatternMetrics metrics;
        io::MetricsContext ctx;
        if (!pattern_path.empty())
        {
            const auto table = io::pattern_from_table(io::read_file(pattern_path));
            metrics = extract_metrics(to_db(table.cut), mopt);
            ctx = context_for(config, 0, 0);
            ctx.seed = table.header.seed;
            ctx.phi_deg = table.header.phi_deg;
            ctx.grid_samples = table.cut.values.size();
            ctx.theta_min_deg = table.cut.cut.theta_deg.front();
            ctx.theta_max_deg = table.cut.cut.theta_deg.back();
            ctx.element_model = table.header.element_model;
        }
        else
        {
            const auto e = evaluate(config);
            metrics = extract_metrics(to_db(e.field), mopt);
            ctx = context_for(config, e.sub.lattice.size(), e.layout.size());
        }
        io::write_file(dir / "metrics.json", io::metrics_to_json(metrics, ctx));
        say(o, "metrics: " + describe_metrics(metrics));
        return exit_ok;
    }

    int cmd_footprint(const CommonOptions &o)
    {
        auto config = load(o);
        if (config.steering != SteeringMode::geo_target)
            fail(ErrorKind::validation, "footprint: steering.mode must be geo_target");
        const auto dir = prepare_dir(o);
        const auto e = evaluate(config);
        const auto metrics = extract_metrics(to_db(e.field), {config.metrics.lobe_boundary_deg,
                                                              config.metrics.min_prominence_db});
        const auto fp = compute_footprint(config, *e.pattern, metrics.hpbw_deg);
        io::write_file(dir / "footprint.geojson", io::footprint_to_geojson(fp, {metrics.hpbw_deg, config.swarm.seed}));
        say(o, "footprint: area " + fmt("%.4f", fp.area_km2) + " km2, slant range " + fmt("%.1f", fp.slant_range_km) +
                   " km, incidence " + fmt("%.2f", fp.incidence_angle_deg) + " deg");
        return exit_ok;
    }

    int cmd_run(const CommonOptions &o)
    {
        const auto config = load(o);
        const auto dir = prepare_dir(o);
        const auto report = run_scenario(config, dir);
        say(o, "run: seed " + std::to_string(config.swarm.seed) + ", " + std::to_string(report.calibration.achieved_count) +
                   " elements x " + std::to_string(config.swarm.count) + " satellites");
        say(o, "     " + describe_metrics(report.metrics));
        if (report.footprint)
            say(o, "     footprint area " + fmt("%.4f", report.footprint->area_km2) + " km2");
        for (const auto &[stage, secs] : report.stage_seconds)
            say(o, "     " + stage + ": " + fmt("%.3f", secs) + " s");
        return exit_ok;
    }

    int cmd_verify(const CommonOptions &o, ReducedScale scale)
    {
        const auto config = load(o);
        if (o.seed)
            scale.seed = *o.seed;
        if (o.samples)
            scale.samples = *o.samples;
        const auto report = verify_oracle(config, scale);
        const auto doc = oracle_report_to_json(report);
        if (!o.quiet)
            std::cout << doc;
        if (!report.passed)
        {
            std::cerr << "swarmsim: oracle mismatch, max relative deviation " << report.max_relative_deviation << '\n';
            return exit_oracle;
        }
        return exit_ok;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"swarmsim - distributed-aperture pattern and footprint simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "swarmsim 0.1.0");

    CommonOptions common;
    std::string pattern_path;
    ReducedScale scale;

    auto *lattice = app.add_subcommand("lattice", "Generate the subarray lattice (lattice.json)");
    auto *swarm = app.add_subcommand("swarm", "Place the swarm satellites (layout.json)");
    auto *pattern = app.add_subcommand("pattern", "Evaluate the composite pattern on the cut (pattern.csv, pattern.svg)");
    auto *metrics = app.add_subcommand("metrics", "Extract beamwidth and lobe levels (metrics.json)");
    auto *footprint = app.add_subcommand("footprint", "Project the half-power contour to the ground (footprint.geojson)");
    auto *run = app.add_subcommand("run", "Run the whole pipeline and write every artifact");
    auto *verify = app.add_subcommand("verify", "Compare factorized and brute-force patterns on a reduced geometry");

    for (auto *cmd : {lattice, swarm, pattern, metrics, footprint, run, verify})
        add_common(cmd, common);
    for (auto *cmd : {pattern, run})
        cmd->add_flag("--data-only", common.data_only, "Skip the SVG plot");
    metrics->add_option("--pattern", pattern_path, "Read an existing pattern.csv instead of recomputing");
    verify->add_option("--satellites", scale.satellites, "Satellites in the reduced swarm")->capture_default_str();
    verify->add_option("--elements", scale.elements, "Requested elements per subarray")->capture_default_str();
    verify->add_flag("--random-weights", scale.random_weights, "Use random complex weights on both levels");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_validation;
    }

    try
    {
        if (*lattice)
            return cmd_lattice(common);
        if (*swarm)
            return cmd_swarm(common);
        if (*pattern)
            return cmd_pattern(common);
        if (*metrics)
            return cmd_metrics(common, pattern_path);
        if (*footprint)
            return cmd_footprint(common);
        if (*run)
            return cmd_run(common);
        if (*verify)
            return cmd_verify(common, scale);
    }
    catch (const Error &e)
    {
        std::cerr << "swarmsim: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    catch (const std::exception &e)
    {
        std::cerr << "swarmsim: " << e.what() << '\n';
        return exit_stage;
    }
    return exit_validation;
}
