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

#include "swarmsim/error.hpp"
#include "swarmsim/io.hpp"
#include "swarmsim/scenario.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

using namespace swarmsim;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch(const std::string &name)
    {
        const auto dir = fs::temp_directory_path() / ("swarmsim_scenario_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
        return dir;
    }

    ErrorKind kind_of(auto &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e.kind();
        }
        FAIL("expected an error");
        return ErrorKind::io;
    }

    std::string message_of(auto &&fn)
    {
        try
        {
            fn();
        }
        catch (const Error &e)
        {
            return e.what();
        }
        return {};
    }

    int run_cli(const std::string &args)
    {
        const std::string cmd = std::string(SWARMSIM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    // Small broadside scenario that runs in well under a second.
    ScenarioConfig small_config()
    {
        ScenarioConfig c;
        c.steering = SteeringMode::broadside;
        c.subarray.target_count = 19;
        c.swarm.count = 8;
        c.cut.samples = 2001;
        return c;
    }
}

TEST_CASE("empty document yields the reference scenario")
{
    const auto c = parse_config("");
    CHECK(c == ScenarioConfig{});
    CHECK(parse_config("  \n\t") == ScenarioConfig{});
    CHECK(parse_config("{}") == ScenarioConfig{});
    CHECK(c.frequency_ghz == 19.0);
    CHECK(c.subarray.spacing_lambda == 0.857);
    CHECK(c.subarray.target_count == 422);
    CHECK(c.swarm.count == 256);
    CHECK(c.swarm.sigma_lambda == 40000.0);
    CHECK(c.swarm.r_max_lambda == 20000.0);
    CHECK(c.swarm.d_min_lambda == 500.0);
    CHECK(c.cut.samples == 15000);
    CHECK(c.geo.slot_lon_deg == 50.0);
    CHECK(c.steering == SteeringMode::geo_target);
    CHECK(c.element == ElementPatternModel{CircularApertureElement{0.4}});
}

TEST_CASE("validation names the offending field")
{
    const auto msg = message_of([]
                                { (void)parse_config(R"({"swarm": {"d_min_lambda": -1}})"); });
    CHECK(msg.find("swarm.d_min_lambda") != std::string::npos);
    CHECK(kind_of([]
                  { (void)parse_config(R"({"swarm": {"d_min_lambda": -1}})"); }) == ErrorKind::validation);

    const char *bad[] = {
        R"({"frequency_ghz": 0})",
        R"({"subarray": {"target_count": 0}})",
        R"({"swarm": {"count": -3}})",
        R"({"swarm": {"count": 2.5}})",
        R"({"swarm": {"max_attempts": 10}})",
        R"({"element_model": {"type": "circular_aperture", "radius_lambda": 0.9}})",
        R"({"element_model": {"type": "horn"}})",
        R"({"element_model": {"type": "isotropic", "radius_lambda": 0.4}})",
        R"({"steering": {"mode": "sideways"}})",
        R"({"cut": {"theta_min_deg": 1, "theta_max_deg": -1}})",
        R"({"cut": {"theta_max_deg": 95}})",
        R"({"cut": {"samples": 1}})",
        R"({"metrics": {"lobe_boundary_deg": 0}})",
        R"({"footprint": {"azimuth_samples": 8}})",
        R"({"geo": {"target_lon_deg": -130, "target_lat_deg": 0}})",
        R"({"geo": {"orbit_radius_km": 6000}})",
        R"({"output": {"plot": "yes"}})",
        R"({"swarms": {}})",
        R"({"cut": {"phi": 0}})",
        R"([])",
    };
    for (const char *text : bad)
    {
        CAPTURE(text);
        CHECK(kind_of([&]
                      { (void)parse_config(text); }) == ErrorKind::validation);
    }
}

TEST_CASE("unknown keys are reported with their path")
{
    const auto msg = message_of([]
                                { (void)parse_config(R"({"cut": {"phi": 0}})"); });
    CHECK(msg.find("cut.phi") != std::string::npos);
}

TEST_CASE("invisible target is accepted for broadside scenarios")
{
    CHECK_NOTHROW(parse_config(R"({"steering": {"mode": "broadside"}, "geo": {"target_lon_deg": -130, "target_lat_deg": 0}})"));
}

TEST_CASE("parse errors carry line and column")
{
    const auto msg = message_of([]
                                { (void)parse_config("{\n  \"swarm\": {\n    \"count\": ,\n  }\n}"); });
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(kind_of([]
                  { (void)parse_config("{"); }) == ErrorKind::parse);
}

TEST_CASE("config round trip")
{
    SUBCASE("defaults")
    {
        const auto c = parse_config("");
        CHECK(parse_config(config_to_json(c)) == c);
    }
    SUBCASE("every field changed")
    {
        const auto c = parse_config(R"({
            "frequency_ghz": 20.2,
            "subarray": {"spacing_lambda": 0.7, "target_count": 37},
            "swarm": {"count": 12, "sigma_lambda": 900.5, "r_max_lambda": 800, "d_min_lambda": 20, "seed": 18446744073709551615, "max_attempts": 5000},
            "element_model": {"type": "cosine_power", "exponent": 1.5},
            "steering": {"mode": "broadside"},
            "geo": {"slot_lon_deg": 0, "target_lat_deg": 40.5, "target_lon_deg": -3.7, "orbit_radius_km": 42000, "earth_radius_km": 6378},
            "cut": {"phi_deg": 45, "theta_min_deg": -2, "theta_max_deg": 3, "samples": 777},
            "metrics": {"lobe_boundary_deg": 0.2, "min_prominence_db": 1},
            "footprint": {"azimuth_samples": 32},
            "output": {"plot": false, "plot_floor_db": -80, "zoom_center_deg": 0.1, "zoom_half_width_deg": 0.5}
        })");
        CHECK(c.swarm.seed == 18446744073709551615ULL);
        CHECK(c.element == ElementPatternModel{CosinePowerElement{1.5}});
        const auto text = config_to_json(c);
        CHECK(parse_config(text) == c);
        CHECK(config_to_json(parse_config(text)) == text);
    }
}

TEST_CASE("run writes every artifact")
{
    const auto dir = scratch("run");
    auto c = small_config();
    c.steering = SteeringMode::geo_target;
    c.cut.theta_min_deg = -0.2;
    c.cut.theta_max_deg = 0.2;
    c.swarm = {4, 40000.0, 20000.0, 500.0, 5, 100000};
    const auto report = run_scenario(c, dir);
    CHECK(fs::exists(report.files.lattice));
    CHECK(fs::exists(report.files.layout));
    CHECK(fs::exists(report.files.pattern));
    REQUIRE(report.files.plot);
    CHECK(fs::exists(*report.files.plot));
    CHECK(fs::exists(report.files.metrics));
    REQUIRE(report.files.footprint);
    CHECK(fs::exists(*report.files.footprint));
    CHECK(fs::exists(report.files.report));
    CHECK(report.footprint);
    CHECK(report.stage_seconds.size() == 6);

    const auto doc = nlohmann::json::parse(io::read_file(report.files.report));
    CHECK(doc["seed"] == 5);
    CHECK(doc["config"]["swarm"]["seed"] == 5);
    CHECK(doc["stage_seconds"].contains("pattern"));
    fs::remove_all(dir);
}

TEST_CASE("broadside run skips the footprint")
{
    const auto dir = scratch("broadside");
    auto c = small_config();
    c.output.plot = false;
    c.swarm = {4, 40000.0, 20000.0, 500.0, 5, 100000};
    c.cut.theta_min_deg = -0.5;
    c.cut.theta_max_deg = 0.5;
    const auto report = run_scenario(c, dir);
    CHECK_FALSE(report.files.footprint);
    CHECK_FALSE(report.files.plot);
    CHECK_FALSE(fs::exists(dir / "footprint.geojson"));
    CHECK_FALSE(fs::exists(dir / "pattern.svg"));
    fs::remove_all(dir);
}

TEST_CASE("a single satellite reproduces the subarray pattern")
{
    auto c = small_config();
    c.subarray.target_count = 422;
    c.swarm.count = 1;
    c.cut = {0.0, -10.0, 10.0, 4001};
    c.metrics.lobe_boundary_deg = 5.0;
    const auto dir = scratch("single");
    const auto report = run_scenario(c, dir);

    const auto sub = build_subarray(c);
    const auto cut = c.angular_cut();
    auto af = array_factor(sub.lattice.positions, uniform_weights(sub.lattice.size()),
                           std::vector<double>(sub.lattice.size(), 0.0), cut);
    for (std::size_t i = 0; i < cut.sample_count(); ++i)
        af.values[i] *= element_amplitude(c.element, cut.direction(i));
    const auto expected = extract_metrics(to_db(af), {5.0, 0.5});

    CHECK(report.metrics.hpbw_deg == doctest::Approx(expected.hpbw_deg).epsilon(1e-12));
    REQUIRE(report.metrics.sll.has_value() == expected.sll.has_value());
    if (expected.sll)
        CHECK(report.metrics.sll->level_db == doctest::Approx(expected.sll->level_db).epsilon(1e-9));
    REQUIRE(report.metrics.gll.has_value() == expected.gll.has_value());
    if (expected.gll)
        CHECK(report.metrics.gll->level_db == doctest::Approx(expected.gll->level_db).epsilon(1e-9));
    fs::remove_all(dir);
}

TEST_CASE("repeated runs are byte identical")
{
    auto c = small_config();
    c.swarm.seed = 31;
    const auto a = scratch("det_a"), b = scratch("det_b");
    (void)run_scenario(c, a);
    (void)run_scenario(c, b);
    for (const char *name : {"lattice.json", "layout.json", "pattern.csv", "metrics.json", "pattern.svg"})
    {
        CAPTURE(name);
        CHECK(io::read_file(a / name) == io::read_file(b / name));
    }
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("a failing stage removes partial artifacts and names the stage")
{
    const auto dir = scratch("cleanup");
    fs::create_directories(dir / "metrics.json"); // blocks the metrics file
    const auto msg = message_of([&]
                                { (void)run_scenario(small_config(), dir); });
    CHECK(msg.find("stage 'metrics'") != std::string::npos);
    CHECK_FALSE(fs::exists(dir / "lattice.json"));
    CHECK_FALSE(fs::exists(dir / "layout.json"));
    CHECK_FALSE(fs::exists(dir / "pattern.csv"));
    fs::remove_all(dir);

    auto truncated = small_config();
    truncated.cut = {0.0, -0.0001, 0.0001, 11};
    const auto dir2 = scratch("truncated");
    CHECK(kind_of([&]
                  { (void)run_scenario(truncated, dir2); }) == ErrorKind::beam_truncated);
    CHECK(fs::is_empty(dir2));
    fs::remove_all(dir2);
}

TEST_CASE("oracle verification")
{
    const ScenarioConfig c;
    SUBCASE("reference reduced scale")
    {
        const auto r = verify_oracle(c, {4, 19, 501, 0, false});
        CHECK(r.achieved_elements == 19);
        CHECK(r.max_relative_deviation <= 1e-9);
        CHECK(r.passed);
        const auto doc = nlohmann::json::parse(oracle_report_to_json(r));
        CHECK(doc["passed"] == true);
    }
    SUBCASE("random weights")
    {
        const auto r = verify_oracle(c, {6, 37, 301, 12, true});
        CHECK(r.passed);
    }
    SUBCASE("single term is exact")
    {
        const auto r = verify_oracle(c, {1, 1, 101, 3, false});
        CHECK(r.max_relative_deviation == 0.0);
    }
    SUBCASE("cost ceiling")
    {
        CHECK(kind_of([&]
                      { (void)verify_oracle(c, {256, 421, 15000, 0, false}); }) == ErrorKind::cost_ceiling);
        CHECK(kind_of([&]
                      { (void)verify_oracle(c, {4, 19, 501, 0, false}, 1000); }) == ErrorKind::cost_ceiling);
    }
}

TEST_CASE("command line exit codes and determinism")
{
    const auto dir = scratch("cli");
    io::write_file(dir / "bad.json", R"({"swarm": {"d_min_lambda": -1}})");
    io::write_file(dir / "broken.json", "{");
    io::write_file(dir / "small.json", config_to_json(small_config()));

    CHECK(run_cli("verify --quiet") == 0);
    CHECK(run_cli("verify --quiet --satellites 1 --elements 1") == 0);
    CHECK(run_cli("run --config " + (dir / "bad.json").string() + " --out-dir " + dir.string()) == 2);
    CHECK(run_cli("run --config " + (dir / "broken.json").string() + " --out-dir " + dir.string()) == 2);
    CHECK(run_cli("run --config " + (dir / "missing.json").string() + " --out-dir " + dir.string()) == 2);
    CHECK(run_cli("frobnicate") == 2);
    CHECK(run_cli("run --samples 1 --out-dir " + dir.string()) == 2);
    CHECK(run_cli("verify --quiet --satellites 300 --elements 421 --samples 15000") == 3);
    CHECK(run_cli("footprint --config " + (dir / "small.json").string() + " --out-dir " + dir.string()) == 2);

    const std::string small = " --config " + (dir / "small.json").string() + " --quiet --seed 4";
    CHECK(run_cli("run" + small + " --out-dir " + (dir / "a").string()) == 0);
    CHECK(run_cli("run" + small + " --out-dir " + (dir / "b").string()) == 0);
    for (const char *name : {"lattice.json", "layout.json", "pattern.csv", "metrics.json"})
        CHECK(io::read_file(dir / "a" / name) == io::read_file(dir / "b" / name));

    CHECK(run_cli("lattice" + small + " --out-dir " + (dir / "c").string()) == 0);
    CHECK(run_cli("swarm" + small + " --out-dir " + (dir / "c").string()) == 0);
    CHECK(run_cli("pattern --data-only" + small + " --out-dir " + (dir / "c").string()) == 0);
    CHECK(run_cli("metrics" + small + " --out-dir " + (dir / "c").string()) == 0);
    CHECK(io::read_file(dir / "a" / "layout.json") == io::read_file(dir / "c" / "layout.json"));
    CHECK(io::read_file(dir / "a" / "pattern.csv") == io::read_file(dir / "c" / "pattern.csv"));
    CHECK(io::read_file(dir / "a" / "metrics.json") == io::read_file(dir / "c" / "metrics.json"));
    CHECK_FALSE(fs::exists(dir / "c" / "pattern.svg"));

    const auto reread = dir / "d";
    CHECK(run_cli("metrics --pattern " + (dir / "a" / "pattern.csv").string() + small + " --out-dir " +
                  reread.string()) == 0);
    const auto fresh = nlohmann::json::parse(io::read_file(dir / "a" / "metrics.json"));
    const auto from_file = nlohmann::json::parse(io::read_file(reread / "metrics.json"));
    CHECK(from_file["hpbw_deg"].get<double>() == doctest::Approx(fresh["hpbw_deg"].get<double>()).epsilon(1e-12));
    fs::remove_all(dir);
}
