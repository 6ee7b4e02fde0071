#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wbsearch/config.hpp"
#include "wbsearch/errors.hpp"
#include "wbsearch/exporters.hpp"

using namespace wbsearch;

namespace {

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("wbsearch_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse every key") {
    const auto cfg = parse_config(R"(
# full example
env.width = 30
env.height = 12.5     # trailing comment
env.cell_size = 2.5
planner = lawn_mower
uav.max_speed = 3
uav.altitude = 2
uav.fov_half_angle = 40
uav.flight_time = 99
uav.start_corner = ne
uav.arrival_tolerance = 0.01
survivor.x = 4
survivor.y = 5
survivor.heading = 270
survivor.speed = 0.3
survivor.motion = random_heading
survivor.change_period = 12
survivor.start = uniform
survivor.random_heading = yes
observer = 1 2 3
observer = 4 5 6
observers.count = 7
observers.radius = 8
sim.dt = 0.05
sim.seed = 18446744073709551615
sim.return_to_start = true
sim.record_trajectory = false
mc.runs = 40
mc.master_seed = 5
mc.parallelism = 2
mc.planners = weight_based
report.x = 6
report.y = 7
report.heading = 8
)");
    const auto& s = cfg.scenario;
    CHECK(s.width == 30);
    CHECK(s.height == 12.5);
    CHECK(s.cell_size == 2.5);
    CHECK(s.planner == PlannerKind::LawnMower);
    CHECK(s.uav.max_speed == 3);
    CHECK(s.uav.altitude == 2);
    CHECK(s.uav.fov_half_angle == 40);
    CHECK(s.uav.flight_time == 99);
    CHECK(s.uav.start_corner == Corner::NorthEast);
    CHECK(s.uav.arrival_tolerance == 0.01);
    CHECK(s.survivor.start == WorldPoint{4, 5});
    CHECK(s.survivor.heading == 270);
    CHECK(s.survivor.speed == 0.3);
    CHECK(s.survivor.motion == SurvivorMotion::RandomHeadingPersistence);
    CHECK(s.survivor.change_period == 12);
    CHECK(s.survivor.start_mode == StartMode::Uniform);
    CHECK(s.survivor.random_heading);
    REQUIRE(s.observers.size() == 2);
    CHECK(s.observers[1].position == WorldPoint{4, 5});
    CHECK(s.observers[1].radius == 6);
    CHECK(s.random_observers == 7);
    CHECK(s.random_observer_radius == 8);
    CHECK(s.dt == 0.05);
    CHECK(s.seed == 18446744073709551615ULL);
    CHECK(s.return_to_start);
    CHECK_FALSE(s.record_trajectory);
    CHECK(cfg.batch.runs == 40);
    CHECK(cfg.batch.master_seed == 5);
    CHECK(cfg.batch.parallelism == 2);
    CHECK(cfg.batch.planners == std::vector<PlannerKind>{PlannerKind::WeightBased});
    CHECK(cfg.batch.base.width == 30);
    REQUIRE(cfg.report.has_value());
    CHECK(cfg.report->position == WorldPoint{6, 7});
    CHECK(cfg.report->heading == 8);
}

TEST_CASE("config errors carry the line") {
    const auto message = [](const char* text) {
        try {
            parse_config(text, "x.cfg");
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("env.width = 1\nbogus = 2\n") == "x.cfg:2: unknown key 'bogus'");
    CHECK(message("env.width = abc") == "x.cfg:1: expected a number, got 'abc'");
    CHECK(message("env.width 20") == "x.cfg:1: expected 'key = value'");
    CHECK(message("planner = spiral") == "x.cfg:1: unknown planner 'spiral'");
    CHECK(message("observer = 1 2") == "x.cfg:1: observer takes 'x y radius'");
    CHECK(message("env.width =") == "x.cfg:1: missing value for 'env.width'");
    CHECK(message("mc.runs = -3").find("non-negative integer") != std::string::npos);
    CHECK(message("sim.return_to_start = maybe").find("true/false") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/none.cfg"), FileError);
}

TEST_CASE("shipped presets parse and validate") {
    for (const char* name : {"ros20", "ros18", "phys10", "field600", "demo"}) {
        const auto cfg = load_config(std::string("configs/") + name + ".cfg");
        CHECK_NOTHROW(validate(cfg.scenario));
    }
    const auto t1 = load_config("configs/field600.cfg").scenario;
    CHECK(t1.width == 600);
    CHECK(t1.uav.max_speed == 12);
    CHECK(t1.uav.flight_time == 1800);
    CHECK(t1.random_observers == 30);
    CHECK(t1.random_observer_radius == 30);
    CHECK(t1.survivor.speed == 0.6);
    CHECK(scenario_environment(t1).cell_size() == doctest::Approx(18));
    CHECK(scenario_environment(t1).cols() == 34);
}

TEST_CASE("trajectory CSV layout") {
    SimOutcome o;
    o.trajectory = {{0.1, Agent::Uav, 1.0, 1.05, 9.0, SimPhase::Sweeping},
                    {0.1, Agent::Survivor, 5.0, 5.03, 0.0, SimPhase::Sweeping},
                    {0.2, Agent::Uav, 1.0, 1.1, 9.0, SimPhase::Transit},
                    {0.2, Agent::Survivor, 5.0, 5.06, 0.0, SimPhase::Transit}};
    std::ostringstream os;
    write_trajectory(os, o);
    CHECK(os.str() ==
          "t,agent,x,y,z,phase\n"
          "0.100000,uav,1.000000,1.050000,9.000000,sweeping\n"
          "0.100000,survivor,5.000000,5.030000,0.000000,sweeping\n"
          "0.200000,uav,1.000000,1.100000,9.000000,transit\n"
          "0.200000,survivor,5.000000,5.060000,0.000000,transit\n");

    SimOutcome empty;
    std::ostringstream e;
    write_trajectory(e, empty);
    CHECK(e.str() == "t,agent,x,y,z,phase\n");
}

TEST_CASE("trajectory export reloads within 1e-6 m") {
    ScenarioConfig c;
    c.survivor.start_mode = StartMode::NearObserver;
    c.survivor.random_heading = true;
    c.observers = {{{10, 10}, 2}};
    c.uav.max_speed = 2.5;
    c.return_to_start = true;
    c.seed = 3;
    const auto outcome = run(c);
    const auto path = temp_path("traj.csv");
    export_trajectory(outcome, path);
    std::ifstream in(path);
    const auto back = read_trajectory(in);
    REQUIRE(back.size() == outcome.trajectory.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        const auto& a = outcome.trajectory[i];
        const auto& b = back[i];
        REQUIRE(std::abs(a.t - b.t) <= 5e-7);
        REQUIRE(std::abs(a.x - b.x) <= 1e-6);
        REQUIRE(std::abs(a.y - b.y) <= 1e-6);
        REQUIRE(std::abs(a.z - b.z) <= 1e-6);
        REQUIRE(a.agent == b.agent);
        REQUIRE(a.phase == b.phase);
    }
    std::filesystem::remove(path);
}

TEST_CASE("read_trajectory rejects garbage") {
    std::istringstream no_header("0.1,uav,1,1,1,transit\n");
    CHECK_THROWS_AS(read_trajectory(no_header), ConfigError);
    std::istringstream bad_agent("t,agent,x,y,z,phase\n0.1,dog,1,1,1,transit\n");
    CHECK_THROWS_AS(read_trajectory(bad_agent), ConfigError);
    std::istringstream short_row("t,agent,x,y,z,phase\n0.1,uav,1,1\n");
    CHECK_THROWS_AS(read_trajectory(short_row), ConfigError);
}

TEST_CASE("weight map dump") {
    const auto env = make_environment(3, 3, 1);
    const auto map = build_weight_map(env, {{1.5, 1.5}, 90, 0});
    std::ostringstream os;
    write_weight_map(os, map);
    CHECK(os.str() == "3 1 2\n3 5 2\n4 4 4\n");

    const auto one = make_environment(1, 1, 1);
    std::ostringstream single;
    write_weight_map(single, build_weight_map(one, {{0.5, 0.5}, 0, 0}));
    CHECK(single.str() == "5\n");

    // large values come back as exact integers
    const auto big = make_environment(600, 600, 18);
    const auto big_map = build_weight_map(big, {{5, 5}, 45, 0});
    const auto path = temp_path("weights.txt");
    export_weight_map(big_map, path);
    std::istringstream in(slurp(path));
    std::vector<Weight> parsed;
    for (Weight w; in >> w;) parsed.push_back(w);
    CHECK(parsed == big_map.weights());
    std::filesystem::remove(path);
}

TEST_CASE("unwritable paths raise FileError") {
    SimOutcome o;
    CHECK_THROWS_AS(export_trajectory(o, "/nonexistent/dir/t.csv"), FileError);
    const auto env = make_environment(1, 1, 1);
    CHECK_THROWS_AS(export_weight_map(build_weight_map(env, {{0.5, 0.5}, 0, 0}), "/nonexistent/w.txt"),
                    FileError);
}

TEST_CASE("summary JSON is well formed") {
    std::vector<RunRecord> runs = {{0, PlannerKind::LawnMower, 1, true, 10, 100, 0.001, 0.1},
                                   {0, PlannerKind::WeightBased, 1, true, 4, 40, 0.002, 0.1},
                                   {1, PlannerKind::LawnMower, 2, false, 50, 500, 0.001, {}},
                                   {1, PlannerKind::WeightBased, 2, true, 6, 60, 0.002, 0.3}};
    const auto report =
        aggregate(9, {PlannerKind::LawnMower, PlannerKind::WeightBased}, std::move(runs));
    std::ostringstream os;
    write_summary_json(os, report, false);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["master_seed"] == 9);
    CHECK(doc["planners"][0]["found"] == 1);
    CHECK(doc["planners"][1]["search_time"]["mean"].get<double>() == doctest::Approx(5.0));
    CHECK(doc["speedup"].get<double>() == doctest::Approx(2.0));
    CHECK(doc["median_time_ratio"].get<double>() == doctest::Approx(0.4));
    CHECK(doc["paired_found"] == 1);
    CHECK_FALSE(doc["planners"][0].contains("decision_time"));
}
