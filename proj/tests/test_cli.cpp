#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wbsearch/cli.hpp"
#include "wbsearch/config.hpp"
#include "wbsearch/exporters.hpp"
#include "wbsearch/montecarlo.hpp"

using namespace wbsearch;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "wbsearch_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("sim prints an outcome") {
    const auto r = invoke({"sim", "-c", "configs/ros20.cfg", "--seed", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("weight_based") != std::string::npos);
    CHECK(r.out.find("found") != std::string::npos);
    CHECK(r.out.find("decision_time") == std::string::npos);

    const auto timed = invoke({"sim", "-c", "configs/ros20.cfg", "--timing"});
    CHECK(timed.out.find("decision_time") != std::string::npos);

    const auto lm = invoke({"sim", "-c", "configs/ros20.cfg", "--planner", "lawn_mower"});
    CHECK(lm.out.find("lawn_mower") != std::string::npos);
}

TEST_CASE("sim writes a trajectory") {
    const auto path = scratch("sim.csv");
    const auto r = invoke({"sim", "-c", "configs/phys10.cfg", "-o", path});
    REQUIRE(r.code == 0);
    std::ifstream in(path);
    const auto rows = read_trajectory(in);
    CHECK_FALSE(rows.empty());
}

TEST_CASE("mc matches the library") {
    const auto r = invoke({"mc", "-c", "configs/ros20.cfg", "--runs", "6", "--seed", "3"});
    REQUIRE(r.code == 0);

    auto batch = load_config("configs/ros20.cfg").batch;
    batch.runs = 6;
    batch.master_seed = 3;
    batch.base.record_trajectory = false;
    std::ostringstream expected;
    write_report(expected, run_montecarlo(batch), false);
    CHECK(r.out == expected.str());
}

TEST_CASE("mc side outputs") {
    const auto csv = scratch("runs.csv");
    const auto json = scratch("summary.json");
    const auto dir = scratch("traj");
    std::filesystem::remove_all(dir);
    const auto r = invoke({"mc", "-c", "configs/ros18.cfg", "--runs", "3", "-o", csv, "--summary",
                           json, "--trajectory-dir", dir, "--threads", "2"});
    REQUIRE(r.code == 0);
    CHECK(slurp(csv).rfind("run,planner,seed,found", 0) == 0);
    CHECK(slurp(json).find("\"master_seed\"") != std::string::npos);
    int files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 6);
    CHECK(std::filesystem::exists(std::filesystem::path(dir) / "run_2_weight_based.csv"));
}

TEST_CASE("weights and plan") {
    const auto r = invoke({"weights", "-c", "configs/demo.cfg"});
    REQUIRE(r.code == 0);
    const auto cfg = load_config("configs/demo.cfg");
    const auto map = build_weight_map(scenario_environment(cfg.scenario), *cfg.report);
    std::ostringstream expected;
    write_weight_map(expected, map);
    CHECK(r.out == expected.str());

    const auto moved = invoke({"weights", "-c", "configs/demo.cfg", "--x", "1", "--heading", "180"});
    CHECK(moved.code == 0);
    CHECK(moved.out != r.out);

    const auto plan = invoke({"plan", "-c", "configs/demo.cfg"});
    REQUIRE(plan.code == 0);
    std::istringstream lines(plan.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count >= 100);

    const auto lm = invoke({"plan", "-c", "configs/demo.cfg", "--planner", "lawn_mower"});
    REQUIRE(lm.code == 0);
    CHECK(lm.out.find("0 0 0") != std::string::npos);
}

TEST_CASE("usage and config errors exit 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"sim"}).code == 2);
    CHECK(invoke({"sim", "-c", "configs/ros20.cfg", "--bogus"}).code == 2);
    CHECK(invoke({"mc", "-c", "configs/ros20.cfg", "--runs", "0"}).code == 2);
    CHECK(invoke({"sim", "-c", "configs/ros20.cfg", "--planner", "spiral"}).code == 2);

    const auto bad = scratch("bad.cfg");
    std::ofstream(bad) << "env.width = 20\nnot a line\n";
    const auto r = invoke({"sim", "-c", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find(":2:") != std::string::npos);

    const auto missing = invoke({"sim", "-c", "/nonexistent.cfg"});
    CHECK(missing.code != 0);
    CHECK_FALSE(missing.err.empty());

    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("repeat runs are byte-identical") {
    const std::vector<std::string> args = {"mc", "-c", "configs/phys10.cfg", "--runs", "4"};
    CHECK(invoke(args).out == invoke(args).out);
    const std::vector<std::string> sim = {"sim", "-c", "configs/ros20.cfg"};
    CHECK(invoke(sim).out == invoke(sim).out);
}
