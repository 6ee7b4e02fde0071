#include "wbsearch/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "wbsearch/config.hpp"
#include "wbsearch/errors.hpp"
#include "wbsearch/exporters.hpp"
#include "wbsearch/montecarlo.hpp"

namespace wbsearch {

namespace {

struct Options {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string planner;
    bool timing = false;
    // mc
    std::optional<int> runs;
    std::optional<int> threads;
    std::string summary;
    std::string trajectory_dir;
    // weights / plan
    std::optional<double> x, y, heading;
};

SurvivorReport report_from(const ConfigFile& cfg, const Options& opt) {
    SurvivorReport r;
    if (cfg.report) {
        r = *cfg.report;
    } else {
        r.position = cfg.scenario.survivor.start;
        r.heading = cfg.scenario.survivor.heading;
    }
    if (opt.x) r.position.x = *opt.x;
    if (opt.y) r.position.y = *opt.y;
    if (opt.heading) r.heading = *opt.heading;
    return r;
}

int cmd_sim(const Options& opt, std::ostream& out) {
    ConfigFile cfg = load_config(opt.config);
    ScenarioConfig scenario = cfg.scenario;
    if (opt.seed) scenario.seed = *opt.seed;
    if (!opt.planner.empty()) {
        auto p = parse_planner(opt.planner);
        if (!p) throw ConfigError("unknown planner '" + opt.planner + "'");
        scenario.planner = *p;
    }
    scenario.record_trajectory = scenario.record_trajectory || !opt.out.empty();
    const SimOutcome outcome = run(scenario);
    write_outcome_summary(out, outcome, opt.timing);
    if (!opt.out.empty()) export_trajectory(outcome, opt.out);
    return 0;
}

int cmd_mc(const Options& opt, std::ostream& out) {
    ConfigFile cfg = load_config(opt.config);
    BatchConfig batch = cfg.batch;
    batch.base.record_trajectory = !opt.trajectory_dir.empty();
    if (opt.seed) batch.master_seed = *opt.seed;
    if (opt.runs) batch.runs = *opt.runs;
    if (opt.threads) batch.parallelism = *opt.threads;

    std::vector<SimOutcome> outcomes;
    const AggregateReport report =
        run_montecarlo(batch, opt.trajectory_dir.empty() ? nullptr : &outcomes);
    write_report(out, report, opt.timing);

    if (!opt.out.empty()) {
        write_file(opt.out, [&](std::ostream& os) { write_runs_csv(os, report, opt.timing); });
    }
    if (!opt.summary.empty()) {
        write_file(opt.summary, [&](std::ostream& os) { write_summary_json(os, report, opt.timing); });
    }
    if (!opt.trajectory_dir.empty()) {
        std::filesystem::create_directories(opt.trajectory_dir);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            const RunRecord& r = report.runs[i];
            const auto path = std::filesystem::path(opt.trajectory_dir) /
                              ("run_" + std::to_string(r.run) + "_" +
                               std::string(to_string(r.planner)) + ".csv");
            export_trajectory(outcomes[i], path.string());
        }
    }
    return 0;
}

int cmd_weights(const Options& opt, std::ostream& out) {
    const ConfigFile cfg = load_config(opt.config);
    const Environment env = scenario_environment(cfg.scenario);
    const WeightMap map = build_weight_map(env, report_from(cfg, opt));
    if (opt.out.empty()) {
        write_weight_map(out, map);
    } else {
        export_weight_map(map, opt.out);
    }
    return 0;
}

int cmd_plan(const Options& opt, std::ostream& out) {
    const ConfigFile cfg = load_config(opt.config);
    const Environment env = scenario_environment(cfg.scenario);
    const auto emit = [&](std::ostream& os) {
        if (!opt.planner.empty() && parse_planner(opt.planner) == PlannerKind::LawnMower) {
            write_plan(os, lawnmower_plan(env, corner_cell(env, cfg.scenario.uav.start_corner)));
            return;
        }
        if (!opt.planner.empty() && !parse_planner(opt.planner)) {
            throw ConfigError("unknown planner '" + opt.planner + "'");
        }
        const WeightMap map = build_weight_map(env, report_from(cfg, opt));
        write_plan(os, prioritize(map), &map);
    };
    if (opt.out.empty()) {
        emit(out);
    } else {
        write_file(opt.out, emit);
    }
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weight-based survivor search simulator", "wbsearch"};
    app.require_subcommand(1);
    Options opt;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--config,-c", opt.config, "scenario config file")->required();
        sub->add_option("--out,-o", opt.out, "output file");
    };

    auto* sim = app.add_subcommand("sim", "run one scenario and print its outcome");
    common(sim);
    sim->add_option("--seed", opt.seed, "scenario seed");
    sim->add_option("--planner", opt.planner, "lawn_mower | weight_based");
    sim->add_flag("--timing", opt.timing, "print wall-clock planning time");

    auto* mc = app.add_subcommand("mc", "Monte-Carlo comparison of planners");
    common(mc);
    mc->add_option("--seed", opt.seed, "master seed");
    mc->add_option("--runs", opt.runs, "number of paired runs")->check(CLI::PositiveNumber);
    mc->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    mc->add_option("--summary", opt.summary, "write a JSON summary");
    mc->add_option("--trajectory-dir", opt.trajectory_dir, "write one trajectory CSV per run");
    mc->add_flag("--timing", opt.timing, "include wall-clock planning time");

    auto* weights = app.add_subcommand("weights", "dump the weight map for a survivor report");
    common(weights);
    weights->add_option("--x", opt.x, "reported x (m)");
    weights->add_option("--y", opt.y, "reported y (m)");
    weights->add_option("--heading", opt.heading, "reported heading (deg, CCW from +x)");

    auto* plan = app.add_subcommand("plan", "print the ordered waypoint list");
    common(plan);
    plan->add_option("--planner", opt.planner, "lawn_mower | weight_based");
    plan->add_option("--x", opt.x, "reported x (m)");
    plan->add_option("--y", opt.y, "reported y (m)");
    plan->add_option("--heading", opt.heading, "reported heading (deg, CCW from +x)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return 2;
    }

    try {
        if (sim->parsed()) return cmd_sim(opt, out);
        if (mc->parsed()) return cmd_mc(opt, out);
        if (weights->parsed()) return cmd_weights(opt, out);
        return cmd_plan(opt, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace wbsearch
