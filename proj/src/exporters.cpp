#include "wbsearch/exporters.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wbsearch/errors.hpp"

namespace wbsearch {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

SimPhase parse_phase(const std::string& s) {
    for (SimPhase p : {SimPhase::Sweeping, SimPhase::Transit, SimPhase::WeightedSearch,
                       SimPhase::Returning, SimPhase::Done}) {
        if (to_string(p) == s) return p;
    }
    throw ConfigError("unknown phase '" + s + "' in trajectory");
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ConfigError("malformed number '" + s + "' in trajectory");
    }
    return v;
}

}  // namespace

void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError(path, "cannot open for writing");
    fn(out);
    out.flush();
    if (!out) throw FileError(path, "write failed");
}

void write_trajectory(std::ostream& os, const SimOutcome& outcome) {
    os << kTrajectoryHeader << '\n';
    for (const TrajectoryRecord& r : outcome.trajectory) {
        os << fixed(r.t, 6) << ',' << to_string(r.agent) << ',' << fixed(r.x, 6) << ','
           << fixed(r.y, 6) << ',' << fixed(r.z, 6) << ',' << to_string(r.phase) << '\n';
    }
}

void export_trajectory(const SimOutcome& outcome, const std::string& path) {
    write_file(path, [&](std::ostream& os) { write_trajectory(os, outcome); });
}

std::vector<TrajectoryRecord> read_trajectory(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kTrajectoryHeader) {
        throw ConfigError("trajectory file lacks the expected header");
    }
    std::vector<TrajectoryRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 6) throw ConfigError("trajectory row needs 6 fields: " + line);
        TrajectoryRecord r;
        r.t = parse_double(f[0]);
        if (f[1] == "uav") {
            r.agent = Agent::Uav;
        } else if (f[1] == "survivor") {
            r.agent = Agent::Survivor;
        } else {
            throw ConfigError("unknown agent '" + f[1] + "' in trajectory");
        }
        r.x = parse_double(f[2]);
        r.y = parse_double(f[3]);
        r.z = parse_double(f[4]);
        r.phase = parse_phase(f[5]);
        out.push_back(r);
    }
    return out;
}

void write_weight_map(std::ostream& os, const WeightMap& map) {
    const Environment& env = map.env();
    for (int row = 0; row < env.rows(); ++row) {
        for (int col = 0; col < env.cols(); ++col) {
            if (col > 0) os << ' ';
            os << map.weights()[env.linear({col, row})];
        }
        os << '\n';
    }
}

void export_weight_map(const WeightMap& map, const std::string& path) {
    write_file(path, [&](std::ostream& os) { write_weight_map(os, map); });
}

void write_plan(std::ostream& os, const PrioritizedPlan& plan, const WeightMap* map) {
    os << "order col row" << (map ? " weight quadrant" : "") << '\n';
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const GridIndex g = plan[i];
        os << i << ' ' << g.col << ' ' << g.row;
        if (map) {
            const Quadrant q =
                classify(map->survivor_cell(), map->heading(), g, map->env());
            os << ' ' << map->at(g) << ' ' << to_string(q);
        }
        os << '\n';
    }
}

void write_outcome_summary(std::ostream& os, const SimOutcome& o, bool timing) {
    os << "planner        " << to_string(o.planner) << '\n';
    os << "found          " << (o.found ? "yes" : "no") << '\n';
    os << "search_time_s  " << fixed(o.search_time, 3) << '\n';
    os << "iterations     " << o.iterations << '\n';
    os << "steps          " << o.steps << '\n';
    os << "report_time_s  " << (o.report_time ? fixed(*o.report_time, 3) : "-") << '\n';
    if (o.report) {
        os << "report         (" << fixed(o.report->position.x, 3) << ", "
           << fixed(o.report->position.y, 3) << ") heading " << fixed(o.report->heading, 3)
           << '\n';
    }
    if (o.return_time) os << "return_time_s  " << fixed(*o.return_time, 3) << '\n';
    if (timing) os << "decision_time_s " << fixed(o.decision_time, 6) << '\n';
    os << "phases        ";
    for (const PhaseChange& p : o.phase_log) os << ' ' << to_string(p.phase) << '@' << fixed(p.t, 1);
    os << '\n';
}

void write_report(std::ostream& os, const AggregateReport& report, bool timing) {
    os << "master_seed " << report.master_seed << "  runs "
       << (report.planners.empty() ? 0 : report.planners.front().runs) << '\n';
    os << std::left << std::setw(14) << "planner" << std::right << std::setw(7) << "found"
       << std::setw(9) << "rate" << std::setw(12) << "T_mean" << std::setw(12) << "T_median"
       << std::setw(12) << "T_std" << std::setw(12) << "it_mean" << std::setw(12) << "it_median";
    if (timing) os << std::setw(14) << "dec_mean_ms" << std::setw(14) << "dec_median_ms";
    os << '\n';
    for (const PlannerSummary& p : report.planners) {
        os << std::left << std::setw(14) << to_string(p.planner) << std::right << std::setw(7)
           << p.found << std::setw(9) << fixed(p.find_rate, 3) << std::setw(12)
           << fixed(p.search_time.mean, 2) << std::setw(12) << fixed(p.search_time.median, 2)
           << std::setw(12) << fixed(p.search_time.stddev, 2) << std::setw(12)
           << fixed(p.iterations.mean, 1) << std::setw(12) << fixed(p.iterations.median, 1);
        if (timing) {
            os << std::setw(14) << fixed(p.decision_time.mean * 1e3, 4) << std::setw(14)
               << fixed(p.decision_time.median * 1e3, 4);
        }
        os << '\n';
    }
    if (report.speedup) os << "speedup (mean T_L / mean T_W)   " << fixed(*report.speedup, 4) << '\n';
    if (report.median_time_ratio) {
        os << "median paired T_W / T_L         " << fixed(*report.median_time_ratio, 4) << "  ("
           << report.paired_found << " paired runs)\n";
    }
}

void write_runs_csv(std::ostream& os, const AggregateReport& report, bool timing) {
    os << "run,planner,seed,found,search_time,iterations,report_time";
    if (timing) os << ",decision_time";
    os << '\n';
    for (const RunRecord& r : report.runs) {
        os << r.run << ',' << to_string(r.planner) << ',' << r.seed << ',' << (r.found ? 1 : 0)
           << ',' << fixed(r.search_time, 6) << ',' << r.iterations << ','
           << (r.report_time ? fixed(*r.report_time, 6) : "");
        if (timing) os << ',' << fixed(r.decision_time, 9);
        os << '\n';
    }
}

void write_summary_json(std::ostream& os, const AggregateReport& report, bool timing) {
    using nlohmann::json;
    const auto stats = [](const Stats& s) {
        return json{{"count", s.count}, {"mean", s.mean}, {"median", s.median}, {"stddev", s.stddev}};
    };
    json doc;
    doc["master_seed"] = report.master_seed;
    json planners = json::array();
    for (const PlannerSummary& p : report.planners) {
        json entry{{"planner", to_string(p.planner)},
                   {"runs", p.runs},
                   {"found", p.found},
                   {"find_rate", p.find_rate},
                   {"search_time", stats(p.search_time)},
                   {"iterations", stats(p.iterations)}};
        if (timing) entry["decision_time"] = stats(p.decision_time);
        planners.push_back(std::move(entry));
    }
    doc["planners"] = std::move(planners);
    doc["speedup"] = report.speedup ? json(*report.speedup) : json(nullptr);
    doc["median_time_ratio"] =
        report.median_time_ratio ? json(*report.median_time_ratio) : json(nullptr);
    doc["paired_found"] = report.paired_found;
    os << doc.dump(2) << '\n';
}

}  // namespace wbsearch
