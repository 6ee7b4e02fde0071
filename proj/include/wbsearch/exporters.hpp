#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "wbsearch/montecarlo.hpp"
#include "wbsearch/sim_engine.hpp"
#include "wbsearch/weight_core.hpp"

namespace wbsearch {

inline constexpr const char* kTrajectoryHeader = "t,agent,x,y,z,phase";

/// CSV with kTrajectoryHeader, rows in time order, six decimals.
void write_trajectory(std::ostream& os, const SimOutcome& outcome);
void export_trajectory(const SimOutcome& outcome, const std::string& path);

/// Parses what write_trajectory emits. Throws ConfigError on malformed rows.
std::vector<TrajectoryRecord> read_trajectory(std::istream& is);

/// One grid row per line (y-min first), space-separated integers.
void write_weight_map(std::ostream& os, const WeightMap& map);
void export_weight_map(const WeightMap& map, const std::string& path);

void write_plan(std::ostream& os, const PrioritizedPlan& plan, const WeightMap* map = nullptr);

/// Human-readable single-run summary. Wall-clock planning time is printed
/// only with `timing`, so default output is byte-stable.
void write_outcome_summary(std::ostream& os, const SimOutcome& outcome, bool timing);

/// Aligned plain-text table of an AggregateReport.
void write_report(std::ostream& os, const AggregateReport& report, bool timing);

void write_runs_csv(std::ostream& os, const AggregateReport& report, bool timing);

/// Machine-readable summary (JSON).
void write_summary_json(std::ostream& os, const AggregateReport& report, bool timing);

/// Opens `path` for writing, runs `fn` on the stream, throws FileError on failure.
void write_file(const std::string& path, const std::function<void(std::ostream&)>& fn);

}  // namespace wbsearch
