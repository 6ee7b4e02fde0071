#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wbsearch/planners.hpp"
#include "wbsearch/sim_engine.hpp"

namespace wbsearch {

struct BatchConfig {
    ScenarioConfig base;
    int runs = 1;
    std::vector<PlannerKind> planners{PlannerKind::LawnMower, PlannerKind::WeightBased};
    std::uint64_t master_seed = 1;
    int parallelism = 1;
};

/// A single run failed; carries the run index.
class RunError : public std::runtime_error {
public:
    RunError(int run, const std::string& what)
        : std::runtime_error("run " + std::to_string(run) + ": " + what), run_(run) {}
    int run() const noexcept { return run_; }

private:
    int run_;
};

struct RunRecord {
    int run = 0;
    PlannerKind planner = PlannerKind::LawnMower;
    std::uint64_t seed = 0;
    bool found = false;
    double search_time = 0.0;
    long long iterations = 0;
    double decision_time = 0.0;
    std::optional<double> report_time;
};

struct Stats {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // sample standard deviation
};

Stats summarize(std::vector<double> values);

struct PlannerSummary {
    PlannerKind planner = PlannerKind::LawnMower;
    int runs = 0;
    int found = 0;
    double find_rate = 0.0;
    // time metrics over found runs only
    Stats search_time;
    Stats iterations;
    Stats decision_time;
};

struct AggregateReport {
    std::uint64_t master_seed = 0;
    std::vector<PlannerSummary> planners;
    std::vector<RunRecord> runs;  // ordered by run index, then planner order
    // Present when both planners ran and each found at least once.
    std::optional<double> speedup;             // mean T_L / mean T_W
    std::optional<double> median_time_ratio;   // median of paired T_W / T_L
    int paired_found = 0;                      // runs where both planners found
};

/// Seed used for run `index`; every planner sees the same one.
std::uint64_t run_seed(std::uint64_t master_seed, int index) noexcept;

/// Runs every (run, planner) pair, fanned out over `parallelism` OpenMP
/// threads. Output does not depend on the thread count. When `outcomes` is
/// given it receives the full outcomes in report order.
AggregateReport run_montecarlo(const BatchConfig& cfg, std::vector<SimOutcome>* outcomes = nullptr);

/// Single-threaded reference of run_montecarlo.
AggregateReport run_montecarlo_serial(const BatchConfig& cfg,
                                      std::vector<SimOutcome>* outcomes = nullptr);

AggregateReport aggregate(std::uint64_t master_seed, const std::vector<PlannerKind>& planners,
                          std::vector<RunRecord> runs);

}  // namespace wbsearch
