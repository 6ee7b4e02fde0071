#include "wbsearch/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "wbsearch/errors.hpp"
#include "wbsearch/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace wbsearch {

namespace {

void check_batch(const BatchConfig& cfg) {
    if (cfg.runs < 1) throw ConfigError("mc.runs must be at least 1");
    if (cfg.planners.empty()) throw ConfigError("mc.planners must name at least one planner");
    if (cfg.parallelism < 1) throw ConfigError("mc.parallelism must be at least 1");
}

AggregateReport run_batch(const BatchConfig& cfg, std::vector<SimOutcome>* outcomes,
                          bool parallel) {
    check_batch(cfg);
    const auto planners = static_cast<long long>(cfg.planners.size());
    const long long tasks = static_cast<long long>(cfg.runs) * planners;

    std::vector<SimOutcome> results(static_cast<std::size_t>(tasks));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(tasks));

    const auto execute = [&](long long task) {
        const int run_index = static_cast<int>(task / planners);
        ScenarioConfig scenario = cfg.base;
        scenario.planner = cfg.planners[static_cast<std::size_t>(task % planners)];
        scenario.seed = run_seed(cfg.master_seed, run_index);
        try {
            results[static_cast<std::size_t>(task)] = run(scenario);
        } catch (...) {
            errors[static_cast<std::size_t>(task)] = std::current_exception();
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(cfg.parallelism)
        for (long long task = 0; task < tasks; ++task) execute(task);
    } else {
        for (long long task = 0; task < tasks; ++task) execute(task);
    }

    for (long long task = 0; task < tasks; ++task) {
        if (!errors[static_cast<std::size_t>(task)]) continue;
        const int run_index = static_cast<int>(task / planners);
        try {
            std::rethrow_exception(errors[static_cast<std::size_t>(task)]);
        } catch (const std::exception& e) {
            throw RunError(run_index, e.what());
        }
    }

    std::vector<RunRecord> records;
    records.reserve(results.size());
    for (long long task = 0; task < tasks; ++task) {
        const SimOutcome& o = results[static_cast<std::size_t>(task)];
        const int run_index = static_cast<int>(task / planners);
        records.push_back({run_index, o.planner, run_seed(cfg.master_seed, run_index), o.found,
                           o.search_time, o.iterations, o.decision_time, o.report_time});
    }
    if (outcomes) *outcomes = std::move(results);
    return aggregate(cfg.master_seed, cfg.planners, std::move(records));
}

}  // namespace

std::uint64_t run_seed(std::uint64_t master_seed, int index) noexcept {
    return derive_seed(master_seed, static_cast<std::uint64_t>(index));
}

Stats summarize(std::vector<double> values) {
    Stats s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    const std::size_t mid = values.size() / 2;
    s.median = values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / (n - 1.0));
    }
    return s;
}

AggregateReport aggregate(std::uint64_t master_seed, const std::vector<PlannerKind>& planners,
                          std::vector<RunRecord> runs) {
    AggregateReport report;
    report.master_seed = master_seed;

    for (PlannerKind kind : planners) {
        PlannerSummary summary;
        summary.planner = kind;
        std::vector<double> times, iterations, decisions;
        for (const RunRecord& r : runs) {
            if (r.planner != kind) continue;
            ++summary.runs;
            if (!r.found) continue;
            ++summary.found;
            times.push_back(r.search_time);
            iterations.push_back(static_cast<double>(r.iterations));
            decisions.push_back(r.decision_time);
        }
        summary.find_rate =
            summary.runs > 0 ? static_cast<double>(summary.found) / summary.runs : 0.0;
        summary.search_time = summarize(std::move(times));
        summary.iterations = summarize(std::move(iterations));
        summary.decision_time = summarize(std::move(decisions));
        report.planners.push_back(summary);
    }

    const auto find = [&](PlannerKind kind) -> const PlannerSummary* {
        for (const auto& p : report.planners) {
            if (p.planner == kind) return &p;
        }
        return nullptr;
    };
    const PlannerSummary* lawn = find(PlannerKind::LawnMower);
    const PlannerSummary* weighted = find(PlannerKind::WeightBased);
    if (lawn && weighted && lawn->found > 0 && weighted->found > 0 &&
        weighted->search_time.mean > 0.0) {
        report.speedup = lawn->search_time.mean / weighted->search_time.mean;

        std::vector<double> ratios;
        for (const RunRecord& l : runs) {
            if (l.planner != PlannerKind::LawnMower || !l.found) continue;
            for (const RunRecord& w : runs) {
                if (w.run == l.run && w.planner == PlannerKind::WeightBased && w.found) {
                    ratios.push_back(w.search_time / l.search_time);
                }
            }
        }
        report.paired_found = static_cast<int>(ratios.size());
        if (!ratios.empty()) report.median_time_ratio = summarize(std::move(ratios)).median;
    }

    report.runs = std::move(runs);
    return report;
}

AggregateReport run_montecarlo(const BatchConfig& cfg, std::vector<SimOutcome>* outcomes) {
    return run_batch(cfg, outcomes, true);
}

AggregateReport run_montecarlo_serial(const BatchConfig& cfg, std::vector<SimOutcome>* outcomes) {
    return run_batch(cfg, outcomes, false);
}

}  // namespace wbsearch
