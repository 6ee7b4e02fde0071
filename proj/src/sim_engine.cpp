#include "wbsearch/sim_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wbsearch/errors.hpp"
#include "wbsearch/rng.hpp"

namespace wbsearch {

namespace {

// rng streams per realization
constexpr std::uint64_t kObserverStream = 1;
constexpr std::uint64_t kSurvivorStartStream = 2;
constexpr std::uint64_t kSurvivorMotionStream = 3;

void require(bool ok, const std::string& what) {
    if (!ok) throw ConfigError(what);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

double cell_size_of(const ScenarioConfig& c) {
    return c.cell_size.value_or(footprint_width(c.uav.altitude, c.uav.fov_half_angle));
}

WorldPoint point_in_disc(Rng& rng, WorldPoint center, double radius, const Environment& env) {
    // area-uniform, rejected against the environment
    for (;;) {
        const double r = radius * std::sqrt(rng.canonical());
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const WorldPoint p{center.x + r * std::cos(a), center.y + r * std::sin(a)};
        if (env.contains(p)) return p;
    }
}

class PlanningClock {
public:
    template <typename Fn>
    auto time(Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        auto result = fn();
        total_ += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    double total() const noexcept { return total_; }

private:
    double total_ = 0.0;
};

}  // namespace

void validate(const ScenarioConfig& c) {
    require(positive(c.width) && positive(c.height), "env.width and env.height must be positive");
    require(positive(c.uav.altitude), "uav.altitude must be positive");
    require(std::isfinite(c.uav.fov_half_angle) && c.uav.fov_half_angle > 0.0 &&
                c.uav.fov_half_angle < 90.0,
            "uav.fov_half_angle must lie in (0, 90)");
    require(!c.cell_size || positive(*c.cell_size), "env.cell_size must be positive");
    const double cell = cell_size_of(c);
    require(cell <= std::min(c.width, c.height), "cell size exceeds the environment extent");
    require(positive(c.uav.max_speed), "uav.max_speed must be positive");
    require(positive(c.uav.flight_time), "uav.flight_time must be positive");
    require(!c.uav.arrival_tolerance || (std::isfinite(*c.uav.arrival_tolerance) &&
                                         *c.uav.arrival_tolerance >= 0.0),
            "uav.arrival_tolerance must be non-negative");
    require(positive(c.dt) && c.dt <= 1.0, "sim.dt must lie in (0, 1]");
    require(std::isfinite(c.survivor.speed) && c.survivor.speed >= 0.0,
            "survivor.speed must be non-negative");
    require(std::isfinite(c.survivor.heading), "survivor.heading must be finite");
    require(c.survivor.motion != SurvivorMotion::RandomHeadingPersistence ||
                positive(c.survivor.change_period),
            "survivor.change_period must be positive for random_heading motion");
    if (c.survivor.start_mode == StartMode::Fixed) {
        const WorldPoint p = c.survivor.start;
        require(std::isfinite(p.x) && std::isfinite(p.y) && p.x >= 0.0 && p.y >= 0.0 &&
                    p.x <= c.width && p.y <= c.height,
                "survivor start lies outside the environment");
    }
    require(c.survivor.start_mode != StartMode::NearObserver || !c.observers.empty(),
            "survivor.start = near_observer needs a fixed observer");
    for (const auto& o : c.observers) {
        require(positive(o.radius), "observer radius must be positive");
        require(o.position.x >= 0.0 && o.position.y >= 0.0 && o.position.x <= c.width &&
                    o.position.y <= c.height,
                "observer lies outside the environment");
    }
    require(c.random_observers >= 0, "observers.count must be non-negative");
    require(c.random_observers == 0 || positive(c.random_observer_radius),
            "observers.radius must be positive");
}

Environment scenario_environment(const ScenarioConfig& c) {
    return make_environment(c.width, c.height, cell_size_of(c));
}

GridIndex corner_cell(const Environment& env, Corner corner) noexcept {
    const int right = env.cols() - 1;
    const int top = env.rows() - 1;
    switch (corner) {
        case Corner::SouthWest: return {0, 0};
        case Corner::SouthEast: return {right, 0};
        case Corner::NorthWest: return {0, top};
        case Corner::NorthEast: return {right, top};
    }
    return {0, 0};
}

ScenarioConfig realize(const ScenarioConfig& config, std::uint64_t seed) {
    validate(config);
    const Environment env = scenario_environment(config);
    ScenarioConfig out = config;
    out.seed = seed;

    Rng observer_rng(derive_seed(seed, 0, kObserverStream));
    for (int i = 0; i < config.random_observers; ++i) {
        const double x = observer_rng.uniform(0.0, config.width);
        const double y = observer_rng.uniform(0.0, config.height);
        out.observers.push_back({{x, y}, config.random_observer_radius});
    }
    out.random_observers = 0;

    Rng start_rng(derive_seed(seed, 0, kSurvivorStartStream));
    switch (config.survivor.start_mode) {
        case StartMode::Fixed: break;
        case StartMode::Uniform:
            out.survivor.start = {start_rng.uniform(0.0, config.width),
                                  start_rng.uniform(0.0, config.height)};
            break;
        case StartMode::NearObserver: {
            const ObserverSpec& o = out.observers.front();
            out.survivor.start = point_in_disc(start_rng, o.position, o.radius, env);
            break;
        }
    }
    out.survivor.start_mode = StartMode::Fixed;
    if (config.survivor.random_heading) {
        out.survivor.heading = start_rng.uniform(0.0, 360.0);
        out.survivor.random_heading = false;
    }
    return out;
}

std::string_view to_string(SimPhase phase) noexcept {
    switch (phase) {
        case SimPhase::Sweeping: return "sweeping";
        case SimPhase::Transit: return "transit";
        case SimPhase::WeightedSearch: return "weighted_search";
        case SimPhase::Returning: return "returning";
        case SimPhase::Done: return "done";
    }
    return "?";
}

std::string_view to_string(SimEvent event) noexcept {
    switch (event) {
        case SimEvent::ReportReceived: return "report_received";
        case SimEvent::ArrivedAtReportCell: return "arrived_at_report_cell";
        case SimEvent::SurvivorFound: return "survivor_found";
        case SimEvent::PlanExhausted: return "plan_exhausted";
        case SimEvent::TimeExhausted: return "time_exhausted";
    }
    return "?";
}

std::string_view to_string(Agent agent) noexcept {
    return agent == Agent::Uav ? "uav" : "survivor";
}

SimPhase phase_transition(SimPhase phase, SimEvent event, bool return_to_start) {
    const SimPhase after_found = return_to_start ? SimPhase::Returning : SimPhase::Done;
    switch (phase) {
        case SimPhase::Sweeping:
            switch (event) {
                case SimEvent::ReportReceived: return SimPhase::Transit;
                case SimEvent::SurvivorFound: return after_found;
                case SimEvent::PlanExhausted:
                case SimEvent::TimeExhausted: return SimPhase::Done;
                default: break;
            }
            break;
        case SimPhase::Transit:
            switch (event) {
                case SimEvent::ArrivedAtReportCell: return SimPhase::WeightedSearch;
                case SimEvent::SurvivorFound: return after_found;
                case SimEvent::TimeExhausted: return SimPhase::Done;
                default: break;
            }
            break;
        case SimPhase::WeightedSearch:
            switch (event) {
                case SimEvent::SurvivorFound: return after_found;
                case SimEvent::PlanExhausted:
                case SimEvent::TimeExhausted: return SimPhase::Done;
                default: break;
            }
            break;
        case SimPhase::Returning:
            if (event == SimEvent::PlanExhausted || event == SimEvent::TimeExhausted) {
                return SimPhase::Done;
            }
            break;
        case SimPhase::Done: break;
    }
    throw std::logic_error("illegal event " + std::string(to_string(event)) + " in phase " +
                           std::string(to_string(phase)));
}

SimOutcome run(const ScenarioConfig& input) {
    const ScenarioConfig config = realize(input, input.seed);
    const Environment env = scenario_environment(config);
    const double dt = config.dt;

    SimOutcome out;
    out.planner = config.planner;
    PlanningClock clock;

    UavState uav;
    uav.altitude = config.uav.altitude;
    uav.max_speed = config.uav.max_speed;
    uav.footprint = footprint_width(config.uav.altitude, config.uav.fov_half_angle);
    uav.flight_time_budget = config.uav.flight_time;
    uav.arrival_tolerance = config.uav.arrival_tolerance.value_or(env.cell_size() / 10.0);
    const GridIndex start_cell = corner_cell(env, config.uav.start_corner);
    const WorldPoint home = cell_center(env, start_cell);
    uav.position = home;

    SurvivorState survivor;
    survivor.position = config.survivor.start;
    survivor.heading = normalize_heading(config.survivor.heading);
    survivor.speed = config.survivor.speed;
    survivor.motion = config.survivor.motion;
    survivor.change_period = config.survivor.change_period;
    survivor.rng = Rng(derive_seed(config.seed, 0, kSurvivorMotionStream));

    std::vector<ObserverState> observers;
    observers.reserve(config.observers.size());
    for (const auto& o : config.observers) observers.push_back({o.position, o.radius, false});

    const PrioritizedPlan sweep =
        clock.time([&] { return lawnmower_plan(env, start_cell); });
    PrioritizedPlan weighted;
    PlanCursor cursor(sweep);

    SimPhase phase = SimPhase::Sweeping;
    out.phase_log.push_back({0.0, phase});
    const auto transition = [&](SimEvent event, double t) {
        phase = phase_transition(phase, event, config.return_to_start);
        out.phase_log.push_back({t, phase});
    };

    std::optional<WorldPoint> target;
    if (auto w = cursor.next()) target = cell_center(env, *w);

    const auto max_steps =
        static_cast<long long>(std::floor(config.uav.flight_time / dt + 1e-9));
    double found_at = 0.0;
    if (config.record_trajectory) {
        out.trajectory.reserve(static_cast<std::size_t>(std::min(max_steps, 200000LL)) * 2);
    }

    long long step = 0;
    for (step = 1; step <= max_steps && phase != SimPhase::Done; ++step) {
        const double t = static_cast<double>(step) * dt;
        survivor = survivor_step(std::move(survivor), dt, env);

        // Spend the whole step's travel budget, chaining through waypoints.
        bool exhausted = false;
        bool home_reached = false;
        double budget = uav.max_speed * dt;
        while (target) {
            const UavStepResult r = uav_advance(uav, *target, budget);
            uav = r.state;
            budget -= r.travelled;
            if (!r.arrived) break;
            if (phase == SimPhase::Transit) {
                transition(SimEvent::ArrivedAtReportCell, t);
                cursor = PlanCursor(weighted, 1);
            } else if (phase == SimPhase::Returning) {
                target.reset();
                home_reached = true;
                break;
            }
            if (auto w = cursor.next()) {
                target = cell_center(env, *w);
            } else {
                target.reset();
                exhausted = true;
            }
            if (budget <= 0.0) break;
        }

        if (config.record_trajectory) {
            out.trajectory.push_back({t, Agent::Uav, uav.position.x, uav.position.y, uav.altitude, phase});
            out.trajectory.push_back(
                {t, Agent::Survivor, survivor.position.x, survivor.position.y, 0.0, phase});
        }

        if (phase == SimPhase::Returning) {
            if (home_reached) {
                out.return_time = t - found_at;
                transition(SimEvent::PlanExhausted, t);
            }
            continue;
        }

        if (uav_detects(uav, survivor)) {
            out.found = true;
            out.search_time = t;
            out.iterations = step;
            found_at = t;
            transition(SimEvent::SurvivorFound, t);
            if (phase == SimPhase::Returning) target = home;
            continue;
        }

        for (auto& o : observers) {
            auto report = observer_check(o, survivor, t);
            if (!report || out.report_time) continue;
            out.report_time = t;
            out.report = *report;
            if (config.planner == PlannerKind::WeightBased && phase == SimPhase::Sweeping) {
                weighted = clock.time([&] { return weight_based_plan(env, *report); });
                transition(SimEvent::ReportReceived, t);
                target = cell_center(env, weighted[0]);
                exhausted = false;
            }
        }

        if (exhausted) transition(SimEvent::PlanExhausted, t);
    }
    out.steps = step - 1;

    if (phase != SimPhase::Done) {
        const double t = static_cast<double>(out.steps) * dt;
        if (phase == SimPhase::Returning) out.return_time = t - found_at;
        transition(SimEvent::TimeExhausted, t);
    }
    if (!out.found) {
        out.search_time = static_cast<double>(out.steps) * dt;
        out.iterations = out.steps;
    }
    out.decision_time = clock.total();
    return out;
}

}  // namespace wbsearch
