#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wbsearch/grid_env.hpp"
#include "wbsearch/planners.hpp"
#include "wbsearch/weight_core.hpp"
#include "wbsearch/world.hpp"

namespace wbsearch {

enum class Corner { SouthWest, SouthEast, NorthWest, NorthEast };

/// How the survivor's start position is chosen when a scenario is realized.
enum class StartMode { Fixed, Uniform, NearObserver };

struct ObserverSpec {
    WorldPoint position;
    double radius = 0.0;
};

struct ScenarioConfig {
    double width = 20.0;
    double height = 20.0;
    std::optional<double> cell_size;  // defaults to the UAV footprint
    PlannerKind planner = PlannerKind::WeightBased;

    struct Uav {
        double max_speed = 1.0;
        double altitude = 1.0;
        double fov_half_angle = 45.0;
        double flight_time = 1800.0;
        Corner start_corner = Corner::SouthWest;
        std::optional<double> arrival_tolerance;  // defaults to cell_size / 10
    } uav;

    struct Survivor {
        WorldPoint start{10.0, 10.0};
        double heading = 0.0;
        double speed = 0.6;
        SurvivorMotion motion = SurvivorMotion::LinearFixedHeading;
        double change_period = 60.0;
        StartMode start_mode = StartMode::Fixed;
        bool random_heading = false;
    } survivor;

    std::vector<ObserverSpec> observers;
    int random_observers = 0;  // placed uniformly in the environment per realization
    double random_observer_radius = 30.0;

    double dt = 0.1;
    std::uint64_t seed = 1;
    bool return_to_start = false;
    bool record_trajectory = true;
};

/// Throws ConfigError describing the first invalid field.
void validate(const ScenarioConfig& config);

/// Resolves every randomized quantity from `seed`: the returned config has
/// fixed observers, survivor start and heading. Same seed, same draw.
ScenarioConfig realize(const ScenarioConfig& config, std::uint64_t seed);

Environment scenario_environment(const ScenarioConfig& config);
GridIndex corner_cell(const Environment& env, Corner corner) noexcept;

enum class SimPhase { Sweeping, Transit, WeightedSearch, Returning, Done };
enum class SimEvent { ReportReceived, ArrivedAtReportCell, SurvivorFound, PlanExhausted, TimeExhausted };

std::string_view to_string(SimPhase phase) noexcept;
std::string_view to_string(SimEvent event) noexcept;

/// Scenario state machine. PlanExhausted in Returning means the UAV is back
/// at its start. Throws std::logic_error for an event the phase cannot take.
SimPhase phase_transition(SimPhase phase, SimEvent event, bool return_to_start);

enum class Agent { Uav, Survivor };
std::string_view to_string(Agent agent) noexcept;

struct TrajectoryRecord {
    double t = 0.0;
    Agent agent = Agent::Uav;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    SimPhase phase = SimPhase::Sweeping;
};

struct PhaseChange {
    double t = 0.0;
    SimPhase phase = SimPhase::Sweeping;
};

struct SimOutcome {
    PlannerKind planner = PlannerKind::LawnMower;
    bool found = false;
    // Time of detection when found, otherwise the time the run stopped.
    double search_time = 0.0;
    long long iterations = 0;
    long long steps = 0;
    double decision_time = 0.0;  // wall-clock seconds inside planning calls
    std::optional<double> report_time;
    std::optional<SurvivorReport> report;
    std::optional<double> return_time;  // duration of the Returning leg
    std::vector<TrajectoryRecord> trajectory;
    std::vector<PhaseChange> phase_log;
};

/// Fixed-step run of one scenario. Randomized quantities are realized from
/// config.seed first.
SimOutcome run(const ScenarioConfig& config);

}  // namespace wbsearch
