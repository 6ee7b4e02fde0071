#pragma once

#include <optional>

#include "wbsearch/grid_env.hpp"
#include "wbsearch/rng.hpp"
#include "wbsearch/weight_core.hpp"

namespace wbsearch {

enum class SurvivorMotion { LinearFixedHeading, RandomHeadingPersistence };

struct SurvivorState {
    WorldPoint position;
    double heading = 0.0;  // degrees, CCW from +x
    double speed = 0.0;    // m/s
    SurvivorMotion motion = SurvivorMotion::LinearFixedHeading;
    double change_period = 0.0;  // s, RandomHeadingPersistence only
    double since_change = 0.0;
    Rng rng{};
};

/// Moves the survivor speed*dt along its heading, mirroring off the walls.
/// With RandomHeadingPersistence the heading is redrawn from `rng` each time
/// a full change_period has elapsed, after the move.
SurvivorState survivor_step(SurvivorState s, double dt, const Environment& env);

struct ObserverState {
    WorldPoint position;
    double radius = 0.0;
    bool has_reported = false;
};

/// Single-shot: reports the survivor's exact position and heading the first
/// time it is within `radius` (inclusive).
std::optional<SurvivorReport> observer_check(ObserverState& o, const SurvivorState& s, double t);

struct UavState {
    WorldPoint position;
    double altitude = 0.0;
    double max_speed = 0.0;
    double footprint = 0.0;  // side of the square ground footprint
    double flight_time_budget = 0.0;
    double arrival_tolerance = 0.0;
};

struct UavStepResult {
    UavState state;
    bool arrived = false;
    double travelled = 0.0;
};

/// Straight-line move of at most `distance_budget` toward `target`.
UavStepResult uav_advance(const UavState& u, WorldPoint target, double distance_budget);

/// One kinematic step of at most max_speed * dt.
UavStepResult uav_step(const UavState& u, WorldPoint target, double dt);

/// Square footprint test, boundary inclusive.
bool uav_detects(const UavState& u, const SurvivorState& s) noexcept;

}  // namespace wbsearch
