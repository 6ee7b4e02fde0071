#include "wbsearch/world.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wbsearch {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

// Mirrors `v` into [0, extent]; returns true when an odd number of bounces
// happened (the velocity component flips).
bool reflect(double& v, double extent) {
    bool flipped = false;
    while (v < 0.0 || v > extent) {
        v = v < 0.0 ? -v : 2.0 * extent - v;
        flipped = !flipped;
    }
    return flipped;
}

}  // namespace

SurvivorState survivor_step(SurvivorState s, double dt, const Environment& env) {
    if (s.speed > 0.0) {
        const double step = s.speed * dt;
        double x = s.position.x + step * std::cos(s.heading * kDegToRad);
        double y = s.position.y + step * std::sin(s.heading * kDegToRad);
        const bool flip_x = reflect(x, env.width());
        const bool flip_y = reflect(y, env.height());
        double heading = s.heading;
        if (flip_x) heading = 180.0 - heading;
        if (flip_y) heading = -heading;
        s.position = {x, y};
        s.heading = normalize_heading(heading);
    }
    if (s.motion == SurvivorMotion::RandomHeadingPersistence && s.change_period > 0.0) {
        s.since_change += dt;
        while (s.since_change >= s.change_period) {
            s.since_change -= s.change_period;
            s.heading = normalize_heading(s.rng.uniform(0.0, 360.0));
        }
    }
    return s;
}

std::optional<SurvivorReport> observer_check(ObserverState& o, const SurvivorState& s, double t) {
    if (o.has_reported) return std::nullopt;
    const double d = std::hypot(s.position.x - o.position.x, s.position.y - o.position.y);
    if (d > o.radius) return std::nullopt;
    o.has_reported = true;
    return SurvivorReport{s.position, s.heading, t};
}

UavStepResult uav_advance(const UavState& u, WorldPoint target, double distance_budget) {
    UavStepResult out{u, false, 0.0};
    const double dx = target.x - u.position.x;
    const double dy = target.y - u.position.y;
    const double dist = std::hypot(dx, dy);
    if (dist <= u.arrival_tolerance) {
        out.arrived = true;
        return out;
    }
    const double move = std::min(std::max(distance_budget, 0.0), dist);
    if (move >= dist) {
        out.state.position = target;
    } else {
        out.state.position = {u.position.x + dx / dist * move, u.position.y + dy / dist * move};
    }
    out.travelled = move;
    out.arrived = dist - move <= u.arrival_tolerance;
    return out;
}

UavStepResult uav_step(const UavState& u, WorldPoint target, double dt) {
    return uav_advance(u, target, u.max_speed * dt);
}

bool uav_detects(const UavState& u, const SurvivorState& s) noexcept {
    const double half = u.footprint / 2.0;
    return std::abs(u.position.x - s.position.x) <= half &&
           std::abs(u.position.y - s.position.y) <= half;
}

}  // namespace wbsearch
