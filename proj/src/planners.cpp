#include "wbsearch/planners.hpp"

#include "wbsearch/errors.hpp"

namespace wbsearch {

std::string_view to_string(PlannerKind kind) noexcept {
    return kind == PlannerKind::LawnMower ? "lawn_mower" : "weight_based";
}

std::optional<PlannerKind> parse_planner(std::string_view name) noexcept {
    if (name == "lawn_mower" || name == "lawnmower") return PlannerKind::LawnMower;
    if (name == "weight_based" || name == "weighted") return PlannerKind::WeightBased;
    return std::nullopt;
}

PrioritizedPlan lawnmower_plan(const Environment& env, GridIndex start) {
    if (!env.contains(start) || !is_corner(env, start)) {
        throw InvalidStart("lawn-mower sweep must start at a grid corner");
    }
    const int rows = env.rows();
    const int cols = env.cols();
    const int row_step = start.row == 0 ? 1 : -1;
    bool left_to_right = start.col == 0;

    PrioritizedPlan plan;
    plan.waypoints.reserve(env.cell_count());
    for (int r = 0, row = start.row; r < rows; ++r, row += row_step) {
        for (int c = 0; c < cols; ++c) {
            plan.waypoints.push_back({left_to_right ? c : cols - 1 - c, row});
        }
        left_to_right = !left_to_right;
    }
    return plan;
}

PrioritizedPlan weight_based_plan(const Environment& env, const SurvivorReport& report) {
    return prioritize(build_weight_map(env, report));
}

}  // namespace wbsearch
