#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "wbsearch/grid_env.hpp"
#include "wbsearch/weight_core.hpp"

namespace wbsearch {

enum class PlannerKind { LawnMower, WeightBased };

std::string_view to_string(PlannerKind kind) noexcept;
std::optional<PlannerKind> parse_planner(std::string_view name) noexcept;

/// Boustrophedon sweep by rows starting at a grid corner. Consecutive
/// waypoints are 4-neighbours. Throws InvalidStart for a non-corner start.
PrioritizedPlan lawnmower_plan(const Environment& env, GridIndex start);

/// prioritize(build_weight_map(env, report)); begins at the reported cell.
PrioritizedPlan weight_based_plan(const Environment& env, const SurvivorReport& report);

/// Hands out waypoints of a plan one at a time. Does not own the plan.
class PlanCursor {
public:
    explicit PlanCursor(const PrioritizedPlan& plan, std::size_t start = 0) noexcept
        : plan_(&plan), next_index_(start < plan.size() ? start : plan.size()) {}

    /// nullopt once exhausted; stays exhausted.
    std::optional<GridIndex> next() noexcept {
        if (next_index_ >= plan_->size()) return std::nullopt;
        return (*plan_)[next_index_++];
    }

    std::size_t next_index() const noexcept { return next_index_; }
    bool exhausted() const noexcept { return next_index_ >= plan_->size(); }

private:
    const PrioritizedPlan* plan_;
    std::size_t next_index_;
};

}  // namespace wbsearch
