#pragma once

#include <cstdint>
#include <vector>

#include "wbsearch/grid_env.hpp"

namespace wbsearch {

using Weight = std::uint64_t;

/// Last known survivor position and heading as relayed by an observer.
/// Heading is in degrees, counter-clockwise from +x.
struct SurvivorReport {
    WorldPoint position;
    double heading = 0.0;
    double report_time = 0.0;
};

enum class Quadrant { Forward, Left, Right, Rear, SurvivorCell };

const char* to_string(Quadrant q) noexcept;

/// Base weights for the four sectors and the survivor cell at iteration
/// horizon n. Adjacent sector ranges [w, n*w] never overlap, and w5 sits one
/// above the best forward weight.
struct QuadrantWeights {
    Weight n = 1;
    Weight w1 = 0;  // forward
    Weight w2 = 0;  // left
    Weight w3 = 0;  // right
    Weight w4 = 0;  // rear
    Weight w5 = 0;  // survivor cell

    Weight base(Quadrant q) const noexcept;
    Weight range_max(Quadrant q) const noexcept;

    friend bool operator==(const QuadrantWeights&, const QuadrantWeights&) = default;
};

/// Largest Chebyshev distance from the survivor cell to any grid corner,
/// clamped to at least 1.
Weight max_iterations(const Environment& env, GridIndex survivor_cell);

/// Throws InvalidParameter for n or w4 below 1 and WeightOverflow when the
/// survivor weight no longer fits in 64 bits.
QuadrantWeights base_weights(Weight n, Weight w4 = 1);

/// Signed bearing of `cell` relative to `heading`, seen from `survivor_cell`,
/// wrapped into (-180, 180]. Positive is to the survivor's left.
double heading_deviation(GridIndex survivor_cell, double heading, GridIndex cell);

/// Sectors are +-45 degrees around the heading, left/right and rear.
/// Boundary angles go to the higher-priority sector.
Quadrant classify(GridIndex survivor_cell, double heading, GridIndex cell, const Environment& env);

double normalize_heading(double degrees) noexcept;

class WeightMap {
public:
    WeightMap(const Environment& env, GridIndex survivor_cell, double heading,
              QuadrantWeights base, std::vector<Weight> weights);

    const Environment& env() const noexcept { return env_; }
    GridIndex survivor_cell() const noexcept { return survivor_cell_; }
    double heading() const noexcept { return heading_; }
    const QuadrantWeights& base() const noexcept { return base_; }
    const std::vector<Weight>& weights() const noexcept { return weights_; }
    Weight at(GridIndex g) const;

private:
    Environment env_;
    GridIndex survivor_cell_;
    double heading_;
    QuadrantWeights base_;
    std::vector<Weight> weights_;  // row-major
};

/// Cell weight away from the survivor: (n - d + 1) * base(q), d = Chebyshev
/// ring. The survivor cell gets w5.
Weight cell_weight(const QuadrantWeights& base, Quadrant q, int ring) noexcept;

/// OpenMP over cells when available.
WeightMap build_weight_map(const Environment& env, const SurvivorReport& report);
/// Single-threaded reference of build_weight_map.
WeightMap build_weight_map_serial(const Environment& env, const SurvivorReport& report);

/// Ordered visiting sequence over every grid cell.
struct PrioritizedPlan {
    std::vector<GridIndex> waypoints;

    std::size_t size() const noexcept { return waypoints.size(); }
    bool empty() const noexcept { return waypoints.empty(); }
    const GridIndex& operator[](std::size_t i) const { return waypoints[i]; }
};

/// Sort key: weight descending, ring ascending, |deviation| ascending,
/// row-major index ascending.
PrioritizedPlan prioritize(const WeightMap& map);

}  // namespace wbsearch
