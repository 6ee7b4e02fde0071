#include "wbsearch/weight_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include "wbsearch/errors.hpp"

namespace wbsearch {

namespace {

constexpr double kBoundaryEps = 1e-9;

Weight checked_mul(Weight a, Weight b) {
    Weight out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw WeightOverflow("quadrant weight overflow");
    return out;
}

Weight checked_add(Weight a, Weight b) {
    Weight out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw WeightOverflow("quadrant weight overflow");
    return out;
}

SurvivorReport checked_report(const SurvivorReport& report) {
    if (!std::isfinite(report.heading)) throw InvalidParameter("survivor heading must be finite");
    SurvivorReport r = report;
    r.heading = normalize_heading(report.heading);
    return r;
}

WeightMap build_weight_map_impl(const Environment& env, const SurvivorReport& report,
                                bool parallel) {
    const SurvivorReport r = checked_report(report);
    const GridIndex survivor = world_to_cell(env, r.position);
    const QuadrantWeights base = base_weights(max_iterations(env, survivor), 1);

    std::vector<Weight> weights(env.cell_count());
    const auto count = static_cast<long long>(weights.size());
    const auto fill = [&](long long i) {
        const GridIndex cell = env.at(static_cast<std::size_t>(i));
        const Quadrant q = classify(survivor, r.heading, cell, env);
        weights[static_cast<std::size_t>(i)] = cell_weight(base, q, chebyshev(survivor, cell));
    };

    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < count; ++i) fill(i);
    } else {
        for (long long i = 0; i < count; ++i) fill(i);
    }
    return WeightMap(env, survivor, r.heading, base, std::move(weights));
}

}  // namespace

const char* to_string(Quadrant q) noexcept {
    switch (q) {
        case Quadrant::Forward: return "forward";
        case Quadrant::Left: return "left";
        case Quadrant::Right: return "right";
        case Quadrant::Rear: return "rear";
        case Quadrant::SurvivorCell: return "survivor";
    }
    return "?";
}

Weight QuadrantWeights::base(Quadrant q) const noexcept {
    switch (q) {
        case Quadrant::Forward: return w1;
        case Quadrant::Left: return w2;
        case Quadrant::Right: return w3;
        case Quadrant::Rear: return w4;
        case Quadrant::SurvivorCell: return w5;
    }
    return 0;
}

Weight QuadrantWeights::range_max(Quadrant q) const noexcept {
    return q == Quadrant::SurvivorCell ? w5 : n * base(q);
}

Weight max_iterations(const Environment& env, GridIndex survivor_cell) {
    if (!env.contains(survivor_cell)) throw OutOfBounds("survivor cell is not in the grid");
    const GridIndex corners[] = {
        {0, 0}, {env.cols() - 1, 0}, {0, env.rows() - 1}, {env.cols() - 1, env.rows() - 1}};
    int n = 0;
    for (const auto& c : corners) n = std::max(n, chebyshev(survivor_cell, c));
    return static_cast<Weight>(std::max(n, 1));
}

QuadrantWeights base_weights(Weight n, Weight w4) {
    if (n < 1) throw InvalidParameter("iteration horizon must be at least 1");
    if (w4 < 1) throw InvalidParameter("rear weight must be at least 1");

    const Weight n2 = checked_mul(n, n);
    const Weight n3 = checked_mul(n2, n);

    QuadrantWeights w;
    w.n = n;
    w.w4 = w4;
    w.w1 = checked_add(checked_add(checked_add(checked_mul(w4, n3), n), n2), n3);
    w.w2 = (w.w1 - n) / n;
    w.w3 = (w.w1 - n - n2) / n2;
    w.w5 = checked_add(checked_mul(w.w1, n), 1);
    return w;
}

double normalize_heading(double degrees) noexcept {
    double h = std::fmod(degrees, 360.0);
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h -= 360.0;
    return h;
}

double heading_deviation(GridIndex survivor_cell, double heading, GridIndex cell) {
    const double dx = cell.col - survivor_cell.col;
    const double dy = cell.row - survivor_cell.row;
    const double bearing = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
    double d = std::fmod(bearing - heading, 360.0);
    if (d <= -180.0) d += 360.0;
    if (d > 180.0) d -= 360.0;
    return d;
}

Quadrant classify(GridIndex survivor_cell, double heading, GridIndex cell,
                  const Environment& env) {
    if (!env.contains(survivor_cell) || !env.contains(cell)) {
        throw OutOfBounds("classify: grid index outside the environment");
    }
    if (cell == survivor_cell) return Quadrant::SurvivorCell;
    const double d = heading_deviation(survivor_cell, heading, cell);
    if (std::abs(d) <= 45.0 + kBoundaryEps) return Quadrant::Forward;
    if (d > 0.0 && d <= 135.0 + kBoundaryEps) return Quadrant::Left;
    if (d < 0.0 && d >= -135.0 - kBoundaryEps) return Quadrant::Right;
    return Quadrant::Rear;
}

Weight cell_weight(const QuadrantWeights& base, Quadrant q, int ring) noexcept {
    if (q == Quadrant::SurvivorCell) return base.w5;
    return (base.n - static_cast<Weight>(ring) + 1) * base.base(q);
}

WeightMap::WeightMap(const Environment& env, GridIndex survivor_cell, double heading,
                     QuadrantWeights base, std::vector<Weight> weights)
    : env_(env),
      survivor_cell_(survivor_cell),
      heading_(heading),
      base_(base),
      weights_(std::move(weights)) {
    if (weights_.size() != env_.cell_count()) {
        throw InvalidDimension("weight matrix does not match the grid");
    }
}

Weight WeightMap::at(GridIndex g) const {
    if (!env_.contains(g)) throw OutOfBounds("weight lookup outside the grid");
    return weights_[env_.linear(g)];
}

WeightMap build_weight_map(const Environment& env, const SurvivorReport& report) {
    return build_weight_map_impl(env, report, true);
}

WeightMap build_weight_map_serial(const Environment& env, const SurvivorReport& report) {
    return build_weight_map_impl(env, report, false);
}

PrioritizedPlan prioritize(const WeightMap& map) {
    struct Key {
        Weight weight;
        int ring;
        long long deviation_udeg;  // |deviation| in micro-degrees; exact ties
        std::size_t linear;
    };
    const Environment& env = map.env();
    const GridIndex survivor = map.survivor_cell();

    std::vector<Key> keys(env.cell_count());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const GridIndex cell = env.at(i);
        const double dev =
            cell == survivor ? 0.0 : std::abs(heading_deviation(survivor, map.heading(), cell));
        keys[i] = {map.weights()[i], chebyshev(survivor, cell), std::llround(dev * 1e6), i};
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.ring != b.ring) return a.ring < b.ring;
        if (a.deviation_udeg != b.deviation_udeg) return a.deviation_udeg < b.deviation_udeg;
        return a.linear < b.linear;
    });

    PrioritizedPlan plan;
    plan.waypoints.reserve(keys.size());
    for (const Key& k : keys) plan.waypoints.push_back(env.at(k.linear));
    return plan;
}

}  // namespace wbsearch
