#include "wbsearch/grid_env.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "wbsearch/errors.hpp"

namespace wbsearch {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

int cells_along(double extent, double cell) {
    const double n = std::ceil(extent / cell);
    // guard against 20/2 landing on 10.000000000000002
    const double below = n - 1.0;
    if (below >= 1.0 && below * cell >= extent) return static_cast<int>(below);
    return static_cast<int>(n);
}

}  // namespace

Environment make_environment(double width, double height, double cell_size) {
    if (!positive_finite(width) || !positive_finite(height) || !positive_finite(cell_size)) {
        throw InvalidDimension("environment dimensions must be positive and finite");
    }
    if (cell_size > std::min(width, height)) {
        throw InvalidDimension("cell size " + std::to_string(cell_size) +
                               " exceeds the environment extent");
    }
    return Environment(width, height, cell_size, cells_along(width, cell_size),
                       cells_along(height, cell_size));
}

GridIndex world_to_cell(const Environment& env, WorldPoint p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !env.contains(p)) {
        throw OutOfBounds("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                          ") lies outside the environment");
    }
    const int col = std::min(static_cast<int>(std::floor(p.x / env.cell_size())), env.cols() - 1);
    const int row = std::min(static_cast<int>(std::floor(p.y / env.cell_size())), env.rows() - 1);
    return {col, row};
}

WorldPoint cell_center(const Environment& env, GridIndex idx) {
    if (!env.contains(idx)) {
        throw OutOfBounds("grid index (" + std::to_string(idx.col) + ", " +
                          std::to_string(idx.row) + ") is not in the grid");
    }
    const double half = env.cell_size() / 2.0;
    const double x = (idx.col + 0.5) * env.cell_size();
    const double y = (idx.row + 0.5) * env.cell_size();
    return {std::min(x, env.width() - half), std::min(y, env.height() - half)};
}

double footprint_width(double altitude, double fov_half_angle_deg) {
    if (!positive_finite(altitude)) {
        throw InvalidParameter("altitude must be positive");
    }
    if (!std::isfinite(fov_half_angle_deg) || fov_half_angle_deg <= 0.0 ||
        fov_half_angle_deg >= 90.0) {
        throw InvalidParameter("camera half-angle must lie in (0, 90) degrees");
    }
    return 2.0 * altitude * std::tan(fov_half_angle_deg * std::numbers::pi / 180.0);
}

int chebyshev(GridIndex a, GridIndex b) noexcept {
    return std::max(std::abs(a.col - b.col), std::abs(a.row - b.row));
}

bool is_corner(const Environment& env, GridIndex g) noexcept {
    return (g.col == 0 || g.col == env.cols() - 1) && (g.row == 0 || g.row == env.rows() - 1);
}

}  // namespace wbsearch
