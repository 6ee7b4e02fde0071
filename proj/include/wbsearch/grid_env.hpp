#pragma once

#include <compare>
#include <cstddef>

namespace wbsearch {

struct WorldPoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const WorldPoint&, const WorldPoint&) = default;
};

struct GridIndex {
    int col = 0;
    int row = 0;

    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
};

/// Axis-aligned rectangle [0, width] x [0, height] discretized into square
/// cells. The last column/row is ragged when the extent is not a multiple of
/// the cell size.
class Environment {
public:
    double width() const noexcept { return width_; }
    double height() const noexcept { return height_; }
    double cell_size() const noexcept { return cell_size_; }
    int cols() const noexcept { return cols_; }
    int rows() const noexcept { return rows_; }
    std::size_t cell_count() const noexcept {
        return static_cast<std::size_t>(cols_) * static_cast<std::size_t>(rows_);
    }

    bool contains(GridIndex g) const noexcept {
        return g.col >= 0 && g.row >= 0 && g.col < cols_ && g.row < rows_;
    }
    bool contains(WorldPoint p) const noexcept {
        return p.x >= 0.0 && p.y >= 0.0 && p.x <= width_ && p.y <= height_;
    }

    // row-major
    std::size_t linear(GridIndex g) const noexcept {
        return static_cast<std::size_t>(g.row) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(g.col);
    }
    GridIndex at(std::size_t linear_index) const noexcept {
        return {static_cast<int>(linear_index % static_cast<std::size_t>(cols_)),
                static_cast<int>(linear_index / static_cast<std::size_t>(cols_))};
    }

    friend Environment make_environment(double width, double height, double cell_size);

private:
    Environment(double w, double h, double c, int cols, int rows)
        : width_(w), height_(h), cell_size_(c), cols_(cols), rows_(rows) {}

    double width_;
    double height_;
    double cell_size_;
    int cols_;
    int rows_;
};

/// Throws InvalidDimension on non-positive or non-finite input, or when the
/// cell is larger than either extent.
Environment make_environment(double width, double height, double cell_size);

/// Floor convention; the far boundary clamps to the last index.
GridIndex world_to_cell(const Environment& env, WorldPoint p);

/// Cell center, pulled inward to (extent - cell_size/2) for a ragged last cell.
WorldPoint cell_center(const Environment& env, GridIndex idx);

/// Side of the square ground footprint seen from `altitude` with the given
/// camera half-angle: 2 * altitude * tan(half_angle).
double footprint_width(double altitude, double fov_half_angle_deg);

int chebyshev(GridIndex a, GridIndex b) noexcept;

bool is_corner(const Environment& env, GridIndex g) noexcept;

}  // namespace wbsearch
