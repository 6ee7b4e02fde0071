#pragma once

// Independent reference computations for the weighting and coverage code.
// Nothing here calls into weight_core beyond reading plain data back.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <set>
#include <vector>

#include "wbsearch/grid_env.hpp"
#include "wbsearch/weight_core.hpp"

namespace oracle {

struct Weights {
    std::uint64_t w1, w2, w3, w4, w5;
};

// Build the weights upward from the rear sector: each sector's minimum sits
// N above the previous sector's ceiling scaled by N, the survivor cell one
// above the forward ceiling.
inline Weights recursive_weights(std::uint64_t n, std::uint64_t w4) {
    Weights w{};
    w.w4 = w4;
    w.w3 = n * w.w4 + n;
    w.w2 = n * w.w3 + n;
    w.w1 = n * w.w2 + n;
    w.w5 = n * w.w1 + 1;
    return w;
}

enum class Sector { Forward, Left, Right, Rear, Survivor };

struct CellView {
    double cos_dev;
    double sin_dev;
};

// Deviation from the heading via dot/cross products of the cell offset with
// the heading unit vector.
inline CellView view(int dcol, int drow, double heading_deg) {
    const double h = heading_deg * std::numbers::pi / 180.0;
    const double hx = std::cos(h), hy = std::sin(h);
    const double len = std::sqrt(double(dcol) * dcol + double(drow) * drow);
    return {(hx * dcol + hy * drow) / len, (hx * drow - hy * dcol) / len};
}

inline Sector sector(wbsearch::GridIndex survivor, double heading, wbsearch::GridIndex cell) {
    if (cell == survivor) return Sector::Survivor;
    const CellView v = view(cell.col - survivor.col, cell.row - survivor.row, heading);
    const double edge = std::sqrt(0.5);
    const double eps = 1e-12;
    if (v.cos_dev >= edge - eps) return Sector::Forward;
    if (v.cos_dev < -edge - eps) return Sector::Rear;
    return v.sin_dev > 0.0 ? Sector::Left : Sector::Right;
}

inline double abs_deviation_deg(wbsearch::GridIndex survivor, double heading,
                                wbsearch::GridIndex cell) {
    if (cell == survivor) return 0.0;
    const CellView v = view(cell.col - survivor.col, cell.row - survivor.row, heading);
    return std::abs(std::atan2(v.sin_dev, v.cos_dev)) * 180.0 / std::numbers::pi;
}

inline int ring(wbsearch::GridIndex a, wbsearch::GridIndex b) {
    return std::max(std::abs(a.col - b.col), std::abs(a.row - b.row));
}

// N as the largest ring reached anywhere in the grid.
inline std::uint64_t horizon(int cols, int rows, wbsearch::GridIndex survivor) {
    int n = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) n = std::max(n, ring(survivor, {c, r}));
    return static_cast<std::uint64_t>(std::max(n, 1));
}

// Row-major matrix of expected weights.
inline std::vector<std::uint64_t> weight_matrix(int cols, int rows, wbsearch::GridIndex survivor,
                                                double heading) {
    const std::uint64_t n = horizon(cols, rows, survivor);
    const Weights w = recursive_weights(n, 1);
    std::vector<std::uint64_t> out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const wbsearch::GridIndex cell{c, r};
            std::uint64_t base = 0;
            switch (sector(survivor, heading, cell)) {
                case Sector::Survivor: out.push_back(w.w5); continue;
                case Sector::Forward: base = w.w1; break;
                case Sector::Left: base = w.w2; break;
                case Sector::Right: base = w.w3; break;
                case Sector::Rear: base = w.w4; break;
            }
            out.push_back((n - static_cast<std::uint64_t>(ring(survivor, cell)) + 1) * base);
        }
    }
    return out;
}

// Selection sort over (weight desc, ring asc, |deviation| asc, row-major asc).
inline std::vector<wbsearch::GridIndex> brute_force_order(int cols, int rows,
                                                          wbsearch::GridIndex survivor,
                                                          double heading,
                                                          const std::vector<std::uint64_t>& weights) {
    struct Item {
        std::uint64_t weight;
        int ring;
        long long dev;
        int linear;
    };
    std::vector<Item> items;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const wbsearch::GridIndex cell{c, r};
            items.push_back({weights[static_cast<std::size_t>(r * cols + c)], ring(survivor, cell),
                             std::llround(abs_deviation_deg(survivor, heading, cell) * 1e6),
                             r * cols + c});
        }
    }
    const auto better = [](const Item& a, const Item& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.ring != b.ring) return a.ring < b.ring;
        if (a.dev != b.dev) return a.dev < b.dev;
        return a.linear < b.linear;
    };
    std::vector<wbsearch::GridIndex> order;
    std::vector<bool> taken(items.size(), false);
    for (std::size_t k = 0; k < items.size(); ++k) {
        std::size_t best = items.size();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (taken[i]) continue;
            if (best == items.size() || better(items[i], items[best])) best = i;
        }
        taken[best] = true;
        order.push_back({items[best].linear % cols, items[best].linear / cols});
    }
    return order;
}

inline bool is_permutation_of_grid(const std::vector<wbsearch::GridIndex>& seq, int cols, int rows) {
    if (seq.size() != static_cast<std::size_t>(cols) * static_cast<std::size_t>(rows)) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& g : seq) {
        if (g.col < 0 || g.row < 0 || g.col >= cols || g.row >= rows) return false;
        if (!seen.insert({g.col, g.row}).second) return false;
    }
    return true;
}

inline bool unit_steps(const std::vector<wbsearch::GridIndex>& seq) {
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const int d = std::abs(seq[i].col - seq[i - 1].col) + std::abs(seq[i].row - seq[i - 1].row);
        if (d != 1) return false;
    }
    return true;
}

}  // namespace oracle
