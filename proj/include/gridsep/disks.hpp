#pragma once

// Layers around the geometric center of an even-by-even grid and
// minimum-weight cell sets ("disks"). Distances to the center are
// half-integers in general but integers for even dims, so everything here is
// exact integer arithmetic on doubled center coordinates.

#include "gridsep/grid.hpp"
#include "gridsep/structure.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gridsep {

// Doubled coordinates of the center O = ((n1+1)/2, (n2+1)/2).
struct CenterDoubled {
    int oi2;
    int oj2;

    explicit CenterDoubled(const GridDims& dims) : oi2(dims.n1() + 1), oj2(dims.n2() + 1) {}
};

// d(x, O) for even dims.
int layer_of(const GridDims& dims, Cell x);

// Number of nonempty layers: t1 + t2 - 1 (the corners sit on the last one).
int layer_count(const GridDims& dims);

// |Λ_i| from the closed form (4i, then 2 min(n1,n2), then tapering).
std::int64_t layer_size(const GridDims& dims, int i);

// Cells at distance exactly i from the center, row-major.
std::vector<Cell> layer_cells(const GridDims& dims, int i);

// Sum of center distances; rejects cells outside the grid.
std::int64_t weight(const GridDims& dims, std::span<const Cell> cells);

// Minimum weight over all k-subsets, from the closed form.
std::int64_t min_weight(const GridDims& dims, std::int64_t k);

// k cells by nondecreasing center distance, ties in row-major order.
std::vector<Cell> greedy_disk(const GridDims& dims, std::int64_t k);

// weight(cells) == min_weight(|cells|).
bool is_disk(const GridDims& dims, std::span<const Cell> cells);

// Structural form: full layers 1..r plus part of layer r+1. Agrees with
// is_disk for sets without repeats.
bool is_disk_by_layers(const GridDims& dims, std::span<const Cell> cells);

// 2 w(B ∪ C) == 2h + sum_i (2 t_i + 1) x_i.
bool ball_identity_check(const GridPermutation& pi);

// w(B ∪ C) of a report.
std::int64_t boundary_weight(const GridDims& dims, const StructureReport& report);

} // namespace gridsep
