#include "gridsep/disks.hpp"

#include "gridsep/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace gridsep {

int layer_of(const GridDims& dims, Cell x) {
    const CenterDoubled o(dims);
    return (std::abs(2 * x.i - o.oi2) + std::abs(2 * x.j - o.oj2)) / 2;
}

int layer_count(const GridDims& dims) {
    require_even(dims, "layer_count");
    return dims.t1() + dims.t2() - 1;
}

std::int64_t layer_size(const GridDims& dims, int i) {
    require_even(dims, "layer_size");
    const int ta = std::min(dims.t1(), dims.t2());
    const int tb = std::max(dims.t1(), dims.t2());
    if (i < 1 || i > ta + tb) {
        return 0;
    }
    if (i <= ta) {
        return 4 * i;
    }
    if (i <= tb) {
        return 4 * ta;
    }
    return 2 * (2 * ta + 2 * tb - 2 * i);
}

std::vector<Cell> layer_cells(const GridDims& dims, int i) {
    require_even(dims, "layer_cells");
    std::vector<Cell> out;
    for (const Cell& c : dims.cells()) {
        if (layer_of(dims, c) == i) {
            out.push_back(c);
        }
    }
    return out;
}

std::int64_t weight(const GridDims& dims, std::span<const Cell> cells) {
    require_even(dims, "weight");
    std::int64_t w = 0;
    for (const Cell& c : cells) {
        if (!dims.contains(c)) {
            throw InvalidArgument("cell " + to_string(c) + " lies outside the grid");
        }
        w += layer_of(dims, c);
    }
    return w;
}

std::int64_t min_weight(const GridDims& dims, std::int64_t k) {
    require_even(dims, "min_weight");
    if (k < 0 || k > dims.cell_count()) {
        throw InvalidArgument("min_weight: k out of range");
    }
    // r = largest count of full layers that fits in k.
    int r = 0;
    std::int64_t filled = 0;
    const int layers = layer_count(dims);
    while (r < layers && filled + layer_size(dims, r + 1) <= k) {
        ++r;
        filled += layer_size(dims, r);
    }
    std::int64_t w = static_cast<std::int64_t>(r + 1) * k;
    for (int i = 1; i <= r; ++i) {
        w -= static_cast<std::int64_t>(r + 1 - i) * layer_size(dims, i);
    }
    return w;
}

std::vector<Cell> greedy_disk(const GridDims& dims, std::int64_t k) {
    require_even(dims, "greedy_disk");
    if (k < 0 || k > dims.cell_count()) {
        throw InvalidArgument("greedy_disk: k out of range");
    }
    std::vector<Cell> cells = dims.cells();
    std::stable_sort(cells.begin(), cells.end(),
                     [&](const Cell& a, const Cell& b) { return layer_of(dims, a) < layer_of(dims, b); });
    cells.resize(static_cast<std::size_t>(k));
    return cells;
}

bool is_disk(const GridDims& dims, std::span<const Cell> cells) {
    const auto k = static_cast<std::int64_t>(cells.size());
    if (k > dims.cell_count()) {
        return false;
    }
    return weight(dims, cells) == min_weight(dims, k);
}

bool is_disk_by_layers(const GridDims& dims, std::span<const Cell> cells) {
    require_even(dims, "is_disk_by_layers");
    const int layers = layer_count(dims);
    std::vector<std::int64_t> per_layer(static_cast<std::size_t>(layers) + 1, 0);
    for (const Cell& c : cells) {
        if (!dims.contains(c)) {
            return false;
        }
        ++per_layer[static_cast<std::size_t>(layer_of(dims, c))];
    }
    // Full layers, then at most one partial layer, then nothing.
    int i = 1;
    while (i <= layers && per_layer[static_cast<std::size_t>(i)] == layer_size(dims, i)) {
        ++i;
    }
    if (i <= layers && per_layer[static_cast<std::size_t>(i)] > layer_size(dims, i)) {
        return false;
    }
    for (int k = i + 1; k <= layers; ++k) {
        if (per_layer[static_cast<std::size_t>(k)] != 0) {
            return false;
        }
    }
    return true;
}

std::int64_t boundary_weight(const GridDims& dims, const StructureReport& report) {
    return weight(dims, report.corners) + weight(dims, report.boundary);
}

bool ball_identity_check(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    const StructureReport r = structure_report(pi);
    const std::int64_t lhs = 2 * boundary_weight(dims, r);
    const std::int64_t rhs = 2 * r.h + (2 * dims.t1() + 1) * r.x1 + (2 * dims.t2() + 1) * r.x2;
    return lhs == rhs;
}

} // namespace gridsep
