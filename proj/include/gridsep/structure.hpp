#pragma once

// Corners, boundary and defects of a permutation of an even-by-even grid,
// and the integer quantities built from them: the deficit g with
// f = n1*n2*(n1+n2) - g, the boundary imbalance h and the counts x1, x2.
//
// A coordinate value v of an n_i = 2 t_i dimension is "small" when v <= t_i
// and "large" otherwise. A defect is a neighbor pair whose images are both
// small (recorded by the larger value) or both large (recorded by the
// smaller value) in one coordinate.

#include "gridsep/grid.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gridsep {

enum class ColorClass {
    DarkBlue,  // (large, large)
    LightBlue, // (small, small)
    DarkRed,   // (large, small)
    LightRed,  // (small, large)
};

const char* to_string(ColorClass c) noexcept;

inline bool is_homogeneous(ColorClass c) noexcept {
    return c == ColorClass::DarkBlue || c == ColorClass::LightBlue;
}

// Throws InvalidArgument for odd dims or a value outside the grid.
ColorClass color_class(Cell value, const GridDims& dims);

// Class with both coordinate sizes given: large1/large2 select S_i^>.
ColorClass color_class_of(bool large1, bool large2) noexcept;
bool is_large(ColorClass c, int coord) noexcept;

struct DefectMultisets {
    std::vector<int> d1_small; // max of two small row values
    std::vector<int> d1_large; // min of two large row values
    std::vector<int> d2_small;
    std::vector<int> d2_large;

    std::size_t count() const noexcept {
        return d1_small.size() + d1_large.size() + d2_small.size() + d2_large.size();
    }
};

// Defects over the neighbor multiset of the given topology; sorted ascending.
DefectMultisets defects(const GridPermutation& pi, Topology topology);

struct StructureReport {
    std::vector<Cell> corners;  // C: images of the four corner cells, sorted
    std::vector<Cell> boundary; // B: images of the other boundary cells, sorted
    DefectMultisets d;
    std::int64_t h = 0;
    std::int64_t x1 = 0;
    std::int64_t x2 = 0;
    std::int64_t g = 0;

    // Balance of positive and negative summands of g for coordinate i:
    // |B_i^>| + 2|C_i^>| + 2|D_i^>|  and  |B_i^<| + 2|C_i^<| + 2|D_i^<|.
    std::int64_t positive_count(int coord, const GridDims& dims) const;
    std::int64_t negative_count(int coord, const GridDims& dims) const;
};

// Planar, even dims.
StructureReport structure_report(const GridPermutation& pi);

// n1*n2*(n1+n2): the sum over coordinates of (sum of large values minus sum of
// small values), each value counted with full interior multiplicity 4.
std::int64_t naive_upper_bound(const GridDims& dims);

// score == naive_upper_bound - g.
bool exact_identity_check(const GridPermutation& pi);

// 2h + 8 + 2n1 + sum_i (2 t_i + 1) x_i; every permutation has 2g at least this.
// Requires n1 <= n2.
std::int64_t key_lower_bound_doubled(const GridPermutation& pi);
std::int64_t key_lower_bound_doubled(const GridDims& dims, const StructureReport& report);

enum class Color : std::uint8_t { Red, Blue };

// Number of neighbor pairs (multiset, so torus doubles count twice) whose
// endpoints differ in color. `coloring` is row-major.
std::int64_t bichromatic_edges(std::span<const Color> coloring, const GridDims& dims, Topology topology);

// Blue where the image is homogeneous, red where heterogeneous.
std::vector<Color> homogeneity_coloring(const GridPermutation& pi);

} // namespace gridsep
