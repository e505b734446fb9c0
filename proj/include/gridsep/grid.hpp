#pragma once

// Rectangular grids, their neighbor relation, and the neighbor-separation
// objective: the sum over neighboring cells of the L1 distance between their
// images. Coordinates are 1-based (row i, column j) throughout.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gridsep {

struct Cell {
    int i = 0; // row
    int j = 0; // column

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(Cell c);

// L1 distance between two cells.
inline int distance(Cell a, Cell b) noexcept {
    return (a.i > b.i ? a.i - b.i : b.i - a.i) + (a.j > b.j ? a.j - b.j : b.j - a.j);
}

class GridDims {
public:
    GridDims(int n1, int n2);

    int n1() const noexcept { return n1_; }
    int n2() const noexcept { return n2_; }
    int cell_count() const noexcept { return n1_ * n2_; }
    bool even() const noexcept { return n1_ % 2 == 0 && n2_ % 2 == 0; }

    // Half-lengths; only meaningful for even dims (throws otherwise).
    int t1() const;
    int t2() const;
    int t(int coord) const { return coord == 1 ? t1() : t2(); }

    bool contains(Cell c) const noexcept { return c.i >= 1 && c.i <= n1_ && c.j >= 1 && c.j <= n2_; }
    std::size_t index(Cell c) const noexcept {
        return static_cast<std::size_t>(c.i - 1) * static_cast<std::size_t>(n2_) + static_cast<std::size_t>(c.j - 1);
    }
    Cell cell(std::size_t index) const noexcept {
        return Cell{static_cast<int>(index / static_cast<std::size_t>(n2_)) + 1,
                    static_cast<int>(index % static_cast<std::size_t>(n2_)) + 1};
    }

    // All cells in row-major order.
    std::vector<Cell> cells() const;
    GridDims transposed() const noexcept { return GridDims(n2_, n1_); }

    bool is_corner(Cell c) const noexcept {
        return (c.i == 1 || c.i == n1_) && (c.j == 1 || c.j == n2_);
    }
    bool on_boundary(Cell c) const noexcept { return c.i == 1 || c.i == n1_ || c.j == 1 || c.j == n2_; }

    friend bool operator==(const GridDims&, const GridDims&) = default;

private:
    int n1_;
    int n2_;
};

// Throws InvalidArgument unless both dimensions are even; `what` names the caller.
void require_even(const GridDims& dims, const char* what);

enum class Topology { Planar, Torus };

std::string to_string(Topology t);

struct Edge {
    Cell a;
    Cell b;
};

// Multiset of unordered neighbor pairs.
using EdgeSet = std::vector<Edge>;

// Planar: cells at L1 distance one, n1(n2-1) + n2(n1-1) pairs.
// Torus: each cell paired with its right and lower wrap-around neighbor,
// 2*n1*n2 pairs; a dimension of length 2 yields the same pair twice.
EdgeSet neighbors(const GridDims& dims, Topology topology);
std::size_t edge_count(const GridDims& dims, Topology topology) noexcept;

// A bijection of the cells of a grid onto themselves, stored row-major:
// images()[index(x)] is the value placed in cell x.
class GridPermutation {
public:
    // Throws InvalidArgument if `images` is not a bijection of the cells of `dims`.
    static GridPermutation from_images(GridDims dims, std::vector<Cell> images);
    static GridPermutation identity(GridDims dims);

    const GridDims& dims() const noexcept { return dims_; }
    const Cell& operator()(Cell x) const noexcept { return images_[dims_.index(x)]; }
    const Cell& at(std::size_t index) const noexcept { return images_[index]; }
    std::span<const Cell> images() const noexcept { return images_; }

    // Row (coord 1) or column (coord 2) components of the images, row-major.
    std::vector<std::int32_t> plane(int coord) const;

    // Reflects positions and values across the main diagonal.
    GridPermutation transposed() const;

    friend bool operator==(const GridPermutation&, const GridPermutation&) = default;
    friend auto operator<=>(const GridPermutation& a, const GridPermutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    GridPermutation(GridDims dims, std::vector<Cell> images) : dims_(dims), images_(std::move(images)) {}

    GridDims dims_;
    std::vector<Cell> images_;
};

// Sum over neighbor pairs of the L1 distance between the images. On the torus
// the neighbor relation wraps but image distances are still planar L1.
std::int64_t score(const GridPermutation& pi, Topology topology);

// Signed split of the objective: per edge and per coordinate the larger value
// joins the plus multiset and the smaller the minus multiset.
struct Decomposition {
    std::vector<int> s1_plus;
    std::vector<int> s1_minus;
    std::vector<int> s2_plus;
    std::vector<int> s2_minus;

    std::int64_t signed_sum() const noexcept;
};

// Multisets are returned sorted ascending.
Decomposition decompose(const GridPermutation& pi, Topology topology);

} // namespace gridsep
