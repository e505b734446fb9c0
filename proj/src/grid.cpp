#include "gridsep/grid.hpp"

#include "gridsep/error.hpp"
#include "gridsep/kernels.hpp"

#include <algorithm>
#include <numeric>

namespace gridsep {

std::string to_string(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

std::string to_string(Topology t) { return t == Topology::Planar ? "planar" : "torus"; }

GridDims::GridDims(int n1, int n2) : n1_(n1), n2_(n2) {
    if (n1 < 1 || n2 < 1) {
        throw InvalidArgument("grid dimensions must be positive, got " + std::to_string(n1) + "x" +
                              std::to_string(n2));
    }
}

int GridDims::t1() const {
    if (n1_ % 2 != 0) {
        throw InvalidArgument("t1 is defined only for even n1");
    }
    return n1_ / 2;
}

int GridDims::t2() const {
    if (n2_ % 2 != 0) {
        throw InvalidArgument("t2 is defined only for even n2");
    }
    return n2_ / 2;
}

std::vector<Cell> GridDims::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(cell_count()));
    for (int i = 1; i <= n1_; ++i) {
        for (int j = 1; j <= n2_; ++j) {
            out.push_back({i, j});
        }
    }
    return out;
}

void require_even(const GridDims& dims, const char* what) {
    if (!dims.even()) {
        throw InvalidArgument(std::string(what) + " requires even dimensions, got " + std::to_string(dims.n1()) +
                              "x" + std::to_string(dims.n2()));
    }
}

EdgeSet neighbors(const GridDims& dims, Topology topology) {
    EdgeSet edges;
    edges.reserve(edge_count(dims, topology));
    const int n1 = dims.n1();
    const int n2 = dims.n2();
    for (int i = 1; i <= n1; ++i) {
        for (int j = 1; j <= n2; ++j) {
            if (j < n2) {
                edges.push_back({{i, j}, {i, j + 1}});
            } else if (topology == Topology::Torus) {
                edges.push_back({{i, j}, {i, 1}});
            }
            if (i < n1) {
                edges.push_back({{i, j}, {i + 1, j}});
            } else if (topology == Topology::Torus) {
                edges.push_back({{i, j}, {1, j}});
            }
        }
    }
    return edges;
}

std::size_t edge_count(const GridDims& dims, Topology topology) noexcept {
    const auto n1 = static_cast<std::size_t>(dims.n1());
    const auto n2 = static_cast<std::size_t>(dims.n2());
    if (topology == Topology::Torus) {
        return 2 * n1 * n2;
    }
    return n1 * (n2 - 1) + n2 * (n1 - 1);
}

GridPermutation GridPermutation::from_images(GridDims dims, std::vector<Cell> images) {
    const auto n = static_cast<std::size_t>(dims.cell_count());
    if (images.size() != n) {
        throw InvalidArgument("permutation has " + std::to_string(images.size()) + " entries, grid has " +
                              std::to_string(n) + " cells");
    }
    std::vector<bool> seen(n, false);
    for (const Cell& c : images) {
        if (!dims.contains(c)) {
            throw InvalidArgument("value " + to_string(c) + " lies outside the grid");
        }
        const std::size_t k = dims.index(c);
        if (seen[k]) {
            throw InvalidArgument("value " + to_string(c) + " appears more than once");
        }
        seen[k] = true;
    }
    return GridPermutation(dims, std::move(images));
}

GridPermutation GridPermutation::identity(GridDims dims) { return GridPermutation(dims, dims.cells()); }

std::vector<std::int32_t> GridPermutation::plane(int coord) const {
    std::vector<std::int32_t> out(images_.size());
    std::transform(images_.begin(), images_.end(), out.begin(),
                   [coord](const Cell& c) { return coord == 1 ? c.i : c.j; });
    return out;
}

GridPermutation GridPermutation::transposed() const {
    const GridDims t = dims_.transposed();
    std::vector<Cell> out(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        const Cell x = dims_.cell(k);
        const Cell v = images_[k];
        out[t.index({x.j, x.i})] = Cell{v.j, v.i};
    }
    return GridPermutation(t, std::move(out));
}

std::int64_t score(const GridPermutation& pi, Topology topology) {
    const GridDims& d = pi.dims();
    const bool wrap = topology == Topology::Torus;
    const auto rows = pi.plane(1);
    const auto cols = pi.plane(2);
    return kernels::plane_edge_sum(rows, d.n1(), d.n2(), wrap) + kernels::plane_edge_sum(cols, d.n1(), d.n2(), wrap);
}

std::int64_t Decomposition::signed_sum() const noexcept {
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    return sum(s1_plus) - sum(s1_minus) + sum(s2_plus) - sum(s2_minus);
}

Decomposition decompose(const GridPermutation& pi, Topology topology) {
    Decomposition out;
    const EdgeSet edges = neighbors(pi.dims(), topology);
    for (auto* v : {&out.s1_plus, &out.s1_minus, &out.s2_plus, &out.s2_minus}) {
        v->reserve(edges.size());
    }
    for (const Edge& e : edges) {
        const Cell u = pi(e.a);
        const Cell v = pi(e.b);
        out.s1_plus.push_back(std::max(u.i, v.i));
        out.s1_minus.push_back(std::min(u.i, v.i));
        out.s2_plus.push_back(std::max(u.j, v.j));
        out.s2_minus.push_back(std::min(u.j, v.j));
    }
    for (auto* v : {&out.s1_plus, &out.s1_minus, &out.s2_plus, &out.s2_minus}) {
        std::sort(v->begin(), v->end());
    }
    return out;
}

} // namespace gridsep
