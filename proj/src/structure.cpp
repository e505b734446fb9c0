#include "gridsep/structure.hpp"

#include "gridsep/error.hpp"

#include <algorithm>
#include <numeric>

namespace gridsep {

const char* to_string(ColorClass c) noexcept {
    switch (c) {
    case ColorClass::DarkBlue:
        return "dark-blue";
    case ColorClass::LightBlue:
        return "light-blue";
    case ColorClass::DarkRed:
        return "dark-red";
    case ColorClass::LightRed:
        return "light-red";
    }
    return "?";
}

ColorClass color_class_of(bool large1, bool large2) noexcept {
    if (large1) {
        return large2 ? ColorClass::DarkBlue : ColorClass::DarkRed;
    }
    return large2 ? ColorClass::LightRed : ColorClass::LightBlue;
}

bool is_large(ColorClass c, int coord) noexcept {
    switch (c) {
    case ColorClass::DarkBlue:
        return true;
    case ColorClass::LightBlue:
        return false;
    case ColorClass::DarkRed:
        return coord == 1;
    case ColorClass::LightRed:
        return coord == 2;
    }
    return false;
}

ColorClass color_class(Cell value, const GridDims& dims) {
    require_even(dims, "color_class");
    if (!dims.contains(value)) {
        throw InvalidArgument("value " + to_string(value) + " lies outside the grid");
    }
    return color_class_of(value.i > dims.t1(), value.j > dims.t2());
}

DefectMultisets defects(const GridPermutation& pi, Topology topology) {
    const GridDims& dims = pi.dims();
    require_even(dims, "defects");
    const int t1 = dims.t1();
    const int t2 = dims.t2();
    DefectMultisets out;
    auto record = [](int u, int v, int t, std::vector<int>& small, std::vector<int>& large) {
        if (u <= t && v <= t) {
            small.push_back(std::max(u, v));
        } else if (u > t && v > t) {
            large.push_back(std::min(u, v));
        }
    };
    for (const Edge& e : neighbors(dims, topology)) {
        const Cell u = pi(e.a);
        const Cell v = pi(e.b);
        record(u.i, v.i, t1, out.d1_small, out.d1_large);
        record(u.j, v.j, t2, out.d2_small, out.d2_large);
    }
    for (auto* v : {&out.d1_small, &out.d1_large, &out.d2_small, &out.d2_large}) {
        std::sort(v->begin(), v->end());
    }
    return out;
}

namespace {

std::int64_t sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

// Signed sum (large minus small) and signed count of coordinate `coord`
// values over `cells`.
struct Signed {
    std::int64_t value = 0;
    std::int64_t count = 0;
};

Signed signed_coords(const std::vector<Cell>& cells, int coord, int t) {
    Signed s;
    for (const Cell& c : cells) {
        const int v = coord == 1 ? c.i : c.j;
        if (v > t) {
            s.value += v;
            s.count += 1;
        } else {
            s.value -= v;
            s.count -= 1;
        }
    }
    return s;
}

std::int64_t count_large(const std::vector<Cell>& cells, int coord, int t) {
    return std::count_if(cells.begin(), cells.end(), [&](const Cell& c) { return (coord == 1 ? c.i : c.j) > t; });
}

} // namespace

std::int64_t StructureReport::positive_count(int coord, const GridDims& dims) const {
    const int t = dims.t(coord);
    const auto& dl = coord == 1 ? d.d1_large : d.d2_large;
    return count_large(boundary, coord, t) + 2 * count_large(corners, coord, t) +
           2 * static_cast<std::int64_t>(dl.size());
}

std::int64_t StructureReport::negative_count(int coord, const GridDims& dims) const {
    const int t = dims.t(coord);
    const auto& ds = coord == 1 ? d.d1_small : d.d2_small;
    const auto b_small = static_cast<std::int64_t>(boundary.size()) - count_large(boundary, coord, t);
    const auto c_small = static_cast<std::int64_t>(corners.size()) - count_large(corners, coord, t);
    return b_small + 2 * c_small + 2 * static_cast<std::int64_t>(ds.size());
}

StructureReport structure_report(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    require_even(dims, "structure_report");
    StructureReport r;
    for (std::size_t k = 0; k < pi.images().size(); ++k) {
        const Cell x = dims.cell(k);
        if (dims.is_corner(x)) {
            r.corners.push_back(pi.at(k));
        } else if (dims.on_boundary(x)) {
            r.boundary.push_back(pi.at(k));
        }
    }
    // A 1-wide dimension would merge corners; even dims rule that out.
    std::sort(r.corners.begin(), r.corners.end());
    std::sort(r.boundary.begin(), r.boundary.end());
    r.d = defects(pi, Topology::Planar);

    for (int coord = 1; coord <= 2; ++coord) {
        const int t = dims.t(coord);
        const Signed b = signed_coords(r.boundary, coord, t);
        const Signed c = signed_coords(r.corners, coord, t);
        const auto& dl = coord == 1 ? r.d.d1_large : r.d.d2_large;
        const auto& ds = coord == 1 ? r.d.d1_small : r.d.d2_small;
        r.h += b.value + c.value;
        // x counts small minus large, the opposite sign of Signed::count.
        const std::int64_t x = -(b.count + c.count);
        (coord == 1 ? r.x1 : r.x2) = x;
        r.g += b.value + 2 * c.value + 2 * (sum(dl) - sum(ds));
    }
    return r;
}

std::int64_t naive_upper_bound(const GridDims& dims) {
    require_even(dims, "naive_upper_bound");
    const std::int64_t n1 = dims.n1();
    const std::int64_t n2 = dims.n2();
    return n1 * n2 * (n1 + n2);
}

bool exact_identity_check(const GridPermutation& pi) {
    const StructureReport r = structure_report(pi);
    return score(pi, Topology::Planar) == naive_upper_bound(pi.dims()) - r.g;
}

std::int64_t key_lower_bound_doubled(const GridDims& dims, const StructureReport& report) {
    require_even(dims, "key_lower_bound_doubled");
    if (dims.n1() > dims.n2()) {
        throw InvalidArgument("key_lower_bound_doubled requires n1 <= n2; transpose first");
    }
    return 2 * report.h + 8 + 2 * static_cast<std::int64_t>(dims.n1()) + (2 * dims.t1() + 1) * report.x1 +
           (2 * dims.t2() + 1) * report.x2;
}

std::int64_t key_lower_bound_doubled(const GridPermutation& pi) {
    return key_lower_bound_doubled(pi.dims(), structure_report(pi));
}

std::int64_t bichromatic_edges(std::span<const Color> coloring, const GridDims& dims, Topology topology) {
    if (coloring.size() != static_cast<std::size_t>(dims.cell_count())) {
        throw InvalidArgument("coloring size does not match grid");
    }
    std::int64_t count = 0;
    for (const Edge& e : neighbors(dims, topology)) {
        if (coloring[dims.index(e.a)] != coloring[dims.index(e.b)]) {
            ++count;
        }
    }
    return count;
}

std::vector<Color> homogeneity_coloring(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    std::vector<Color> out;
    out.reserve(pi.images().size());
    for (const Cell& v : pi.images()) {
        out.push_back(is_homogeneous(color_class(v, dims)) ? Color::Blue : Color::Red);
    }
    return out;
}

} // namespace gridsep
