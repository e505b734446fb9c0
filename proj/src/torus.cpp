#include "gridsep/torus.hpp"

#include "gridsep/error.hpp"
#include "gridsep/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gridsep {

const char* to_string(TorusFailure f) noexcept {
    switch (f) {
    case TorusFailure::NotTwoCuts:
        return "NotTwoCuts";
    case TorusFailure::CheckerboardBroken:
        return "CheckerboardBroken";
    case TorusFailure::DefectValuesWrong:
        return "DefectValuesWrong";
    }
    return "?";
}

std::int64_t torus_max_value(const GridDims& dims) {
    require_even(dims, "torus_max_value");
    const std::int64_t n1 = dims.n1();
    const std::int64_t n2 = dims.n2();
    return n1 * n2 * (n1 + n2) - 2 * std::min(n1, n2);
}

std::int64_t torus_deficit(const GridPermutation& pi) {
    const DefectMultisets d = defects(pi, Topology::Torus);
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); };
    return 2 * (sum(d.d1_large) + sum(d.d2_large) - sum(d.d1_small) - sum(d.d2_small));
}

namespace {

ColorClass flip_both(ColorClass c) { return color_class_of(!is_large(c, 1), !is_large(c, 2)); }

ColorClass kind_partner(ColorClass homog, DefectKind kind) {
    if (kind == DefectKind::RowDefects) {
        return color_class_of(is_large(homog, 1), !is_large(homog, 2));
    }
    return color_class_of(!is_large(homog, 1), is_large(homog, 2));
}

int wrap(int j, int n) { return ((j - 1) % n + n) % n + 1; }

GridPermutation build_vertical(const GridDims& dims, bool hetero_first, DefectKind kind, int cut,
                               std::mt19937_64* rng) {
    const int n1 = dims.n1();
    const int n2 = dims.n2();
    const int t2 = dims.t2();
    const int coord = kind == DefectKind::RowDefects ? 1 : 2;
    const int t = dims.t(coord);

    ColorClass homog_even = ColorClass::LightBlue;
    if (rng != nullptr && std::uniform_int_distribution<int>(0, 1)(*rng) == 1) {
        homog_even = ColorClass::DarkBlue;
    }
    // Columns cut+1 .. cut+t2 (cyclic) form the first block.
    auto in_first = [&](int j) { return wrap(j - cut, n2) <= t2; };
    auto cell_class = [&](Cell x) {
        const int p = (x.i + x.j) % 2;
        const ColorClass h = p == 0 ? homog_even : flip_both(homog_even);
        if (in_first(x.j) != hetero_first) {
            return h;
        }
        const ColorClass h_other = p == 1 ? homog_even : flip_both(homog_even);
        return kind_partner(h_other, kind);
    };
    auto value_class = [&](Cell v) { return color_class_of(v.i > dims.t1(), v.j > dims.t2()); };

    const auto n = static_cast<std::size_t>(dims.cell_count());
    std::vector<Cell> images(n);
    std::vector<bool> filled(n, false);
    std::vector<bool> used(n, false);
    auto place = [&](Cell x, Cell v) {
        images[dims.index(x)] = v;
        filled[dims.index(x)] = true;
        used[dims.index(v)] = true;
    };

    // Defect values t and t+1 of the shared coordinate, in row-major order
    // (shuffled when seeded).
    std::array<std::vector<Cell>, 2> pool; // [small, large]
    for (const Cell& v : dims.cells()) {
        const int c = coord == 1 ? v.i : v.j;
        if (c == t) {
            pool[0].push_back(v);
        } else if (c == t + 1) {
            pool[1].push_back(v);
        }
    }
    for (auto& p : pool) {
        if (rng != nullptr) {
            std::shuffle(p.begin(), p.end(), *rng);
        }
        std::reverse(p.begin(), p.end());
    }

    for (const int edge : {cut, cut + t2}) {
        const int left = wrap(edge, n2);
        const int right = wrap(edge + 1, n2);
        for (int i = 1; i <= n1; ++i) {
            const Cell a{i, left};
            const Cell b{i, right};
            const bool small = !is_large(cell_class(a), coord);
            // On a two-column torus both cuts cross the same pair of cells.
            if (filled[dims.index(a)] || filled[dims.index(b)]) {
                continue;
            }
            auto& p = pool[small ? 0 : 1];
            if (p.empty()) {
                throw std::logic_error("torus defect pool exhausted");
            }
            const Cell v = p.back();
            p.pop_back();
            place(cell_class(a) == value_class(v) ? a : b, v);
        }
    }

    std::array<std::vector<Cell>, 4> rest;
    for (const Cell& v : dims.cells()) {
        if (!used[dims.index(v)]) {
            rest[static_cast<std::size_t>(value_class(v))].push_back(v);
        }
    }
    for (auto& p : rest) {
        if (rng != nullptr) {
            std::shuffle(p.begin(), p.end(), *rng);
        }
        std::reverse(p.begin(), p.end());
    }
    for (const Cell& x : dims.cells()) {
        if (filled[dims.index(x)]) {
            continue;
        }
        auto& p = rest[static_cast<std::size_t>(cell_class(x))];
        if (p.empty()) {
            throw std::logic_error("torus class pool exhausted");
        }
        place(x, p.back());
        p.pop_back();
    }
    return GridPermutation::from_images(dims, std::move(images));
}

} // namespace

GridPermutation torus_build(const GridDims& dims, const BuildChoices& choices, std::optional<int> cut) {
    require_even(dims, "torus_build");
    const bool transposed_in = dims.n1() > dims.n2();
    const GridDims norm = transposed_in ? dims.transposed() : dims;
    const bool horizontal = choices.defect_line == DefectLine::Horizontal;
    if (horizontal && norm.n1() != norm.n2()) {
        throw Infeasible("horizontal cuts on the torus need a square grid");
    }
    const int c = cut.value_or(norm.t2());
    if (c < 1 || c > norm.n2()) {
        throw InvalidArgument("torus cut must lie in 1.." + std::to_string(norm.n2()));
    }
    DefectKind kind = choices.defect_kind;
    if (horizontal) {
        kind = kind == DefectKind::RowDefects ? DefectKind::ColumnDefects : DefectKind::RowDefects;
    }
    std::mt19937_64 rng(choices.seed.value_or(0));
    // The block right of cut c is heterogeneous when that side is chosen;
    // canonically columns 1..t2 are homogeneous and t2+1..n2 heterogeneous.
    const bool hetero_first = choices.heterogeneous_side == Side::Right;
    GridPermutation pi = build_vertical(norm, hetero_first, kind, c, choices.seed ? &rng : nullptr);
    if (score(pi, Topology::Torus) != torus_max_value(norm)) {
        throw std::logic_error("torus construction missed the maximum");
    }
    if (horizontal) {
        pi = pi.transposed();
    }
    return transposed_in ? pi.transposed() : pi;
}

TorusCertificate torus_verify(const GridPermutation& input) {
    require_even(input.dims(), "torus_verify");
    const GridPermutation pi = input.dims().n1() > input.dims().n2() ? input.transposed() : input;
    const GridDims& dims = pi.dims();
    auto fail = [](TorusFailure f) { return TorusCertificate{false, f}; };

    const std::vector<Color> colors = homogeneity_coloring(pi);
    auto color = [&](int i, int j) { return colors[dims.index({i, j})]; };
    // Lines parallel to the cut are monochromatic and the color changes
    // exactly twice going around.
    auto two_cuts = [&](bool vertical) {
        const int n_across = vertical ? dims.n2() : dims.n1();
        const int n_along = vertical ? dims.n1() : dims.n2();
        auto at = [&](int along, int across) { return vertical ? color(along, across) : color(across, along); };
        std::vector<Color> line(static_cast<std::size_t>(n_across));
        for (int across = 1; across <= n_across; ++across) {
            line[static_cast<std::size_t>(across - 1)] = at(1, across);
            for (int along = 2; along <= n_along; ++along) {
                if (at(along, across) != at(1, across)) {
                    return false;
                }
            }
        }
        int changes = 0;
        for (int k = 0; k < n_across; ++k) {
            changes += line[static_cast<std::size_t>(k)] != line[static_cast<std::size_t>((k + 1) % n_across)];
        }
        return changes == 2;
    };
    if (!two_cuts(true) && !(dims.n1() == dims.n2() && two_cuts(false))) {
        return fail(TorusFailure::NotTwoCuts);
    }

    const DefectMultisets d = defects(pi, Topology::Torus);
    if (static_cast<std::int64_t>(d.count()) != bichromatic_edges(colors, dims, Topology::Torus)) {
        return fail(TorusFailure::CheckerboardBroken);
    }

    const bool has1 = !d.d1_small.empty() || !d.d1_large.empty();
    const bool has2 = !d.d2_small.empty() || !d.d2_large.empty();
    auto all_equal = [](const std::vector<int>& v, int x) {
        return std::all_of(v.begin(), v.end(), [x](int y) { return y == x; });
    };
    if ((has1 && has2) || !all_equal(d.d1_small, dims.t1()) || !all_equal(d.d1_large, dims.t1() + 1) ||
        !all_equal(d.d2_small, dims.t2()) || !all_equal(d.d2_large, dims.t2() + 1)) {
        return fail(TorusFailure::DefectValuesWrong);
    }
    return TorusCertificate{true, std::nullopt};
}

} // namespace gridsep
