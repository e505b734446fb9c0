#include "gridsep/disks.hpp"
#include "gridsep/error.hpp"
#include "gridsep/structure.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gridsep;

namespace {

// g from its definition, with boundary and corner sums taken cell by cell.
std::int64_t g_by_definition(const GridPermutation& pi) {
    const GridDims& d = pi.dims();
    const int t[2] = {d.t1(), d.t2()};
    std::int64_t g = 2 * oracle::defects(pi, false).signed_sum;
    for (const Cell& x : d.cells()) {
        if (!d.on_boundary(x)) {
            continue;
        }
        const int mult = d.is_corner(x) ? 2 : 1;
        const int v[2] = {pi(x).i, pi(x).j};
        for (int c = 0; c < 2; ++c) {
            g += mult * (v[c] > t[c] ? v[c] : -v[c]);
        }
    }
    return g;
}

GridPermutation normalized(const GridPermutation& pi) {
    return pi.dims().n1() > pi.dims().n2() ? pi.transposed() : pi;
}

} // namespace

TEST_CASE("color classes") {
    const GridDims d(4, 6);
    CHECK(color_class({1, 1}, d) == ColorClass::LightBlue);
    CHECK(color_class({3, 4}, d) == ColorClass::DarkBlue);
    CHECK(color_class({3, 1}, d) == ColorClass::DarkRed);
    CHECK(color_class({2, 6}, d) == ColorClass::LightRed);
    CHECK_THROWS_AS(color_class({5, 1}, d), InvalidArgument);
    CHECK_THROWS_AS(color_class({1, 1}, GridDims(3, 4)), InvalidArgument);
}

TEST_CASE("defect multisets of the 4x6 example") {
    const auto pi = fixtures::example_4x6();
    const StructureReport r = structure_report(pi);
    CHECK(r.d.d1_small.empty());
    CHECK(r.d.d1_large.empty());
    CHECK(r.d.d2_small == std::vector<int>{1, 2, 2, 3, 3, 3});
    CHECK(r.d.d2_large == std::vector<int>{4, 4, 4, 5, 5});
    std::vector<int> c1_small, c1_large;
    for (const Cell& c : r.corners) {
        (c.i <= 2 ? c1_small : c1_large).push_back(c.i);
    }
    std::sort(c1_small.begin(), c1_small.end());
    std::sort(c1_large.begin(), c1_large.end());
    CHECK(c1_small == std::vector<int>{2, 2});
    CHECK(c1_large == std::vector<int>{3, 4});
}

TEST_CASE("property suite over random even grids up to 10x12") {
    std::mt19937_64 rng(20240601);
    int checked = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int n1 = 2 * (1 + static_cast<int>(rng() % 5));
        const int n2 = 2 * (1 + static_cast<int>(rng() % 6));
        const auto pi = oracle::random_perm(n1, n2, rng);
        const auto npi = normalized(pi);
        const GridDims& nd = npi.dims();
        CAPTURE(n1);
        CAPTURE(n2);

        const StructureReport r = structure_report(npi);
        const std::int64_t f = oracle::score(npi, false);
        const std::int64_t bound = std::int64_t{n1} * n2 * (n1 + n2);

        CHECK(naive_upper_bound(nd) == bound);
        CHECK(r.g == g_by_definition(npi));
        CHECK(f == bound - r.g);
        CHECK(exact_identity_check(npi));
        for (int c = 1; c <= 2; ++c) {
            CHECK(r.positive_count(c, nd) == r.negative_count(c, nd));
        }
        CHECK(f < bound);
        CHECK(oracle::defects(npi, false).count >= nd.n1());
        CHECK(static_cast<std::int64_t>(r.d.count()) == oracle::defects(npi, false).count);
        CHECK(2 * r.g >= key_lower_bound_doubled(npi));
        CHECK(ball_identity_check(npi));

        std::vector<Cell> bc = r.corners;
        bc.insert(bc.end(), r.boundary.begin(), r.boundary.end());
        const std::int64_t w = weight(nd, bc);
        const std::int64_t wk = oracle::min_weight(nd.n1(), nd.n2(), 2 * nd.n1() + 2 * nd.n2() - 4);
        CHECK(r.g >= 4 + nd.n1() + w);
        CHECK(w >= wk);

        const auto colors = homogeneity_coloring(npi);
        CHECK(bichromatic_edges(colors, nd, Topology::Planar) >= nd.n1());
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("key bound rejects tall grids") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(key_lower_bound_doubled(oracle::random_perm(6, 4, rng)), InvalidArgument);
}

TEST_CASE("figure 6x6 meets the key inequality with equality") {
    const auto pi = fixtures::figure_6x6();
    const StructureReport r = structure_report(pi);
    CHECK(r.g == 54);
    CHECK(2 * r.g == key_lower_bound_doubled(pi));
    CHECK(2 * boundary_weight(pi.dims(), r) == 88);
    CHECK(r.x1 == 0);
    CHECK(r.x2 == 0);
}

TEST_CASE("balanced colorings: planar minimum is n1 and torus minimum is 2 n1") {
    for (auto [n1, n2] : {std::pair{2, 2}, {2, 4}, {4, 4}}) {
        CHECK(oracle::min_bichromatic_balanced(n1, n2, false) == n1);
    }
    for (auto [n1, n2] : {std::pair{2, 4}, {4, 4}}) {
        CHECK(oracle::min_bichromatic_balanced(n1, n2, true) == 2 * n1);
    }
}

TEST_CASE("bichromatic_edges counts differing endpoints") {
    const GridDims d(2, 4);
    // Two vertical cuts on the torus.
    std::vector<Color> c{Color::Blue, Color::Blue, Color::Red, Color::Red,
                         Color::Blue, Color::Blue, Color::Red, Color::Red};
    CHECK(bichromatic_edges(c, d, Topology::Planar) == 2);
    CHECK(bichromatic_edges(c, d, Topology::Torus) == 4);
    CHECK_THROWS_AS(bichromatic_edges(std::span<const Color>(c).first(3), d, Topology::Planar), InvalidArgument);
}
