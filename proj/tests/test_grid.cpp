#include "gridsep/error.hpp"
#include "gridsep/grid.hpp"
#include "gridsep/io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gridsep;

TEST_CASE("edge counts match direct enumeration") {
    for (int n1 = 1; n1 <= 12; ++n1) {
        for (int n2 = 1; n2 <= 12; ++n2) {
            const GridDims d(n1, n2);
            CHECK(neighbors(d, Topology::Planar).size() == oracle::pairs(n1, n2, false).size());
            CHECK(edge_count(d, Topology::Planar) == static_cast<std::size_t>(n1 * (n2 - 1) + n2 * (n1 - 1)));
            CHECK(neighbors(d, Topology::Torus).size() == static_cast<std::size_t>(2 * n1 * n2));
            CHECK(edge_count(d, Topology::Torus) == static_cast<std::size_t>(2 * n1 * n2));
        }
    }
    CHECK(edge_count(GridDims(6, 6), Topology::Planar) == 60);
    CHECK(edge_count(GridDims(6, 6), Topology::Torus) == 72);
}

TEST_CASE("planar neighbors are exactly the unit-distance pairs") {
    const GridDims d(4, 5);
    for (const Edge& e : neighbors(d, Topology::Planar)) {
        CHECK(distance(e.a, e.b) == 1);
    }
}

TEST_CASE("a wrap dimension of length two repeats its pair") {
    const auto edges = neighbors(GridDims(2, 3), Topology::Torus);
    int between_rows = 0;
    for (const Edge& e : edges) {
        if (e.a.j == e.b.j && e.a.j == 1) {
            ++between_rows;
        }
    }
    CHECK(between_rows == 2);
}

TEST_CASE("dims and permutation validation") {
    CHECK_THROWS_AS(GridDims(0, 3), InvalidArgument);
    CHECK_THROWS_AS(GridDims(3, -1), InvalidArgument);
    CHECK_THROWS_AS(GridDims(3, 4).t1(), InvalidArgument);
    const GridDims d(2, 2);
    CHECK_THROWS_AS(GridPermutation::from_images(d, {{1, 1}, {1, 1}, {2, 1}, {2, 2}}), InvalidArgument);
    CHECK_THROWS_AS(GridPermutation::from_images(d, {{1, 1}, {1, 2}, {2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(GridPermutation::from_images(d, {{1, 1}, {1, 2}, {2, 1}, {3, 1}}), InvalidArgument);
}

TEST_CASE("score of the 2x3 worked example and its signed split") {
    const auto pi = fixtures::example_2x3();
    CHECK(score(pi, Topology::Planar) == 14);
    const Decomposition d = decompose(pi, Topology::Planar);
    CHECK(d.s1_plus == std::vector<int>{1, 1, 2, 2, 2, 2, 2});
    CHECK(d.s1_minus == std::vector<int>{1, 1, 1, 1, 1, 1, 2});
    CHECK(d.s2_plus == std::vector<int>{2, 2, 3, 3, 3, 3, 3});
    CHECK(d.s2_minus == std::vector<int>{1, 1, 1, 1, 1, 2, 2});
    CHECK(d.signed_sum() == 14);
}

TEST_CASE("score and decomposition agree with the oracle on random grids") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const int n1 = 1 + static_cast<int>(rng() % 9);
        const int n2 = 1 + static_cast<int>(rng() % 9);
        const auto pi = oracle::random_perm(n1, n2, rng);
        for (bool torus : {false, true}) {
            const Topology t = torus ? Topology::Torus : Topology::Planar;
            CHECK(score(pi, t) == oracle::score(pi, torus));
            const Decomposition d = decompose(pi, t);
            CHECK(d.signed_sum() == score(pi, t));
            CHECK(d.s1_plus.size() == edge_count(pi.dims(), t));
        }
    }
}

TEST_CASE("transposition preserves the score") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pi = oracle::random_perm(3 + static_cast<int>(rng() % 5), 2 + static_cast<int>(rng() % 6), rng);
        CHECK(score(pi.transposed(), Topology::Planar) == score(pi, Topology::Planar));
        CHECK(score(pi.transposed(), Topology::Torus) == score(pi, Topology::Torus));
        CHECK(pi.transposed().transposed() == pi);
    }
}

TEST_CASE("grid JSON round trip is bit-exact") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto pi = oracle::random_perm(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6), rng);
        const Topology t = trial % 2 ? Topology::Torus : Topology::Planar;
        const std::string text = dump_grid(pi, t);
        const GridFile back = parse_grid(text);
        CHECK(back.perm == pi);
        CHECK(back.topology == t);
        CHECK(dump_grid(back.perm, back.topology) == text);
    }
}

TEST_CASE("malformed grid JSON is rejected") {
    CHECK_THROWS_AS(parse_grid("{"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid(R"({"n1":1,"n2":2,"perm":[[[1,1],[1,1]]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid(R"({"n1":1,"n2":2,"perm":[[[1,1]]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid(R"({"n1":1,"n2":2,"topology":"sphere","perm":[[[1,1],[1,2]]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_grid(R"({"n2":2,"perm":[]})"), InvalidArgument);
    CHECK_NOTHROW(parse_grid(R"({"n1":1,"n2":2,"perm":[[[1,2],[1,1]]]})"));
}
