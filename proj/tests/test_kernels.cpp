#include "gridsep/kernels.hpp"

#include "gridsep/grid.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace gridsep;
namespace k = gridsep::kernels;

namespace {

std::vector<k::Backend> available() {
    std::vector<k::Backend> out;
    for (auto b : {k::Backend::Scalar, k::Backend::Avx2, k::Backend::Neon}) {
        if (k::backend_available(b)) {
            out.push_back(b);
        }
    }
    return out;
}

std::int64_t naive_abs_sum(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) {
    std::int64_t s = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        s += a[q] > b[q] ? std::int64_t{a[q]} - b[q] : std::int64_t{b[q]} - a[q];
    }
    return s;
}

} // namespace

TEST_CASE("scalar backend is always there") {
    CHECK(k::backend_available(k::Backend::Scalar));
}

TEST_CASE("sum_abs_diff agrees across backends, including ragged tails") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int32_t> val(-1'000'000, 1'000'000);
    for (std::size_t len = 0; len <= 70; ++len) {
        std::vector<std::int32_t> a(len), b(len);
        for (std::size_t q = 0; q < len; ++q) {
            a[q] = val(rng);
            b[q] = val(rng);
        }
        const std::int64_t expect = naive_abs_sum(a, b);
        for (auto be : available()) {
            CAPTURE(k::backend_name(be));
            CHECK(k::sum_abs_diff(be, a, b) == expect);
        }
    }
}

TEST_CASE("large differences accumulate exactly") {
    std::vector<std::int32_t> a(37, 1'000'000'000), b(37, -1'000'000'000);
    for (auto be : available()) {
        CHECK(k::sum_abs_diff(be, a, b) == 37LL * 2'000'000'000LL);
    }
}

TEST_CASE("plane_edge_sum agrees across backends on planar and wrapped grids") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int32_t> val(1, 50);
    for (int n1 = 1; n1 <= 13; ++n1) {
        for (int n2 = 1; n2 <= 13; ++n2) {
            std::vector<std::int32_t> plane(static_cast<std::size_t>(n1 * n2));
            for (auto& v : plane) {
                v = val(rng);
            }
            for (bool wrap : {false, true}) {
                const auto ref = k::plane_edge_sum(k::Backend::Scalar, plane, n1, n2, wrap);
                for (auto be : available()) {
                    CAPTURE(n1);
                    CAPTURE(n2);
                    CAPTURE(wrap);
                    CHECK(k::plane_edge_sum(be, plane, n1, n2, wrap) == ref);
                }
            }
        }
    }
}

TEST_CASE("forcing and resetting the backend") {
    k::force_backend(k::Backend::Scalar);
    CHECK(k::active_backend() == k::Backend::Scalar);
    k::reset_backend();
    CHECK(k::backend_available(k::active_backend()));
    for (auto be : {k::Backend::Avx2, k::Backend::Neon}) {
        if (!k::backend_available(be)) {
            CHECK_THROWS(k::force_backend(be));
        }
    }
}

TEST_CASE("score is identical under every backend") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Cell> img = GridDims(7, 9).cells();
        std::shuffle(img.begin(), img.end(), rng);
        const auto pi = GridPermutation::from_images(GridDims(7, 9), img);
        k::force_backend(k::Backend::Scalar);
        const auto planar = score(pi, Topology::Planar);
        const auto torus = score(pi, Topology::Torus);
        for (auto be : available()) {
            k::force_backend(be);
            CHECK(score(pi, Topology::Planar) == planar);
            CHECK(score(pi, Topology::Torus) == torus);
        }
        k::reset_backend();
    }
}
