#include "gridsep/error.hpp"
#include "gridsep/oned.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace gridsep;

TEST_CASE("closed-form totals") {
    CHECK(oned_max(2).total == 1);
    CHECK(oned_max(3).total == 3);
    CHECK(oned_max(4).total == 7);
    CHECK(oned_max(5).total == 11);
    CHECK(oned_max(6).total == 17);
    const OnedMax m = oned_max(6);
    CHECK(m.numerator == 17);
    CHECK(m.denominator == 5);
    CHECK_THROWS_AS(oned_max(1), InvalidArgument);
}

TEST_CASE("maxima and maximizers agree with brute force for n = 2..9") {
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        const auto brute = oracle::oned_brute(n);
        const OnedMax m = oned_max(n);
        CHECK(brute.best == m.total);
        CHECK(m.numerator == m.total);
        CHECK(m.denominator == n - 1);
        std::vector<int> s(static_cast<std::size_t>(n));
        std::iota(s.begin(), s.end(), 1);
        std::size_t optimal = 0;
        do {
            const bool is_max = std::find(brute.argmax.begin(), brute.argmax.end(), s) != brute.argmax.end();
            CHECK(oned_is_optimal(s) == is_max);
            optimal += oned_is_optimal(s);
        } while (std::next_permutation(s.begin(), s.end()));
        CHECK(optimal == brute.argmax.size());
    }
}

TEST_CASE("spot sequences") {
    CHECK(oned_is_optimal(std::vector<int>{2, 4, 1, 3}));
    CHECK_FALSE(oned_is_optimal(std::vector<int>{1, 2, 3, 4}));
    CHECK(oned_score(std::vector<int>{2, 4, 1, 3}) == 7);
    // Oscillates between {1,2,3} and {4,5} with ends 3 and 2.
    CHECK(oned_is_optimal(std::vector<int>{3, 5, 1, 4, 2}));
    CHECK(oned_score(std::vector<int>{3, 5, 1, 4, 2}) == 11);
    CHECK_FALSE(oned_is_optimal(std::vector<int>{1, 5, 2, 4, 3}));
    CHECK_THROWS_AS(oned_is_optimal(std::vector<int>{1, 1, 2}), InvalidArgument);
    CHECK_THROWS_AS(oned_is_optimal(std::vector<int>{0, 1}), InvalidArgument);
}
