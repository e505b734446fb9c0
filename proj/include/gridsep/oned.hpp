#pragma once

// The one-dimensional problem: orderings of 1..n maximizing the sum of
// absolute differences of consecutive entries.

#include <cstdint>
#include <span>

namespace gridsep {

struct OnedMax {
    std::int64_t numerator = 0;   // average per edge, as numerator / denominator
    std::int64_t denominator = 1; // n - 1, unreduced
    std::int64_t total = 0;
};

// Throws InvalidArgument for n < 2.
OnedMax oned_max(int n);

// True iff `seq` alternates between a lower and an upper half of 1..n and its
// endpoints are the two values adjacent to the split (for odd n either half
// may take the middle value). Throws InvalidArgument if `seq` is not a
// permutation of 1..n.
bool oned_is_optimal(std::span<const int> seq);

std::int64_t oned_score(std::span<const int> seq);

} // namespace gridsep
