#pragma once

// Independent searches used to check the closed forms: exhaustive
// enumeration, depth-first branch and bound, and simulated annealing with
// transposition moves.

#include "gridsep/grid.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gridsep {

struct SearchResult {
    std::int64_t max_score = 0;
    GridPermutation witness;
    std::optional<std::int64_t> argmax_count; // exhaustive only
    bool proven_optimal = false;
    std::int64_t nodes_explored = 0;
};

// 9!: all grids up to nine cells.
inline constexpr std::uint64_t kDefaultExhaustiveBudget = 362880;

// Enumerates all (n1 n2)! permutations; refuses with BudgetExceeded when that
// count exceeds `budget`. The witness is the lexicographically smallest
// maximizer. If `argmax` is given it receives every maximizer in
// lexicographic order.
SearchResult exhaustive_max(const GridDims& dims, Topology topology,
                            std::uint64_t budget = kDefaultExhaustiveBudget,
                            std::vector<GridPermutation>* argmax = nullptr);

// Row-major assignment, values tried in row-major order. The incumbent starts
// from the known constructions where they apply, otherwise from the identity.
SearchResult bnb_max(const GridDims& dims, Topology topology, std::int64_t node_budget);

// Upper bound on the score of every completion of `prefix`, the images of the
// first prefix.size() cells in row-major order.
std::int64_t partial_upper_bound(const GridDims& dims, Topology topology, std::span<const Cell> prefix);

struct AnnealSchedule {
    std::int64_t steps = 1'000'000;
    double t0 = 3.0;
    double cooling = 0.99999; // per-step factor; reheats to t0 when T < 0.05
};

// Starts from `start` or a seeded shuffle. Stops early once `target` is met.
SearchResult anneal(const GridDims& dims, Topology topology, std::optional<std::int64_t> target, std::uint64_t seed,
                    const AnnealSchedule& schedule = {}, const GridPermutation* start = nullptr);

} // namespace gridsep
