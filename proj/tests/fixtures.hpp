#pragma once

#include "gridsep/grid.hpp"

#include <vector>

namespace fixtures {

using gridsep::Cell;
using gridsep::GridDims;
using gridsep::GridPermutation;

inline GridPermutation make(int n1, int n2, const std::vector<Cell>& rows) {
    return GridPermutation::from_images(GridDims(n1, n2), rows);
}

// 2x3 worked example; f = 14.
inline GridPermutation example_2x3() {
    return make(2, 3, {{2, 2}, {1, 3}, {2, 1}, {1, 2}, {1, 1}, {2, 3}});
}

// 4x6 example with one row of defects on the vertical line.
inline GridPermutation example_4x6() {
    return make(4, 6, {{2, 6}, {3, 1}, {1, 1}, {3, 4}, {1, 4}, {3, 6},
                       {4, 3}, {2, 5}, {3, 2}, {1, 2}, {3, 5}, {2, 2},
                       {2, 4}, {4, 2}, {1, 3}, {4, 6}, {2, 1}, {4, 4},
                       {4, 1}, {1, 6}, {3, 3}, {1, 5}, {4, 5}, {2, 3}});
}

// Optimal 6x6 figure; f = 378.
inline GridPermutation figure_6x6() {
    return make(6, 6, {{3, 3}, {4, 5}, {3, 2}, {3, 5}, {5, 3}, {3, 4},
                       {5, 4}, {1, 1}, {4, 6}, {5, 1}, {1, 5}, {5, 2},
                       {2, 3}, {5, 6}, {3, 1}, {1, 6}, {6, 1}, {2, 4},
                       {5, 5}, {1, 2}, {6, 5}, {4, 1}, {2, 6}, {6, 3},
                       {2, 2}, {6, 6}, {2, 1}, {3, 6}, {6, 2}, {2, 5},
                       {4, 4}, {1, 3}, {6, 4}, {4, 2}, {1, 4}, {4, 3}});
}

// 6x6 torus example. As printed, row 2 column 6 repeats (4,2); (4,4) is the
// only value that restores a bijection in the right class.
inline GridPermutation torus_6x6() {
    return make(6, 6, {{6, 4}, {3, 1}, {2, 4}, {6, 1}, {3, 4}, {2, 1},
                       {1, 1}, {5, 4}, {4, 1}, {1, 4}, {5, 1}, {4, 4},
                       {6, 5}, {3, 2}, {2, 5}, {6, 2}, {3, 5}, {2, 2},
                       {1, 2}, {5, 5}, {4, 2}, {1, 5}, {5, 2}, {4, 5},
                       {6, 6}, {3, 3}, {2, 6}, {6, 3}, {3, 6}, {2, 3},
                       {1, 3}, {5, 6}, {4, 3}, {1, 6}, {5, 3}, {4, 6}});
}

} // namespace fixtures
