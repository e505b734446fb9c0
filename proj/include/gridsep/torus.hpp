#pragma once

// Even-by-even grids on the torus: the neighbor relation wraps around, image
// distances are still planar L1. There is no boundary, so the deficit reduces
// to twice the signed defect sum.

#include "gridsep/construct.hpp"
#include "gridsep/grid.hpp"

#include <cstdint>
#include <optional>

namespace gridsep {

// n1 n2 (n1 + n2) - 2 min(n1, n2). Odd dims throw InvalidArgument.
std::int64_t torus_max_value(const GridDims& dims);

// g = 2 (sum D^> - sum D^<) over the wrap-around neighbor multiset.
std::int64_t torus_deficit(const GridPermutation& pi);

// Two cuts between columns c | c+1 and c+t2 | c+t2+1 (cyclically) of the
// normalized grid; `cut` defaults to t2, i.e. cuts after columns t2 and n2.
// Both blocks have width t2: half of all values are homogeneous. The
// heterogeneous side choice swaps the blocks; a horizontal line needs n1 == n2.
GridPermutation torus_build(const GridDims& dims, const BuildChoices& choices = BuildChoices::canonical(),
                            std::optional<int> cut = std::nullopt);

enum class TorusFailure { NotTwoCuts, CheckerboardBroken, DefectValuesWrong };

const char* to_string(TorusFailure f) noexcept;

struct TorusCertificate {
    bool pass = false;
    std::optional<TorusFailure> failed;
};

TorusCertificate torus_verify(const GridPermutation& pi);

} // namespace gridsep
