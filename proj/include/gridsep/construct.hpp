#pragma once

// Optimal permutations of even-by-even planar grids: which grids admit the
// optimal family, how to build members of it, how to certify membership,
// and the closed-form maximum.
//
// Orientation: all operations accept dims in either order. Internally they
// work on the normalized grid with n1 <= n2 (transposing in and out), and
// BuildChoices are interpreted relative to that normalized grid, where the
// defect line is vertical, between columns t2 and t2 + 1.

#include "gridsep/grid.hpp"
#include "gridsep/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace gridsep {

enum class DefectLine { Vertical, Horizontal };
// Half holding the heterogeneous values. For a horizontal line, Left/Right
// mean Top/Bottom.
enum class Side { Left, Right };
enum class DefectKind { RowDefects, ColumnDefects };

struct BuildChoices {
    DefectLine defect_line = DefectLine::Vertical;
    Side heterogeneous_side = Side::Right;
    DefectKind defect_kind = DefectKind::RowDefects;
    // Unset: canonical (least values first, fixed corner layout).
    // Set: randomized corners and value orders, deterministic per seed.
    std::optional<std::uint64_t> seed;

    static BuildChoices canonical() { return {}; }
    static BuildChoices random(std::uint64_t seed) {
        BuildChoices c;
        c.seed = seed;
        return c;
    }
};

struct FamilyStatus {
    bool nonempty = false;
    bool vertical_row_defects = false;
    bool vertical_column_defects = false;
    bool horizontal_allowed = false;
};

// Even dims (either orientation). `nonempty` follows the layer-count
// criterion; the per-kind flags come from an exact feasibility search.
FamilyStatus family_status(const GridDims& dims);

// The layer-count criterion alone: with r the fewest layers covering
// 2n1 + 2n2 - 4 cells, nonempty iff (exact cover and 2r <= 2t2 - t1 + 1)
// or (overshoot and 2r <= 2t2 - t1 + 3). Normalizes orientation.
bool layer_criterion_nonempty(const GridDims& dims);

// n1 == n2 in {4, 8, 12, 16}.
bool is_exceptional(const GridDims& dims);

// Generic: n1 n2 (n1 + n2) - 4 - n1 - w_{2n1+2n2-4}; two less on the
// exceptional squares. Odd dims throw OpenProblem.
std::int64_t max_value(const GridDims& dims);

// Throws Infeasible when the family is empty or the choices cannot be met,
// naming the violated layer condition.
GridPermutation build_optimal(const GridDims& dims, const BuildChoices& choices = BuildChoices::canonical());

// Exceptional squares only. A construction relaxed by exactly two units of
// deficit (one extra layer step in the boundary disk, or one defect value off
// by one), polished by annealing if the relaxation lands short. Throws
// BudgetExceeded if the target is not reached.
GridPermutation build_exceptional(const GridDims& dims, std::uint64_t seed);

enum class FailedCondition {
    CornersNotLambda1,
    DefectCountNotMinimal,
    NoCleanSplit,
    DefectValuesWrong,
    BoundaryNotDisk,
};

const char* to_string(FailedCondition c) noexcept;

struct Certificate {
    bool pass = false;
    std::optional<FailedCondition> failed;
};

// Planar optimality certificate (even dims, either orientation): corners hold
// the innermost layer; exactly n1 defects, all across one straight cut that
// halves the grid into homogeneous and heterogeneous values; small defect
// values equal t_i and large ones t_i + 1; boundary values form a disk.
Certificate verify_optimal(const GridPermutation& pi);

} // namespace gridsep
