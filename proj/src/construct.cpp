#include "gridsep/construct.hpp"

#include "gridsep/disks.hpp"
#include "gridsep/error.hpp"
#include "gridsep/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gridsep {

const char* to_string(FailedCondition c) noexcept {
    switch (c) {
    case FailedCondition::CornersNotLambda1:
        return "CornersNotLambda1";
    case FailedCondition::DefectCountNotMinimal:
        return "DefectCountNotMinimal";
    case FailedCondition::NoCleanSplit:
        return "NoCleanSplit";
    case FailedCondition::DefectValuesWrong:
        return "DefectValuesWrong";
    case FailedCondition::BoundaryNotDisk:
        return "BoundaryNotDisk";
    }
    return "?";
}

namespace {

constexpr std::int64_t kInfeasibleCost = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int64_t kNodeCap = 4'000'000;

GridDims normalized(const GridDims& dims) { return dims.n1() <= dims.n2() ? dims : dims.transposed(); }

std::size_t class_index(ColorClass c) { return static_cast<std::size_t>(c); }

ColorClass flip_both(ColorClass c) { return color_class_of(!is_large(c, 1), !is_large(c, 2)); }

// Heterogeneous class sharing exactly the defect coordinate with `homog`.
ColorClass kind_partner(ColorClass homog, DefectKind kind) {
    if (kind == DefectKind::RowDefects) {
        return color_class_of(is_large(homog, 1), !is_large(homog, 2));
    }
    return color_class_of(!is_large(homog, 1), is_large(homog, 2));
}

// Double-checkerboard layout of a normalized grid split by the vertical line
// between columns t2 and t2 + 1.
struct Layout {
    GridDims dims;
    bool hetero_right = true;
    ColorClass homog_even = ColorClass::LightBlue; // homogeneous class where i + j is even
    DefectKind kind = DefectKind::RowDefects;

    int defect_coord() const { return kind == DefectKind::RowDefects ? 1 : 2; }
    int homog_col() const { return hetero_right ? dims.t2() : dims.t2() + 1; }
    int hetero_col() const { return hetero_right ? dims.t2() + 1 : dims.t2(); }

    ColorClass homog(int parity) const { return parity == 0 ? homog_even : flip_both(homog_even); }
    // A heterogeneous cell of parity q borders homogeneous cells of parity 1 - q.
    ColorClass hetero(int parity) const { return kind_partner(homog(1 - parity), kind); }

    bool in_hetero_half(Cell x) const { return hetero_right ? x.j > dims.t2() : x.j <= dims.t2(); }
    ColorClass cell_class(Cell x) const {
        const int parity = (x.i + x.j) % 2;
        return in_hetero_half(x) ? hetero(parity) : homog(parity);
    }
};

struct DefectRow {
    int row = 0;
    bool boundary = false;
    bool small = false; // the shared defect coordinate is small in this row
    int target = 0;     // ideal value of the defect coordinate
};

struct Candidate {
    Cell value;
    int deviation = 0;
};

// Chooses defect-line values and the boundary disk under a deficit budget.
// The deficit of a layout-respecting permutation with corners on the
// innermost layer is (w(B ∪ C) - w_min) + 2 * (total defect deviation), so
// budget 0 reproduces the optimal family exactly.
class LineSolver {
public:
    LineSolver(const Layout& layout, std::int64_t budget, std::mt19937_64* rng)
        : layout_(layout), dims_(layout.dims), budget_(budget), rng_(rng) {
        const int t1 = dims_.t1();
        const int t2 = dims_.t2();
        quota_ = t1 + t2 - 2;
        status_.assign(static_cast<std::size_t>(dims_.cell_count()), Status::Free);

        // Per-class value lists ordered by layer; ties row-major or random.
        std::vector<std::uint64_t> tiebreak(static_cast<std::size_t>(dims_.cell_count()));
        std::iota(tiebreak.begin(), tiebreak.end(), 0);
        if (rng_ != nullptr) {
            std::shuffle(tiebreak.begin(), tiebreak.end(), *rng_);
        }
        for (const Cell& v : dims_.cells()) {
            if (layer_of(dims_, v) == 1) {
                continue; // corners
            }
            by_class_[class_index(class_of(v))].push_back(v);
        }
        for (auto& list : by_class_) {
            std::stable_sort(list.begin(), list.end(), [&](const Cell& a, const Cell& b) {
                const int la = layer_of(dims_, a);
                const int lb = layer_of(dims_, b);
                if (la != lb) {
                    return la < lb;
                }
                return tiebreak[dims_.index(a)] < tiebreak[dims_.index(b)];
            });
        }
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& list = by_class_[c];
            base_[c] = 0;
            if (list.size() < static_cast<std::size_t>(quota_)) {
                throw std::logic_error("class smaller than boundary quota");
            }
            for (int k = 0; k < quota_; ++k) {
                base_[c] += layer_of(dims_, list[static_cast<std::size_t>(k)]);
            }
        }

        const int h = layout_.homog_col();
        for (int i = 1; i <= dims_.n1(); ++i) {
            const Cell homog_cell{i, h};
            const Cell hetero_cell{i, layout_.hetero_col()};
            if (dims_.is_corner(homog_cell) || dims_.is_corner(hetero_cell)) {
                continue; // 2-column grid: corner values already sit on the line
            }
            DefectRow row;
            row.row = i;
            row.boundary = (i == 1 || i == dims_.n1());
            const ColorClass hc = layout_.cell_class(homog_cell);
            row.small = !is_large(hc, layout_.defect_coord());
            row.target = row.small ? dims_.t(layout_.defect_coord()) : dims_.t(layout_.defect_coord()) + 1;
            rows_.push_back(row);
        }
        // Boundary rows first; their candidates are the most constrained.
        std::stable_partition(rows_.begin(), rows_.end(), [](const DefectRow& r) { return r.boundary; });

        for (int b = 0; b < 2; ++b) {
            for (int s = 0; s < 2; ++s) {
                candidates_[b][s] = make_candidates(b == 1, s == 1);
            }
        }
    }

    bool solve() {
        chosen_.assign(rows_.size(), Cell{});
        nodes_ = 0;
        return dfs(0, 0, {-1, -1});
    }

    const std::vector<DefectRow>& rows() const { return rows_; }
    const std::vector<Cell>& chosen() const { return chosen_; }

    // Boundary (non-corner) values per class for the current statuses.
    std::array<std::vector<Cell>, 4> boundary_sets() const {
        std::array<std::vector<Cell>, 4> out;
        fill_boundary(&out);
        return out;
    }

    std::int64_t deficit() const { return boundary_cost() + 2 * deviation_; }

private:
    enum class Status : std::uint8_t { Free, Include, Exclude };

    ColorClass class_of(Cell v) const { return color_class_of(v.i > dims_.t1(), v.j > dims_.t2()); }

    Status& status(Cell v) { return status_[dims_.index(v)]; }
    Status status(Cell v) const { return status_[dims_.index(v)]; }

    // Deficit of the cheapest balanced boundary honoring the statuses, and
    // optionally the chosen sets.
    std::int64_t fill_boundary(std::array<std::vector<Cell>, 4>* out) const {
        std::int64_t cost = 0;
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& list = by_class_[c];
            std::int64_t w = 0;
            int taken = 0;
            for (const Cell& v : list) {
                if (status(v) == Status::Include) {
                    w += layer_of(dims_, v);
                    ++taken;
                    if (out != nullptr) {
                        (*out)[c].push_back(v);
                    }
                }
            }
            if (taken > quota_) {
                return kInfeasibleCost;
            }
            for (const Cell& v : list) {
                if (taken == quota_) {
                    break;
                }
                if (status(v) == Status::Free) {
                    w += layer_of(dims_, v);
                    ++taken;
                    if (out != nullptr) {
                        (*out)[c].push_back(v);
                    }
                }
            }
            if (taken < quota_) {
                return kInfeasibleCost;
            }
            cost += w - base_[c];
        }
        return cost;
    }

    std::int64_t boundary_cost() const { return fill_boundary(nullptr); }

    std::vector<Candidate> make_candidates(bool boundary, bool small) {
        const int coord = layout_.defect_coord();
        const int t = dims_.t(coord);
        const int n = coord == 1 ? dims_.n1() : dims_.n2();
        const int other_n = coord == 1 ? dims_.n2() : dims_.n1();
        std::vector<std::pair<std::int64_t, Candidate>> scored;
        for (int d = 0; 2 * d <= budget_; ++d) {
            const int value = small ? t - d : t + 1 + d;
            if (value < 1 || value > n) {
                break;
            }
            for (int k = 1; k <= other_n; ++k) {
                const Cell v = coord == 1 ? Cell{value, k} : Cell{k, value};
                if (layer_of(dims_, v) == 1) {
                    continue;
                }
                status(v) = boundary ? Status::Include : Status::Exclude;
                const std::int64_t cost = boundary_cost() + 2 * d;
                status(v) = Status::Free;
                if (cost <= budget_) {
                    scored.push_back({cost, Candidate{v, d}});
                }
            }
        }
        if (rng_ != nullptr) {
            std::shuffle(scored.begin(), scored.end(), *rng_);
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Candidate> out;
        out.reserve(scored.size());
        for (const auto& s : scored) {
            out.push_back(s.second);
        }
        return out;
    }

    std::size_t remaining_interior(std::size_t from, bool small) const {
        std::size_t count = 0;
        for (std::size_t k = from; k < rows_.size(); ++k) {
            if (!rows_[k].boundary && rows_[k].small == small) {
                ++count;
            }
        }
        return count;
    }

    bool dfs(std::size_t k, std::int64_t deviation, std::array<int, 2> last) {
        if (++nodes_ > kNodeCap) {
            throw Infeasible("defect-line search exceeded its node cap");
        }
        deviation_ = deviation;
        if (2 * deviation + boundary_cost() > budget_) {
            return false;
        }
        for (int s = 0; s < 2; ++s) {
            const auto need = remaining_interior(k, s == 1);
            const auto& list = candidates_[0][static_cast<std::size_t>(s)];
            if (need > 0 && list.size() - static_cast<std::size_t>(last[static_cast<std::size_t>(s)] + 1) < need) {
                return false;
            }
        }
        if (k == rows_.size()) {
            return true;
        }
        const DefectRow& row = rows_[k];
        const auto& list = candidates_[row.boundary ? 1 : 0][row.small ? 1 : 0];
        // Interior rows of one type are interchangeable: pick candidates in
        // increasing list order to enumerate sets rather than sequences.
        const int start = row.boundary ? 0 : last[row.small ? 1 : 0] + 1;
        for (int idx = start; idx < static_cast<int>(list.size()); ++idx) {
            const Candidate& cand = list[static_cast<std::size_t>(idx)];
            if (status(cand.value) != Status::Free) {
                continue;
            }
            status(cand.value) = row.boundary ? Status::Include : Status::Exclude;
            chosen_[k] = cand.value;
            std::array<int, 2> next = last;
            if (!row.boundary) {
                next[row.small ? 1 : 0] = idx;
            }
            if (dfs(k + 1, deviation + cand.deviation, next)) {
                return true;
            }
            status(cand.value) = Status::Free;
            deviation_ = deviation;
        }
        return false;
    }

    Layout layout_;
    GridDims dims_;
    std::int64_t budget_;
    std::mt19937_64* rng_;
    int quota_ = 0;
    std::array<std::vector<Cell>, 4> by_class_;
    std::array<std::int64_t, 4> base_{};
    std::vector<Status> status_;
    std::vector<DefectRow> rows_;
    std::array<std::array<std::vector<Candidate>, 2>, 2> candidates_; // [boundary][small]
    std::vector<Cell> chosen_;
    std::int64_t deviation_ = 0;
    std::int64_t nodes_ = 0;
};

// Boundary cells clockwise from the top-left corner, corners excluded.
std::vector<Cell> clockwise_boundary(const GridDims& dims) {
    const int n1 = dims.n1();
    const int n2 = dims.n2();
    std::vector<Cell> out;
    for (int j = 2; j < n2; ++j) {
        out.push_back({1, j});
    }
    for (int i = 2; i < n1; ++i) {
        out.push_back({i, n2});
    }
    for (int j = n2 - 1; j >= 2; --j) {
        out.push_back({n1, j});
    }
    for (int i = n1 - 1; i >= 2; --i) {
        out.push_back({i, 1});
    }
    return out;
}

GridPermutation assemble(const Layout& layout, const LineSolver& solver, std::mt19937_64* rng) {
    const GridDims& dims = layout.dims;
    const auto n = static_cast<std::size_t>(dims.cell_count());
    std::vector<Cell> images(n);
    std::vector<bool> filled(n, false);
    std::vector<bool> used(n, false);
    auto place = [&](Cell x, Cell v) {
        if (filled[dims.index(x)] || used[dims.index(v)]) {
            throw std::logic_error("construction placed a cell or value twice");
        }
        images[dims.index(x)] = v;
        filled[dims.index(x)] = true;
        used[dims.index(v)] = true;
    };
    auto value_class = [&](Cell v) { return color_class_of(v.i > dims.t1(), v.j > dims.t2()); };

    // (i) corners from the innermost layer, one per class.
    const std::vector<Cell> inner = layer_cells(dims, 1);
    for (const Cell& x : {Cell{1, 1}, Cell{1, dims.n2()}, Cell{dims.n1(), 1}, Cell{dims.n1(), dims.n2()}}) {
        const ColorClass c = layout.cell_class(x);
        const auto it = std::find_if(inner.begin(), inner.end(), [&](const Cell& v) { return value_class(v) == c; });
        place(x, *it);
    }

    // (ii)-(iii) defect-line values.
    for (std::size_t k = 0; k < solver.rows().size(); ++k) {
        const int i = solver.rows()[k].row;
        const Cell v = solver.chosen()[k];
        const Cell a{i, layout.homog_col()};
        const Cell b{i, layout.hetero_col()};
        place(layout.cell_class(a) == value_class(v) ? a : b, v);
    }

    // (ii) rest of the boundary disk, class by class, clockwise.
    auto sets = solver.boundary_sets();
    std::array<std::vector<Cell>, 4> pools;
    for (std::size_t c = 0; c < 4; ++c) {
        for (const Cell& v : sets[c]) {
            if (!used[dims.index(v)]) {
                pools[c].push_back(v);
            }
        }
        if (rng != nullptr) {
            std::shuffle(pools[c].begin(), pools[c].end(), *rng);
        } else {
            std::sort(pools[c].begin(), pools[c].end());
        }
        std::reverse(pools[c].begin(), pools[c].end()); // pop from the back
    }
    for (const Cell& x : clockwise_boundary(dims)) {
        if (filled[dims.index(x)]) {
            continue;
        }
        auto& pool = pools[class_index(layout.cell_class(x))];
        if (pool.empty()) {
            throw std::logic_error("boundary pool exhausted");
        }
        place(x, pool.back());
        pool.pop_back();
    }

    // (iv) interior, row-major, least unused value of the forced class.
    std::array<std::vector<Cell>, 4> rest;
    for (const Cell& v : dims.cells()) {
        if (!used[dims.index(v)]) {
            rest[class_index(value_class(v))].push_back(v);
        }
    }
    for (auto& pool : rest) {
        if (rng != nullptr) {
            std::shuffle(pool.begin(), pool.end(), *rng);
        }
        std::reverse(pool.begin(), pool.end());
    }
    for (const Cell& x : dims.cells()) {
        if (filled[dims.index(x)]) {
            continue;
        }
        auto& pool = rest[class_index(layout.cell_class(x))];
        if (pool.empty()) {
            throw std::logic_error("interior pool exhausted");
        }
        place(x, pool.back());
        pool.pop_back();
    }
    return GridPermutation::from_images(dims, std::move(images));
}

Layout make_layout(const GridDims& norm, Side hetero_side, DefectKind kind, ColorClass homog_even) {
    Layout layout{norm};
    layout.hetero_right = hetero_side == Side::Right;
    layout.kind = kind;
    layout.homog_even = homog_even;
    return layout;
}

bool line_feasible(const GridDims& norm, DefectKind kind) {
    LineSolver solver(make_layout(norm, Side::Right, kind, ColorClass::LightBlue), 0, nullptr);
    return solver.solve();
}

std::string criterion_report(const GridDims& norm) {
    const int t1 = norm.t1();
    const int t2 = norm.t2();
    const std::int64_t bc = 2LL * norm.n1() + 2LL * norm.n2() - 4;
    int r = 0;
    std::int64_t covered = 0;
    while (covered < bc) {
        ++r;
        covered += layer_size(norm, r);
    }
    std::ostringstream os;
    os << "r = " << r << ", |Λ_1..Λ_r| = " << covered << ", |B ∪ C| = " << bc << "; ";
    if (covered == bc) {
        os << "exact cover needs r <= t2 - t1/2 + 1/2 = " << (2.0 * t2 - t1 + 1) / 2.0;
    } else {
        os << "overshoot needs r <= t2 - t1/2 + 3/2 = " << (2.0 * t2 - t1 + 3) / 2.0;
    }
    return os.str();
}

std::string dims_string(const GridDims& d) { return std::to_string(d.n1()) + "x" + std::to_string(d.n2()); }

} // namespace

bool layer_criterion_nonempty(const GridDims& dims) {
    require_even(dims, "layer_criterion_nonempty");
    const GridDims norm = normalized(dims);
    const int t1 = norm.t1();
    const int t2 = norm.t2();
    const std::int64_t bc = 2LL * norm.n1() + 2LL * norm.n2() - 4;
    int r = 0;
    std::int64_t covered = 0;
    while (covered < bc) {
        ++r;
        covered += layer_size(norm, r);
    }
    if (covered == bc) {
        return 2 * r <= 2 * t2 - t1 + 1;
    }
    return 2 * r <= 2 * t2 - t1 + 3;
}

FamilyStatus family_status(const GridDims& dims) {
    require_even(dims, "family_status");
    const GridDims norm = normalized(dims);
    FamilyStatus s;
    s.nonempty = layer_criterion_nonempty(norm);
    s.vertical_row_defects = line_feasible(norm, DefectKind::RowDefects);
    s.vertical_column_defects = line_feasible(norm, DefectKind::ColumnDefects);
    s.horizontal_allowed = norm.n1() == norm.n2() && s.nonempty;
    return s;
}

bool is_exceptional(const GridDims& dims) {
    return dims.n1() == dims.n2() && (dims.n1() == 4 || dims.n1() == 8 || dims.n1() == 12 || dims.n1() == 16);
}

std::int64_t max_value(const GridDims& dims) {
    if (!dims.even()) {
        throw OpenProblem("maximum for odd dimensions " + dims_string(dims) + " is an open problem");
    }
    const GridDims norm = normalized(dims);
    const std::int64_t n1 = norm.n1();
    const std::int64_t n2 = norm.n2();
    const std::int64_t generic = n1 * n2 * (n1 + n2) - 4 - n1 - min_weight(norm, 2 * n1 + 2 * n2 - 4);
    return is_exceptional(norm) ? generic - 2 : generic;
}

GridPermutation build_optimal(const GridDims& dims, const BuildChoices& choices) {
    require_even(dims, "build_optimal");
    const bool transposed_in = dims.n1() > dims.n2();
    const GridDims norm = normalized(dims);
    const bool horizontal = choices.defect_line == DefectLine::Horizontal;
    if (horizontal && norm.n1() != norm.n2()) {
        throw Infeasible("a horizontal defect line needs a square grid; " + dims_string(norm) +
                         " admits only a line parallel to its shorter side");
    }
    if (!layer_criterion_nonempty(norm)) {
        throw Infeasible("no optimal construction exists for " + dims_string(norm) + ": " + criterion_report(norm) +
                         (is_exceptional(norm) ? " (exceptional square; see build_exceptional)" : ""));
    }
    // A horizontal line is the transpose of a vertical one, which swaps the
    // roles of the two coordinates.
    DefectKind kind = choices.defect_kind;
    if (horizontal) {
        kind = kind == DefectKind::RowDefects ? DefectKind::ColumnDefects : DefectKind::RowDefects;
    }

    std::mt19937_64 rng(choices.seed.value_or(0));
    std::mt19937_64* rng_ptr = choices.seed ? &rng : nullptr;
    ColorClass homog_even = ColorClass::LightBlue;
    if (rng_ptr != nullptr && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
        homog_even = ColorClass::DarkBlue;
    }
    const Layout layout = make_layout(norm, choices.heterogeneous_side, kind, homog_even);
    LineSolver solver(layout, 0, rng_ptr);
    if (!solver.solve()) {
        throw Infeasible(std::string("no ") + (kind == DefectKind::RowDefects ? "row" : "column") +
                         "-defect construction exists for " + dims_string(norm) +
                         ": too few defect values remain outside the boundary disk (" + criterion_report(norm) + ")");
    }
    GridPermutation pi = assemble(layout, solver, rng_ptr);
    if (score(pi, Topology::Planar) != max_value(norm)) {
        throw std::logic_error("construction missed the closed-form maximum");
    }
    if (horizontal) {
        pi = pi.transposed();
    }
    return transposed_in ? pi.transposed() : pi;
}

GridPermutation build_exceptional(const GridDims& dims, std::uint64_t seed) {
    require_even(dims, "build_exceptional");
    if (!is_exceptional(dims)) {
        throw InvalidArgument("build_exceptional applies only to 4x4, 8x8, 12x12 and 16x16, got " + dims_string(dims));
    }
    const std::int64_t target = max_value(dims);
    std::mt19937_64 rng(seed);
    std::optional<GridPermutation> best;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::min();
    for (const DefectKind kind : {DefectKind::RowDefects, DefectKind::ColumnDefects}) {
        for (const Side side : {Side::Right, Side::Left}) {
            for (const ColorClass h : {ColorClass::LightBlue, ColorClass::DarkBlue}) {
                const Layout layout = make_layout(dims, side, kind, h);
                LineSolver solver(layout, 2, &rng);
                if (!solver.solve()) {
                    continue;
                }
                GridPermutation pi = assemble(layout, solver, &rng);
                const std::int64_t s = score(pi, Topology::Planar);
                if (s > target) {
                    throw std::logic_error("relaxed construction beat the claimed exceptional maximum");
                }
                if (s == target) {
                    return pi;
                }
                if (s > best_score) {
                    best_score = s;
                    best = pi;
                }
            }
        }
    }
    // Fallback: polish the best near-construction (or a random start) by annealing.
    AnnealSchedule schedule;
    schedule.steps = 4'000'000;
    const SearchResult r = anneal(dims, Topology::Planar, target, seed, schedule, best ? &*best : nullptr);
    if (r.max_score < target) {
        throw BudgetExceeded("build_exceptional: best score " + std::to_string(r.max_score) + " below target " +
                                 std::to_string(target),
                             r.max_score);
    }
    return r.witness;
}

Certificate verify_optimal(const GridPermutation& input) {
    const GridDims& in_dims = input.dims();
    require_even(in_dims, "verify_optimal");
    const GridPermutation pi = in_dims.n1() > in_dims.n2() ? input.transposed() : input;
    const GridDims& dims = pi.dims();
    const StructureReport r = structure_report(pi);
    auto fail = [](FailedCondition c) { return Certificate{false, c}; };

    std::vector<Cell> inner = layer_cells(dims, 1);
    std::sort(inner.begin(), inner.end());
    if (r.corners != inner) {
        return fail(FailedCondition::CornersNotLambda1);
    }
    if (r.d.count() != static_cast<std::size_t>(dims.n1())) {
        return fail(FailedCondition::DefectCountNotMinimal);
    }

    const std::vector<Color> colors = homogeneity_coloring(pi);
    auto color = [&](int i, int j) { return colors[dims.index({i, j})]; };
    auto split_by = [&](bool vertical) {
        const int n_across = vertical ? dims.n2() : dims.n1();
        const int n_along = vertical ? dims.n1() : dims.n2();
        auto at = [&](int along, int across) { return vertical ? color(along, across) : color(across, along); };
        const Color first = at(1, 1);
        for (int across = 1; across <= n_across; ++across) {
            const Color expect = across <= n_across / 2 ? first : (first == Color::Blue ? Color::Red : Color::Blue);
            for (int along = 1; along <= n_along; ++along) {
                if (at(along, across) != expect) {
                    return false;
                }
            }
        }
        return true;
    };
    if (!split_by(true) && !(dims.n1() == dims.n2() && split_by(false))) {
        return fail(FailedCondition::NoCleanSplit);
    }

    auto all_equal = [](const std::vector<int>& v, int x) {
        return std::all_of(v.begin(), v.end(), [x](int y) { return y == x; });
    };
    if (!all_equal(r.d.d1_small, dims.t1()) || !all_equal(r.d.d1_large, dims.t1() + 1) ||
        !all_equal(r.d.d2_small, dims.t2()) || !all_equal(r.d.d2_large, dims.t2() + 1)) {
        return fail(FailedCondition::DefectValuesWrong);
    }

    std::vector<Cell> bc = r.corners;
    bc.insert(bc.end(), r.boundary.begin(), r.boundary.end());
    if (!is_disk(dims, bc)) {
        return fail(FailedCondition::BoundaryNotDisk);
    }
    return Certificate{true, std::nullopt};
}

} // namespace gridsep
