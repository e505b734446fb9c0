#include "gridsep/solver.hpp"

#include "gridsep/construct.hpp"
#include "gridsep/error.hpp"
#include "gridsep/torus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace gridsep {

namespace {

// For every cell index, the partners of its edges that come earlier in
// row-major order (with multiplicity). Self-loops are dropped: they add 0.
std::vector<std::vector<std::size_t>> earlier_partners(const GridDims& dims, Topology topology) {
    std::vector<std::vector<std::size_t>> back(static_cast<std::size_t>(dims.cell_count()));
    for (const Edge& e : neighbors(dims, topology)) {
        const std::size_t a = dims.index(e.a);
        const std::size_t b = dims.index(e.b);
        if (a != b) {
            back[std::max(a, b)].push_back(std::min(a, b));
        }
    }
    return back;
}

std::vector<std::vector<std::size_t>> all_partners(const GridDims& dims, Topology topology) {
    std::vector<std::vector<std::size_t>> adj(static_cast<std::size_t>(dims.cell_count()));
    for (const Edge& e : neighbors(dims, topology)) {
        const std::size_t a = dims.index(e.a);
        const std::size_t b = dims.index(e.b);
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    }
    return adj;
}

std::uint64_t factorial_capped(int n, std::uint64_t cap) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) {
        if (f > cap / static_cast<std::uint64_t>(k)) {
            return cap + 1;
        }
        f *= static_cast<std::uint64_t>(k);
    }
    return f;
}

class Enumerator {
public:
    Enumerator(const GridDims& dims, Topology topology, std::vector<GridPermutation>* argmax)
        : dims_(dims), back_(earlier_partners(dims, topology)), argmax_(argmax) {
        const auto n = static_cast<std::size_t>(dims.cell_count());
        values_ = dims.cells();
        images_.resize(n);
        used_.assign(n, false);
    }

    void run() { dfs(0, 0); }

    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    std::vector<Cell> best_images;
    std::int64_t count = 0;
    std::int64_t nodes = 0;

private:
    void dfs(std::size_t k, std::int64_t partial) {
        ++nodes;
        if (k == images_.size()) {
            if (partial > best) {
                best = partial;
                best_images = images_;
                count = 0;
                if (argmax_ != nullptr) {
                    argmax_->clear();
                }
            }
            if (partial == best) {
                ++count;
                if (argmax_ != nullptr) {
                    argmax_->push_back(GridPermutation::from_images(dims_, images_));
                }
            }
            return;
        }
        for (std::size_t v = 0; v < values_.size(); ++v) {
            if (used_[v]) {
                continue;
            }
            used_[v] = true;
            images_[k] = values_[v];
            std::int64_t add = 0;
            for (const std::size_t p : back_[k]) {
                add += distance(images_[p], values_[v]);
            }
            dfs(k + 1, partial + add);
            used_[v] = false;
        }
    }

    GridDims dims_;
    std::vector<std::vector<std::size_t>> back_;
    std::vector<GridPermutation>* argmax_;
    std::vector<Cell> values_;
    std::vector<Cell> images_;
    std::vector<bool> used_;
};

// Bound pieces shared by bnb_max and partial_upper_bound.
class Bounder {
public:
    Bounder(const GridDims& dims, Topology topology)
        : dims_(dims), edges_(neighbors(dims, topology)), cap_((dims.n1() - 1) + (dims.n2() - 1)) {}

    // `assigned` holds images for indices < k.
    std::int64_t bound(std::span<const Cell> assigned, const std::vector<bool>& used) const {
        const std::size_t k = assigned.size();
        // Max of s1*i + s2*j over unused values for the four sign patterns.
        std::array<int, 4> far{};
        far.fill(std::numeric_limits<int>::min());
        for (std::size_t v = 0; v < used.size(); ++v) {
            if (used[v]) {
                continue;
            }
            const Cell c = dims_.cell(v);
            far[0] = std::max(far[0], c.i + c.j);
            far[1] = std::max(far[1], c.i - c.j);
            far[2] = std::max(far[2], -c.i + c.j);
            far[3] = std::max(far[3], -c.i - c.j);
        }
        std::int64_t total = 0;
        for (const Edge& e : edges_) {
            const std::size_t a = dims_.index(e.a);
            const std::size_t b = dims_.index(e.b);
            const bool ha = a < k;
            const bool hb = b < k;
            if (ha && hb) {
                total += distance(assigned[a], assigned[b]);
            } else if (ha || hb) {
                if (a == b) {
                    continue;
                }
                const Cell x = ha ? assigned[a] : assigned[b];
                total += std::max({far[0] - x.i - x.j, far[1] - x.i + x.j, far[2] + x.i - x.j, far[3] + x.i + x.j});
            } else if (a != b) {
                total += cap_;
            }
        }
        return total;
    }

private:
    GridDims dims_;
    EdgeSet edges_;
    int cap_;
};

std::optional<GridPermutation> known_incumbent(const GridDims& dims, Topology topology) {
    if (!dims.even()) {
        return std::nullopt;
    }
    if (topology == Topology::Torus) {
        return torus_build(dims);
    }
    if (layer_criterion_nonempty(dims)) {
        return build_optimal(dims);
    }
    if (is_exceptional(dims)) {
        return build_exceptional(dims, 0);
    }
    return std::nullopt;
}

} // namespace

SearchResult exhaustive_max(const GridDims& dims, Topology topology, std::uint64_t budget,
                            std::vector<GridPermutation>* argmax) {
    const std::uint64_t required = factorial_capped(dims.cell_count(), budget);
    if (required > budget) {
        throw BudgetExceeded("exhaustive search over " + std::to_string(dims.cell_count()) +
                                 "! permutations exceeds the budget of " + std::to_string(budget),
                             std::numeric_limits<long long>::min());
    }
    Enumerator e(dims, topology, argmax);
    e.run();
    return SearchResult{e.best, GridPermutation::from_images(dims, e.best_images), e.count, true, e.nodes};
}

std::int64_t partial_upper_bound(const GridDims& dims, Topology topology, std::span<const Cell> prefix) {
    if (prefix.size() > static_cast<std::size_t>(dims.cell_count())) {
        throw InvalidArgument("prefix longer than the grid");
    }
    std::vector<bool> used(static_cast<std::size_t>(dims.cell_count()), false);
    for (const Cell& c : prefix) {
        if (!dims.contains(c) || used[dims.index(c)]) {
            throw InvalidArgument("prefix is not injective into the grid");
        }
        used[dims.index(c)] = true;
    }
    return Bounder(dims, topology).bound(prefix, used);
}

SearchResult bnb_max(const GridDims& dims, Topology topology, std::int64_t node_budget) {
    const auto n = static_cast<std::size_t>(dims.cell_count());
    const std::optional<GridPermutation> known = known_incumbent(dims, topology);
    GridPermutation incumbent = known ? *known : GridPermutation::identity(dims);
    std::int64_t best = score(incumbent, topology);

    const Bounder bounder(dims, topology);
    const std::vector<Cell> values = dims.cells();
    std::vector<Cell> images;
    images.reserve(n);
    std::vector<bool> used(n, false);
    std::int64_t nodes = 0;
    bool exhausted = false;

    auto dfs = [&](auto&& self) -> void {
        if (exhausted) {
            return;
        }
        if (++nodes > node_budget) {
            exhausted = true;
            return;
        }
        const std::int64_t ub = bounder.bound(images, used);
        if (ub <= best) {
            return;
        }
        if (images.size() == n) {
            // A complete assignment's bound is its exact score.
            best = ub;
            incumbent = GridPermutation::from_images(dims, images);
            return;
        }
        for (std::size_t v = 0; v < n && !exhausted; ++v) {
            if (used[v]) {
                continue;
            }
            used[v] = true;
            images.push_back(values[v]);
            self(self);
            images.pop_back();
            used[v] = false;
        }
    };
    dfs(dfs);
    return SearchResult{best, incumbent, std::nullopt, !exhausted, std::min(nodes, node_budget)};
}

SearchResult anneal(const GridDims& dims, Topology topology, std::optional<std::int64_t> target, std::uint64_t seed,
                    const AnnealSchedule& schedule, const GridPermutation* start) {
    if (start != nullptr && !(start->dims() == dims)) {
        throw InvalidArgument("anneal start has the wrong dimensions");
    }
    const auto n = static_cast<std::size_t>(dims.cell_count());
    std::mt19937_64 rng(seed);
    std::vector<Cell> img;
    if (start != nullptr) {
        img.assign(start->images().begin(), start->images().end());
    } else {
        img = dims.cells();
        std::shuffle(img.begin(), img.end(), rng);
    }
    const GridPermutation first = GridPermutation::from_images(dims, img);
    std::int64_t current = score(first, topology);
    std::int64_t best = current;
    std::vector<Cell> best_img = img;
    if (n < 2 || (target && best >= *target)) {
        return SearchResult{best, first, std::nullopt, false, 0};
    }

    const auto adj = all_partners(dims, topology);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double temperature = schedule.t0;
    std::int64_t step = 0;
    for (; step < schedule.steps; ++step) {
        const std::size_t a = pick(rng);
        std::size_t b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        const Cell va = img[a];
        const Cell vb = img[b];
        // Edges between a and b keep their length under the swap.
        std::int64_t delta = 0;
        for (const std::size_t c : adj[a]) {
            if (c != b) {
                delta += distance(vb, img[c]) - distance(va, img[c]);
            }
        }
        for (const std::size_t c : adj[b]) {
            if (c != a) {
                delta += distance(va, img[c]) - distance(vb, img[c]);
            }
        }
        if (delta >= 0 || unit(rng) < std::exp(static_cast<double>(delta) / temperature)) {
            img[a] = vb;
            img[b] = va;
            current += delta;
            if (current > best) {
                best = current;
                best_img = img;
                if (target && best >= *target) {
                    ++step;
                    break;
                }
            }
        }
        temperature *= schedule.cooling;
        if (temperature < 0.05) {
            temperature = schedule.t0;
            img = best_img;
            current = best;
        }
    }
    return SearchResult{best, GridPermutation::from_images(dims, best_img), std::nullopt, false, step};
}

} // namespace gridsep
