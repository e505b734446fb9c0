#include "gridsep/cli.hpp"

#include "gridsep/construct.hpp"
#include "gridsep/disks.hpp"
#include "gridsep/error.hpp"
#include "gridsep/io.hpp"
#include "gridsep/render.hpp"
#include "gridsep/solver.hpp"
#include "gridsep/structure.hpp"
#include "gridsep/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace gridsep {

namespace {

using nlohmann::json;

struct Options {
    int n1 = 0;
    int n2 = 0;
    bool torus = false;
    std::optional<std::uint64_t> seed;
    bool canonical = false;
    bool exceptional = false;
    std::string format = "json";
    std::string file;
    std::string mode = "exhaustive";
    std::optional<std::int64_t> budget;
    std::optional<std::int64_t> target;
    std::int64_t k = 0;
};

Topology topology(const Options& o) { return o.torus ? Topology::Torus : Topology::Planar; }

std::string read_file(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --budget wins over GRIDSEP_BUDGET, which wins over the default.
std::int64_t effective_budget(const Options& o, std::int64_t fallback) {
    if (o.budget) {
        return *o.budget;
    }
    if (const char* env = std::getenv("GRIDSEP_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            throw InvalidArgument(std::string("GRIDSEP_BUDGET must be a positive integer, got \"") + env + "\"");
        }
        return v;
    }
    return fallback;
}

void emit_grid(const GridPermutation& pi, Topology t, const std::string& format, std::ostream& out) {
    if (format == "ascii") {
        out << render_ascii(pi);
    } else if (format == "svg") {
        out << render_svg(pi);
    } else {
        out << dump_grid(pi, t) << '\n';
    }
}

int cmd_max(const Options& o, std::ostream& out) {
    const GridDims dims(o.n1, o.n2);
    if (o.torus) {
        if (!dims.even()) {
            throw OpenProblem("the torus maximum for odd dimensions is an open problem");
        }
        out << json{{"max", torus_max_value(dims)}, {"topology", "torus"}}.dump() << '\n';
        return 0;
    }
    const std::int64_t m = max_value(dims);
    out << json{{"max", m}, {"exceptional", is_exceptional(dims)}}.dump() << '\n';
    return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
    const GridDims dims(o.n1, o.n2);
    BuildChoices choices = BuildChoices::canonical();
    if (o.seed && !o.canonical) {
        choices = BuildChoices::random(*o.seed);
    }
    if (o.torus) {
        emit_grid(torus_build(dims, choices), Topology::Torus, o.format, out);
        return 0;
    }
    require_even(dims, "construct");
    if (is_exceptional(dims)) {
        if (!o.exceptional) {
            throw Infeasible("the optimal family is empty for " + std::to_string(o.n1) + "x" + std::to_string(o.n2) +
                             " (one of the four exceptional squares); rerun with --exceptional to search for a "
                             "permutation two below the generic bound");
        }
        emit_grid(build_exceptional(dims, o.seed.value_or(0)), Topology::Planar, o.format, out);
        return 0;
    }
    emit_grid(build_optimal(dims, choices), Topology::Planar, o.format, out);
    return 0;
}

int cmd_score(const Options& o, std::ostream& out) {
    const GridFile g = parse_grid(read_file(o.file));
    const GridPermutation& pi = g.perm;
    const Decomposition dec = decompose(pi, g.topology);
    json j{{"f", score(pi, g.topology)},
           {"n1", pi.dims().n1()},
           {"n2", pi.dims().n2()},
           {"topology", to_string(g.topology)},
           {"decomposition",
            {{"s1_plus", dec.s1_plus.size()},
             {"s1_minus", dec.s1_minus.size()},
             {"s2_plus", dec.s2_plus.size()},
             {"s2_minus", dec.s2_minus.size()}}}};
    if (pi.dims().even()) {
        j["defects"] = to_json(defects(pi, g.topology));
        if (g.topology == Topology::Planar) {
            const StructureReport r = structure_report(pi);
            j["g"] = r.g;
            j["h"] = r.h;
            j["x1"] = r.x1;
            j["x2"] = r.x2;
        } else {
            j["g"] = torus_deficit(pi);
        }
    }
    out << j.dump() << '\n';
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const GridFile g = parse_grid(read_file(o.file));
    json j;
    bool pass = false;
    if (g.topology == Topology::Torus) {
        const TorusCertificate c = torus_verify(g.perm);
        j = to_json(c);
        pass = c.pass;
    } else {
        const Certificate c = verify_optimal(g.perm);
        j = to_json(c);
        pass = c.pass;
    }
    j["f"] = score(g.perm, g.topology);
    out << j.dump() << '\n';
    return pass ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
    const GridDims dims(o.n1, o.n2);
    SearchResult r = [&] {
        if (o.mode == "exhaustive") {
            const auto budget = effective_budget(o, static_cast<std::int64_t>(kDefaultExhaustiveBudget));
            return exhaustive_max(dims, topology(o), static_cast<std::uint64_t>(budget));
        }
        if (o.mode == "bnb") {
            return bnb_max(dims, topology(o), effective_budget(o, 10'000'000));
        }
        AnnealSchedule schedule;
        schedule.steps = effective_budget(o, schedule.steps);
        return anneal(dims, topology(o), o.target, o.seed.value_or(0), schedule);
    }();
    out << to_json(r).dump() << '\n';
    if (o.mode == "anneal" && o.target && r.max_score < *o.target) {
        return 1;
    }
    return 0;
}

int cmd_layers(const Options& o, std::ostream& out) {
    const GridDims dims(o.n1, o.n2);
    require_even(dims, "layers");
    json sizes = json::array();
    for (int i = 1; i <= layer_count(dims); ++i) {
        sizes.push_back(layer_size(dims, i));
    }
    out << json{{"layer_sizes", sizes}, {"layer_count", layer_count(dims)}}.dump() << '\n';
    return 0;
}

int cmd_disk(const Options& o, std::ostream& out) {
    const GridDims dims(o.n1, o.n2);
    require_even(dims, "disk");
    json cells = json::array();
    for (const Cell& c : greedy_disk(dims, o.k)) {
        cells.push_back(json::array({c.i, c.j}));
    }
    out << json{{"k", o.k}, {"w", min_weight(dims, o.k)}, {"cells", cells}}.dump() << '\n';
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grid permutations maximizing the L1 distance between images of neighboring cells", "gridsep"};
    app.require_subcommand(1);
    Options o;
    auto add_dims = [&](CLI::App* sub) {
        sub->add_option("n1", o.n1, "rows")->required();
        sub->add_option("n2", o.n2, "columns")->required();
    };

    CLI::App* max = app.add_subcommand("max", "closed-form maximum");
    add_dims(max);
    max->add_flag("--torus", o.torus);

    CLI::App* construct = app.add_subcommand("construct", "build a maximizer");
    add_dims(construct);
    construct->add_flag("--torus", o.torus);
    construct->add_option("--seed", o.seed, "randomize choices with this seed");
    construct->add_flag("--canonical", o.canonical, "canonical choices (default)");
    construct->add_flag("--exceptional", o.exceptional, "search on the four exceptional squares");
    construct->add_option("--format", o.format)->check(CLI::IsMember({"json", "ascii", "svg"}));

    CLI::App* sc = app.add_subcommand("score", "objective and structure of a grid file");
    sc->add_option("file", o.file, "grid JSON, - for stdin")->required();

    CLI::App* verify = app.add_subcommand("verify", "optimality certificate of a grid file");
    verify->add_option("file", o.file, "grid JSON, - for stdin")->required();

    CLI::App* search = app.add_subcommand("search", "exhaustive, branch-and-bound or annealing search");
    add_dims(search);
    search->add_flag("--torus", o.torus);
    search->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "bnb", "anneal"}));
    search->add_option("--seed", o.seed);
    search->add_option("--budget", o.budget, "permutations, nodes or moves depending on the mode");
    search->add_option("--target", o.target);

    CLI::App* layers = app.add_subcommand("layers", "layer sizes around the center");
    add_dims(layers);

    CLI::App* disk = app.add_subcommand("disk", "minimum-weight k-set");
    add_dims(disk);
    disk->add_option("k", o.k)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (max->parsed()) {
            return cmd_max(o, out);
        }
        if (construct->parsed()) {
            return cmd_construct(o, out);
        }
        if (sc->parsed()) {
            return cmd_score(o, out);
        }
        if (verify->parsed()) {
            return cmd_verify(o, out);
        }
        if (search->parsed()) {
            return cmd_search(o, out);
        }
        if (layers->parsed()) {
            return cmd_layers(o, out);
        }
        return cmd_disk(o, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const OpenProblem& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Infeasible& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace gridsep
