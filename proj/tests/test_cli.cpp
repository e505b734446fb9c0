#include "gridsep/cli.hpp"
#include "gridsep/io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gridsep;

namespace {

const std::filesystem::path kTestDir = GRIDSEP_TEST_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    for (auto& a : args) {
        if (a.rfind("data/", 0) == 0) {
            a = (kTestDir / a).string();
        }
    }
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) {
        out.push_back(w);
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    const auto b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("golden outputs") {
    // GRIDSEP_UPDATE_GOLDEN=1 rewrites the expected files instead of comparing.
    const bool update = std::getenv("GRIDSEP_UPDATE_GOLDEN") != nullptr;
    std::ifstream cases(kTestDir / "golden" / "cases.txt");
    REQUIRE(cases);
    int seen = 0;
    for (std::string line; std::getline(cases, line);) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto p1 = line.find('|');
        const auto p2 = line.find('|', p1 + 1);
        const std::string name = trim(line.substr(0, p1));
        const int code = std::stoi(trim(line.substr(p1 + 1, p2 - p1 - 1)));
        const Run r = run(split(line.substr(p2 + 1)));
        const auto path = kTestDir / "golden" / (name + ".out");
        CAPTURE(name);
        CHECK(r.code == code);
        if (update) {
            std::ofstream(path) << r.out;
        } else {
            CHECK(r.out == slurp(path));
        }
        ++seen;
    }
    CHECK(seen > 20);
}

TEST_CASE("exit codes for domain failures and invalid input") {
    const Run empty = run({"construct", "4", "4"});
    CHECK(empty.code == 1);
    CHECK(empty.err.find("empty") != std::string::npos);
    CHECK(empty.err.find("--exceptional") != std::string::npos);

    const Run odd = run({"max", "5", "6"});
    CHECK(odd.code == 2);
    CHECK(odd.err.find("open problem") != std::string::npos);

    CHECK(run({"score", "data/duplicate_cell.json"}).code == 2);
    CHECK(run({"verify", "data/duplicate_cell.json"}).code == 2);
    CHECK(run({"verify", "data/torus_6x6_as_printed.json"}).code == 2);
    CHECK(run({"score", "data/no_such_file.json"}).code == 2);
    CHECK(run({"max", "6"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"construct", "6", "6", "--format", "png"}).code == 2);
    CHECK(run({"search", "3", "4", "--mode", "exhaustive"}).code == 1);
    CHECK(run({"search", "2", "2", "--mode", "anneal", "--target", "7", "--budget", "1000"}).code == 1);
}

TEST_CASE("construct then score and verify round-trips") {
    for (const auto& args : {std::vector<std::string>{"construct", "6", "8"},
                              std::vector<std::string>{"construct", "10", "6", "--seed", "4"},
                              std::vector<std::string>{"construct", "8", "8", "--exceptional", "--seed", "1"},
                              std::vector<std::string>{"construct", "4", "6", "--torus", "--seed", "2"}}) {
        const Run c = run(args);
        REQUIRE(c.code == 0);
        const auto file = std::filesystem::temp_directory_path() / "gridsep_roundtrip.json";
        std::ofstream(file) << c.out;
        const Run v = run({"verify", file.string()});
        const Run s = run({"score", file.string()});
        CHECK(s.code == 0);
        const GridFile g = parse_grid(c.out);
        const auto vj = nlohmann::json::parse(v.out);
        CHECK(vj.at("f") == score(g.perm, g.topology));
        CHECK(dump_grid(g.perm, g.topology) + "\n" == c.out);
        if (std::find(args.begin(), args.end(), "--exceptional") != args.end()) {
            CHECK(v.code == 1);
        } else {
            CHECK(v.code == 0);
            CHECK(vj.at("pass") == true);
        }
        std::filesystem::remove(file);
    }
}

TEST_CASE("GRIDSEP_BUDGET overrides the default budget and --budget overrides both") {
    setenv("GRIDSEP_BUDGET", "100", 1);
    CHECK(run({"search", "2", "4"}).code == 1);
    CHECK(run({"search", "2", "4", "--budget", "40320"}).code == 0);
    setenv("GRIDSEP_BUDGET", "junk", 1);
    CHECK(run({"search", "2", "2"}).code == 2);
    unsetenv("GRIDSEP_BUDGET");
    CHECK(run({"search", "2", "4"}).code == 0);
}

TEST_CASE("help exits cleanly") {
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("construct") != std::string::npos);
}
