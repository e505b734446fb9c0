#pragma once

// JSON interchange:
//   {"n1": int, "n2": int, "topology": "planar"|"torus", "perm": [[[i,j],...],...]}
// with "perm" row-major and 1-based. Every report serializes to a JSON object
// whose keys come out sorted, so dump() is stable.

#include "gridsep/construct.hpp"
#include "gridsep/grid.hpp"
#include "gridsep/solver.hpp"
#include "gridsep/structure.hpp"
#include "gridsep/torus.hpp"

#include <json.hpp>

#include <string>

namespace gridsep {

struct GridFile {
    GridPermutation perm;
    Topology topology = Topology::Planar;
};

nlohmann::json to_json(const GridPermutation& pi, Topology topology);
nlohmann::json perm_rows(const GridPermutation& pi);

// Throws InvalidArgument on malformed JSON, missing fields, shape mismatch or
// a non-bijection.
GridFile grid_from_json(const nlohmann::json& j);
GridFile parse_grid(const std::string& text);
std::string dump_grid(const GridPermutation& pi, Topology topology);

Topology parse_topology(const std::string& s);

nlohmann::json to_json(const DefectMultisets& d);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const TorusCertificate& c);
nlohmann::json to_json(const FamilyStatus& s);
nlohmann::json to_json(const SearchResult& r);

} // namespace gridsep
