#include "gridsep/io.hpp"

#include "gridsep/error.hpp"

namespace gridsep {

using nlohmann::json;

json perm_rows(const GridPermutation& pi) {
    const GridDims& dims = pi.dims();
    json rows = json::array();
    for (int i = 1; i <= dims.n1(); ++i) {
        json row = json::array();
        for (int j = 1; j <= dims.n2(); ++j) {
            const Cell v = pi({i, j});
            row.push_back(json::array({v.i, v.j}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const GridPermutation& pi, Topology topology) {
    return json{{"n1", pi.dims().n1()}, {"n2", pi.dims().n2()}, {"topology", to_string(topology)}, {"perm", perm_rows(pi)}};
}

Topology parse_topology(const std::string& s) {
    if (s == "planar") {
        return Topology::Planar;
    }
    if (s == "torus") {
        return Topology::Torus;
    }
    throw InvalidArgument("unknown topology \"" + s + "\"");
}

namespace {

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw InvalidArgument(std::string("grid JSON needs integer field \"") + key + "\"");
    }
    return j.at(key).get<int>();
}

} // namespace

GridFile grid_from_json(const json& j) {
    if (!j.is_object()) {
        throw InvalidArgument("grid JSON must be an object");
    }
    const GridDims dims(get_int(j, "n1"), get_int(j, "n2"));
    Topology topology = Topology::Planar;
    if (j.contains("topology")) {
        if (!j.at("topology").is_string()) {
            throw InvalidArgument("\"topology\" must be a string");
        }
        topology = parse_topology(j.at("topology").get<std::string>());
    }
    if (!j.contains("perm") || !j.at("perm").is_array() || j.at("perm").size() != static_cast<std::size_t>(dims.n1())) {
        throw InvalidArgument("\"perm\" must be an array of n1 rows");
    }
    std::vector<Cell> images;
    images.reserve(static_cast<std::size_t>(dims.cell_count()));
    for (const json& row : j.at("perm")) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dims.n2())) {
            throw InvalidArgument("every row of \"perm\" must hold n2 cells");
        }
        for (const json& c : row) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer()) {
                throw InvalidArgument("cells must be [i, j] integer pairs");
            }
            images.push_back({c[0].get<int>(), c[1].get<int>()});
        }
    }
    return GridFile{GridPermutation::from_images(dims, std::move(images)), topology};
}

GridFile parse_grid(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
    return grid_from_json(j);
}

std::string dump_grid(const GridPermutation& pi, Topology topology) { return to_json(pi, topology).dump(); }

json to_json(const DefectMultisets& d) {
    return json{{"d1_small", d.d1_small}, {"d1_large", d.d1_large}, {"d2_small", d.d2_small}, {"d2_large", d.d2_large}};
}

json to_json(const StructureReport& r) {
    auto cells = [](const std::vector<Cell>& v) {
        json a = json::array();
        for (const Cell& c : v) {
            a.push_back(json::array({c.i, c.j}));
        }
        return a;
    };
    return json{{"corners", cells(r.corners)}, {"boundary", cells(r.boundary)}, {"defects", to_json(r.d)},
                {"g", r.g}, {"h", r.h}, {"x1", r.x1}, {"x2", r.x2}};
}

json to_json(const Certificate& c) {
    return json{{"pass", c.pass}, {"failed", c.failed ? json(to_string(*c.failed)) : json(nullptr)}};
}

json to_json(const TorusCertificate& c) {
    return json{{"pass", c.pass}, {"failed", c.failed ? json(to_string(*c.failed)) : json(nullptr)}};
}

json to_json(const FamilyStatus& s) {
    return json{{"nonempty", s.nonempty},
                {"vertical_row_defects", s.vertical_row_defects},
                {"vertical_column_defects", s.vertical_column_defects},
                {"horizontal_allowed", s.horizontal_allowed}};
}

json to_json(const SearchResult& r) {
    return json{{"max_score", r.max_score},
                {"witness", perm_rows(r.witness)},
                {"argmax_count", r.argmax_count ? json(*r.argmax_count) : json(nullptr)},
                {"proven_optimal", r.proven_optimal},
                {"nodes_explored", r.nodes_explored}};
}

} // namespace gridsep
