#include "logarr/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "logarr/errors.hpp"

namespace logarr {

namespace {

/* Built-in groups, stored in the catalog file format and fed through the
   same parser as external files. Every entry is revalidated after closure:
   unitarity, |W| = prod d_i, reflection count, Molien degrees. */
const char* const kBuiltin[] = {
    // dihedral of order 6 acting irreducibly in rank 2
    R"({"name":"I2_3","rank":2,"cyclotomic_order":3,"generators":[
        [[0,1],[1,0]],
        [[0,{"order":3,"coeffs":[0,1]}],[{"order":3,"coeffs":[-1,-1]},0]]
       ]})",
    // dihedral of order 8
    R"({"name":"I2_4","rank":2,"cyclotomic_order":1,"generators":[
        [[1,0],[0,-1]],
        [[0,1],[1,0]]
       ]})",
    // dihedral of order 10
    R"({"name":"I2_5","rank":2,"cyclotomic_order":5,"generators":[
        [[0,1],[1,0]],
        [[0,{"order":5,"coeffs":[0,1,0,0]}],[{"order":5,"coeffs":[-1,-1,-1,-1]},0]]
       ]})",
    // dihedral of order 12
    R"({"name":"I2_6","rank":2,"cyclotomic_order":3,"generators":[
        [[0,1],[1,0]],
        [[0,{"order":3,"coeffs":[1,1]}],[{"order":3,"coeffs":[0,-1]},0]]
       ]})",
    // symmetric group S4 as the full tetrahedral reflection group in rank 3
    R"({"name":"A3","rank":3,"cyclotomic_order":1,"generators":[
        [[0,1,0],[1,0,0],[0,0,1]],
        [[1,0,0],[0,0,1],[0,1,0]],
        [[0,-1,0],[-1,0,0],[0,0,1]]
       ]})",
    // binary tetrahedral quotient: 24 elements, 8 order-3 reflections
    R"({"name":"G4","rank":2,"cyclotomic_order":12,"generators":[
        [[{"order":12,"coeffs":["0","-1/2","1/2","1/2"]},{"order":12,"coeffs":["0","-1/2","1/2","1/2"]}],
         [{"order":12,"coeffs":["0","-1/2","-1/2","1/2"]},{"order":12,"coeffs":["0","1/2","1/2","-1/2"]}]],
        [[{"order":12,"coeffs":["0","-1/2","1/2","1/2"]},{"order":12,"coeffs":["0","1/2","-1/2","-1/2"]}],
         [{"order":12,"coeffs":["0","1/2","1/2","-1/2"]},{"order":12,"coeffs":["0","1/2","1/2","-1/2"]}]]
       ]})",
};

const std::map<std::string, std::string> kAliases = {
    {"A2", "I2_3"}, {"B2", "I2_4"}, {"H2", "I2_5"}, {"G2", "I2_6"}};

} // namespace

CatalogEntry catalog_entry_from_json(const json& j) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.rank = j.at("rank").get<int>();
    e.cyc_order = j.at("cyclotomic_order").get<unsigned>();
    for (const auto& gj : j.at("generators")) {
        CMat m = cmat_from_json(gj);
        if (m.rows() != e.rank || m.cols() != e.rank)
            throw catalog_error("generator of '" + e.name + "' is not " + std::to_string(e.rank) + "x" +
                                std::to_string(e.rank));
        e.generators.push_back(std::move(m));
    }
    if (e.generators.empty()) throw catalog_error("catalog entry '" + e.name + "' has no generators");
    return e;
}

std::vector<CatalogEntry> catalog_entries() {
    std::map<std::string, CatalogEntry> by_name;
    std::vector<std::string> order;
    for (const char* text : kBuiltin) {
        CatalogEntry e = catalog_entry_from_json(json::parse(text));
        order.push_back(e.name);
        by_name.emplace(e.name, std::move(e));
    }
    if (const char* dir = std::getenv("LOGARR_CATALOG")) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(dir)) throw catalog_error(std::string("LOGARR_CATALOG is not a directory: ") + dir);
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            std::ifstream in(path);
            if (!in) throw catalog_error("cannot read catalog file " + path.string());
            json j;
            try {
                j = json::parse(in);
            } catch (const std::exception& ex) {
                throw catalog_error("bad JSON in " + path.string() + ": " + ex.what());
            }
            CatalogEntry e = catalog_entry_from_json(j);
            auto it = by_name.find(e.name);
            if (it == by_name.end()) {
                order.push_back(e.name);
                by_name.emplace(e.name, std::move(e));
            } else {
                it->second = std::move(e);
            }
        }
    }
    std::vector<CatalogEntry> out;
    out.reserve(order.size());
    for (const auto& n : order) out.push_back(by_name.at(n));
    return out;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : catalog_entries()) out.push_back(e.name);
    return out;
}

GroupData build_group(const std::string& name, std::size_t element_cap) {
    std::string wanted = name;
    auto alias = kAliases.find(wanted);
    if (alias != kAliases.end()) wanted = alias->second;
    for (const auto& e : catalog_entries()) {
        if (e.name != wanted) continue;
        GroupData g = enumerate_group(e.name, e.generators, e.cyc_order, element_cap);
        complete_group(g);
        return g;
    }
    throw unknown_group("no catalog entry named '" + name + "'");
}

} // namespace logarr
