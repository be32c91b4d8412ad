#ifndef LOGARR_CATALOG_HPP
#define LOGARR_CATALOG_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "logarr/group.hpp"
#include "logarr/json_io.hpp"

namespace logarr {

struct CatalogEntry {
    std::string name;
    int rank = 0;
    unsigned cyc_order = 1;
    std::vector<CMat> generators;
};

CatalogEntry catalog_entry_from_json(const json& j);

/* built-in entries plus any *.json files in the LOGARR_CATALOG directory
   (files override built-ins of the same name) */
std::vector<CatalogEntry> catalog_entries();
std::vector<std::string> catalog_names();

/* enumerate + degrees + invariants + coexponents; throws unknown_group */
GroupData build_group(const std::string& name, std::size_t element_cap = 10000);

} // namespace logarr

#endif
