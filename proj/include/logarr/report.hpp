#ifndef LOGARR_REPORT_HPP
#define LOGARR_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "logarr/json_io.hpp"

namespace logarr {

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_version = "1.0.0";

enum class Suite { Saito, Hodge, Universal, All };

/* "saito" | "hodge" | "universal" | "all" */
Suite parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct CheckRecord {
    std::string id;        // stable, unique within a report
    std::string statement; // the certified property; the same id always carries the same text
    bool pass = false;
    json witness; // the full certificate behind the verdict
};

struct RunReport {
    std::string group;
    Suite suite = Suite::All;
    int k_min = 0, k_max = 0;
    std::vector<CheckRecord> checks;
    bool all_pass = false;
};

/* filtration window used when none is requested: [-2,2] in rank <= 2,
   [-1,1] otherwise */
std::pair<int, int> default_window(const GroupData& g);

/* Builds the deterministic check list for the suite and runs it; the checks
   are independent, so up to `threads` of them run concurrently, and the
   records are assembled in list order regardless of completion order. */
RunReport run_suite(const GroupData& g, Suite suite, int k_min, int k_max, int threads = 1);

/* Canonical report serialization: identical inputs give identical bytes, so
   no clocks, hosts, or paths appear here. */
json to_json(const RunReport& r);

} // namespace logarr

#endif
