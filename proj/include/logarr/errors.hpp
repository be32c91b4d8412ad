#ifndef LOGARR_ERRORS_HPP
#define LOGARR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logarr {

/* math_error: a precondition or mathematical invariant failed (CLI exit 1 context).
   usage_error: bad input data, unknown group, malformed file (CLI exit 2 context). */

struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : math_error {
    division_by_zero() : math_error("division by zero") {}
};

struct frame_mismatch : math_error {
    explicit frame_mismatch(const std::string& what) : math_error("frame mismatch: " + what) {}
};

struct not_closed_within_budget : math_error {
    explicit not_closed_within_budget(std::size_t cap)
        : math_error("group closure exceeds element cap " + std::to_string(cap)) {}
};

struct search_exhausted : math_error {
    explicit search_exhausted(const std::string& what) : math_error("search exhausted: " + what) {}
};

struct no_flat_solution : math_error {
    explicit no_flat_solution(const std::string& what) : math_error("no flat frame solution: " + what) {}
};

struct non_unique_solution : math_error {
    explicit non_unique_solution(const std::string& what) : math_error("flat frame solution not unique: " + what) {}
};

struct window_too_small : math_error {
    int required_depth;
    explicit window_too_small(int depth)
        : math_error("decomposition window too small, required depth " + std::to_string(depth)),
          required_depth(depth) {}
};

struct missing_source_basis : math_error {
    explicit missing_source_basis(const std::string& what) : math_error("missing source basis: " + what) {}
};

struct out_of_range_mult : math_error {
    explicit out_of_range_mult(const std::string& what) : math_error("multiplicity out of range: " + what) {}
};

struct unknown_group : usage_error {
    explicit unknown_group(const std::string& name) : usage_error("unknown group: " + name) {}
};

struct catalog_error : usage_error {
    explicit catalog_error(const std::string& what) : usage_error("catalog error: " + what) {}
};

} // namespace logarr

#endif
