#ifndef LOGARR_RAT_HPP
#define LOGARR_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "logarr/errors.hpp"

namespace logarr {

/* Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
   denominator positive), which is the representation invariant we rely on. */
using Rat = mpq_class;

inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw usage_error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw division_by_zero();
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace logarr

#endif
