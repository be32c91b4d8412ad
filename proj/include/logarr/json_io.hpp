#ifndef LOGARR_JSON_IO_HPP
#define LOGARR_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "logarr/hodge.hpp"
#include "logarr/linalg.hpp"
#include "logarr/multiarr.hpp"
#include "logarr/universal.hpp"
#include "logarr/vfield.hpp"

namespace logarr {

using json = nlohmann::json;

json to_json(const CycNum& c);
CycNum cycnum_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j, int nvars);

json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const json& j, int nvars);

json to_json(const VField& v);
VField vfield_from_json(const json& j, const std::vector<int>& weights = {});

json to_json(const CMat& m);
CMat cmat_from_json(const json& j);

json to_json(const PMat& m);

json to_json(const Mult& m);
json to_json(const BasisCert& cert);

json to_json(const FlatFrame& fr);
json to_json(const XiBasis& b);
json to_json(const HodgeKReport& r);
json to_json(const HodgeReport& r);
json to_json(const UniversalCert& c);
json to_json(const CollapseReport& r);
json to_json(const ShiftCert& c);

/* canonical serialization used wherever byte-identical output is promised */
std::string canonical_dump(const json& j);

} // namespace logarr

#endif
