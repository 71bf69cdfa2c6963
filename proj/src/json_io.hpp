#pragma once

#include <json.hpp>

#include "atlas.hpp"
#include "common.hpp"
#include "family.hpp"
#include "group.hpp"
#include "monodromy.hpp"
#include "perm.hpp"
#include "resolvent.hpp"

namespace critmono {

using Json = nlohmann::json;

Json complex_json(Complex z);
Complex complex_from_json(const Json& j);
Json cvec_json(const CVec& v);
CVec cvec_from_json(const Json& j);

// A parameter point: raw [[re,im],...] array or {"point": [...]}.
CVec point_from_json(const Json& j);
// A point list: raw array of points or {"points": [...]}.
std::vector<CVec> points_from_json(const Json& j);
// A polynomial map: {"map":[{"terms":[{"c":[re,im],"e":[...]}]},...]} or the
// raw array; term format identical to the family coefficient terms.
std::vector<MPoly> pmap_from_json(const Json& j, int var_count);
// Symbol blocks: [[i,j,...],...].
std::vector<std::vector<int>> blocks_from_json(const Json& j);

Json config_json(const RunConfig& config);
Json group_json(const PermGroup& g);

Json bound_report(int n, GroupKind kind, const RunConfig& config);
Json table_report(const RunConfig& config);
Json monodromy_report(const MonodromyResult& r, const RunConfig& config);
Json inertia_report_json(const InertiaReport& r, const RunConfig& config);
Json phi_report_json(const PhiReport& r, const RunConfig& config);
Json chain_report_json(const ChainReport& r, const RunConfig& config);
Json transform_report_json(const TransformReport& r, const RunConfig& config);

}  // namespace critmono
