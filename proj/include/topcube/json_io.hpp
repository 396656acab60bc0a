#pragma once

// JSON forms of the value types.
//
//   Family       {"n": 3, "sets": [[], [0], [0,1,2]]}
//   PeriodicSet  {"pre": "110", "period": "10"}
//   FamilyExpr   {"kind": "TopGen", "subbase": [...]} and friends

#include "topcube/family_expr.hpp"
#include "topcube/finite.hpp"
#include "topcube/periodic.hpp"
#include "topcube/report.hpp"

namespace topcube {

Json to_json(const PointSet& s);
Json to_json(const Family& f);
/// Family JSON with the {"topology": true} marker; throws if f is not one.
Json topology_to_json(const Family& f);
Json to_json(const PeriodicSet& s);
Json to_json(const FamilyExpr& e);
Json to_json(const std::vector<Family>& fams);

/// Rejects duplicate sets, repeated points and out-of-range points.
Family family_from_json(const Json& j);
PeriodicSet periodic_from_json(const Json& j);
FamilyExpr family_expr_from_json(const Json& j);
std::vector<PeriodicSet> periodic_list_from_json(const Json& j);

}  // namespace topcube
