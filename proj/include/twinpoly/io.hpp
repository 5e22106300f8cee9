// JSON wire formats: V-representations, H-representations, and the
// polytope report object.  Rationals travel as "num/den" strings so no
// precision is lost.

#pragma once

#include "twinpoly/geometry.hpp"
#include "twinpoly/twinned.hpp"

#include <json.hpp>

namespace twinpoly {

// {"dim": n, "vertices": [["num/den", ...], ...]}
nlohmann::json vrep_to_json(const VRep& v);
VRep vrep_from_json(const nlohmann::json& j);

// {"dim": n, "facets": [{"normal": [ints], "rhs": "num/den"}, ...]}
nlohmann::json hrep_to_json(const HRep& h);
HRep hrep_from_json(const nlohmann::json& j);

// {"volume": "p/q", "facet_count": n, "reflexive": bool,
//  "centrally_symmetric": bool, "kind": "cc", ...}
nlohmann::json report_to_json(const PolytopeReport& report);

}  // namespace twinpoly
