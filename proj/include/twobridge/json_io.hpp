#pragma once

#include <json.hpp>

#include "twobridge/bivar.hpp"
#include "twobridge/poly.hpp"

namespace twobridge {

// {"var": "Ltilde"|"lambda"|"L", "terms": [{"L":a, "M":b, "lam":c, "coeff":"<decimal>"}]}
nlohmann::json to_json(const LamPoly& p);
nlohmann::json to_json(const LPoly& p);
nlohmann::json to_json(const BivarInt& p);

LamPoly lampoly_from_json(const nlohmann::json& j);
LPoly lpoly_from_json(const nlohmann::json& j);
BivarInt bivar_from_json(const nlohmann::json& j);

}  // namespace twobridge
