#pragma once

// front-v1 serialization:
//   {"schema": "front-v1", "ambient": "plane" | "cylinder",
//    "components": [{"winding": n, "vertices": [[h_num, h_den, v_num, v_den], ...]}]}

#include "json.hpp"

#include "legendrian/front_diagram.hpp"

namespace legendrian {

nlohmann::json front_to_json(const FrontDiagram& d);

/// Throws Error{InvalidInput} on malformed documents. Does not validate the
/// geometry; call validate() for that.
FrontDiagram front_from_json(const nlohmann::json& j);

}  // namespace legendrian
