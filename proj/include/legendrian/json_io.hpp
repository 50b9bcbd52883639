#pragma once

// JSON mirrors of the public result types. Every document carries a
// "schema" string of the form "<kind>-v1"; the schemas live in docs/schemas.

#include <string>

#include "json.hpp"
#include "legendrian/classifier.hpp"
#include "legendrian/front_diagram.hpp"
#include "legendrian/geometry_numerics.hpp"
#include "legendrian/invariant_ranges.hpp"
#include "legendrian/jet_space.hpp"

namespace legendrian {

nlohmann::json to_json(const LinkInvariants& inv);
nlohmann::json to_json(const Peak& peak);
nlohmann::json to_json(const MountainRange& range);
nlohmann::json to_json(const DestabilizationWitness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const GeometryReport& r);
nlohmann::json to_json(const JetKnotInvariants& k);
nlohmann::json to_json(const TransverseInvariants& t);

/// Per-component invariants, crossing count and pairwise linking numbers.
nlohmann::json front_invariants_json(const FrontDiagram& d);

nlohmann::json realizable_json(const LinkInvariants& input, const LinkInvariants& normalized,
                               const RealizabilityResult& r);

nlohmann::json error_json(const std::string& code, const std::string& message);

}  // namespace legendrian
