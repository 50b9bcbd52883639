#include "legendrian/front_json.hpp"

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::InvalidInput, "front-v1: " + what);
}

std::int64_t get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) bad("zero denominator");
  return Rational(num, den);
}

}  // namespace

json front_to_json(const FrontDiagram& d) {
  json comps = json::array();
  for (const auto& c : d.components) {
    json verts = json::array();
    for (const auto& p : c.vertices) {
      verts.push_back({p.h.numerator(), p.h.denominator(), p.v.numerator(), p.v.denominator()});
    }
    comps.push_back({{"winding", c.winding}, {"vertices", verts}});
  }
  return {{"schema", "front-v1"},
          {"ambient", d.ambient == Ambient::Plane ? "plane" : "cylinder"},
          {"components", comps}};
}

FrontDiagram front_from_json(const json& j) {
  if (!j.is_object()) bad("document must be an object");
  if (j.contains("schema") && j["schema"] != "front-v1") bad("unsupported schema");
  FrontDiagram d;
  if (!j.contains("ambient") || !j["ambient"].is_string()) bad("missing ambient");
  const auto amb = j["ambient"].get<std::string>();
  if (amb == "plane") {
    d.ambient = Ambient::Plane;
  } else if (amb == "cylinder") {
    d.ambient = Ambient::Cylinder;
  } else {
    bad("ambient must be \"plane\" or \"cylinder\"");
  }
  if (!j.contains("components") || !j["components"].is_array()) bad("missing components");
  for (const auto& jc : j["components"]) {
    if (!jc.is_object()) bad("component must be an object");
    FrontComponent c;
    c.winding = jc.contains("winding") ? get_int(jc["winding"], "winding") : 0;
    if (!jc.contains("vertices") || !jc["vertices"].is_array()) bad("missing vertices");
    for (const auto& jv : jc["vertices"]) {
      if (!jv.is_array() || jv.size() != 4) bad("vertex must be [h_num, h_den, v_num, v_den]");
      c.vertices.push_back({make_rational(get_int(jv[0], "h_num"), get_int(jv[1], "h_den")),
                            make_rational(get_int(jv[2], "v_num"), get_int(jv[3], "v_den"))});
    }
    d.components.push_back(std::move(c));
  }
  return d;
}

}  // namespace legendrian
