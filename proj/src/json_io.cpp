#include "legendrian/json_io.hpp"

namespace legendrian {

using nlohmann::json;

json to_json(const LinkInvariants& inv) {
  return {{"schema", "link-invariants-v1"}, {"p", inv.p},       {"q", inv.q},
          {"tb1", inv.tb1},                 {"rot1", inv.rot1}, {"tb2", inv.tb2},
          {"rot2", inv.rot2},               {"normalized", inv.normalized}};
}

json to_json(const Peak& peak) {
  json c = nullptr;
  if (peak.coupling) {
    c = {{"param_name", peak.coupling->param_name},
         {"param_value", peak.coupling->param_value},
         {"constraint_slack", peak.coupling->constraint_slack}};
  }
  return {{"rot2", peak.rot2_peak}, {"coupling", c}};
}

json to_json(const MountainRange& range) {
  json peaks = json::array();
  for (const auto& p : range.peaks) peaks.push_back(to_json(p));
  json points = json::array();
  for (const auto& [r, t] : range.points) points.push_back({r, t});
  return {{"schema", "mountain-range-v1"},
          {"p", range.p},
          {"q", range.q},
          {"m", range.m},
          {"rot1", range.rot1},
          {"floor", range.floor},
          {"max_tb2", range.max_tb2},
          {"peaks", peaks},
          {"points", points}};
}

json to_json(const DestabilizationWitness& w) {
  json entries = json::array();
  for (const auto& e : w.entries) {
    entries.push_back(
        {{"peak", to_json(e.peak)}, {"pos_stabs", e.pos_stabs}, {"neg_stabs", e.neg_stabs}});
  }
  return {{"max_tb2", w.max_tb2}, {"swapped", w.swapped}, {"entries", entries}};
}

json to_json(const Verdict& v) {
  return {{"schema", "verdict-v1"},
          {"outcome", to_string(v.outcome)},
          {"reason", v.reason},
          {"witness", v.witness ? to_json(*v.witness) : json(nullptr)}};
}

json to_json(const GeometryReport& r) {
  json res = json::array();
  for (const auto& c : r.residuals) {
    res.push_back({{"name", c.name},
                   {"samples", c.samples},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"passed", c.passed}});
  }
  json ints = json::array();
  for (const auto& c : r.integers) {
    ints.push_back({{"name", c.name},
                    {"estimate", c.estimate},
                    {"rounded", c.rounded},
                    {"distance", c.distance},
                    {"expected", c.expected},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed}});
  }
  return {{"schema", "geometry-report-v1"},
          {"samples", r.samples},
          {"seed", r.seed},
          {"segments", r.segments},
          {"residuals", res},
          {"integers", ints},
          {"passed", r.all_passed()}};
}

json to_json(const JetKnotInvariants& k) {
  return {{"schema", "jet-invariants-v1"}, {"n", k.n}, {"p", k.p}, {"tb", k.tb}, {"rot", k.rot}};
}

json to_json(const TransverseInvariants& t) {
  return {{"schema", "transverse-invariants-v1"},
          {"p", t.p},
          {"q", t.q},
          {"sl1", t.sl1 ? json(*t.sl1) : json(nullptr)},
          {"sl2", t.sl2}};
}

json front_invariants_json(const FrontDiagram& d) {
  json comps = json::array();
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto inv = classical_invariants(d, c);
    const auto cc = cusp_counts(d, c);
    comps.push_back({{"index", c},
                     {"tb", inv.tb},
                     {"rot", inv.rot},
                     {"writhe", writhe(d, c)},
                     {"cusps_up", cc.up},
                     {"cusps_down", cc.down}});
  }
  json links = json::array();
  for (std::size_t a = 0; a < d.components.size(); ++a) {
    for (std::size_t b = a + 1; b < d.components.size(); ++b) {
      links.push_back({{"c1", a}, {"c2", b}, {"lk", linking_number(d, a, b)}});
    }
  }
  return {{"schema", "front-invariants-v1"},
          {"ambient", d.ambient == Ambient::Plane ? "plane" : "cylinder"},
          {"crossings", crossings(d).size()},
          {"components", comps},
          {"linking", links}};
}

json realizable_json(const LinkInvariants& input, const LinkInvariants& normalized,
                     const RealizabilityResult& r) {
  return {{"schema", "realizable-v1"},
          {"input", to_json(input)},
          {"normalized", to_json(normalized)},
          {"realizable", r.realizable},
          {"case", to_string(r.label.kind)},
          {"swapped", r.label.swapped}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"schema", "error-v1"}, {"error", code}, {"message", message}};
}

}  // namespace legendrian
