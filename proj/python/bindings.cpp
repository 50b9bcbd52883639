#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "legendrian/classifier.hpp"
#include "legendrian/cli.hpp"
#include "legendrian/constructor.hpp"
#include "legendrian/error.hpp"
#include "legendrian/front_json.hpp"
#include "legendrian/geometry_numerics.hpp"
#include "legendrian/invariant_ranges.hpp"
#include "legendrian/jet_space.hpp"
#include "legendrian/json_io.hpp"

namespace py = pybind11;
using namespace legendrian;
using Tuple6 = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t,
                          std::int64_t>;
using Tuple4 = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

namespace {

LinkInvariants link(const Tuple6& t) {
  auto [p, q, tb1, rot1, tb2, rot2] = t;
  return {p, q, tb1, rot1, tb2, rot2, false};
}

JetKnotInvariants jet(const Tuple4& t) {
  auto [n, p, tb, rot] = t;
  return {n, p, tb, rot};
}

std::optional<std::int64_t> opt_sl1(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  return o.cast<std::int64_t>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Legendrian cable links: exact invariants and numerical checks";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("front_invariants", [](const std::string& doc) {
    const FrontDiagram d = front_from_json(nlohmann::json::parse(doc));
    require_valid(d);
    return front_invariants_json(d).dump();
  }, py::arg("front_json"));

  m.def("front_violations", [](const std::string& doc) {
    std::vector<std::string> out;
    for (const auto& v : validate(front_from_json(nlohmann::json::parse(doc)))) {
      out.push_back(to_string(v.kind) + ": " + v.message);
    }
    return out;
  }, py::arg("front_json"));

  m.def("stabilize", [](const std::string& doc, std::size_t c, int sign) {
    const FrontDiagram d = front_from_json(nlohmann::json::parse(doc));
    return front_to_json(stabilize(d, c, sign > 0 ? StabilizationSign::Positive
                                                  : StabilizationSign::Negative)).dump();
  }, py::arg("front_json"), py::arg("component"), py::arg("sign"));

  m.def("unknot_front", [](std::int64_t tb, std::int64_t rot) {
    return front_to_json(unknot_front(tb, rot)).dump();
  }, py::arg("tb"), py::arg("rot"));

  m.def("construct", [](const Tuple6& t) { return front_to_json(construct(link(t))).dump(); },
        py::arg("tuple"));

  m.def("normalize", [](const Tuple6& t) { return to_json(normalize(link(t))).dump(); },
        py::arg("tuple"));

  m.def("realizable", [](const Tuple6& t) {
    const LinkInvariants in = link(t);
    const LinkInvariants nz = normalize(in);
    return realizable_json(in, nz, realizable(nz)).dump();
  }, py::arg("tuple"));

  m.def("max_tb2", &max_tb2, py::arg("p"), py::arg("q"), py::arg("m"));

  m.def("peaks", [](std::int64_t p, std::int64_t q, std::int64_t mm, std::int64_t rot1) {
    std::vector<std::int64_t> out;
    for (const auto& pk : peaks(p, q, mm, rot1)) out.push_back(pk.rot2_peak);
    return out;
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("rot1"));

  m.def("mountain_range", [](std::int64_t p, std::int64_t q, std::int64_t mm, std::int64_t rot1,
                             std::int64_t floor) {
    return to_json(mountain_range(p, q, mm, rot1, floor)).dump();
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("rot1"), py::arg("floor"));

  m.def("ascii_plot", [](std::int64_t p, std::int64_t q, std::int64_t mm, std::int64_t rot1,
                         std::int64_t floor) {
    return ascii_plot(mountain_range(p, q, mm, rot1, floor));
  }, py::arg("p"), py::arg("q"), py::arg("m"), py::arg("rot1"), py::arg("floor"));

  m.def("classify_cable", [](const Tuple6& a, const Tuple6& b) {
    return to_json(classify_cable(link(a), link(b))).dump();
  }, py::arg("a"), py::arg("b"));

  m.def("jet_to_sphere", [](const Tuple4& k) { return to_json(jet_to_sphere(jet(k))).dump(); },
        py::arg("knot"));
  m.def("jet_max_tb", &jet_max_tb, py::arg("n"), py::arg("p"));
  m.def("classify_jet", [](const Tuple4& a, const Tuple4& b) {
    return to_json(classify_jet(jet(a), jet(b))).dump();
  }, py::arg("a"), py::arg("b"));

  m.def("transverse_realizable", [](std::int64_t p, std::int64_t q, const py::object& sl1,
                                    std::int64_t sl2) {
    return transverse_realizable({p, q, opt_sl1(sl1), sl2}).realizable;
  }, py::arg("p"), py::arg("q"), py::arg("sl1"), py::arg("sl2"));
  m.def("transverse_range", &transverse_range, py::arg("p"), py::arg("q"), py::arg("m"),
        py::arg("rot1"), py::arg("floor"));

  m.def("verify_geometry", [](std::int64_t samples, std::uint64_t seed, int segments) {
    GeometryReport r;
    {
      py::gil_scoped_release release;
      r = run_geometry_checks(samples, seed, segments);
    }
    return to_json(r).dump();
  }, py::arg("samples") = 10000, py::arg("seed") = 7, py::arg("segments") = 512);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
