#include "legendrian/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "legendrian/classifier.hpp"
#include "legendrian/constructor.hpp"
#include "legendrian/error.hpp"
#include "legendrian/front_json.hpp"
#include "legendrian/geometry_numerics.hpp"
#include "legendrian/invariant_ranges.hpp"
#include "legendrian/jet_space.hpp"
#include "legendrian/json_io.hpp"

namespace legendrian::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_ints(const std::string& s, std::size_t expected,
                                     const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
    if (pos != item.size()) throw UsageError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw UsageError(what + ": expected " + std::to_string(expected) + " comma-separated integers");
  }
  return out;
}

LinkInvariants parse_link(const std::string& s) {
  const auto v = parse_ints(s, 6, "tuple p,q,tb1,rot1,tb2,rot2");
  return {v[0], v[1], v[2], v[3], v[4], v[5], false};
}

JetKnotInvariants parse_jet(const std::string& s) {
  const auto v = parse_ints(s, 4, "jet tuple n,p,tb,rot");
  return {v[0], v[1], v[2], v[3]};
}

TransverseInvariants parse_transverse(const std::string& s, bool jet) {
  if (jet) {
    const auto v = parse_ints(s, 3, "transverse jet tuple n,p,sl");
    return {v[1], v[0], std::nullopt, v[2]};
  }
  const auto v = parse_ints(s, 4, "transverse tuple p,q,sl1,sl2");
  return {v[0], v[1], v[2], v[3]};
}

int verdict_exit(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::Isotopic: return kSuccess;
    case Outcome::NotIsotopic: return kNegative;
    case Outcome::NotRealizable: return kNotRealizable;
    case Outcome::OutOfScope: return kNotRealizable;
  }
  return kInputError;
}

int error_exit(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRealizable:
    case ErrorCode::Unsupported:
      return kNotRealizable;
    default:
      return kInputError;
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << to_string(v.outcome) << ": " << v.reason << "\n";
  if (v.witness) {
    os << "witness (max tb2 " << v.witness->max_tb2 << (v.witness->swapped ? ", roles swapped" : "")
       << "):\n";
    for (const auto& e : v.witness->entries) {
      os << "  peak rot2 " << e.peak.rot2_peak << ": +" << e.pos_stabs << " -" << e.neg_stabs
         << "\n";
    }
  }
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian cable links: invariants, ranges, classification, geometry checks",
               "legendrian"};
  app.require_subcommand(1);
  std::string format = "json";
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
  };

  // invariants
  std::string front_path;
  auto* inv_cmd = app.add_subcommand("invariants", "Invariants of a front-v1 diagram");
  inv_cmd->add_option("front", front_path, "Path to a front-v1 JSON file ('-' for stdin)")
      ->required();
  add_format(inv_cmd, {"json", "text"});

  // classify
  std::string tuple_a, tuple_b;
  auto* cls_cmd = app.add_subcommand("classify", "Decide Legendrian isotopy of two cable links");
  cls_cmd->add_option("--a", tuple_a, "p,q,tb1,rot1,tb2,rot2")->required();
  cls_cmd->add_option("--b", tuple_b, "p,q,tb1,rot1,tb2,rot2")->required();
  add_format(cls_cmd, {"json", "text"});

  // realizable
  std::string tuple;
  auto* real_cmd = app.add_subcommand("realizable", "Is a cable tuple realized?");
  real_cmd->add_option("--tuple", tuple, "p,q,tb1,rot1,tb2,rot2")->required();
  add_format(real_cmd, {"json", "text"});

  // range
  std::int64_t p = 0, q = 0, m = 1, rot1 = 0, n = 0;
  std::optional<std::int64_t> floor;
  auto* range_cmd = app.add_subcommand("range", "Mountain range of (rot2, tb2)");
  range_cmd->add_option("--p", p)->required();
  range_cmd->add_option("--q", q)->required();
  range_cmd->add_option("--m", m)->required();
  range_cmd->add_option("--rot1", rot1)->required();
  range_cmd->add_option("--floor", floor, "Lowest tb2 listed (default max_tb2 - 4)");
  add_format(range_cmd, {"json", "ascii"});

  // construct
  std::string out_path;
  auto* con_cmd = app.add_subcommand("construct", "Front diagram realizing a cable tuple");
  con_cmd->add_option("--tuple", tuple, "p,q,tb1,rot1,tb2,rot2")->required();
  con_cmd->add_option("--out", out_path, "Write the front-v1 document here");

  // jet
  auto* jet_cmd = app.add_subcommand("jet", "Torus knots in J^1(S^1)");
  jet_cmd->require_subcommand(1);
  auto* jet_cls = jet_cmd->add_subcommand("classify", "Decide Legendrian isotopy");
  jet_cls->add_option("--a", tuple_a, "n,p,tb,rot")->required();
  jet_cls->add_option("--b", tuple_b, "n,p,tb,rot")->required();
  add_format(jet_cls, {"json", "text"});
  auto* jet_rng = jet_cmd->add_subcommand("range", "Realizable (rot, tb) in J^1(S^1)");
  jet_rng->add_option("--n", n)->required();
  jet_rng->add_option("--p", p)->required();
  jet_rng->add_option("--floor", floor, "Lowest tb listed (default max_tb - 4)");
  add_format(jet_rng, {"json", "ascii"});

  // transverse
  bool jet_tuples = false;
  auto* tr_cmd = app.add_subcommand("transverse", "Transverse cable links via self-linking");
  tr_cmd->require_subcommand(1);
  auto* tr_cls = tr_cmd->add_subcommand("classify", "Decide transverse isotopy");
  tr_cls->add_option("--a", tuple_a, "p,q,sl1,sl2 (or n,p,sl with --jet)")->required();
  tr_cls->add_option("--b", tuple_b, "p,q,sl1,sl2 (or n,p,sl with --jet)")->required();
  tr_cls->add_flag("--jet", jet_tuples, "Tuples describe knots in J^1(S^1)");
  tr_cls->add_option("--floor", floor, "Lowest tb2 a Legendrian witness may have");
  add_format(tr_cls, {"json", "text"});
  auto* tr_rng = tr_cmd->add_subcommand("range", "Self-linking numbers sl2 over a mountain range");
  tr_rng->add_option("--p", p)->required();
  tr_rng->add_option("--q", q)->required();
  tr_rng->add_option("--m", m)->required();
  tr_rng->add_option("--rot1", rot1)->required();
  tr_rng->add_option("--floor", floor, "Lowest tb2 (default max_tb2 - 4(peak spread + 2))");
  add_format(tr_rng, {"json", "text"});

  // verify-geometry
  std::int64_t samples = 10000;
  std::uint64_t seed = 7;
  int segments = 512;
  auto* geo_cmd = app.add_subcommand("verify-geometry", "Numerical checks of the contactomorphism");
  geo_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  geo_cmd->add_option("--seed", seed);
  geo_cmd->add_option("--segments", segments)->check(CLI::Range(64, 1 << 16));
  add_format(geo_cmd, {"json", "text"});

  std::vector<std::string> argv_store{"legendrian"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    emit(err, error_json("UsageError", e.what()));
    return kInputError;
  }

  try {
    if (*inv_cmd) {
      json doc;
      if (front_path == "-") {
        doc = json::parse(std::cin);
      } else {
        std::ifstream in(front_path);
        if (!in) throw UsageError("cannot open " + front_path);
        doc = json::parse(in);
      }
      const FrontDiagram d = front_from_json(doc);
      const auto violations = validate(d);
      if (!violations.empty()) {
        json v = json::array();
        for (const auto& x : violations) {
          v.push_back({{"kind", to_string(x.kind)},
                       {"component", x.component},
                       {"segment", x.segment},
                       {"message", x.message}});
        }
        json e = error_json("InvalidDiagram", "front fails validation");
        e["violations"] = v;
        emit(err, e);
        return kInputError;
      }
      const json res = front_invariants_json(d);
      if (format == "text") {
        for (const auto& c : res["components"]) {
          out << "component " << c["index"] << ": tb " << c["tb"] << " rot " << c["rot"] << "\n";
        }
        for (const auto& l : res["linking"]) {
          out << "lk(" << l["c1"] << "," << l["c2"] << ") = " << l["lk"] << "\n";
        }
      } else {
        emit(out, res);
      }
      return kSuccess;
    }
    if (*cls_cmd) {
      const Verdict v = classify_cable(parse_link(tuple_a), parse_link(tuple_b));
      if (format == "text") {
        out << verdict_text(v);
      } else {
        json j = to_json(v);
        j["a"] = to_json(normalize(parse_link(tuple_a)));
        j["b"] = to_json(normalize(parse_link(tuple_b)));
        emit(out, j);
      }
      return verdict_exit(v);
    }
    if (*real_cmd) {
      const LinkInvariants in = parse_link(tuple);
      const LinkInvariants nz = normalize(in);
      const RealizabilityResult r = realizable(nz);
      if (format == "text") {
        out << (r.realizable ? "realizable" : "not realizable") << " (" << to_string(r.label.kind)
            << (r.label.swapped ? ", roles swapped" : "") << ")\n";
      } else {
        emit(out, realizable_json(in, nz, r));
      }
      return r.realizable ? kSuccess : kNegative;
    }
    if (*range_cmd) {
      const std::int64_t top = max_tb2(p, q, m);
      const MountainRange mr = mountain_range(p, q, m, rot1, floor.value_or(top - 4));
      if (format == "ascii") {
        out << ascii_plot(mr);
      } else {
        emit(out, to_json(mr));
      }
      return kSuccess;
    }
    if (*con_cmd) {
      const FrontDiagram d = construct(parse_link(tuple));
      const json doc = front_to_json(d);
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << doc.dump(2) << "\n";
      } else {
        emit(out, doc);
      }
      return kSuccess;
    }
    if (*jet_cls) {
      const Verdict v = classify_jet(parse_jet(tuple_a), parse_jet(tuple_b));
      if (format == "text") {
        out << verdict_text(v);
      } else {
        emit(out, to_json(v));
      }
      return verdict_exit(v);
    }
    if (*jet_rng) {
      const std::int64_t top = jet_max_tb(n < 0 ? -n : n, n < 0 ? -p : p);
      const MountainRange mr = jet_range(n, p, floor.value_or(top - 4));
      if (format == "ascii") {
        out << ascii_plot(mr);
      } else {
        emit(out, to_json(mr));
      }
      return kSuccess;
    }
    if (*tr_cls) {
      const Verdict v = transverse_classify(parse_transverse(tuple_a, jet_tuples),
                                            parse_transverse(tuple_b, jet_tuples), floor);
      if (format == "text") {
        out << verdict_text(v);
      } else {
        emit(out, to_json(v));
      }
      return verdict_exit(v);
    }
    if (*tr_rng) {
      const std::int64_t fl = floor.value_or(default_transverse_floor(p, q, m, rot1));
      const auto sl = transverse_range(p, q, m, rot1, fl);
      if (format == "text") {
        out << "sl1 " << (-m - rot1) << ", sl2:";
        for (auto s : sl) out << " " << s;
        out << "\n";
      } else {
        emit(out, {{"schema", "transverse-range-v1"},
                   {"p", p},
                   {"q", q},
                   {"m", m},
                   {"rot1", rot1},
                   {"sl1", -m - rot1},
                   {"floor", fl},
                   {"sl2", sl}});
      }
      return kSuccess;
    }
    if (*geo_cmd) {
      const GeometryReport r = run_geometry_checks(samples, seed, segments);
      if (format == "text") {
        out << format_report_table(r);
      } else {
        emit(out, to_json(r));
      }
      return r.all_passed() ? kSuccess : kGeometryFailure;
    }
  } catch (const Error& e) {
    emit(err, error_json(std::string(to_string(e.code())), e.what()));
    return error_exit(e.code());
  } catch (const UsageError& e) {
    emit(err, error_json("UsageError", e.what()));
    return kInputError;
  } catch (const json::exception& e) {
    emit(err, error_json("InvalidInput", e.what()));
    return kInputError;
  }
  emit(err, error_json("UsageError", "no subcommand"));
  return kInputError;
}

}  // namespace legendrian::cli
