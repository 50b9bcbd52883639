#include "legendrian/classifier.hpp"

#include <algorithm>
#include <sstream>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

std::string tuple_string(const LinkInvariants& x) {
  std::ostringstream os;
  os << "(" << x.p << "," << x.q << "," << x.tb1 << "," << x.rot1 << "," << x.tb2 << ","
     << x.rot2 << ")";
  return os.str();
}

std::vector<WitnessEntry> cone_entries(std::int64_t p, std::int64_t q, std::int64_t tb1,
                                       std::int64_t rot1, std::int64_t tb2, std::int64_t rot2,
                                       std::int64_t& top) {
  std::vector<WitnessEntry> out;
  if (!unknot_realizable(tb1, rot1)) return out;
  top = max_tb2(p, q, -tb1);
  const std::int64_t s = top - tb2;
  for (const auto& pk : peaks(p, q, -tb1, rot1)) {
    if (!in_cone(top, pk.rot2_peak, rot2, tb2)) continue;
    WitnessEntry e;
    e.peak = pk;
    e.pos_stabs = (s + rot2 - pk.rot2_peak) / 2;
    e.neg_stabs = (s - rot2 + pk.rot2_peak) / 2;
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Isotopic: return "Isotopic";
    case Outcome::NotIsotopic: return "NotIsotopic";
    case Outcome::NotRealizable: return "NotRealizable";
    case Outcome::OutOfScope: return "OutOfScope";
  }
  return "Unknown";
}

bool same_link_type(const LinkInvariants& a, const LinkInvariants& b) {
  if (a.q != b.q) return false;
  if (a.q >= 2) return a.p == b.p;
  return true;
}

DestabilizationWitness destabilization_witness(const LinkInvariants& raw, bool allow_swap) {
  const LinkInvariants inv = normalize(raw);
  if (inv.q < 2) throw Error(ErrorCode::OutOfDomain, "witnesses exist only for q >= 2");
  const RealizabilityResult r = realizable(inv, allow_swap);
  if (!r.realizable) {
    throw Error(ErrorCode::NotRealizable, "tuple " + tuple_string(inv) + " is not realizable");
  }
  DestabilizationWitness w;
  w.swapped = r.label.swapped;
  if (!w.swapped) {
    w.entries = cone_entries(inv.p, inv.q, inv.tb1, inv.rot1, inv.tb2, inv.rot2, w.max_tb2);
  } else {
    w.entries = cone_entries(inv.p, inv.q, inv.tb2, inv.rot2, inv.tb1, inv.rot1, w.max_tb2);
  }
  return w;
}

Verdict classify_cable(const LinkInvariants& a_raw, const LinkInvariants& b_raw,
                       bool allow_swap) {
  const LinkInvariants a = normalize(a_raw);
  const LinkInvariants b = normalize(b_raw);
  Verdict v;
  const bool ra = realizable(a, allow_swap).realizable;
  const bool rb = realizable(b, allow_swap).realizable;
  if (!ra || !rb) {
    v.outcome = Outcome::NotRealizable;
    std::ostringstream os;
    if (!ra) os << "tuple " << tuple_string(a) << " is not realizable";
    if (!ra && !rb) os << "; ";
    if (!rb) os << "tuple " << tuple_string(b) << " is not realizable";
    v.reason = os.str();
    return v;
  }
  if (!same_link_type(a, b)) {
    v.outcome = Outcome::NotIsotopic;
    v.reason = "oriented link types differ";
    return v;
  }
  if (a.tb1 != b.tb1 || a.rot1 != b.rot1 || a.tb2 != b.tb2 || a.rot2 != b.rot2) {
    v.outcome = Outcome::NotIsotopic;
    v.reason = "classical invariants differ";
    return v;
  }
  v.outcome = Outcome::Isotopic;
  v.reason = "link types and classical invariants agree";
  if (a.q >= 2) v.witness = destabilization_witness(a, allow_swap);
  return v;
}

std::optional<std::int64_t> peak_identification(std::int64_t p, std::int64_t q, std::int64_t m,
                                                 std::int64_t rot1, std::int64_t peak_a,
                                                 std::int64_t peak_b) {
  const CaseKind kind = q >= 2 ? case_kind(p, q, m) : CaseKind::C1_q0;
  if (kind != CaseKind::C3b2i && kind != CaseKind::C3b2ii && kind != CaseKind::C3b2iii) {
    throw Error(ErrorCode::OutOfDomain, "peak identification applies to C3b2i, C3b2ii and C3b2iii only");
  }
  const auto list = peaks(p, q, m, rot1);
  auto index_of = [&](std::int64_t r) -> std::ptrdiff_t {
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].rot2_peak == r) return static_cast<std::ptrdiff_t>(i);
    }
    throw Error(ErrorCode::OutOfDomain, "rotation number " + std::to_string(r) + " is not a peak");
  };
  const std::ptrdiff_t ia = index_of(peak_a);
  const std::ptrdiff_t ib = index_of(peak_b);
  if (ia == ib) return 0;
  if (std::abs(ia - ib) != 1) return std::nullopt;
  const std::int64_t gap = std::abs(peak_a - peak_b);
  if (kind == CaseKind::C3b2iii) {
    if (gap == 2) return 1;
    return std::nullopt;
  }
  const auto [g1, g2] = neighbor_peak_gaps(p, q);
  if (gap == g1) return g1 / 2;
  if (gap == g2) return g2 / 2;
  return std::nullopt;
}

}  // namespace legendrian
