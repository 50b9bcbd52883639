#include "legendrian/jet_space.hpp"

#include <algorithm>
#include <numeric>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

struct Candidate {
  std::int64_t tb1, rot1, tb2, rot2;
};

// Best witness (largest tb2) for L1 with self-linking sl1 and the cabled
// component with sl2, searching the L1 values that can matter.
std::optional<Candidate> best_witness(std::int64_t p, std::int64_t q, std::int64_t sl1,
                                      std::int64_t sl2, bool jet) {
  if (sl1 > -1 || (sl1 % 2) == 0) return std::nullopt;
  const std::int64_t j = (-1 - sl1) / 2;
  const std::int64_t m_lo = j + 1;
  const std::int64_t m_hi = jet ? m_lo : j + q + iabs(p) + 1;
  std::optional<Candidate> best;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const std::int64_t rot1 = -m - sl1;
    if (!unknot_realizable(-m, rot1)) continue;
    const std::int64_t top = max_tb2(p, q, m);
    for (const auto& pk : peaks(p, q, m, rot1)) {
      const std::int64_t d = top - pk.rot2_peak - sl2;
      if (d < 0 || d % 2 != 0) continue;
      const std::int64_t tb2 = (top + pk.rot2_peak + sl2) / 2;
      if (!best || tb2 > best->tb2) best = Candidate{-m, rot1, tb2, tb2 - sl2};
    }
  }
  return best;
}

std::optional<Candidate> best_unknot_pair(std::int64_t sl1, std::int64_t sl2) {
  auto ok = [](std::int64_t sl) { return sl <= -1 && (sl % 2) != 0; };
  if (!ok(sl1) || !ok(sl2)) return std::nullopt;
  return Candidate{sl1, 0, sl2, 0};
}

}  // namespace

LinkInvariants jet_to_sphere(const JetKnotInvariants& k) {
  if (std::gcd(k.p, k.n) != 1) throw Error(ErrorCode::NonCoprime, "p and n must be coprime");
  LinkInvariants l{k.p, k.n, -1, 0, k.tb - k.n * k.n, k.rot, false};
  return normalize(l);
}

JetKnotInvariants sphere_to_jet(const LinkInvariants& raw) {
  const LinkInvariants l = normalize(raw);
  if (l.tb1 != -1 || l.rot1 != 0) {
    throw Error(ErrorCode::InvalidInput, "the companion unknot must have (tb, rot) = (-1, 0)");
  }
  return {l.q, l.p, l.tb2 + l.q * l.q, l.rot2};
}

Verdict classify_jet(const JetKnotInvariants& a, const JetKnotInvariants& b) {
  return classify_cable(jet_to_sphere(a), jet_to_sphere(b), false);
}

std::int64_t jet_max_tb(std::int64_t n, std::int64_t p) {
  if (n < 2 || p == 0 || std::gcd(n, p) != 1) {
    throw Error(ErrorCode::OutOfDomain, "jet_max_tb needs n >= 2, p != 0, gcd(p, n) = 1");
  }
  return max_tb2(p, n, 1) + n * n;
}

MountainRange jet_range(std::int64_t n, std::int64_t p, std::int64_t floor) {
  if (n < 0) {
    n = -n;
    p = -p;
  }
  const std::int64_t shift = n * n;
  MountainRange mr = mountain_range(p, n, 1, 0, floor - shift);
  mr.floor += shift;
  mr.max_tb2 += shift;
  for (auto& pt : mr.points) pt.second += shift;
  return mr;
}

std::int64_t transverse_from_legendrian(std::int64_t tb, std::int64_t rot) { return tb - rot; }

TransverseWitness transverse_realizable(const TransverseInvariants& t,
                                        std::optional<std::int64_t> floor) {
  if (t.q < 0) throw Error(ErrorCode::NotNormalized, "transverse tuples need q >= 0");
  if (std::gcd(t.p, t.q) != 1) throw Error(ErrorCode::NonCoprime, "p and q must be coprime");
  const bool jet = !t.sl1.has_value();
  const std::int64_t sl1 = jet ? -1 : *t.sl1;
  const std::int64_t sl2 = jet ? t.sl2 - t.q * t.q : t.sl2;

  std::optional<Candidate> c;
  bool swapped = false;
  if (t.q <= 1) {
    c = best_unknot_pair(sl1, sl2);
  } else {
    c = best_witness(t.p, t.q, sl1, sl2, jet);
    if (!c && !jet && t.p == -1) {
      c = best_witness(t.p, t.q, sl2, sl1, false);
      swapped = c.has_value();
    }
  }
  TransverseWitness w;
  if (!c) return w;
  const std::int64_t cone_tb = c->tb2;
  if (floor && cone_tb < *floor) {
    throw Error(ErrorCode::FloorTooShallow,
                "every Legendrian witness lies below tb2 = " + std::to_string(*floor));
  }
  w.realizable = true;
  LinkInvariants l{t.p, t.q, c->tb1, c->rot1, c->tb2, c->rot2, true};
  if (swapped) l = {t.p, t.q, c->tb2, c->rot2, c->tb1, c->rot1, true};
  w.legendrian = l;
  return w;
}

Verdict transverse_classify(const TransverseInvariants& a, const TransverseInvariants& b,
                            std::optional<std::int64_t> floor) {
  const TransverseWitness wa = transverse_realizable(a, floor);
  const TransverseWitness wb = transverse_realizable(b, floor);
  Verdict v;
  if (!wa.realizable || !wb.realizable) {
    v.outcome = Outcome::NotRealizable;
    v.reason = !wa.realizable ? "first transverse tuple is not realizable"
                              : "second transverse tuple is not realizable";
    return v;
  }
  const bool jet_a = !a.sl1.has_value();
  const bool jet_b = !b.sl1.has_value();
  if (jet_a != jet_b || a.q != b.q || (a.q >= 2 && a.p != b.p)) {
    v.outcome = Outcome::NotIsotopic;
    v.reason = "oriented link types differ";
    return v;
  }
  if (a.sl1 != b.sl1 || a.sl2 != b.sl2) {
    v.outcome = Outcome::NotIsotopic;
    v.reason = "self-linking numbers differ";
    return v;
  }
  v.outcome = Outcome::Isotopic;
  v.reason = "link types and self-linking numbers agree";
  if (a.q >= 2) v.witness = destabilization_witness(*wa.legendrian, !jet_a);
  return v;
}

std::vector<std::int64_t> transverse_range(std::int64_t p, std::int64_t q, std::int64_t m,
                                           std::int64_t rot1, std::int64_t floor) {
  const MountainRange mr = mountain_range(p, q, m, rot1, floor);
  std::vector<std::int64_t> out;
  for (const auto& [rot2, tb2] : mr.points) out.push_back(transverse_from_legendrian(tb2, rot2));
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t default_transverse_floor(std::int64_t p, std::int64_t q, std::int64_t m,
                                      std::int64_t rot1) {
  const auto pk = peaks(p, q, m, rot1);
  const std::int64_t spread = pk.empty() ? 0 : pk.back().rot2_peak - pk.front().rot2_peak;
  return max_tb2(p, q, m) - 4 * (spread + 2);
}

}  // namespace legendrian
