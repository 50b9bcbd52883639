#include "legendrian/constructor.hpp"

#include <algorithm>
#include <sstream>

#include "legendrian/classifier.hpp"
#include "legendrian/error.hpp"

namespace legendrian {

namespace {

FrontPoint pt(std::int64_t h, std::int64_t v) { return {Rational(h), Rational(v)}; }
FrontPoint pt(Rational h, Rational v) { return {h, v}; }

int sign_of(Rational x) { return (x > 0) - (x < 0); }

std::size_t crossings_between(const FrontDiagram& d, std::size_t a, std::size_t b) {
  std::size_t n = 0;
  for (const auto& x : crossings(d)) {
    if ((x.over_component == a && x.under_component == b) ||
        (x.over_component == b && x.under_component == a)) {
      ++n;
    }
  }
  return n;
}

std::size_t self_crossings(const FrontDiagram& d, std::size_t c) {
  std::size_t n = 0;
  for (const auto& x : crossings(d)) {
    if (x.over_component == c && x.under_component == c) ++n;
  }
  return n;
}

FrontDiagram stabilize_times(FrontDiagram d, std::size_t c, std::int64_t pos, std::int64_t neg,
                             bool last_segment = false) {
  for (std::int64_t i = 0; i < pos + neg; ++i) {
    const auto sign = i < pos ? StabilizationSign::Positive : StabilizationSign::Negative;
    std::optional<std::size_t> seg;
    if (last_segment) seg = d.components[c].vertices.size() - 1;
    d = stabilize(d, c, sign, seg);
  }
  return d;
}

void check_construction(const FrontDiagram& d, const LinkInvariants& t) {
  const auto i1 = classical_invariants(d, 0);
  const auto i2 = classical_invariants(d, 1);
  const auto lk = linking_number(d, 0, 1);
  if (i1.tb != t.tb1 || i1.rot != t.rot1 || i2.tb != t.tb2 || i2.rot != t.rot2 || lk != t.q) {
    std::ostringstream os;
    os << "construction check failed: got (" << i1.tb << "," << i1.rot << "," << i2.tb << ","
       << i2.rot << ") lk " << lk;
    throw Error(ErrorCode::TemplateMismatch, os.str());
  }
}

void simplify_polyline(std::vector<FrontPoint>& v) {
  bool changed = true;
  while (changed && v.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() > 3; ++i) {
      const std::size_t n = v.size();
      const FrontPoint& a = v[(i + n - 1) % n];
      const FrontPoint& b = v[i];
      const FrontPoint& c = v[(i + 1) % n];
      if (a == b) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      const Rational cr = (b.h - a.h) * (c.v - b.v) - (b.v - a.v) * (c.h - b.h);
      const bool same_dir = sign_of(b.h - a.h) == sign_of(c.h - b.h);
      if (cr == Rational(0) && same_dir) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
}

// L2 of the positive cable: closure of (s_1 ... s_{q-1})^p with strands at
// heights 1..q running right and returning on top at heights q+1..2q.
FrontComponent torus_braid_closure(std::int64_t p, std::int64_t q) {
  const std::int64_t len = p * (q - 1);
  const std::int64_t R = 4 + len + 1;
  const Rational mid = Rational(2 * q + 1, 2);
  std::vector<FrontPoint> v;
  std::int64_t cur = 1;
  do {
    v.push_back(pt(0, cur));
    for (std::int64_t j = 0; j < len; ++j) {
      const std::int64_t x = 4 + j;
      const std::int64_t i = j % (q - 1) + 1;
      if (cur == i) {
        v.push_back(pt(x, i));
        v.push_back(pt(x + 1, i + 1));
        cur = i + 1;
      } else if (cur == i + 1) {
        v.push_back(pt(x, i + 1));
        v.push_back(pt(x + 1, i));
        cur = i;
      }
    }
    const std::int64_t k = cur;
    const std::int64_t dk = q + 1 - k;
    v.push_back(pt(R, k));
    v.push_back(pt(Rational(R + dk), mid));
    v.push_back(pt(R, 2 * q + 1 - k));
    v.push_back(pt(0, 2 * q + 1 - k));
    v.push_back(pt(Rational(-dk), mid));
  } while (cur != 1);
  simplify_polyline(v);
  return {v, 0};
}

FrontDiagram minus_one_oriented(std::int64_t q, std::int64_t m, std::int64_t rot1,
                                std::int64_t tb2, std::int64_t rot2) {
  LinkInvariants t{-1, q, -m, rot1, tb2, rot2, true};
  const DestabilizationWitness w = destabilization_witness(t, false);
  if (w.entries.empty()) throw Error(ErrorCode::NotRealizable, "no peak reaches the tuple");
  const WitnessEntry& e = w.entries.front();
  const std::int64_t rho = e.peak.rot2_peak;
  FrontDiagram d;
  if (q > m) {
    FrontDiagram l1 = unknot_front(-m, rot1, 2 * (q - m) + 4);
    d = legendrian_pushoff(l1, 0, true);
    for (std::int64_t i = 0; i < q - m; ++i) d = add_meridional_loop(d, 0, 1);
  } else {
    FrontDiagram l2 = unknot_front(-q, rho);
    d = legendrian_pushoff(l2, 0, true);
    const std::int64_t k = rot1 + rho;
    d = stabilize_times(d, 1, (m - q + k) / 2, (m - q - k) / 2);
    std::swap(d.components[0], d.components[1]);
  }
  d = stabilize_times(d, 1, e.pos_stabs, e.neg_stabs);
  check_construction(d, t);
  return d;
}

}  // namespace

std::string to_string(ConstructionFamily family) {
  switch (family) {
    case ConstructionFamily::Unknot: return "Unknot";
    case ConstructionFamily::PositiveCable: return "PositiveCable";
    case ConstructionFamily::MinusOneCable: return "MinusOneCable";
  }
  return "Unknown";
}

FrontDiagram unknot_front(std::int64_t tb, std::int64_t rot, std::int64_t min_width) {
  if (!unknot_realizable(tb, rot)) {
    throw Error(ErrorCode::NotRealizable, "(tb, rot) = (" + std::to_string(tb) + ", " +
                                              std::to_string(rot) +
                                              ") is not realized by a Legendrian unknot");
  }
  const std::int64_t n = -tb - 1;
  const std::int64_t n_pos = (n + rot) / 2;
  const std::int64_t W = std::max(4 * n + 4, min_width);
  FrontComponent c;
  auto& v = c.vertices;
  v.push_back(pt(0, 0));
  v.push_back(pt(1, 1));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t x = 2 + 4 * i;
    const Rational dir = i < n_pos ? Rational(-1) : Rational(1);
    v.push_back(pt(x + 2, 1));
    v.push_back(pt(Rational(x + 1), Rational(1) + dir * Rational(1, 4)));
    v.push_back(pt(Rational(x + 2), Rational(1) + dir * Rational(1, 2)));
    v.push_back(pt(x + 3, 1));
  }
  v.push_back(pt(W - 1, 1));
  v.push_back(pt(W, 0));
  v.push_back(pt(W - 1, -1));
  v.push_back(pt(1, -1));
  simplify_polyline(v);
  FrontDiagram d;
  d.components.push_back(c);
  const auto inv = classical_invariants(d, 0);
  if (inv.tb != tb || inv.rot != rot) {
    throw Error(ErrorCode::TemplateMismatch, "unknot template check failed");
  }
  return d;
}

FrontDiagram figure_eight_unknot_front() {
  FrontDiagram d;
  d.components.push_back({{pt(0, 0), pt(1, 1), pt(3, -1), pt(4, 0), pt(3, 1), pt(1, -1)}, 0});
  return d;
}

FrontDiagram legendrian_pushoff(const FrontDiagram& d, std::size_t c, bool reverse) {
  require_valid(d);
  if (c >= d.components.size()) throw Error(ErrorCode::InvalidInput, "component index out of range");
  const auto inv = classical_invariants(d, c);
  const std::size_t expected = cusp_counts(d, c).total() + 2 * self_crossings(d, c);
  const std::size_t nc = d.components.size();
  std::vector<std::int64_t> other_lk(nc, 0);
  for (std::size_t o = 0; o < nc; ++o) {
    if (o != c) other_lk[o] = linking_number(d, o, c) * (reverse ? -1 : 1);
  }
  Rational delta(1, 8);
  for (int attempt = 0; attempt < 30; ++attempt, delta /= 2) {
    FrontComponent copy = d.components[c];
    for (auto& p : copy.vertices) p.v += delta;
    FrontDiagram out = d;
    out.components.push_back(copy);
    if (reverse) out = reverse_component(out, nc);
    if (!validate(out).empty()) continue;
    if (crossings_between(out, c, nc) != expected) continue;
    if (linking_number(out, c, nc) != (reverse ? -inv.tb : inv.tb)) continue;
    bool ok = true;
    for (std::size_t o = 0; o < nc && ok; ++o) {
      if (o != c && linking_number(out, o, nc) != other_lk[o]) ok = false;
    }
    if (!ok) continue;
    return out;
  }
  throw Error(ErrorCode::InvalidDiagram, "could not place a push-off");
}

FrontDiagram add_meridional_loop(const FrontDiagram& d, std::size_t c_around,
                                 std::size_t c_target) {
  require_valid(d);
  if (c_around >= d.components.size() || c_target >= d.components.size() ||
      c_around == c_target) {
    throw Error(ErrorCode::InvalidInput, "need two distinct component indices");
  }
  const auto before = classical_invariants(d, c_target);
  const auto lk_before = linking_number(d, c_around, c_target);
  const auto& around = d.components[c_around];
  const auto& target = d.components[c_target];

  for (std::size_t t = 0; t < segment_count(target); ++t) {
    const auto [T0, T1] = segment_endpoints(target, t);
    if (T0.v != T1.v) continue;
    const int sigma = sign_of(T1.h - T0.h);
    const Rational sg(sigma);
    for (std::size_t s = 0; s < segment_count(around); ++s) {
      const auto [S0, S1] = segment_endpoints(around, s);
      if (S0.v != S1.v || sign_of(S1.h - S0.h) != -sigma) continue;
      const Rational delta = sg * (T0.v - S0.v);
      if (delta <= 0) continue;
      const Rational u = delta * 2;
      const Rational lo = std::max(sg * T0.h, std::min(sg * S0.h, sg * S1.h));
      const Rational hi = std::min(sg * T1.h, std::max(sg * S0.h, sg * S1.h));
      const Rational a = lo + u * 2;
      if (a + u * 4 > hi) continue;
      const Rational v0 = S0.v;
      const Rational dx[5] = {Rational(0), -u, u * 2, u, u * 3};
      const Rational dy[5] = {delta, -u, -u, u, delta};
      FrontDiagram out = d;
      auto& verts = out.components[c_target].vertices;
      std::vector<FrontPoint> loop;
      for (int k = 0; k < 5; ++k) loop.push_back({sg * (a + dx[k]), v0 + sg * dy[k]});
      verts.insert(verts.begin() + static_cast<std::ptrdiff_t>(t + 1), loop.begin(), loop.end());
      if (!validate(out).empty()) continue;
      const auto after = classical_invariants(out, c_target);
      if (after.tb != before.tb - 2 || after.rot != before.rot) continue;
      if (linking_number(out, c_around, c_target) != lk_before + 1) continue;
      return out;
    }
  }
  throw Error(ErrorCode::TemplateMismatch,
              "target component has no horizontal stretch parallel to the other component");
}

FrontDiagram positive_cable_front(std::int64_t p, std::int64_t q, std::int64_t m,
                                  std::int64_t rot1) {
  if (p < 1 || q < 1 || !coprime(p, q)) {
    throw Error(ErrorCode::NotRealizable, "positive cable needs p >= 1, q >= 1, gcd(p, q) = 1");
  }
  if (!unknot_realizable(-m, rot1)) {
    throw Error(ErrorCode::NotRealizable, "(tb1, rot1) is not a realizable unknot");
  }
  FrontDiagram d;
  const Rational half(1, 2);
  FrontComponent l1;
  l1.vertices = {pt(Rational(1), half), pt(Rational(2), Rational(q) + half),
                 pt(Rational(3), half), pt(Rational(2), half - Rational(q))};
  d.components.push_back(l1);
  d.components.push_back(torus_braid_closure(p, q));
  d = stabilize_times(d, 0, (m - 1 + rot1) / 2, (m - 1 - rot1) / 2, true);
  const std::int64_t tb2 = q >= 2 ? p * q - p - q : -1;
  check_construction(d, {p, q, -m, rot1, tb2, 0, true});
  return d;
}

FrontDiagram minus_one_cable_front(std::int64_t q, std::int64_t m, std::int64_t rot1,
                                   std::int64_t tb2, std::int64_t rot2) {
  if (q < 2) throw Error(ErrorCode::Unsupported, "the (-1, q) templates need q >= 2");
  const LinkInvariants t{-1, q, -m, rot1, tb2, rot2, true};
  const RealizabilityResult r = realizable(t);
  if (!r.realizable) throw Error(ErrorCode::NotRealizable, "tuple is not realizable");
  if (!r.label.swapped) return minus_one_oriented(q, m, rot1, tb2, rot2);
  FrontDiagram d = minus_one_oriented(q, -tb2, rot2, -m, rot1);
  std::swap(d.components[0], d.components[1]);
  check_construction(d, t);
  return d;
}

ConstructionFamily family_for(const LinkInvariants& target) {
  const LinkInvariants t = normalize(target);
  if (t.q == 0) return ConstructionFamily::Unknot;
  if (t.q == 1 || t.p >= 1) return ConstructionFamily::PositiveCable;
  if (t.p == -1) return ConstructionFamily::MinusOneCable;
  throw Error(ErrorCode::Unsupported, "fronts for cables with p <= -2 are not constructed");
}

FrontDiagram construct(const ConstructionSpec& spec) {
  if (family_for(spec.target) != spec.family) {
    throw Error(ErrorCode::InvalidInput, "construction family does not match the target");
  }
  return construct(spec.target);
}

FrontDiagram construct(const LinkInvariants& target) {
  const LinkInvariants t = normalize(target);
  if (!realizable(t).realizable) {
    throw Error(ErrorCode::NotRealizable, "target invariants are not realizable");
  }
  FrontDiagram d;
  switch (family_for(t)) {
    case ConstructionFamily::Unknot: {
      FrontDiagram a = unknot_front(t.tb1, t.rot1);
      const FrontDiagram b = unknot_front(t.tb2, t.rot2);
      Rational right(0);
      for (const auto& p : a.components[0].vertices) right = std::max(right, p.h);
      a.components.push_back(translate(b, right + 4, Rational(0)).components[0]);
      d = a;
      break;
    }
    case ConstructionFamily::PositiveCable: {
      if (t.q == 1) {
        d = positive_cable_front(1, 1, t.m(), t.rot1);
        const std::int64_t s = -1 - t.tb2;
        d = stabilize_times(d, 1, (s + t.rot2) / 2, (s - t.rot2) / 2);
      } else {
        d = positive_cable_front(t.p, t.q, t.m(), t.rot1);
        const auto w = destabilization_witness(t);
        d = stabilize_times(d, 1, w.entries.front().pos_stabs, w.entries.front().neg_stabs);
      }
      break;
    }
    case ConstructionFamily::MinusOneCable:
      d = minus_one_cable_front(t.q, t.m(), t.rot1, t.tb2, t.rot2);
      break;
  }
  check_construction(d, t);
  if (target.q < 0) d = reverse_component(d, 1);
  return d;
}

}  // namespace legendrian
