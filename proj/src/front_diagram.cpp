#include "legendrian/front_diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include <boost/multiprecision/cpp_int.hpp>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

__extension__ typedef __int128 i128;
using boost::multiprecision::int256_t;

// Scaled coordinates stay below this so that cross products of coordinate
// differences fit in 128 bits.
constexpr std::int64_t kCoordLimit = std::int64_t{1} << 58;

struct IVec {
  std::int64_t h = 0;
  std::int64_t v = 0;
};

i128 cross(i128 ah, i128 av, i128 bh, i128 bv) { return ah * bv - av * bh; }

int sgn(i128 x) { return (x > 0) - (x < 0); }

struct Seg {
  IVec a, b;
  std::size_t comp = 0;
  std::size_t index = 0;

  std::int64_t lo() const { return std::min(a.h, b.h); }
  std::int64_t hi() const { return std::max(a.h, b.h); }
  i128 dh() const { return i128{b.h} - a.h; }
  i128 dv() const { return i128{b.v} - a.v; }

  Seg shifted(std::int64_t dh_shift) const {
    Seg s = *this;
    s.a.h += dh_shift;
    s.b.h += dh_shift;
    return s;
  }
};

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  i128 g = std::gcd(a, b);
  i128 l = i128{a} / g * b;
  if (l > kCoordLimit) {
    throw Error(ErrorCode::InvalidDiagram, "vertex denominators exceed the exact-arithmetic range");
  }
  return static_cast<std::int64_t>(l);
}

std::int64_t scale_to_grid(const Rational& x, std::int64_t scale) {
  i128 r = i128{x.numerator()} * (scale / x.denominator());
  if (r > kCoordLimit || r < -kCoordLimit) {
    throw Error(ErrorCode::InvalidDiagram, "vertex coordinates exceed the exact-arithmetic range");
  }
  return static_cast<std::int64_t>(r);
}

struct Grid {
  std::int64_t hscale = 1;
  std::int64_t vscale = 1;
  std::int64_t period = 0;  // Cylinder only
  bool cylinder = false;
  std::vector<std::vector<Seg>> segs;
};

Grid make_grid(const FrontDiagram& d) {
  Grid g;
  g.cylinder = d.ambient == Ambient::Cylinder;
  for (const auto& c : d.components) {
    for (const auto& p : c.vertices) {
      g.hscale = checked_lcm(g.hscale, p.h.denominator());
      g.vscale = checked_lcm(g.vscale, p.v.denominator());
    }
  }
  g.period = g.cylinder ? g.hscale : 0;
  g.segs.resize(d.components.size());
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& c = d.components[ci];
    const std::size_t n = c.vertices.size();
    if (n < 2) continue;
    std::vector<IVec> pts;
    pts.reserve(n);
    for (const auto& p : c.vertices) {
      pts.push_back({scale_to_grid(p.h, g.hscale), scale_to_grid(p.v, g.vscale)});
    }
    const i128 close_shift = g.cylinder ? i128{c.winding} * g.period : 0;
    for (std::size_t k = 0; k < n; ++k) {
      Seg s;
      s.a = pts[k];
      s.b = pts[(k + 1) % n];
      if (k + 1 == n) {
        i128 h = i128{s.b.h} + close_shift;
        if (h > kCoordLimit || h < -kCoordLimit) {
          throw Error(ErrorCode::InvalidDiagram, "winding exceeds the exact-arithmetic range");
        }
        s.b.h = static_cast<std::int64_t>(h);
      }
      s.comp = ci;
      s.index = k;
      g.segs[ci].push_back(s);
    }
  }
  return g;
}

bool on_segment(const IVec& a, const IVec& b, const IVec& p) {
  if (sgn(cross(i128{b.h} - a.h, i128{b.v} - a.v, i128{p.h} - a.h, i128{p.v} - a.v)) != 0) {
    return false;
  }
  return std::min(a.h, b.h) <= p.h && p.h <= std::max(a.h, b.h) && std::min(a.v, b.v) <= p.v &&
         p.v <= std::max(a.v, b.v);
}

enum class Contact { None, Proper, Touch };

Contact classify_contact(const Seg& s, const Seg& t) {
  auto orient = [](const IVec& a, const IVec& b, const IVec& c) {
    return sgn(cross(i128{b.h} - a.h, i128{b.v} - a.v, i128{c.h} - a.h, i128{c.v} - a.v));
  };
  const int d1 = orient(s.a, s.b, t.a);
  const int d2 = orient(s.a, s.b, t.b);
  const int d3 = orient(t.a, t.b, s.a);
  const int d4 = orient(t.a, t.b, s.b);
  if (d1 * d2 < 0 && d3 * d4 < 0) return Contact::Proper;
  if (on_segment(s.a, s.b, t.a) || on_segment(s.a, s.b, t.b) || on_segment(t.a, t.b, s.a) ||
      on_segment(t.a, t.b, s.b)) {
    return Contact::Touch;
  }
  return Contact::None;
}

// Slope of s is smaller than slope of t.
bool slope_less(const Seg& s, const Seg& t) {
  // dv_s/dh_s < dv_t/dh_t, with the sign of dh_s*dh_t folded in.
  const i128 lhs = s.dv() * t.dh();
  const i128 rhs = t.dv() * s.dh();
  const bool flip = (s.dh() < 0) != (t.dh() < 0);
  return flip ? lhs > rhs : lhs < rhs;
}

struct Fraction256 {
  int256_t num;
  int256_t den;  // > 0
};

bool fraction_equal(const Fraction256& x, const Fraction256& y) {
  return x.num * y.den == y.num * x.den;
}

Rational to_rational(int256_t num, int256_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int256_t g = boost::multiprecision::gcd(num < 0 ? int256_t(-num) : num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  const int256_t lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) {
    throw Error(ErrorCode::InvalidDiagram, "crossing position exceeds the rational range");
  }
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

Rational reduce_mod_one(Rational x) {
  const std::int64_t n = x.numerator();
  const std::int64_t d = x.denominator();
  std::int64_t fl = n / d;
  if (n % d != 0 && n < 0) --fl;
  return x - Rational(fl);
}

struct RawCrossing {
  Seg s;  // shifted instances as they actually meet
  Seg t;
  Fraction256 param_s;
  Fraction256 param_t;
  CrossingData data;
  long double key_h = 0;
  long double key_v = 0;
};

struct Analysis {
  std::vector<Violation> violations;
  std::vector<RawCrossing> crossings;
  std::vector<CuspCounts> cusps;
};

Violation make_violation(ViolationKind kind, std::size_t comp, std::size_t seg, std::string msg,
                         std::optional<std::size_t> oc = std::nullopt,
                         std::optional<std::size_t> os = std::nullopt) {
  Violation v;
  v.kind = kind;
  v.component = comp;
  v.segment = seg;
  v.other_component = oc;
  v.other_segment = os;
  v.message = std::move(msg);
  return v;
}

RawCrossing make_crossing(const Grid& g, const Seg& s, const Seg& t) {
  // Intersection X = s.a + u (s.b - s.a) = t.a + w (t.b - t.a).
  const i128 den = cross(s.dh(), s.dv(), t.dh(), t.dv());
  const i128 u_num = cross(i128{t.a.h} - s.a.h, i128{t.a.v} - s.a.v, t.dh(), t.dv());
  const i128 w_num = cross(i128{t.a.h} - s.a.h, i128{t.a.v} - s.a.v, s.dh(), s.dv());

  RawCrossing rc;
  rc.s = s;
  rc.t = t;
  const int256_t D = int256_t(den);
  const int256_t sd = D < 0 ? int256_t(-D) : D;
  const int256_t sgn_d = D < 0 ? -1 : 1;
  rc.param_s = {int256_t(u_num) * sgn_d, sd};
  rc.param_t = {int256_t(w_num) * sgn_d, sd};

  const int256_t xh = int256_t(s.a.h) * D + int256_t(u_num) * int256_t(s.dh());
  const int256_t xv = int256_t(s.a.v) * D + int256_t(u_num) * int256_t(s.dv());
  Rational h = to_rational(xh, D * int256_t(g.hscale));
  Rational v = to_rational(xv, D * int256_t(g.vscale));
  if (g.cylinder) h = reduce_mod_one(h);

  const bool s_over = slope_less(s, t);
  const Seg& over = s_over ? s : t;
  const Seg& under = s_over ? t : s;
  rc.data.position = {h, v};
  rc.data.over_component = over.comp;
  rc.data.over_segment = over.index;
  rc.data.under_component = under.comp;
  rc.data.under_segment = under.index;
  // Grid scaling is positive in each axis, so the orientation sign survives.
  rc.data.sign = sgn(cross(over.dh(), over.dv(), under.dh(), under.dv()));
  rc.key_h = static_cast<long double>(h.numerator()) / static_cast<long double>(h.denominator());
  rc.key_v = static_cast<long double>(v.numerator()) / static_cast<long double>(v.denominator());
  return rc;
}

void check_components(const FrontDiagram& d, const Grid& g, Analysis& out) {
  out.cusps.assign(d.components.size(), {});
  for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
    const auto& c = d.components[ci];
    if (c.vertices.size() < 3) {
      out.violations.push_back(make_violation(ViolationKind::TooFewVertices, ci, 0,
                                              "component needs at least 3 vertices"));
      continue;
    }
    if (d.ambient == Ambient::Plane && c.winding != 0) {
      out.violations.push_back(make_violation(ViolationKind::NonzeroWindingInPlane, ci, 0,
                                              "plane components must have winding 0"));
    }
    const auto& segs = g.segs[ci];
    bool monotone = true;
    for (const auto& s : segs) {
      if (s.dh() == 0) {
        monotone = false;
        out.violations.push_back(make_violation(ViolationKind::NonMonotoneSegment, ci, s.index,
                                                "segment is vertical or has zero length"));
      } else if (g.cylinder && (s.dh() >= g.period || -s.dh() >= g.period)) {
        monotone = false;
        out.violations.push_back(make_violation(ViolationKind::SegmentTooLong, ci, s.index,
                                                "segment spans a full turn of the cylinder"));
      }
    }
    if (!monotone) continue;

    CuspCounts counts;
    const std::size_t n = segs.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Seg& in = segs[(k + n - 1) % n];
      const Seg& out_seg = segs[k];
      if ((in.dh() > 0) == (out_seg.dh() > 0)) continue;
      // Both branches leave the cusp in the direction of out_seg.
      const i128 w1h = -in.dh(), w1v = -in.dv();
      const i128 w2h = out_seg.dh(), w2v = out_seg.dv();
      const i128 abs1 = w1h < 0 ? -w1h : w1h;
      const i128 abs2 = w2h < 0 ? -w2h : w2h;
      const i128 lhs = w1v * abs2;
      const i128 rhs = w2v * abs1;
      if (lhs == rhs) {
        out.violations.push_back(make_violation(ViolationKind::DegenerateCusp, ci, k,
                                                "cusp branches are tangent"));
        continue;
      }
      const bool incoming_upper = lhs > rhs;
      if (incoming_upper) {
        ++counts.down;
      } else {
        ++counts.up;
      }
    }
    out.cusps[ci] = counts;
    if (counts.total() % 2 != 0) {
      out.violations.push_back(make_violation(ViolationKind::OddCuspCount, ci, 0,
                                              "odd number of cusps"));
    }
    if (d.ambient == Ambient::Plane && counts.total() < 2) {
      out.violations.push_back(make_violation(ViolationKind::MissingCusps, ci, 0,
                                              "plane components need at least 2 cusps"));
    }
  }
}

bool is_adjacent_instance(const FrontDiagram& d, const Seg& s, const Seg& t, std::int64_t k) {
  if (s.comp != t.comp) return false;
  const auto& c = d.components[s.comp];
  const std::size_t n = c.vertices.size();
  const std::int64_t w = d.ambient == Ambient::Cylinder ? c.winding : 0;
  if (t.index == s.index + 1 && k == 0) return true;
  if (s.index == 0 && t.index + 1 == n && k == -w) return true;
  return false;
}

void check_pairs(const FrontDiagram& d, const Grid& g, Analysis& out) {
  std::vector<const Seg*> all;
  for (const auto& segs : g.segs) {
    for (const auto& s : segs) all.push_back(&s);
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Seg& s = *all[i];
    if (s.dh() == 0) continue;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const Seg& t0 = *all[j];
      if (t0.dh() == 0) continue;
      std::int64_t kmin = 0, kmax = 0;
      if (g.cylinder) {
        const auto floor_div = [](i128 a, i128 b) {
          i128 q = a / b;
          if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
          return q;
        };
        const i128 P = g.period;
        kmax = static_cast<std::int64_t>(floor_div(i128{s.hi()} - t0.lo(), P));
        kmin = -static_cast<std::int64_t>(floor_div(i128{t0.hi()} - s.lo(), P));
      } else if (s.hi() < t0.lo() || t0.hi() < s.lo()) {
        continue;
      }
      for (std::int64_t k = kmin; k <= kmax; ++k) {
        const Seg t = k == 0 ? t0 : t0.shifted(k * g.period);
        if (s.hi() < t.lo() || t.hi() < s.lo()) continue;
        const Contact contact = classify_contact(s, t);
        if (contact == Contact::None) continue;
        if (contact == Contact::Proper) {
          out.crossings.push_back(make_crossing(g, s, t));
          continue;
        }
        if (is_adjacent_instance(d, s, t, k)) {
          // Shared vertex; collinear reversal is already a degenerate cusp.
          continue;
        }
        std::ostringstream msg;
        msg << "segments touch without crossing transversally";
        out.violations.push_back(make_violation(ViolationKind::NonGenericIncidence, s.comp,
                                                s.index, msg.str(), t.comp, t.index));
      }
    }
  }

  // Triple points: two crossings at the same parameter of one segment.
  struct Hit {
    std::size_t comp, index;
    std::int64_t shift_key;
    Fraction256 param;
  };
  std::vector<Hit> hits;
  for (const auto& rc : out.crossings) {
    hits.push_back({rc.s.comp, rc.s.index, rc.s.a.h - g.segs[rc.s.comp][rc.s.index].a.h,
                    rc.param_s});
    hits.push_back({rc.t.comp, rc.t.index, rc.t.a.h - g.segs[rc.t.comp][rc.t.index].a.h,
                    rc.param_t});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    return std::tie(a.comp, a.index) < std::tie(b.comp, b.index);
  });
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      if (hits[j].comp != hits[i].comp || hits[j].index != hits[i].index) break;
      if (fraction_equal(hits[i].param, hits[j].param)) {
        out.violations.push_back(make_violation(ViolationKind::TriplePoint, hits[i].comp,
                                                hits[i].index,
                                                "three strands meet at one point"));
      }
    }
  }
}

Analysis analyze(const FrontDiagram& d) {
  Analysis out;
  const Grid g = make_grid(d);
  check_components(d, g, out);
  bool geometric_ok = true;
  for (const auto& v : out.violations) {
    if (v.kind == ViolationKind::TooFewVertices || v.kind == ViolationKind::NonMonotoneSegment ||
        v.kind == ViolationKind::SegmentTooLong) {
      geometric_ok = false;
    }
  }
  if (geometric_ok) check_pairs(d, g, out);
  std::stable_sort(out.crossings.begin(), out.crossings.end(),
                   [](const RawCrossing& a, const RawCrossing& b) {
                     return std::tie(a.key_h, a.key_v) < std::tie(b.key_h, b.key_v);
                   });
  return out;
}

Analysis analyze_valid(const FrontDiagram& d) {
  Analysis a = analyze(d);
  if (!a.violations.empty()) {
    std::ostringstream msg;
    msg << "invalid front diagram:";
    for (std::size_t i = 0; i < a.violations.size() && i < 3; ++i) {
      msg << " [" << to_string(a.violations[i].kind) << " component " << a.violations[i].component
          << " segment " << a.violations[i].segment << ": " << a.violations[i].message << "]";
    }
    throw Error(ErrorCode::InvalidDiagram, msg.str());
  }
  return a;
}

void check_component_index(const FrontDiagram& d, std::size_t c) {
  if (c >= d.components.size()) {
    throw Error(ErrorCode::InvalidInput, "component index out of range");
  }
}

std::int64_t writhe_of(const Analysis& a, std::size_t c) {
  std::int64_t w = 0;
  for (const auto& rc : a.crossings) {
    if (rc.data.over_component == c && rc.data.under_component == c) w += rc.data.sign;
  }
  return w;
}

using CrossingSignature = std::vector<std::tuple<std::size_t, std::size_t, int>>;

CrossingSignature signature(const Analysis& a) {
  CrossingSignature sig;
  for (const auto& rc : a.crossings) {
    sig.emplace_back(std::min(rc.data.over_component, rc.data.under_component),
                     std::max(rc.data.over_component, rc.data.under_component), rc.data.sign);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// Smallest dyadic pair ta < tb strictly inside (lo, hi) with a margin.
std::pair<Rational, Rational> dyadic_window(long double lo, long double hi) {
  for (int k = 2; k < 48; ++k) {
    const std::int64_t scale = std::int64_t{1} << k;
    const auto j = static_cast<std::int64_t>(std::floor(lo * scale)) + 1;
    if (static_cast<long double>(j + 2) / scale < hi) {
      return {Rational(j, scale), Rational(j + 1, scale)};
    }
  }
  throw Error(ErrorCode::InvalidDiagram, "no room to insert a zigzag");
}

Rational dyadic_floor(Rational x) {
  // Largest power of two (possibly negative exponent) not exceeding x > 0.
  Rational p(1);
  while (p > x) p /= 2;
  while (p * 2 <= x) p *= 2;
  return p;
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TooFewVertices: return "TooFewVertices";
    case ViolationKind::NonzeroWindingInPlane: return "NonzeroWindingInPlane";
    case ViolationKind::NonMonotoneSegment: return "NonMonotoneSegment";
    case ViolationKind::SegmentTooLong: return "SegmentTooLong";
    case ViolationKind::DegenerateCusp: return "DegenerateCusp";
    case ViolationKind::OddCuspCount: return "OddCuspCount";
    case ViolationKind::MissingCusps: return "MissingCusps";
    case ViolationKind::NonGenericIncidence: return "NonGenericIncidence";
    case ViolationKind::TriplePoint: return "TriplePoint";
  }
  return "Unknown";
}

std::size_t segment_count(const FrontComponent& c) { return c.vertices.size(); }

std::pair<FrontPoint, FrontPoint> segment_endpoints(const FrontComponent& c, std::size_t k) {
  const std::size_t n = c.vertices.size();
  FrontPoint a = c.vertices.at(k);
  FrontPoint b = c.vertices[(k + 1) % n];
  if (k + 1 == n) b.h += Rational(c.winding);
  return {a, b};
}

std::vector<Violation> validate(const FrontDiagram& d) { return analyze(d).violations; }

void require_valid(const FrontDiagram& d) { analyze_valid(d); }

std::vector<CrossingData> crossings(const FrontDiagram& d) {
  const Analysis a = analyze_valid(d);
  std::vector<CrossingData> out;
  out.reserve(a.crossings.size());
  for (const auto& rc : a.crossings) out.push_back(rc.data);
  return out;
}

CuspCounts cusp_counts(const FrontDiagram& d, std::size_t component) {
  check_component_index(d, component);
  return analyze_valid(d).cusps[component];
}

std::int64_t writhe(const FrontDiagram& d, std::size_t component) {
  check_component_index(d, component);
  return writhe_of(analyze_valid(d), component);
}

ClassicalInvariants classical_invariants(const FrontDiagram& d, std::size_t component) {
  check_component_index(d, component);
  const Analysis a = analyze_valid(d);
  const CuspCounts& cc = a.cusps[component];
  ClassicalInvariants inv;
  inv.tb = writhe_of(a, component) - static_cast<std::int64_t>(cc.total() / 2);
  inv.rot = (static_cast<std::int64_t>(cc.down) - static_cast<std::int64_t>(cc.up)) / 2;
  return inv;
}

std::int64_t linking_number(const FrontDiagram& d, std::size_t c1, std::size_t c2) {
  check_component_index(d, c1);
  check_component_index(d, c2);
  if (c1 == c2) throw Error(ErrorCode::InvalidInput, "linking number needs two distinct components");
  const Analysis a = analyze_valid(d);
  std::int64_t sum = 0;
  for (const auto& rc : a.crossings) {
    const auto& x = rc.data;
    if ((x.over_component == c1 && x.under_component == c2) ||
        (x.over_component == c2 && x.under_component == c1)) {
      sum += x.sign;
    }
  }
  if (sum % 2 != 0) {
    throw Error(ErrorCode::InvalidDiagram, "odd signed crossing count between components");
  }
  return sum / 2;
}

FrontDiagram reverse_component(const FrontDiagram& d, std::size_t c) {
  check_component_index(d, c);
  FrontDiagram out = d;
  auto& comp = out.components[c];
  std::reverse(comp.vertices.begin(), comp.vertices.end());
  comp.winding = -comp.winding;
  return out;
}

FrontDiagram translate(const FrontDiagram& d, Rational dh, Rational dv) {
  FrontDiagram out = d;
  for (auto& comp : out.components) {
    for (auto& p : comp.vertices) {
      p.h += dh;
      p.v += dv;
    }
  }
  return out;
}

FrontDiagram stabilize(const FrontDiagram& d, std::size_t c, StabilizationSign sign,
                       std::optional<std::size_t> segment) {
  check_component_index(d, c);
  const Analysis before = analyze_valid(d);
  const auto& comp = d.components[c];
  const std::size_t n = comp.vertices.size();

  std::size_t k = 0;
  if (segment) {
    if (*segment >= n) throw Error(ErrorCode::InvalidInput, "segment index out of range");
    k = *segment;
  } else {
    Rational best(-1);
    for (std::size_t i = 0; i < n; ++i) {
      auto [a, b] = segment_endpoints(comp, i);
      const Rational ext = boost::abs(b.h - a.h);
      if (ext > best) {
        best = ext;
        k = i;
      }
    }
  }

  // Crossing parameters along segment k, from the base (unshifted) instance.
  const Grid g = make_grid(d);
  const Seg& base = g.segs[c][k];
  std::vector<long double> params{0.0L, 1.0L};
  for (const auto& rc : before.crossings) {
    auto add = [&](const Seg& s, const Fraction256& p) {
      if (s.comp != c || s.index != k) return;
      long double t = static_cast<long double>(p.num) / static_cast<long double>(p.den);
      // A shifted instance has the same parameterization.
      (void)base;
      params.push_back(t);
    };
    add(rc.s, rc.param_s);
    add(rc.t, rc.param_t);
  }
  std::sort(params.begin(), params.end());
  long double lo = 0, hi = 0;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i + 1] - params[i] > hi - lo) {
      lo = params[i];
      hi = params[i + 1];
    }
  }
  const auto [ta, tb] = dyadic_window(lo, hi);

  const auto [P, Q] = segment_endpoints(comp, k);
  auto along = [&](Rational t) {
    return FrontPoint{P.h + t * (Q.h - P.h), P.v + t * (Q.v - P.v)};
  };
  const Rational dir = sign == StabilizationSign::Positive ? Rational(-1) : Rational(1);
  Rational eps = dyadic_floor((tb - ta) * boost::abs(Q.h - P.h));
  const auto target = signature(before);

  for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
    FrontDiagram out = d;
    auto& verts = out.components[c].vertices;
    FrontPoint B = along(tb);
    FrontPoint C = along(ta);
    C.v += dir * eps;
    FrontPoint D = along(tb);
    D.v += dir * eps * 2;
    verts.insert(verts.begin() + static_cast<std::ptrdiff_t>(k + 1), {B, C, D});
    Analysis after;
    try {
      after = analyze(out);
    } catch (const Error&) {
      break;
    }
    if (!after.violations.empty()) continue;
    if (signature(after) != target) continue;
    return out;
  }
  throw Error(ErrorCode::InvalidDiagram, "could not place a zigzag without new crossings");
}

}  // namespace legendrian
