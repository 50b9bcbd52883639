#include "legendrian/invariant_ranges.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "legendrian/error.hpp"

namespace legendrian {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

bool odd(std::int64_t x) { return (x % 2) != 0; }

void require_coprime(std::int64_t p, std::int64_t q) {
  if (!coprime(p, q)) {
    throw Error(ErrorCode::NonCoprime,
                "p and q must be coprime, got gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
}

void push_peak(std::vector<Peak>& out, std::int64_t rot2, std::optional<Coupling> c) {
  for (const auto& pk : out) {
    if (pk.rot2_peak == rot2) return;
  }
  out.push_back({rot2, std::move(c)});
}

bool oriented_realizable(std::int64_t p, std::int64_t q, std::int64_t tb1, std::int64_t rot1,
                         std::int64_t tb2, std::int64_t rot2) {
  if (!unknot_realizable(tb1, rot1)) return false;
  if (q <= 1) return unknot_realizable(tb2, rot2);
  if (!odd(tb2 + rot2)) return false;
  const std::int64_t m = -tb1;
  const std::int64_t top = max_tb2(p, q, m);
  for (const auto& pk : peaks(p, q, m, rot1)) {
    if (in_cone(top, pk.rot2_peak, rot2, tb2)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::C1_q0: return "C1_q0";
    case CaseKind::C2_q1: return "C2_q1";
    case CaseKind::C3a_pos: return "C3a_pos";
    case CaseKind::C3b1: return "C3b1";
    case CaseKind::C3b2i: return "C3b2i";
    case CaseKind::C3b2ii: return "C3b2ii";
    case CaseKind::C3b2iii: return "C3b2iii";
  }
  return "Unknown";
}

bool coprime(std::int64_t p, std::int64_t q) { return std::gcd(p, q) == 1; }

LinkInvariants normalize(const LinkInvariants& raw) {
  require_coprime(raw.p, raw.q);
  LinkInvariants out = raw;
  if (out.q < 0) {
    out.p = -out.p;
    out.q = -out.q;
    out.rot2 = -out.rot2;
  }
  out.normalized = true;
  return out;
}

bool unknot_realizable(std::int64_t tb, std::int64_t rot) {
  return tb <= -1 && iabs(rot) <= -tb - 1 && odd(tb + rot);
}

CaseKind case_kind(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (q == 0) return CaseKind::C1_q0;
  if (q == 1) return CaseKind::C2_q1;
  if (p > 0) return CaseKind::C3a_pos;
  if (m * p + q > 0) return CaseKind::C3b1;
  if (-p > q) return CaseKind::C3b2i;
  if (p < -1) return CaseKind::C3b2ii;
  return CaseKind::C3b2iii;
}

std::int64_t max_tb2(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (q < 2) throw Error(ErrorCode::OutOfDomain, "max_tb2 needs q >= 2");
  if (p == 0) throw Error(ErrorCode::OutOfDomain, "max_tb2 needs p != 0");
  if (m < 1) throw Error(ErrorCode::OutOfDomain, "max_tb2 needs m >= 1");
  if (p > 0) return p * q - p - q;
  return p * q - std::max<std::int64_t>(m * p + q, 0);
}

std::vector<Peak> peaks(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t rot1) {
  if (q < 2) throw Error(ErrorCode::OutOfDomain, "peaks need q >= 2");
  if (!coprime(p, q)) throw Error(ErrorCode::OutOfDomain, "peaks need coprime (p, q)");
  if (!unknot_realizable(-m, rot1)) {
    throw Error(ErrorCode::OutOfDomain, "(tb1, rot1) is not a realizable unknot");
  }
  std::vector<Peak> out;
  switch (case_kind(p, q, m)) {
    case CaseKind::C3a_pos:
      push_peak(out, 0, std::nullopt);
      break;
    case CaseKind::C3b1:
      push_peak(out, p * rot1, std::nullopt);
      break;
    case CaseKind::C3b2i:
      for (std::int64_t l = 0; l * q + p + q < 0; ++l) {
        push_peak(out, p + (2 * l + 1) * q, std::nullopt);
        push_peak(out, -(p + (2 * l + 1) * q), std::nullopt);
      }
      break;
    case CaseKind::C3b2ii: {
      const std::int64_t a = q / -p;
      const std::int64_t b = q % -p;
      const std::int64_t bound = m - a - 1;
      auto consider = [&](std::int64_t f, std::int64_t rot2) {
        const std::int64_t slack = bound - iabs(rot1 - f);
        if (slack < 0) return;
        push_peak(out, rot2, Coupling{"f_{a+1}(mu)", f, slack});
      };
      for (std::int64_t f = -a + 2; f <= a; f += 2) consider(f, p * f - p - b);
      for (std::int64_t f = -a; f <= a - 2; f += 2) consider(f, p * f + p + b);
      break;
    }
    case CaseKind::C3b2iii:
      for (std::int64_t f = -q + 1; f <= q - 1; f += 2) {
        const std::int64_t slack = m - q - iabs(rot1 - f);
        if (slack < 0) continue;
        push_peak(out, -f, Coupling{"f_T(mu)", f, slack});
      }
      break;
    default:
      throw Error(ErrorCode::OutOfDomain, "peaks need q >= 2");
  }
  std::sort(out.begin(), out.end(),
            [](const Peak& x, const Peak& y) { return x.rot2_peak < y.rot2_peak; });
  return out;
}

bool in_cone(std::int64_t max_tb, std::int64_t peak_rot, std::int64_t rot2, std::int64_t tb2) {
  const std::int64_t s = max_tb - tb2;
  return s >= 0 && iabs(rot2 - peak_rot) <= s && !odd(s - (rot2 - peak_rot));
}

RealizabilityResult realizable(const LinkInvariants& inv, bool allow_swap) {
  if (!inv.normalized || inv.q < 0) {
    throw Error(ErrorCode::NotNormalized, "tuple must be normalized (q >= 0)");
  }
  require_coprime(inv.p, inv.q);
  RealizabilityResult r;
  r.label.kind = case_kind(inv.p, inv.q, inv.m());
  if (oriented_realizable(inv.p, inv.q, inv.tb1, inv.rot1, inv.tb2, inv.rot2)) {
    r.realizable = true;
    return r;
  }
  if (allow_swap && inv.p == -1 && inv.q >= 2 &&
      oriented_realizable(inv.p, inv.q, inv.tb2, inv.rot2, inv.tb1, inv.rot1)) {
    r.realizable = true;
    r.label.kind = case_kind(inv.p, inv.q, -inv.tb2);
    r.label.swapped = true;
  }
  return r;
}

MountainRange mountain_range(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t rot1,
                             std::int64_t floor) {
  MountainRange mr;
  mr.p = p;
  mr.q = q;
  mr.m = m;
  mr.rot1 = rot1;
  mr.floor = floor;
  mr.max_tb2 = max_tb2(p, q, m);
  if (floor > mr.max_tb2) throw Error(ErrorCode::OutOfDomain, "floor lies above the peaks");
  mr.peaks = peaks(p, q, m, rot1);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::int64_t tb = mr.max_tb2; tb >= floor; --tb) {
    const std::int64_t s = mr.max_tb2 - tb;
    std::set<std::int64_t> row;
    for (const auto& pk : mr.peaks) {
      for (std::int64_t r = pk.rot2_peak - s; r <= pk.rot2_peak + s; r += 2) row.insert(r);
    }
    for (std::int64_t r : row) mr.points.emplace_back(r, tb);
  }
  return mr;
}

std::pair<std::int64_t, std::int64_t> neighbor_peak_gaps(std::int64_t p, std::int64_t q) {
  if (q < 2 || p >= 0 || !coprime(p, q)) {
    throw Error(ErrorCode::OutOfDomain, "peak gaps need q >= 2, p < 0, gcd(p, q) = 1");
  }
  const std::int64_t ap = -p;
  if (ap > q) {
    const std::int64_t b = ap % q;
    return {2 * b, 2 * (q - b)};
  }
  if (ap > 1) {
    const std::int64_t b = q % ap;
    return {2 * b, 2 * (ap - b)};
  }
  throw Error(ErrorCode::OutOfDomain, "peak gaps are defined for C3b2i and C3b2ii");
}

std::string ascii_plot(const MountainRange& range) {
  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [r, t] : range.points) {
    if (first) {
      lo = hi = r;
      first = false;
    }
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  std::set<std::pair<std::int64_t, std::int64_t>> pts(range.points.begin(), range.points.end());
  std::ostringstream os;
  os << "(p,q)=(" << range.p << "," << range.q << ") m=" << range.m << " rot1=" << range.rot1
     << " max_tb2=" << range.max_tb2 << "\n";
  for (std::int64_t tb = range.max_tb2; tb >= range.floor; --tb) {
    std::string label = std::to_string(tb);
    os << std::string(label.size() < 5 ? 5 - label.size() : 0, ' ') << label << " |";
    for (std::int64_t r = lo; r <= hi; ++r) {
      char c = ' ';
      if (pts.count({r, tb})) {
        c = 'o';
        if (tb == range.max_tb2) {
          for (const auto& pk : range.peaks) {
            if (pk.rot2_peak == r) c = '^';
          }
        }
      }
      os << ' ' << c;
    }
    os << "\n";
  }
  os << "      +";
  for (std::int64_t r = lo; r <= hi; ++r) os << "--";
  os << "\n  rot2 " << lo << " .. " << hi << "\n";
  return os.str();
}

}  // namespace legendrian
