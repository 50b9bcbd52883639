#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "legendrian/classifier.hpp"
#include "legendrian/constructor.hpp"
#include "legendrian/error.hpp"
#include "legendrian/front_diagram.hpp"
#include "legendrian/geometry_numerics.hpp"
#include "legendrian/invariant_ranges.hpp"
#include "legendrian/jet_space.hpp"
#include "oracles.hpp"

using namespace legendrian;
using i64 = std::int64_t;

namespace {

struct Outcome1 {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Check = std::function<void(Outcome1&)>;

bool run(int id, const char* title, double limit_s, const Check& body) {
  Outcome1 o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && dt > limit_s) {
    std::ostringstream os;
    os << "took " << dt << " s, limit " << limit_s << " s";
    o.fail(os.str());
  }
  std::printf("criterion %2d: %s  %s  (%.3f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title, dt,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  return o.ok;
}

std::string tuple_str(const LinkInvariants& t) {
  std::ostringstream os;
  os << "(" << t.p << "," << t.q << "," << t.tb1 << "," << t.rot1 << "," << t.tb2 << "," << t.rot2
     << ")";
  return os.str();
}

LinkInvariants random_realizable(std::mt19937_64& rng) {
  for (;;) {
    const i64 p = static_cast<i64>(rng() % 25) - 12;
    const i64 q = static_cast<i64>(rng() % 10);
    const i64 m = 1 + static_cast<i64>(rng() % 8);
    if (std::gcd(p, q) != 1) continue;
    const i64 r1 = -(m - 1) + 2 * static_cast<i64>(rng() % m);
    const i64 s = static_cast<i64>(rng() % 7);
    if (q <= 1) {
      const i64 m2 = 1 + static_cast<i64>(rng() % 6);
      const i64 r2 = -(m2 - 1) + 2 * static_cast<i64>(rng() % m2);
      return {p, q, -m, r1, -m2, r2, true};
    }
    const auto pk = peaks(p, q, m, r1);
    if (pk.empty()) continue;
    const i64 peak = pk[rng() % pk.size()].rot2_peak;
    const i64 r2 = peak - s + 2 * static_cast<i64>(rng() % (s + 1));
    return {p, q, -m, r1, max_tb2(p, q, m) - s, r2, true};
  }
}

// 1
void invariant_formulas(Outcome1& o) {
  FrontDiagram lens;
  auto P = [](i64 h, i64 v) { return FrontPoint{Rational(h), Rational(v)}; };
  lens.components.push_back({{P(0, 0), P(1, 1), P(3, 1), P(4, 0), P(3, -1), P(1, -1)}, 0});
  if (!(classical_invariants(lens, 0) == ClassicalInvariants{-1, 0})) o.fail("lens is not (-1, 0)");
  std::mt19937_64 rng(1);
  for (int seq = 0; seq < 1000 && o.ok; ++seq) {
    FrontDiagram d = lens;
    i64 tb = -1, rot = 0;
    const int len = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) {
      const bool pos = rng() % 2 == 0;
      const auto seg = static_cast<std::size_t>(rng() % segment_count(d.components[0]));
      d = stabilize(d, 0, pos ? StabilizationSign::Positive : StabilizationSign::Negative, seg);
      const auto inv = classical_invariants(d, 0);
      if (inv.tb != tb - 1 || inv.rot != rot + (pos ? 1 : -1)) {
        o.fail("sequence " + std::to_string(seq) + " step " + std::to_string(k));
        break;
      }
      tb = inv.tb;
      rot = inv.rot;
    }
  }
}

// 2
void construction_oracle(Outcome1& o, std::size_t& count) {
  for (i64 p : {1, 2, 3, -1}) {
    for (i64 q = 2; q <= 5; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (i64 m = 1; m <= 6; ++m) {
        for (i64 r1 = -(m - 1); r1 <= m - 1; r1 += 2) {
          const i64 top = max_tb2(p, q, m);
          for (const auto& pk : peaks(p, q, m, r1)) {
            const LinkInvariants t{p, q, -m, r1, top, pk.rot2_peak, true};
            const auto d = construct(t);
            const auto c = oracle::count_front(d);
            ++count;
            if (c.tb(0) != t.tb1 || c.rot(0) != t.rot1 || c.tb(1) != t.tb2 || c.rot(1) != t.rot2 ||
                c.lk(0, 1) != t.q) {
              o.fail("mismatch at " + tuple_str(t));
              return;
            }
          }
        }
      }
    }
  }
}

i64 brute_max(i64 p, i64 q, i64 m) {
  i64 best = INT64_MIN;
  const i64 guess = oracle::max_tb(p, q, m);
  for (i64 r1 = -(m - 1); r1 <= m - 1; r1 += 2) {
    if (peaks(p, q, m, r1).empty()) continue;
    for (const auto& pt : mountain_range(p, q, m, r1, guess - 3).points) best = std::max(best, pt.second);
  }
  // nothing above the formula value is realizable
  for (i64 r1 = -(m - 1); r1 <= m - 1; r1 += 2) {
    for (i64 r2 = -3 * (std::abs(p) + q); r2 <= 3 * (std::abs(p) + q); ++r2) {
      if (realizable({p, q, -m, r1, guess + 1, r2, true}, false).realizable) return INT64_MAX;
    }
  }
  return best;
}

// 3
void max_tb_reproduction(Outcome1& o) {
  int pos = 0;
  for (i64 p = 1; p <= 12 && pos < 20; ++p) {
    for (i64 q = 2; q <= 12 && pos < 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const i64 m = 1 + (p + q) % 4;
      if (max_tb2(p, q, m) != p * q - p - q || brute_max(p, q, m) != p * q - p - q) {
        o.fail("positive (" + std::to_string(p) + "," + std::to_string(q) + ")");
        return;
      }
      ++pos;
    }
  }
  int neg = 0;
  std::mt19937_64 rng(3);
  while (neg < 50) {
    const i64 p = -1 - static_cast<i64>(rng() % 12);
    const i64 q = 2 + static_cast<i64>(rng() % 11);
    const i64 m = 1 + static_cast<i64>(rng() % 7);
    if (std::gcd(p, q) != 1) continue;
    const i64 want = p * q - std::max<i64>(m * p + q, 0);
    if (max_tb2(p, q, m) != want || brute_max(p, q, m) != want) {
      o.fail("negative (" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(m) +
             ")");
      return;
    }
    ++neg;
  }
  if (pos != 20) o.fail("only " + std::to_string(pos) + " positive pairs");
}

// 4
void peak_equivalence(Outcome1& o) {
  for (i64 ap = 2; ap <= 15; ++ap) {
    for (i64 q = 2; q < ap; ++q) {
      if (std::gcd(ap, q) != 1) continue;
      const i64 p = -ap;
      std::set<i64> want;
      for (i64 l = 0; l * q < -(p + q); ++l) {
        want.insert(p + (2 * l + 1) * q);
        want.insert(-(p + (2 * l + 1) * q));
      }
      for (i64 m = 1; m <= 6; ++m) {
        if (m * p + q > 0) continue;
        for (i64 r1 = -(m - 1); r1 <= m - 1; r1 += 2) {
          std::set<i64> got;
          for (const auto& pk : peaks(p, q, m, r1)) got.insert(pk.rot2_peak);
          if (got != want) {
            o.fail("|p| > q at (" + std::to_string(p) + "," + std::to_string(q) + ")");
            return;
          }
        }
      }
    }
  }
  // |p| < q: coupled f-derived peaks against the uncoupled rotation set.
  for (i64 ap = 2; ap <= 15; ++ap) {
    for (i64 q = ap + 1; q <= 31; ++q) {
      if (std::gcd(ap, q) != 1) continue;
      const i64 p = -ap;
      const i64 a = q / ap;
      const auto all = oracle::rot2_uncoupled(p, q);
      for (i64 m = std::max<i64>(1, (q + ap - 1) / ap); m <= 2 * a + 4; ++m) {
        if (m * p + q > 0) continue;
        const i64 r1 = (m - 1) % 2 == 0 ? 0 : 1;
        std::set<i64> got;
        for (const auto& pk : peaks(p, q, m, r1)) got.insert(pk.rot2_peak);
        for (i64 x : got) {
          if (!all.count(x)) {
            o.fail("stray peak " + std::to_string(x));
            return;
          }
        }
        if (m >= 2 * a + 1 && got != all) {
          o.fail("(" + std::to_string(p) + "," + std::to_string(q) + ",m=" + std::to_string(m) +
                 ") differs from the uncoupled set");
          return;
        }
        for (i64 r = -(m - 1); r <= m - 1; r += 2) {
          for (const auto& pk : peaks(p, q, m, r)) {
            if (!all.count(pk.rot2_peak)) {
              o.fail("stray peak at rot1 " + std::to_string(r));
              return;
            }
          }
        }
      }
    }
  }
}

// 5
void closure_and_parity(Outcome1& o) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100000; ++i) {
    const auto t = random_realizable(rng);
    if (!realizable(t).realizable) {
      o.fail("generator produced " + tuple_str(t));
      return;
    }
    if ((t.tb1 + t.rot1) % 2 == 0 || (t.tb2 + t.rot2) % 2 == 0) {
      o.fail("parity at " + tuple_str(t));
      return;
    }
    for (i64 d : {-1, 1}) {
      LinkInvariants s = t;
      s.tb2 -= 1;
      s.rot2 += d;
      if (!realizable(s).realizable) {
        o.fail("closure at " + tuple_str(t));
        return;
      }
    }
  }
}

// 6
void classifier_soundness(Outcome1& o) {
  std::mt19937_64 rng(6);
  std::vector<LinkInvariants> pool;
  // a small family of types makes isotopic pairs frequent
  const std::vector<std::pair<i64, i64>> types{{3, 2}, {-3, 2}, {-1, 3}, {-2, 5}, {1, 0}, {2, 1}};
  while (pool.size() < 10000) {
    const auto [p, q] = types[rng() % types.size()];
    const i64 m = 1 + static_cast<i64>(rng() % 3);
    const i64 r1 = -(m - 1) + 2 * static_cast<i64>(rng() % m);
    const i64 tb2 = (q >= 2 ? max_tb2(p, q, m) : -1) - static_cast<i64>(rng() % 3);
    const i64 r2 = static_cast<i64>(rng() % 9) - 4;
    const LinkInvariants t{p, q, -m, r1, tb2, r2, true};
    if (realizable(t).realizable) pool.push_back(t);
  }
  auto iso = [](const LinkInvariants& a, const LinkInvariants& b) {
    return classify_cable(a, b).outcome == legendrian::Outcome::Isotopic;
  };
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const auto& a = pool[i];
    const auto v = classify_cable(a, a);
    if (v.outcome != legendrian::Outcome::Isotopic) {
      o.fail("not reflexive at " + tuple_str(a));
      return;
    }
    if (a.q >= 2) {
      if (!v.witness || v.witness->entries.empty()) {
        o.fail("missing witness at " + tuple_str(a));
        return;
      }
      const auto& w = *v.witness;
      const LinkInvariants& ref = w.swapped ? LinkInvariants{a.p, a.q, a.tb2, a.rot2, a.tb1, a.rot1, true} : a;
      std::size_t reach = 0;
      for (const auto& pk : peaks(ref.p, ref.q, ref.m(), ref.rot1)) {
        reach += oracle::cone_reaches(w.max_tb2, pk.rot2_peak, ref.rot2, ref.tb2);
      }
      if (reach != w.entries.size()) {
        o.fail("incomplete witness at " + tuple_str(a));
        return;
      }
      for (const auto& e : w.entries) {
        if (e.pos_stabs < 0 || e.neg_stabs < 0 ||
            e.peak.rot2_peak + e.pos_stabs - e.neg_stabs != ref.rot2 ||
            w.max_tb2 - e.pos_stabs - e.neg_stabs != ref.tb2) {
          o.fail("unsound witness at " + tuple_str(a));
          return;
        }
      }
    }
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    const bool ab = iso(a, b), ba = iso(b, a);
    if (ab != ba) {
      o.fail("not symmetric at " + tuple_str(a) + " " + tuple_str(b));
      return;
    }
    if (ab != (a == b)) {
      o.fail("verdict disagrees with invariant equality at " + tuple_str(a) + " " + tuple_str(b));
      return;
    }
    const LinkInvariants& bb = ab ? b : a;
    if (iso(a, bb) && iso(bb, c) && !iso(a, c)) {
      o.fail("not transitive");
      return;
    }
  }
}

// 7
void jet_translation(Outcome1& o) {
  std::mt19937_64 rng(7);
  int done = 0;
  while (done < 10000) {
    const i64 n = static_cast<i64>(rng() % 13) - 6;
    const i64 p = static_cast<i64>(rng() % 19) - 9;
    if (std::gcd(p, n) != 1) continue;
    const i64 tb = static_cast<i64>(rng() % 41) - 20;
    const i64 rot = static_cast<i64>(rng() % 21) - 10;
    const JetKnotInvariants k{n, p, tb, rot};
    const auto s = jet_to_sphere(k);
    const auto back = sphere_to_jet(s);
    const JetKnotInvariants expect = n >= 0 ? k : JetKnotInvariants{-n, -p, tb, -rot};
    if (!(back == expect)) {
      o.fail("round trip at n=" + std::to_string(n) + " p=" + std::to_string(p));
      return;
    }
    const JetKnotInvariants k2{n, p, tb - 2 * static_cast<i64>(rng() % 2), rot + static_cast<i64>(rng() % 3) - 1};
    const auto v1 = classify_jet(k, k2);
    const auto v2 = classify_cable(jet_to_sphere(k), jet_to_sphere(k2), false);
    if (v1.outcome != v2.outcome) {
      o.fail("classify_jet differs from classify_cable");
      return;
    }
    ++done;
  }
  if (jet_max_tb(2, 3) != 5) o.fail("jet_max_tb(2,3)");
  if (jet_max_tb(2, -3) != -2) o.fail("jet_max_tb(2,-3)");
}

// 8
void geometry_identities(Outcome1& o) {
  const auto r = run_geometry_checks(10000, 7, 512);
  for (const auto& c : r.residuals) {
    if (c.samples < 10000 && c.name.find("jacobian") == std::string::npos) o.fail(c.name + " sample count");
    if (c.name.find("jacobian") != std::string::npos) continue;
    if (!(c.max_residual < 1e-10)) {
      std::ostringstream os;
      os << c.name << " residual " << c.max_residual;
      o.fail(os.str());
    }
  }
  if (r.residuals.size() < 5) o.fail("missing identity checks");
}

// 9
void linking_integrals(Outcome1& o) {
  struct Pair {
    std::string name;
    std::function<std::vector<Vec4>(int)> a, b;
  };
  const std::vector<Pair> pairs{
      {"K0/K0'", sample_k0, sample_k0_prime},
      {"fibre (0,0)/(1,0)", [](int s) { return sample_hopf_fibre(0, 0, s); },
       [](int s) { return sample_hopf_fibre(1, 0, s); }},
      {"fibre (0,0)/(0,1)", [](int s) { return sample_hopf_fibre(0, 0, s); },
       [](int s) { return sample_hopf_fibre(0, 1, s); }},
      {"fibre (1,1)/(-2,0.5)", [](int s) { return sample_hopf_fibre(1, 1, s); },
       [](int s) { return sample_hopf_fibre(-2, 0.5, s); }},
  };
  for (const auto& pr : pairs) {
    const auto poles = admissible_poles({pr.a(512), pr.b(512)});
    if (poles.size() < 3) {
      o.fail(pr.name + ": fewer than 3 admissible poles");
      return;
    }
    for (int seg : {512, 1024, 2048}) {
      const auto a = pr.a(seg);
      const auto b = pr.b(seg);
      for (std::size_t i = 0; i < 3; ++i) {
        const auto e = sphere_linking(a, b, poles[i]);
        if (std::abs(e.estimate + 1) > 0.05) {
          std::ostringstream os;
          os << pr.name << " segments " << seg << " pole " << i << ": " << e.estimate;
          o.fail(os.str());
          return;
        }
      }
    }
  }
}

// 10
std::set<i64> brute_sl2(i64 p, i64 q, i64 sl1, i64 sl_min) {
  std::set<i64> out;
  if (sl1 > -1 || sl1 % 2 == 0) return out;
  const i64 m_hi = -sl1 + 2 * (q + std::abs(p)) + 6;
  for (i64 m = 1; m <= m_hi; ++m) {
    const i64 r1 = -m - sl1;
    if (!unknot_realizable(-m, r1)) continue;
    const auto pk = peaks(p, q, m, r1);
    if (pk.empty()) continue;
    const i64 top = max_tb2(p, q, m);
    const i64 lowest_peak = pk.front().rot2_peak;
    const i64 depth = std::max<i64>(0, (top - lowest_peak - sl_min) / 2 + 1);
    for (const auto& [r2, t2] : mountain_range(p, q, m, r1, top - depth).points) out.insert(t2 - r2);
  }
  return out;
}

// roles swapped for p = -1: L1 carries the cone, L2 is the tb = -m unknot
bool brute_swapped(i64 q, i64 sl1, i64 sl2) {
  if (sl2 > -1 || sl2 % 2 == 0) return false;
  const auto s = brute_sl2(-1, q, sl2, sl1);
  return s.count(sl1) > 0;
}

void transverse_projection(Outcome1& o) {
  std::mt19937_64 rng(10);
  int cases = 0;
  while (cases < 1000) {
    const i64 p = static_cast<i64>(rng() % 15) - 7;
    const i64 q = 2 + static_cast<i64>(rng() % 5);
    const i64 m = 1 + static_cast<i64>(rng() % 5);
    if (p == 0 || std::gcd(p, q) != 1) continue;
    const i64 r1 = -(m - 1) + 2 * static_cast<i64>(rng() % m);
    const i64 sl1 = -m - r1;
    const i64 top = max_tb2(p, q, m);
    const i64 sl_min = top - 2 * (std::abs(p) + q) - 8;
    const auto brute = brute_sl2(p, q, sl1, sl_min);
    for (i64 sl2 = sl_min; sl2 <= top + 2 * (std::abs(p) + q); ++sl2) {
      const bool want = brute.count(sl2) > 0 || (p == -1 && brute_swapped(q, sl1, sl2));
      const bool got = transverse_realizable({p, q, sl1, sl2}).realizable;
      if (want != got) {
        o.fail("p=" + std::to_string(p) + " q=" + std::to_string(q) + " sl1=" + std::to_string(sl1) +
               " sl2=" + std::to_string(sl2));
        return;
      }
      if (got && sl2 % 2 == 0) {
        o.fail("even sl realizable");
        return;
      }
    }
    ++cases;
  }
}

}  // namespace

int main() {
  std::size_t constructed = 0;
  bool all = true;
  all &= run(1, "invariant formulas and stabilization tracking", 1.0, invariant_formulas);
  all &= run(2, "construction oracle", 10.0,
             [&](Outcome1& o) { construction_oracle(o, constructed); });
  all &= run(3, "max tb2 reproduction", 1.0, max_tb_reproduction);
  all &= run(4, "peak-set equivalence", 1.0, peak_equivalence);
  all &= run(5, "stabilization closure and parity", 5.0, closure_and_parity);
  all &= run(6, "classifier soundness", 5.0, classifier_soundness);
  all &= run(7, "jet translation", 1.0, jet_translation);
  all &= run(8, "geometry identities", 5.0, geometry_identities);
  all &= run(9, "linking integrals", 30.0, linking_integrals);
  all &= run(10, "transverse projection", 10.0, transverse_projection);
  std::printf("constructions checked: %zu\n", constructed);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
