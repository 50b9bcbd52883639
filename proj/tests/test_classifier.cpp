#include <numeric>
#include <random>

#include "doctest.h"
#include "legendrian/classifier.hpp"
#include "legendrian/error.hpp"

using namespace legendrian;

namespace {

LinkInvariants T(std::int64_t p, std::int64_t q, std::int64_t tb1, std::int64_t rot1,
                 std::int64_t tb2, std::int64_t rot2) {
  return {p, q, tb1, rot1, tb2, rot2, false};
}

}  // namespace

TEST_CASE("classify_cable examples") {
  CHECK(classify_cable(T(3, 2, -1, 0, 1, 0), T(3, 2, -1, 0, 1, 0)).outcome == Outcome::Isotopic);
  CHECK(classify_cable(T(-3, 2, -1, 0, -6, 1), T(-3, 2, -1, 0, -6, -1)).outcome ==
        Outcome::NotIsotopic);
  CHECK(classify_cable(T(3, 2, -1, 0, 2, 1), T(3, 2, -1, 0, 2, 1)).outcome ==
        Outcome::NotRealizable);
  CHECK(classify_cable(T(3, 2, -1, 0, 1, 0), T(5, 2, -1, 0, 3, 0)).outcome ==
        Outcome::NotIsotopic);
  // q = 1 links only remember q
  CHECK(classify_cable(T(2, 1, -1, 0, -1, 0), T(7, 1, -1, 0, -1, 0)).outcome ==
        Outcome::Isotopic);
  // normalization happens inside
  CHECK(classify_cable(T(3, -2, -1, 0, 1, 0), T(-3, 2, -1, 0, 1, 0)).outcome ==
        Outcome::NotRealizable);
  CHECK(classify_cable(T(-3, -2, -1, 0, -6, 1), T(3, 2, -1, 0, -6, -1)).outcome ==
        Outcome::Isotopic);
  CHECK(classify_cable(T(1, -2, -1, 0, -3, 0), T(-1, 2, -1, 0, -3, 0)).outcome ==
        Outcome::Isotopic);
  CHECK_THROWS_AS(classify_cable(T(2, 4, -1, 0, 0, 0), T(2, 4, -1, 0, 0, 0)), Error);
}

TEST_CASE("destabilization witness examples") {
  const auto w = destabilization_witness({-3, 2, -1, 0, -7, 0, true});
  REQUIRE(w.entries.size() == 2);
  CHECK(w.entries[0].peak.rot2_peak == -1);
  CHECK(w.entries[0].pos_stabs == 1);
  CHECK(w.entries[0].neg_stabs == 0);
  CHECK(w.entries[1].peak.rot2_peak == 1);
  CHECK(w.entries[1].pos_stabs == 0);
  CHECK(w.entries[1].neg_stabs == 1);

  const auto top = destabilization_witness({3, 2, -1, 0, 1, 0, true});
  REQUIRE(top.entries.size() == 1);
  CHECK(top.entries[0].pos_stabs == 0);
  CHECK(top.entries[0].neg_stabs == 0);

  const auto down = destabilization_witness({3, 2, -1, 0, -1, 0, true});
  REQUIRE(down.entries.size() == 1);
  CHECK(down.entries[0].pos_stabs == 1);
  CHECK(down.entries[0].neg_stabs == 1);

  CHECK_THROWS_AS(destabilization_witness({3, 2, -1, 0, 2, 1, true}), Error);
  CHECK_THROWS_AS(destabilization_witness({1, 1, -1, 0, -1, 0, true}), Error);
}

TEST_CASE("peak identification") {
  CHECK(peak_identification(-3, 2, 1, 0, 1, -1) == std::optional<std::int64_t>{1});
  CHECK(peak_identification(-3, 2, 1, 0, 1, 1) == std::optional<std::int64_t>{0});
  CHECK_FALSE(peak_identification(-5, 2, 1, 0, 3, -1).has_value());
  CHECK(peak_identification(-5, 2, 1, 0, 3, 1) == std::optional<std::int64_t>{1});
  CHECK_THROWS_AS(peak_identification(3, 2, 1, 0, 0, 0), Error);
}

TEST_CASE("witness soundness and completeness on random tuples") {
  std::mt19937_64 rng(5);
  int tested = 0;
  while (tested < 2000) {
    const std::int64_t p = static_cast<std::int64_t>(rng() % 17) - 8;
    const std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 7);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 6);
    if (p == 0 || std::gcd(p, q) != 1) continue;
    const std::int64_t r1 = -(m - 1) + 2 * static_cast<std::int64_t>(rng() % m);
    const auto pk = peaks(p, q, m, r1);
    if (pk.empty()) continue;
    const std::int64_t top = max_tb2(p, q, m);
    const std::int64_t s = static_cast<std::int64_t>(rng() % 8);
    const std::int64_t r2 = pk[rng() % pk.size()].rot2_peak - s + 2 * static_cast<std::int64_t>(rng() % (s + 1));
    const LinkInvariants t{p, q, -m, r1, top - s, r2, true};
    const auto w = destabilization_witness(t, false);
    REQUIRE_FALSE(w.entries.empty());
    std::size_t reaching = 0;
    for (const auto& k : pk) {
      const std::int64_t d = r2 - k.rot2_peak;
      reaching += (d <= s && -d <= s && (s - d) % 2 == 0);
    }
    CHECK(w.entries.size() == reaching);
    for (const auto& e : w.entries) {
      CHECK(e.peak.rot2_peak + e.pos_stabs - e.neg_stabs == r2);
      CHECK(w.max_tb2 - e.pos_stabs - e.neg_stabs == t.tb2);
    }
    const auto v = classify_cable(t, {p, q, -m, -r1, top - s, -r2, true});
    CHECK(v.outcome == (r1 == 0 && r2 == 0 ? Outcome::Isotopic : Outcome::NotIsotopic));
    ++tested;
  }
}
