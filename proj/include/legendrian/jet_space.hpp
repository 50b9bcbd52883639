#pragma once

// Legendrian torus knots in J^1(S^1) via their images in S^3 minus the
// tb = -1 unknot K0, and transverse cable links via self-linking numbers.
//
// Transverse push-offs are positive: sl = tb - rot.

#include <cstdint>
#include <optional>
#include <vector>

#include "legendrian/classifier.hpp"
#include "legendrian/invariant_ranges.hpp"

namespace legendrian {

struct JetKnotInvariants {
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t tb = 0;
  std::int64_t rot = 0;

  friend bool operator==(const JetKnotInvariants&, const JetKnotInvariants&) = default;
};

/// (p, n, -1, 0, tb - n^2, rot), normalized.
LinkInvariants jet_to_sphere(const JetKnotInvariants& k);

/// Inverse of jet_to_sphere on tuples with (tb1, rot1) = (-1, 0). The result
/// has n >= 0.
JetKnotInvariants sphere_to_jet(const LinkInvariants& l);

/// Knot types compared after simultaneous sign normalization of (p, n);
/// L1 = K0 is never swapped with the knot.
Verdict classify_jet(const JetKnotInvariants& a, const JetKnotInvariants& b);

std::int64_t jet_max_tb(std::int64_t n, std::int64_t p);

/// Mountain range of the knot, shifted back to J^1(S^1) values (tb + n^2).
MountainRange jet_range(std::int64_t n, std::int64_t p, std::int64_t floor);

std::int64_t transverse_from_legendrian(std::int64_t tb, std::int64_t rot);

struct TransverseInvariants {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::optional<std::int64_t> sl1;  // absent for knots in J^1(S^1)
  std::int64_t sl2 = 0;

  friend bool operator==(const TransverseInvariants&, const TransverseInvariants&) = default;
};

struct TransverseWitness {
  bool realizable = false;
  /// A Legendrian tuple whose push-off has the given self-linking numbers,
  /// chosen with the largest tb2 available.
  std::optional<LinkInvariants> legendrian;
};

/// Decides realizability in closed form. With a floor, raises FloorTooShallow
/// when every Legendrian witness has tb2 below it. In the jet case (sl1
/// absent) the J^1(S^1) value sl2 is translated through tb -> tb - n^2.
TransverseWitness transverse_realizable(const TransverseInvariants& t,
                                        std::optional<std::int64_t> floor = std::nullopt);

Verdict transverse_classify(const TransverseInvariants& a, const TransverseInvariants& b,
                            std::optional<std::int64_t> floor = std::nullopt);

/// Projection (tb2, rot2) -> tb2 - rot2 of mountain_range(p, q, m, rot1, floor),
/// sorted descending without duplicates.
std::vector<std::int64_t> transverse_range(std::int64_t p, std::int64_t q, std::int64_t m,
                                           std::int64_t rot1, std::int64_t floor);

/// Default search floor: max_tb2 - 4 (peak spread + 2).
std::int64_t default_transverse_floor(std::int64_t p, std::int64_t q, std::int64_t m,
                                      std::int64_t rot1);

}  // namespace legendrian
