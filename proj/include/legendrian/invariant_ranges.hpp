#pragma once

// Realizable classical invariants of oriented (p, q) cable links L1 ⊔ L2,
// where L1 is a Legendrian unknot with tb = -m and L2 sits on the boundary of
// a neighbourhood of L1 in the class p·meridian + q·longitude.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace legendrian {

struct LinkInvariants {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t tb1 = 0;
  std::int64_t rot1 = 0;
  std::int64_t tb2 = 0;
  std::int64_t rot2 = 0;
  bool normalized = false;

  std::int64_t m() const { return -tb1; }

  friend bool operator==(const LinkInvariants&, const LinkInvariants&) = default;
};

enum class CaseKind { C1_q0, C2_q1, C3a_pos, C3b1, C3b2i, C3b2ii, C3b2iii };

std::string to_string(CaseKind kind);

struct CaseLabel {
  CaseKind kind = CaseKind::C1_q0;
  bool swapped = false;

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

struct Coupling {
  std::string param_name;  // "f_{a+1}(mu)" or "f_T(mu)"
  std::int64_t param_value = 0;
  std::int64_t constraint_slack = 0;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

struct Peak {
  std::int64_t rot2_peak = 0;
  std::optional<Coupling> coupling;

  friend bool operator==(const Peak&, const Peak&) = default;
};

struct MountainRange {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t m = 0;
  std::int64_t rot1 = 0;
  std::int64_t floor = 0;
  std::int64_t max_tb2 = 0;
  std::vector<Peak> peaks;
  /// (rot2, tb2), sorted by tb2 descending then rot2 ascending.
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
};

/// gcd with gcd(p, 0) = |p|.
bool coprime(std::int64_t p, std::int64_t q);

/// Reverses L2 when q < 0: (p, q, rot2) change sign, L1 is untouched.
LinkInvariants normalize(const LinkInvariants& raw);

bool unknot_realizable(std::int64_t tb, std::int64_t rot);

CaseKind case_kind(std::int64_t p, std::int64_t q, std::int64_t m);

std::int64_t max_tb2(std::int64_t p, std::int64_t q, std::int64_t m);

/// Sorted by rot2_peak.
std::vector<Peak> peaks(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t rot1);

/// True iff (rot2, tb2) lies in the stabilization cone of the peak.
bool in_cone(std::int64_t max_tb, std::int64_t peak_rot, std::int64_t rot2, std::int64_t tb2);

struct RealizabilityResult {
  bool realizable = false;
  CaseLabel label;
};

/// Requires a normalized tuple. For p = -1 the roles of L1 and L2 may be
/// interchanged unless `allow_swap` is false.
RealizabilityResult realizable(const LinkInvariants& inv, bool allow_swap = true);

MountainRange mountain_range(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t rot1,
                             std::int64_t floor);

/// Gaps between adjacent peak rotation numbers, for C3b2i and C3b2ii.
std::pair<std::int64_t, std::int64_t> neighbor_peak_gaps(std::int64_t p, std::int64_t q);

/// Dot plot with rot2 horizontally and tb2 vertically; peaks are '^'.
std::string ascii_plot(const MountainRange& range);

}  // namespace legendrian
