#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legendrian/invariant_ranges.hpp"

namespace legendrian {

struct WitnessEntry {
  Peak peak;
  std::int64_t pos_stabs = 0;
  std::int64_t neg_stabs = 0;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

/// Every peak of L2's mountain range whose stabilization cone contains the
/// tuple. When `swapped` is set the cones are those of the tuple with the
/// roles of L1 and L2 interchanged.
struct DestabilizationWitness {
  std::int64_t max_tb2 = 0;
  bool swapped = false;
  std::vector<WitnessEntry> entries;

  friend bool operator==(const DestabilizationWitness&, const DestabilizationWitness&) = default;
};

enum class Outcome { Isotopic, NotIsotopic, NotRealizable, OutOfScope };

std::string to_string(Outcome outcome);

struct Verdict {
  Outcome outcome = Outcome::OutOfScope;
  std::string reason;
  std::optional<DestabilizationWitness> witness;
};

/// Oriented link types agree. q comes from the linking number; p only
/// distinguishes link types once q >= 2.
bool same_link_type(const LinkInvariants& a, const LinkInvariants& b);

/// Both tuples are normalized first.
Verdict classify_cable(const LinkInvariants& a, const LinkInvariants& b, bool allow_swap = true);

/// Requires a realizable tuple with q >= 2.
DestabilizationWitness destabilization_witness(const LinkInvariants& inv, bool allow_swap = true);

/// Depth at which the stabilization cones of two peaks first meet, when the
/// peaks are neighbours; none when they merge only via intermediate peaks.
std::optional<std::int64_t> peak_identification(std::int64_t p, std::int64_t q, std::int64_t m,
                                                 std::int64_t rot1, std::int64_t peak_a,
                                                 std::int64_t peak_b);

}  // namespace legendrian
