#pragma once

// Explicit fronts realizing prescribed classical invariants. Every function
// re-checks its output with the front_diagram invariants before returning.

#include <cstddef>
#include <cstdint>

#include "legendrian/front_diagram.hpp"
#include "legendrian/invariant_ranges.hpp"

namespace legendrian {

enum class ConstructionFamily { Unknot, PositiveCable, MinusOneCable };

std::string to_string(ConstructionFamily family);

struct ConstructionSpec {
  LinkInvariants target;
  ConstructionFamily family = ConstructionFamily::Unknot;
};

/// Two-cusp lens with its zigzags on the top strand. `min_width` widens the
/// lens so that later templates have room on the bottom strand.
FrontDiagram unknot_front(std::int64_t tb, std::int64_t rot, std::int64_t min_width = 0);

/// One-crossing, two-cusp unknot with (tb, rot) = (-2, -1).
FrontDiagram figure_eight_unknot_front();

/// Appends a vertically shifted copy of component c (reversed if asked).
FrontDiagram legendrian_pushoff(const FrontDiagram& d, std::size_t c, bool reverse);

/// Adds one loop of c_target around c_around, where the two run as
/// oppositely oriented horizontal parallels (the push-off template).
FrontDiagram add_meridional_loop(const FrontDiagram& d, std::size_t c_around,
                                 std::size_t c_target);

/// Component 0 is the meridional unknot L1 with (-m, rot1), component 1 the
/// positive (p, q) torus knot at the peak (pq - p - q, 0).
FrontDiagram positive_cable_front(std::int64_t p, std::int64_t q, std::int64_t m,
                                  std::int64_t rot1);

/// Realizes a (-1, q) cable tuple; component 0 is L1.
FrontDiagram minus_one_cable_front(std::int64_t q, std::int64_t m, std::int64_t rot1,
                                   std::int64_t tb2, std::int64_t rot2);

ConstructionFamily family_for(const LinkInvariants& target);

/// Any realizable tuple with p >= -1 (or q <= 1). Components are [L1, L2].
FrontDiagram construct(const LinkInvariants& target);
FrontDiagram construct(const ConstructionSpec& spec);

}  // namespace legendrian
