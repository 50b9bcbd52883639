#pragma once

// Exact combinatorial fronts of Legendrian knots and links.
//
// A front is a set of closed oriented polylines in the (h, v) plane, where h
// is the horizontal (q) coordinate and v the vertical (z) coordinate of the
// contact form dz - p dq. The slope dv/dh of a segment is the p coordinate of
// its Legendrian lift, so:
//
//   * a crossing's over-strand is the strand of smaller slope;
//   * a cusp is a vertex where the horizontal direction of travel reverses;
//   * a cusp is "down" when traversal enters on its upper branch.
//
// With these conventions tb = writhe - cusps/2 and rot = (down - up)/2, the
// 2-cusp unknot has (tb, rot) = (-1, 0), and a zigzag displaced downward is a
// positive stabilization (rot + 1).
//
// On a Cylinder the horizontal coordinate is taken modulo 1 and a component
// closes up after `winding` turns: its last vertex connects to the first
// vertex shifted by (winding, 0).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace legendrian {

using Rational = boost::rational<std::int64_t>;

struct FrontPoint {
  Rational h;
  Rational v;

  friend bool operator==(const FrontPoint&, const FrontPoint&) = default;
};

enum class Ambient { Plane, Cylinder };

struct FrontComponent {
  std::vector<FrontPoint> vertices;
  std::int64_t winding = 0;
};

struct FrontDiagram {
  Ambient ambient = Ambient::Plane;
  std::vector<FrontComponent> components;
};

enum class ViolationKind {
  TooFewVertices,
  NonzeroWindingInPlane,
  NonMonotoneSegment,
  SegmentTooLong,
  DegenerateCusp,
  OddCuspCount,
  MissingCusps,
  NonGenericIncidence,
  TriplePoint,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t component = 0;
  std::size_t segment = 0;
  std::optional<std::size_t> other_component;
  std::optional<std::size_t> other_segment;
  std::string message;
};

/// A transverse double point of the front.
struct CrossingData {
  FrontPoint position;  // h reduced to [0, 1) on a Cylinder
  std::size_t over_component = 0;
  std::size_t over_segment = 0;
  std::size_t under_component = 0;
  std::size_t under_segment = 0;
  int sign = 0;  // +1 / -1, standard right-handed convention
};

struct CuspCounts {
  std::size_t up = 0;
  std::size_t down = 0;

  std::size_t total() const { return up + down; }
};

struct ClassicalInvariants {
  std::int64_t tb = 0;
  std::int64_t rot = 0;

  friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

enum class StabilizationSign { Positive, Negative };

/// Empty iff the diagram is a valid generic front.
std::vector<Violation> validate(const FrontDiagram& d);

/// Throws Error{InvalidDiagram} listing the first violations.
void require_valid(const FrontDiagram& d);

/// All crossings, sorted by (h, v) of position.
std::vector<CrossingData> crossings(const FrontDiagram& d);

CuspCounts cusp_counts(const FrontDiagram& d, std::size_t component);
std::int64_t writhe(const FrontDiagram& d, std::size_t component);

/// (tb, rot) of one component. For Cylinder diagrams these are the values
/// read off the front directly, without any correction for the winding.
ClassicalInvariants classical_invariants(const FrontDiagram& d, std::size_t component);

/// Half the signed count of crossings between two distinct components.
std::int64_t linking_number(const FrontDiagram& d, std::size_t c1, std::size_t c2);

/// Inserts a zigzag into component `c`. When `segment` is empty the segment
/// with the largest horizontal extent is used. The zigzag is placed in the
/// widest crossing-free stretch of the segment and shrunk until it introduces
/// no new crossings.
FrontDiagram stabilize(const FrontDiagram& d, std::size_t c, StabilizationSign sign,
                       std::optional<std::size_t> segment = std::nullopt);

/// Reverses the traversal direction of one component.
FrontDiagram reverse_component(const FrontDiagram& d, std::size_t c);

/// Rigid horizontal translation; on a Cylinder this is a deck rotation.
FrontDiagram translate(const FrontDiagram& d, Rational dh, Rational dv);

/// Segment k of component c runs from vertex k to vertex k+1 (the last one
/// closes up, shifted by the winding on a Cylinder).
std::size_t segment_count(const FrontComponent& c);
std::pair<FrontPoint, FrontPoint> segment_endpoints(const FrontComponent& c, std::size_t k);

}  // namespace legendrian
