#pragma once

// Geodesic-flow orbits on the unit tangent bundle of T^2, which trivializes
// as T^3 via (x, y, theta). A T^2 geodesic with direction (a1, a2) lifts to
// the straight geodesic with direction (a1, a2, 0) in the leaf
// theta = atan2(a2, a1). The linking number of two lifted families is the
// angle-weighted count of T^2 intersections:
//
//     sum over intersection points of  sign * (1 - x / pi) / 2,
//
// with x in (0, 2 pi) the oriented angle from the gamma direction to the
// upsilon direction and sign the sign of the 2x2 direction determinant. The
// fiber coordinate theta / 2 pi is irrational in general, so this module runs
// on binary64; trivial collections sum to integers up to ~1e-9, which is the
// cross-check against the exact T^3 routes.

#include <array>
#include <vector>

#include "torus_link/geodesic.hpp"

namespace torus_link {
namespace t2 {

struct T2Geodesic {
  std::array<Integer, 2> direction;  // nonzero
  std::array<Rational, 2> origin;    // reduced mod 1 into [0,1)^2

  // Reduces the origin mod 1. Throws ValidationError on a zero direction.
  T2Geodesic(std::array<Integer, 2> dir, std::array<Rational, 2> orig);
};

struct IntersectionDatum {
  std::array<double, 2> point;  // intersection point in [0,1)^2
  int sign = 0;                 // sign of det2(direction_g, direction_h)
  double angle_x = 0.0;         // oriented angle determination in [0, 2 pi)
};

struct LiftedGeodesic {
  LatticeVector direction;        // (a1, a2, 0)
  std::array<double, 3> origin;   // (x, y, theta / 2 pi), fiber part binary64
};

// The (x, y, theta) lift described above.
LiftedGeodesic lift_to_t3(const T2Geodesic& g);

// The lift with the fiber coordinate rounded to a rational with denominator
// 2^denominator_bits, as an exact T^3 geodesic for the oracle cross-check.
Geodesic rationalized_lift(const T2Geodesic& g, unsigned denominator_bits = 20);

// det2 of the two directions.
Integer direction_det2(const T2Geodesic& g, const T2Geodesic& h);

// All T^2 intersections of two non-collinear geodesics: exactly |det2| points
// (solutions of t a - s b = (origin_h - origin_g) mod Z^2), each carrying the
// common sign and the common angle. Collinear directions yield an empty list,
// except identical circles which throw IdenticalCircles.
std::vector<IntersectionDatum> intersection_data(const T2Geodesic& g, const T2Geodesic& h);

// The angle-weighted intersection sum over all cross pairs. Collinear pairs
// contribute nothing (their lifts are collinear T^3 geodesics). Requires the
// lifted collections to be homologically trivial (componentwise direction
// sums vanish) and the lifts disjoint; positively-collinear identical
// circles lift to the same curve.
// Throws NotHomologicallyTrivial and IntersectingLifts.
double corollary_link(const std::vector<T2Geodesic>& gamma,
                      const std::vector<T2Geodesic>& upsilon);

}  // namespace t2
}  // namespace torus_link
