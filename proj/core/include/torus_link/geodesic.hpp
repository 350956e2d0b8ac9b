#pragma once

// Closed geodesics of the flat torus T^3 = R^3 / Z^3 and finite collections of
// them. A geodesic is the projection of t -> origin + t * direction, t in
// [0,1]; the integer direction vector is its homology class. Disjointness and
// homological triviality are exact integer/rational predicates.

#include <string>
#include <vector>

#include "torus_link/lattice.hpp"

namespace torus_link {

struct Geodesic {
  LatticeVector direction;  // nonzero; equals the homology class
  RationalVector origin;    // reduced mod 1 into [0,1)^3

  // Reduces the origin mod 1. Throws ValidationError on a zero direction.
  Geodesic(LatticeVector dir, RationalVector orig);
};

// True iff gcd of the direction components is 1. Non-primitive directions are
// legal (the parametrization covers a circle with multiplicity) but reports
// attach a warning.
bool has_primitive_direction(const Geodesic& g);

struct MultiGeodesic {
  std::vector<Geodesic> components;

  // Throws ValidationError when the list is empty.
  explicit MultiGeodesic(std::vector<Geodesic> comps);
};

// Componentwise sum of the direction vectors.
LatticeVector homology_class(const MultiGeodesic& m);

// True iff homology_class(m) == 0. Equivalent to m bounding a 2-chain in T^3.
bool is_homologically_trivial(const MultiGeodesic& m);

// True iff the two component images are the same circle: collinear directions
// and an origin offset lying on the common line mod Z^3 (decided with the
// kernel_basis functionals).
bool same_circle(const Geodesic& g, const Geodesic& h);

// Exact decision of image disjointness in T^3.
// Non-collinear directions: disjoint iff frac((origin(g) - origin(h)) . beta)
// is nonzero, where beta = primitive_orthogonal of the directions.
// Collinear directions: disjoint iff not same_circle.
bool are_disjoint(const Geodesic& g, const Geodesic& h);

// True iff every component of gamma is disjoint from every component of
// upsilon. Intersections inside one collection are not checked.
bool are_disjoint(const MultiGeodesic& gamma, const MultiGeodesic& upsilon);

// Origins shifted by tau and reduced mod 1; directions unchanged. Acts by an
// isometry of the flat torus, so every linking quantity is invariant.
Geodesic translate(const Geodesic& g, const RationalVector& tau);
MultiGeodesic translate(const MultiGeodesic& m, const RationalVector& tau);

// Warnings shared by the report-producing front ends: non-primitive component
// directions and intersections inside a single collection (both legal).
std::vector<std::string> collection_warnings(const MultiGeodesic& m, const std::string& label);

}  // namespace torus_link
