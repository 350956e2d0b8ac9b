#pragma once

// Exact closed-form linking number for disjoint geodesic collections on T^3.
//
// For one pair with non-collinear directions u = [g], v = [h], let
// beta = primitive_orthogonal(u, v) and mu = origin(h) - origin(g). The pair
// value is
//
//     det(u, v, beta) * (1 - 2 * frac(mu . beta)) / (2 * |beta|^2),
//
// an exact rational. Collinear pairs contribute 0. The total over all pairs of
// two homologically trivial collections is an integer, the linking number.
// The sign convention is pinned by the Hopf-like calibration configuration
// (two opposite x-fibers against two opposite y-fibers a quarter turn apart
// link +1) and is shared by the spectral series and the surface oracle.

#include <cstddef>
#include <string>
#include <vector>

#include "torus_link/geodesic.hpp"

namespace torus_link {
namespace closed_form {

struct PairTerm {
  std::size_t gamma_index = 0;
  std::size_t upsilon_index = 0;
  LatticeVector beta;         // zero vector for collinear pairs
  Integer det3 = 0;           // det([g], [h], beta); 0 for collinear pairs
  Rational mu_dot_beta_frac;  // frac(mu . beta) in [0,1); 0 for collinear pairs
  Rational value;             // det3 * (1 - 2*frac) / (2*|beta|^2); 0 for collinear pairs
};

struct LinkReport {
  std::vector<PairTerm> terms;
  Rational total;  // exact sum of term values
  bool is_integer = false;
  std::vector<std::string> warnings;
};

// The pair value defined above.
// Throws IntersectingCurves when the directions are non-collinear but
// frac(mu . beta) == 0 (the curves share a leaf and meet; linking undefined).
// Throws SameCircle when the directions are collinear and the images coincide.
Rational pair_term(const Geodesic& g, const Geodesic& h);

// pair_term plus its ingredients, for reports.
PairTerm pair_term_detail(std::size_t gamma_index, std::size_t upsilon_index,
                          const Geodesic& g, const Geodesic& h);

// Sum of pair_term over the product of components. When both collections are
// homologically trivial the total is checked to be an integer; a violation
// would be a library bug and surfaces as ErrorCode::Internal.
// Throws NotHomologicallyTrivial when require_trivial is set and a collection
// has nonzero homology class; propagates IntersectingCurves / SameCircle.
LinkReport linking_number(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                          bool require_trivial = false);

}  // namespace closed_form
}  // namespace torus_link
