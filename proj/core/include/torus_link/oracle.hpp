#pragma once

// Combinatorial linking oracle: build an explicit piecewise-linear 2-chain
// bounding Gamma and count signed transversal crossings of Upsilon through it.
// All predicates are exact rational arithmetic; there is no epsilon anywhere.
// Degeneracy (a crossing on a piece boundary, or a curve parallel to a piece
// through its plane) is detected exactly and resolved by moving the cone apex
// along a deterministic schedule, never by numeric fuzz.
//
// Chain construction for a homologically trivial Gamma and apex q: each
// component with canonical lift origin nu in [0,1)^3 and direction d gets the
// strip {nu + s(q - nu) + t d}; partial sums P^i = d^1 + ... + d^i (P^n = 0)
// give cone triangles (q, q + P^{i-1}, q + P^i). Orientation convention: a
// strip's boundary traverses edge_t first, so its crossing frame is
// (edge_t, edge_s) and its T^3 boundary is (component) - (parallel geodesic
// through q); a triangle (a, b, c) has frame (b - a, c - a). The side edges
// of a strip differ by the lattice vector d and cancel, the triangle
// boundaries telescope, and the total boundary is exactly Gamma.
//
// Crossing signs are det(direction, frame_1, frame_2) in the right-handed
// orientation of R^3; the final count carries kCrossingOrientation, fixed
// once against the angle-formula value +1 of the Hopf-like calibration
// configuration (see closed_form.hpp). The opposite torus orientation would
// negate every result.

#include <cstddef>
#include <map>
#include <vector>

#include "torus_link/geodesic.hpp"

namespace torus_link {
namespace oracle {

// Global crossing-count sign, calibrated as described above.
inline constexpr int kCrossingOrientation = -1;

// Number of apexes tried by oracle_link: schedule index 0 plus 8 retries.
inline constexpr int kMaxApexAttempts = 9;

struct Triangle3 {
  RationalVector a, b, c;  // oriented by vertex order, frame (b - a, c - a)

  // Zero area (collinear or repeated vertices). Degenerate pieces stay in the
  // chain for exact boundary bookkeeping but never produce crossings.
  bool is_degenerate() const;
};

struct Strip3 {
  RationalVector corner;
  RationalVector edge_s;  // toward the apex
  RationalVector edge_t;  // the component direction; traversed first

  bool is_degenerate() const;  // edges dependent (includes a zero edge)
};

struct Chain2 {
  std::vector<Strip3> strips;
  std::vector<Triangle3> triangles;
  RationalVector apex;
};

// A closed geodesic circle in T^3 with an integer multiplicity: canonical
// primitive direction plus the two kernel-functional coordinates of its
// coset, which identify the circle exactly.
struct LoopKey {
  LatticeVector direction;  // canonical primitive
  Rational coset1, coset2;  // frac(anchor . k1), frac(anchor . k2)

  friend bool operator==(const LoopKey& a, const LoopKey& b) {
    return a.direction == b.direction && a.coset1 == b.coset1 && a.coset2 == b.coset2;
  }
  friend bool operator<(const LoopKey& a, const LoopKey& b) {
    if (!(a.direction == b.direction)) return a.direction < b.direction;
    if (a.coset1 != b.coset1) return a.coset1 < b.coset1;
    return a.coset2 < b.coset2;
  }
};

// An open (non-lattice-displacement) oriented segment in T^3, anchored by the
// mod-1 start point and sign-normalized displacement.
struct SegmentKey {
  RationalVector start;         // frac of the lifted start
  RationalVector displacement;  // lexicographically positive

  friend bool operator==(const SegmentKey& a, const SegmentKey& b) {
    return a.start == b.start && a.displacement == b.displacement;
  }
  friend bool operator<(const SegmentKey& a, const SegmentKey& b) {
    if (!(a.start == b.start)) return a.start < b.start;
    return a.displacement < b.displacement;
  }
};

// Formal 1-cycle after exact cancellation of lattice-congruent opposite
// pieces. For a valid bounding chain the segment part is empty and the loop
// part equals the multi-geodesic.
struct FormalOneCycle {
  std::map<LoopKey, Integer> loops;
  std::map<SegmentKey, Integer> segments;

  bool is_zero() const { return loops.empty() && segments.empty(); }
  friend bool operator==(const FormalOneCycle& a, const FormalOneCycle& b) {
    return a.loops == b.loops && a.segments == b.segments;
  }
};

// The 1-cycle of a collection (one loop per component, multiplicities folded).
FormalOneCycle cycle_of(const MultiGeodesic& m);

// Strips plus cone triangles as described in the header comment. Degenerate
// pieces are emitted too (their boundaries participate in the bookkeeping and
// cancel exactly). Throws NotHomologicallyTrivial.
Chain2 build_bounding_chain(const MultiGeodesic& gamma, const RationalVector& apex);

// Exact boundary of the chain in T^3, as a canceled formal 1-cycle.
FormalOneCycle chain_boundary(const Chain2& chain);

// Signed transversal crossings of the closed geodesic h through the chain:
// for each non-degenerate piece, every lattice translate of the lifted curve
// segment that can meet the piece's bounding box is solved exactly; interior
// hits with t in [0,1) count sign det(direction, frame). The raw right-handed
// count is returned (no kCrossingOrientation applied).
// Throws Degenerate when a hit lands on a piece boundary or the curve runs
// inside a piece's plane across it.
Integer signed_crossings(const Chain2& chain, const Geodesic& h);

struct OracleResult {
  long long total = 0;   // kCrossingOrientation * sum of raw crossing counts
  RationalVector apex;   // apex that produced the non-degenerate count
  int attempts = 0;      // schedule entries consumed (1 = first apex worked)
};

// Full oracle: checks both collections are homologically trivial and all
// cross pairs disjoint, then walks the deterministic apex schedule
// q_n = (1/p_n, 1/p_{n+1}, 1/p_{n+2}) over consecutive primes until a
// non-degenerate count appears. The result is apex-independent.
// Throws NotHomologicallyTrivial, IntersectingCurves (or SameCircle), and
// PersistentDegeneracy after kMaxApexAttempts failures.
OracleResult oracle_link_report(const MultiGeodesic& gamma, const MultiGeodesic& upsilon);

long long oracle_link(const MultiGeodesic& gamma, const MultiGeodesic& upsilon);

// Schedule apex number n (0-based): (1/p_n, 1/p_{n+1}, 1/p_{n+2}).
RationalVector schedule_apex(int n);

}  // namespace oracle
}  // namespace torus_link
