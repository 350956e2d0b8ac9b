#pragma once

// Integer lattice geometry on Z^3 and exact rational 3-vectors.
//
// LatticeVector carries homology classes of geodesics and Fourier frequencies;
// RationalVector carries origins, apexes and the vertices of surface pieces.
// primitive_orthogonal builds the minimal integer generator of the orthogonal
// line of a non-collinear pair, kernel_basis builds an explicit basis of the
// rank-2 orthogonal lattice of a single direction.

#include <array>
#include <cstddef>

#include "torus_link/errors.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {

struct LatticeVector {
  Integer x{0}, y{0}, z{0};

  LatticeVector() = default;
  LatticeVector(Integer px, Integer py, Integer pz)
      : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }

  const Integer& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Integer& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  // Lexicographic order, used by ordered containers and deterministic sweeps.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend LatticeVector operator-(const LatticeVector& a) { return {-a.x, -a.y, -a.z}; }
  friend LatticeVector operator*(const Integer& c, const LatticeVector& a) {
    return {c * a.x, c * a.y, c * a.z};
  }
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector cross(const LatticeVector& a, const LatticeVector& b);
// det(a, b, c) with column (or row, equivalently) vectors; the sign follows
// the right-handed orientation of R^3 used throughout.
Integer det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c);
Integer norm2(const LatticeVector& a);

// Positive gcd of the absolute values of the nonzero components; 0 for the
// zero vector.
Integer vector_gcd(const LatticeVector& a);

// a / gcd(a), keeping orientation. Requires a nonzero.
LatticeVector primitive(const LatticeVector& a);

// True iff the first nonzero component is positive. Requires a nonzero.
bool is_canonical(const LatticeVector& a);

// a or -a, whichever is canonical. Requires a nonzero.
LatticeVector canonical(const LatticeVector& a);

// The unique integer vector beta with: beta integral and primitive, beta
// orthogonal to u and v, det(u, v, beta) > 0, and minimal Euclidean norm
// among integer vectors with those properties. Equals (u x v)/gcd(u x v).
// Throws Collinear when u, v are linearly dependent.
LatticeVector primitive_orthogonal(const LatticeVector& u, const LatticeVector& v);

// Basis (k1, k2) of the rank-2 lattice d_perp = { k in Z^3 : k . d = 0 } for a
// nonzero d (the primitive part of d is used, which spans the same plane).
// The basis is certified by cross(k1, k2) == primitive(d).
std::array<LatticeVector, 2> kernel_basis(const LatticeVector& d);

struct RationalVector {
  Rational x{0}, y{0}, z{0};

  RationalVector() = default;
  RationalVector(Rational px, Rational py, Rational pz)
      : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

  const Rational& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool is_zero() const { return x == 0 && y == 0 && z == 0; }

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const RationalVector& a, const RationalVector& b) { return !(a == b); }
  friend bool operator<(const RationalVector& a, const RationalVector& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }

  friend RationalVector operator+(const RationalVector& a, const RationalVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend RationalVector operator-(const RationalVector& a, const RationalVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend RationalVector operator-(const RationalVector& a) { return {-a.x, -a.y, -a.z}; }
  friend RationalVector operator*(const Rational& c, const RationalVector& a) {
    return {c * a.x, c * a.y, c * a.z};
  }
};

RationalVector to_rational(const LatticeVector& a);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);
RationalVector cross(const RationalVector& a, const RationalVector& b);
Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c);

// Componentwise mod-1 reduction into [0,1)^3.
RationalVector frac(const RationalVector& a);

}  // namespace torus_link
