#pragma once

// Exact exterior calculus on the flat T^3 for trigonometric-polynomial forms.
//
// Forms are finite sums of terms  c * f(2 pi k . x) * dx_A  with c an exact
// scalar carrying powers of 2 pi symbolically, f in {cos, sin}, k an integer
// frequency and A an increasing multi-index. d, star, the codifferential and
// the Laplacian act exactly on this class, so the spectral basis facts
// (eigenvalue (2 pi |k|)^2, unit norms, adjointness of d and delta) are
// checkable with zero tolerance.
//
// Conventions: orientation dx1 ^ dx2 ^ dx3, star(dx_i) = dx_j ^ dx_t for
// (i, j, t) a circular permutation, delta = (-1)^(p(k+1)+1) star d star with
// p = 3 (so delta = -star d star on 1-forms and 3-forms, +star d star on
// 2-forms).

#include <cstdint>
#include <map>

#include "torus_link/lattice.hpp"

namespace torus_link {
namespace hodge {

// Exact scalar of the form  sum_e  q_e * (2 pi)^e  (finite, exact rational
// coefficients). Single-term values are the common case; sums across modes
// (inner products of mixed forms) may populate several powers.
class TrigScalar {
 public:
  TrigScalar() = default;
  explicit TrigScalar(Rational coeff, int two_pi_power = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() <= 1; }
  // Monomial accessors; a zero scalar reads as 0 * (2 pi)^0. Throw Internal
  // when the scalar has terms at several powers.
  Rational coeff() const;
  int two_pi_power() const;

  const std::map<int, Rational>& terms() const { return terms_; }

  double to_double() const;

  TrigScalar operator-() const;
  friend TrigScalar operator+(const TrigScalar& a, const TrigScalar& b);
  friend TrigScalar operator-(const TrigScalar& a, const TrigScalar& b);
  friend TrigScalar operator*(const TrigScalar& a, const TrigScalar& b);
  friend bool operator==(const TrigScalar& a, const TrigScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TrigScalar& a, const TrigScalar& b) { return !(a == b); }

 private:
  void add_term(int power, const Rational& coeff);
  std::map<int, Rational> terms_;  // power of 2 pi -> coefficient, no zeros
};

enum class Phase : std::uint8_t { cos = 0, sin = 1 };

// Basis covectors as a bitmask over {dx1, dx2, dx3}; bit i set means dx_(i+1)
// is a factor, factors in increasing order. popcount == form degree.
using AxisMask = std::uint8_t;

struct ModeKey {
  LatticeVector k;  // canonical: first nonzero component positive; 0 only with cos
  Phase phase = Phase::cos;
  AxisMask axes = 0;

  friend bool operator==(const ModeKey& a, const ModeKey& b) {
    return a.k == b.k && a.phase == b.phase && a.axes == b.axes;
  }
  friend bool operator<(const ModeKey& a, const ModeKey& b) {
    if (!(a.k == b.k)) return a.k < b.k;
    if (a.phase != b.phase) return a.phase < b.phase;
    return a.axes < b.axes;
  }
};

class TrigPolyForm {
 public:
  explicit TrigPolyForm(int degree);

  int degree() const { return degree_; }
  const std::map<ModeKey, TrigScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * f(2 pi k . x) * dx_axes, canonicalizing the frequency first:
  // cos(-theta) = cos(theta), sin(-theta) = -sin(theta), and sin with k = 0
  // vanishes. Throws Internal when popcount(axes) != degree.
  void add_term(const LatticeVector& k, Phase phase, AxisMask axes, const TrigScalar& c);

  TrigPolyForm operator-() const;
  friend TrigPolyForm operator+(const TrigPolyForm& a, const TrigPolyForm& b);
  friend TrigPolyForm operator-(const TrigPolyForm& a, const TrigPolyForm& b);
  friend TrigPolyForm operator*(const TrigScalar& c, const TrigPolyForm& a);
  friend bool operator==(const TrigPolyForm& a, const TrigPolyForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TrigPolyForm& a, const TrigPolyForm& b) { return !(a == b); }

 private:
  int degree_;
  std::map<ModeKey, TrigScalar> terms_;
};

// Exterior differential; degree rises by one, each mode is differentiated
// exactly (cos <-> sin with a factor of +-(2 pi) k_i). Throws DegreeOverflow
// on 3-forms.
TrigPolyForm exterior_d(const TrigPolyForm& f);

// Hodge star for the flat metric and orientation dx1 ^ dx2 ^ dx3; degree
// k -> 3 - k, coefficients unchanged up to the permutation sign. An
// involution on every degree (p = 3 makes (-1)^{k(3-k)} = +1).
TrigPolyForm hodge_star(const TrigPolyForm& f);

// delta = (-1)^(p(k+1)+1) star d star, the formal adjoint of d for the L^2
// pairing below. Throws DegreeUnderflow on 0-forms.
TrigPolyForm codifferential(const TrigPolyForm& f);

// Hodge Laplacian d delta + delta d; multiplies each Fourier mode by
// (2 pi)^2 |k|^2.
TrigPolyForm laplacian(const TrigPolyForm& f);

// L^2 pairing <a, b> = integral over T^3 of a ^ star b, evaluated exactly by
// Fourier orthogonality (cos^2 and sin^2 of a nonzero mode integrate to 1/2,
// everything mixed to 0, constants to 1). Throws DegreeMismatch.
TrigScalar inner_product(const TrigPolyForm& a, const TrigPolyForm& b);

// The 1-form f(2 pi k . x) * sum_i covector_i dx_i. The sqrt(2) that
// normalizes it to unit L^2 norm is irrational and is left to callers (norm
// checks multiply the pairing by 2). Throws ZeroFrequency when k = 0.
TrigPolyForm eigenform(const LatticeVector& k, const std::array<Rational, 3>& covector,
                       Phase phase);

}  // namespace hodge
}  // namespace torus_link
