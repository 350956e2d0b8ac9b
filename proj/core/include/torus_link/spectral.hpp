#pragma once

// Heat-regularized spectral series for the linking number.
//
// The eigenmode route: for every nonzero frequency k, covector basis element
// and phase, pair the integral of the eigenform over Gamma with the integral
// of star(d eigenform)/lambda over Upsilon, damped by exp(-lambda t) with
// lambda = (2 pi |k|)^2. The per-pair route reduces that double sum, for one
// non-collinear pair with normal beta, to the heat-damped sawtooth series in
// frac(mu . beta) along the multiples of beta.
//
// Orientation: the torus carries the volume form dx1 ^ dx2 ^ dx3 and the sign
// convention of the closed form (Hopf-like calibration pair links +1). The
// bare eigenmode pairing converges to the opposite sign; every series here
// therefore applies kSeriesOrientation once so that its limit equals the
// closed-form value. Flipping the torus orientation would negate everything.
//
// Everything in this module is binary64; the exact backend only feeds it
// phases (as exact mod-1 reductions) and integer determinants at the
// boundary. Sums are compensated (Kahan-Babuska-Neumaier) and run in a fixed
// ascending order, so results are deterministic across runs.

#include <optional>
#include <vector>

#include "torus_link/geodesic.hpp"
#include "torus_link/hodge.hpp"

namespace torus_link {
namespace spectral {

// Sign normalization of the series relative to the bare eigenmode pairing.
inline constexpr double kSeriesOrientation = -1.0;

// Heat weights below this threshold are dropped by the auto cutoffs.
inline constexpr double kWeightFloor = 1e-16;

struct SpectralParams {
  double t = 1e-4;            // heat time, > 0
  std::optional<long> kmax;   // per-pair series length; nullopt = auto:
                              // smallest K with exp(-(2 pi |beta|)^2 K^2 t) < kWeightFloor
  long frequency_cutoff = 0;  // general series box |k|_inf <= K; 0 = auto
                              // (cover every mode with heat weight >= kWeightFloor)
};

struct SpectralTermRecord {
  LatticeVector k;
  double gamma_integral = 0.0;    // integral of the eigenform over gamma
  double upsilon_integral = 0.0;  // integral of star(d eigenform)/lambda over upsilon
  double weight = 1.0;            // heat factor exp(-lambda t); 1 when undamped

  double contribution() const { return weight * gamma_integral * upsilon_integral; }
};

// Smallest K >= 1 with exp(-(2 pi)^2 beta_norm2 K^2 t) < kWeightFloor.
long auto_kmax(double t, const Integer& beta_norm2);

// Integral over the closed geodesic g of a 1-form, per mode: modes with
// k . [g] != 0 integrate to zero; a mode with k . [g] = 0 has constant
// integrand and contributes f(2 pi k . origin) * (covector . [g]), with the
// phase reduced exactly mod 1 before conversion to binary64.
// Throws DegreeMismatch unless the form has degree 1.
double line_integral(const hodge::TrigPolyForm& form, const Geodesic& g);

// The undamped mode k = n * beta of the reduced pair series, as the two curve
// integrals: gamma_integral = sqrt(2) |[g]| and upsilon_integral =
// 2 sqrt(2) pi det([g], [h], n beta) sin(2 pi n frac(mu . beta)) / (|[g]| lambda),
// already carrying kSeriesOrientation so the contributions sum to the
// closed-form pair value. Throws Collinear; requires n >= 1.
SpectralTermRecord curve_pairing_terms(const Geodesic& g, const Geodesic& h, long n);

// Heat-damped reduced series of one pair:
//   sum_{n=1..kmax} exp(-(2 pi |beta|)^2 n^2 t) det([g],[h],beta)
//                   sin(2 pi n frac(mu . beta)) / (pi n |beta|^2),
// normalized by kSeriesOrientation to converge to pair_term as t -> 0.
// Collinear pairs return exactly 0.0 with no summation.
double pair_series(const Geodesic& g, const Geodesic& h, const SpectralParams& params);

// The eigenmode double sum over the spectral basis: frequencies in the cutoff
// box (excluding k = 0, the harmonic modes), three basis covectors, both
// phases. A mode contributes only when it annihilates the direction of some
// component on each side, so the sum runs over that exact support: the
// beta-lines of non-collinear cross pairs and the orthogonal-lattice planes
// of collinear cross pairs. With frequency_cutoff = 0 the box is chosen to
// cover every mode whose heat weight clears kWeightFloor.
double general_series(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                      const SpectralParams& params);

// Pointwise limit of the sawtooth series on (0,1): (pi/2)(1 - 2x).
// Throws DomainError outside the open interval (the endpoint value 0 is a
// Fourier artifact, not a linking value).
double sawtooth_limit(double x);

// Partial sum  sum_{k=1..K} exp(-a t k^2) sin(2 pi k x) / k  with compensated
// accumulation; t = 0 gives the raw Fourier partial sum.
double sawtooth_partial(double x, long K, double t, double a);

// Smallest K >= 1 with exp(-a t K^2) < kWeightFloor (for the damped sawtooth).
long sawtooth_auto_k(double t, double a);

}  // namespace spectral
}  // namespace torus_link
