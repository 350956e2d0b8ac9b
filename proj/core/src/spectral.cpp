#include "torus_link/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {
namespace spectral {

namespace {

// Kahan-Babuska-Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double next = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - next) + x;
    } else {
      compensation_ += (x - next) + sum_;
    }
    sum_ = next;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kFourPiSquared = kTwoPi * kTwoPi;

void require_positive_time(double t) {
  if (!(t > 0.0)) {
    throw Error(ErrorCode::DomainError, "heat time t must be positive");
  }
}

// Smallest K >= 1 with exp(-decay * K^2) < kWeightFloor, i.e. the first index
// whose heat weight drops below the floor.
long smallest_cutoff(double decay) {
  if (!(decay > 0.0)) {
    throw Error(ErrorCode::DomainError, "heat decay rate must be positive");
  }
  const double threshold = -std::log(kWeightFloor);
  const double k_real = std::sqrt(threshold / decay);
  if (k_real >= 5e7) {
    throw Error(ErrorCode::DomainError,
                "auto series cutoff exceeds 5e7 terms; increase t or set kmax");
  }
  const long k = static_cast<long>(std::floor(k_real)) + 1;
  return k < 1 ? 1 : k;
}

double phase_of(const LatticeVector& k, const RationalVector& origin) {
  return kTwoPi * to_double(frac(dot(k, origin)));
}

Integer linf_norm(const LatticeVector& k) {
  Integer m = abs(k.x);
  if (abs(k.y) > m) m = abs(k.y);
  if (abs(k.z) > m) m = abs(k.z);
  return m;
}

}  // namespace

long auto_kmax(double t, const Integer& beta_norm2) {
  require_positive_time(t);
  if (beta_norm2 <= 0) {
    throw Error(ErrorCode::DomainError, "beta_norm2 must be positive");
  }
  return smallest_cutoff(kFourPiSquared * to_double(beta_norm2) * t);
}

long sawtooth_auto_k(double t, double a) {
  require_positive_time(t);
  return smallest_cutoff(a * t);
}

double sawtooth_partial(double x, long K, double t, double a) {
  if (K < 0) {
    throw Error(ErrorCode::DomainError, "partial sum length must be nonnegative");
  }
  CompensatedSum sum;
  for (long n = 1; n <= K; ++n) {
    const double nn = static_cast<double>(n);
    const double weight = t == 0.0 ? 1.0 : std::exp(-a * t * nn * nn);
    sum.add(weight * std::sin(kTwoPi * nn * x) / nn);
  }
  return sum.value();
}

double sawtooth_limit(double x) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw Error(ErrorCode::DomainError, "sawtooth limit is defined on the open interval (0,1)");
  }
  return 0.5 * M_PI * (1.0 - 2.0 * x);
}

double line_integral(const hodge::TrigPolyForm& form, const Geodesic& g) {
  if (form.degree() != 1) {
    throw Error(ErrorCode::DegreeMismatch, "line integrals are defined for 1-forms");
  }
  // Pull back along t -> origin + t * direction: dx_i becomes direction_i dt
  // and the mode phase becomes 2 pi (k . origin + t k . direction). Over a
  // full period only k . direction = 0 survives, with constant integrand.
  // The axis components of one (frequency, phase) mode are paired with the
  // direction exactly first, so an exactly orthogonal covector contributes an
  // exact zero instead of floating cancellation noise.
  std::map<std::pair<LatticeVector, hodge::Phase>, hodge::TrigScalar> paired;
  for (const auto& [key, c] : form.terms()) {
    if (dot(key.k, g.direction) != 0) continue;
    const int axis = std::countr_zero(static_cast<unsigned>(key.axes));
    auto& slot = paired[{key.k, key.phase}];
    slot = slot + c * hodge::TrigScalar(Rational(g.direction[axis]));
  }
  CompensatedSum sum;
  for (const auto& [mode, pairing] : paired) {
    if (pairing.is_zero()) continue;
    const double theta = phase_of(mode.first, g.origin);
    const double trig = mode.second == hodge::Phase::cos ? std::cos(theta) : std::sin(theta);
    sum.add(pairing.to_double() * trig);
  }
  return sum.value();
}

SpectralTermRecord curve_pairing_terms(const Geodesic& g, const Geodesic& h, long n) {
  if (n < 1) {
    throw Error(ErrorCode::DomainError, "mode index n must be >= 1");
  }
  const LatticeVector beta = primitive_orthogonal(g.direction, h.direction);

  SpectralTermRecord rec;
  rec.k = LatticeVector{beta.x * n, beta.y * n, beta.z * n};
  rec.weight = 1.0;

  // Phase of the n-th mode at the separation of the two origins, reduced
  // exactly mod 1 before leaving rational arithmetic.
  const Rational x = frac(dot(rec.k, h.origin - g.origin));

  const double u_norm = std::sqrt(to_double(norm2(g.direction)));
  const double lambda = kFourPiSquared * to_double(norm2(rec.k));
  const double det = to_double(det3(g.direction, h.direction, rec.k));

  // gamma side: the adapted covector points along [g], so the integral of the
  // sqrt(2)-normalized eigenform over g is sqrt(2) |[g]| (phase absorbed by a
  // translation, which changes no linking quantity).
  rec.gamma_integral = std::sqrt(2.0) * u_norm;
  // upsilon side: integral of star(d eigenform)/lambda over h. The raw
  // pairing carries the opposite sign; kSeriesOrientation is folded in here
  // so that weight * gamma * upsilon is a term of the oriented pair series.
  rec.upsilon_integral = kSeriesOrientation * -(std::sqrt(2.0) * kTwoPi * det *
                                                std::sin(kTwoPi * to_double(x))) /
                         (u_norm * lambda);
  return rec;
}

double pair_series(const Geodesic& g, const Geodesic& h, const SpectralParams& params) {
  require_positive_time(params.t);
  const LatticeVector w = cross(g.direction, h.direction);
  if (w.x == 0 && w.y == 0 && w.z == 0) {
    return 0.0;  // collinear pairs have no reduced series and no closed-form value
  }
  const LatticeVector beta = primitive(w);
  const Integer b2_exact = norm2(beta);
  const double b2 = to_double(b2_exact);
  const double det = to_double(det3(g.direction, h.direction, beta));
  const double x = to_double(frac(dot(beta, h.origin - g.origin)));

  long K;
  if (params.kmax) {
    if (*params.kmax < 0) {
      throw Error(ErrorCode::DomainError, "kmax must be nonnegative");
    }
    K = *params.kmax;
  } else {
    K = auto_kmax(params.t, b2_exact);
  }

  // Bare eigenmode reduction along the beta line; the orientation factor
  // normalizes its limit to the closed-form pair value.
  const double raw = -(det / (M_PI * b2)) * sawtooth_partial(x, K, params.t, kFourPiSquared * b2);
  return kSeriesOrientation * raw;
}

namespace {

// Frequencies a*k1 + b*k2 of the plane spanned by the kernel basis of a
// collinear pair, within squared norm about energy_r2 (slightly
// over-enumerated; callers filter exactly). Inserts canonical representatives.
void enumerate_plane(const std::array<LatticeVector, 2>& basis, double energy_r2,
                     std::set<LatticeVector>& modes) {
  const Integer g11 = norm2(basis[0]);
  const Integer g12 = dot(basis[0], basis[1]);
  const Integer g22 = norm2(basis[1]);
  const Integer det_g = g11 * g22 - g12 * g12;  // = |plane normal|^2 > 0
  const double g12_d = to_double(g12);
  const double g22_d = to_double(g22);
  const double det_d = to_double(det_g);

  const long a_max = static_cast<long>(std::floor(std::sqrt(std::max(0.0, energy_r2 * g22_d / det_d)))) + 1;
  for (long a = -a_max; a <= a_max; ++a) {
    const double disc = g22_d * energy_r2 - det_d * static_cast<double>(a) * static_cast<double>(a);
    if (disc < 0.0) continue;
    const double root = std::sqrt(disc);
    const long b_lo = static_cast<long>(std::floor((-g12_d * a - root) / g22_d)) - 1;
    const long b_hi = static_cast<long>(std::ceil((-g12_d * a + root) / g22_d)) + 1;
    for (long b = b_lo; b <= b_hi; ++b) {
      if (a == 0 && b == 0) continue;
      const LatticeVector k = Integer(a) * basis[0] + Integer(b) * basis[1];
      if (to_double(norm2(k)) > energy_r2) continue;
      modes.insert(canonical(k));
    }
  }
}

struct SideHit {
  double theta = 0.0;
  const LatticeVector* direction = nullptr;
};

}  // namespace

double general_series(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                      const SpectralParams& params) {
  require_positive_time(params.t);
  if (params.frequency_cutoff < 0) {
    throw Error(ErrorCode::DomainError, "frequency_cutoff must be nonnegative (0 = auto)");
  }
  const bool explicit_box = params.frequency_cutoff > 0;
  const Integer box(explicit_box ? params.frequency_cutoff : 0);

  // Energy radius: with an explicit |k|_inf box, over-enumerate by the
  // circumscribed ball and filter exactly below; in auto mode take every mode
  // whose heat weight clears kWeightFloor.
  const double energy_r2 =
      explicit_box ? 3.0 * to_double(Integer(box * box)) + 1.0
                   : -std::log(kWeightFloor) / (kFourPiSquared * params.t);

  // A frequency contributes only if it annihilates a direction on each side,
  // so the support is a union over cross pairs: the beta line of a
  // non-collinear pair, the full orthogonal plane of a collinear pair.
  std::set<LatticeVector> modes;
  std::set<LatticeVector> seen_lines;
  std::set<LatticeVector> seen_planes;
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      const LatticeVector w = cross(g.direction, h.direction);
      if (w.x == 0 && w.y == 0 && w.z == 0) {
        const LatticeVector plane = canonical(primitive(g.direction));
        if (!seen_planes.insert(plane).second) continue;
        enumerate_plane(kernel_basis(plane), energy_r2, modes);
      } else {
        const LatticeVector beta = canonical(primitive(w));
        if (!seen_lines.insert(beta).second) continue;
        const double step2 = to_double(norm2(beta));
        const long n_max = static_cast<long>(std::floor(std::sqrt(energy_r2 / step2)));
        for (long n = 1; n <= n_max; ++n) {
          modes.insert(Integer(n) * beta);
        }
      }
    }
  }

  std::vector<LatticeVector> ordered;
  ordered.reserve(modes.size());
  for (const LatticeVector& k : modes) {
    if (explicit_box && linf_norm(k) > box) continue;
    ordered.push_back(k);
  }
  std::sort(ordered.begin(), ordered.end(), [](const LatticeVector& a, const LatticeVector& b) {
    const Integer na = norm2(a), nb = norm2(b);
    if (na != nb) return na < nb;
    return a < b;
  });

  // Per mode, the sum over the three covectors and both phases of
  // weight * gamma_integral * upsilon_integral collapses by bilinearity and
  // the sine addition formula to
  //   (4 pi w / lambda) * sum_{hits i, j} det(k, [g_i], [h_j]) sin(theta_i - theta'_j),
  // with theta the mode phase at the component origin. The eigenform route in
  // the test suite recomputes modes term by term and must agree exactly up to
  // roundoff.
  CompensatedSum total;
  std::vector<SideHit> gamma_hits, upsilon_hits;
  for (const LatticeVector& k : ordered) {
    gamma_hits.clear();
    upsilon_hits.clear();
    for (const Geodesic& g : gamma.components) {
      if (dot(k, g.direction) == 0) gamma_hits.push_back({phase_of(k, g.origin), &g.direction});
    }
    if (gamma_hits.empty()) continue;
    for (const Geodesic& h : upsilon.components) {
      if (dot(k, h.direction) == 0) upsilon_hits.push_back({phase_of(k, h.origin), &h.direction});
    }
    if (upsilon_hits.empty()) continue;

    const double lambda = kFourPiSquared * to_double(norm2(k));
    const double weight = std::exp(-lambda * params.t);
    double pair_sum = 0.0;
    for (const SideHit& gh : gamma_hits) {
      for (const SideHit& uh : upsilon_hits) {
        const double det = to_double(det3(k, *gh.direction, *uh.direction));
        if (det == 0.0) continue;
        pair_sum += det * std::sin(gh.theta - uh.theta);
      }
    }
    total.add(weight * 4.0 * M_PI * pair_sum / lambda);
  }
  return kSeriesOrientation * total.value();
}

}  // namespace spectral
}  // namespace torus_link
