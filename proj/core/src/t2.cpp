#include "torus_link/t2.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {
namespace t2 {

namespace {

Rational frac1(const Rational& x) { return frac(x); }

Integer det2(const std::array<Integer, 2>& a, const std::array<Integer, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double direction_angle(const std::array<Integer, 2>& dir) {
  return std::atan2(to_double(dir[1]), to_double(dir[0]));
}

// True iff the two parallel geodesics trace the same circle of T^2: the
// origin offset pairs integrally with the primitive normal of the common
// direction.
bool same_circle_2d(const T2Geodesic& g, const T2Geodesic& h) {
  using boost::multiprecision::gcd;
  const Integer d = gcd(abs(g.direction[0]), abs(g.direction[1]));
  const std::array<Integer, 2> normal{-g.direction[1] / d, g.direction[0] / d};
  const Rational pairing = Rational(normal[0]) * (h.origin[0] - g.origin[0]) +
                           Rational(normal[1]) * (h.origin[1] - g.origin[1]);
  return frac1(pairing) == 0;
}

}  // namespace

T2Geodesic::T2Geodesic(std::array<Integer, 2> dir, std::array<Rational, 2> orig)
    : direction(std::move(dir)), origin{frac1(orig[0]), frac1(orig[1])} {
  if (direction[0] == 0 && direction[1] == 0) {
    throw Error(ErrorCode::ValidationError, "geodesic direction must be nonzero");
  }
}

LiftedGeodesic lift_to_t3(const T2Geodesic& g) {
  double fiber = direction_angle(g.direction) / (2.0 * M_PI);
  if (fiber < 0.0) fiber += 1.0;
  if (fiber >= 1.0) fiber -= 1.0;
  return LiftedGeodesic{LatticeVector{g.direction[0], g.direction[1], 0},
                        {to_double(g.origin[0]), to_double(g.origin[1]), fiber}};
}

Geodesic rationalized_lift(const T2Geodesic& g, unsigned denominator_bits) {
  if (denominator_bits == 0 || denominator_bits > 62) {
    throw Error(ErrorCode::DomainError, "denominator_bits must be in 1..62");
  }
  const LiftedGeodesic lifted = lift_to_t3(g);
  const std::int64_t den = std::int64_t(1) << denominator_bits;
  const auto num =
      static_cast<std::int64_t>(std::llround(lifted.origin[2] * static_cast<double>(den)));
  return Geodesic(lifted.direction,
                  RationalVector{g.origin[0], g.origin[1], frac1(Rational(num, den))});
}

Integer direction_det2(const T2Geodesic& g, const T2Geodesic& h) {
  return det2(g.direction, h.direction);
}

std::vector<IntersectionDatum> intersection_data(const T2Geodesic& g, const T2Geodesic& h) {
  const Integer d2 = direction_det2(g, h);
  if (d2 == 0) {
    if (same_circle_2d(g, h)) {
      throw Error(ErrorCode::IdenticalCircles,
                  "parallel geodesics on the same circle have no transversal intersections");
    }
    return {};
  }

  const int sign = d2 > 0 ? 1 : -1;
  double angle = direction_angle(h.direction) - direction_angle(g.direction);
  if (angle < 0.0) angle += 2.0 * M_PI;
  if (angle >= 2.0 * M_PI) angle -= 2.0 * M_PI;

  // Solve t a - s b = (origin_h - origin_g) + m over all lattice translates m
  // that can land (t, s) in [0,1)^2; there are exactly |det2| solutions.
  const std::array<Rational, 2> w{h.origin[0] - g.origin[0], h.origin[1] - g.origin[1]};
  const Rational det(d2);
  std::vector<IntersectionDatum> data;
  std::array<Integer, 2> m_lo, m_hi;
  for (std::size_t i = 0; i < 2; ++i) {
    Rational lo(0), hi(0);
    if (g.direction[i] > 0) hi += Rational(g.direction[i]);
    if (g.direction[i] < 0) lo += Rational(g.direction[i]);
    if (h.direction[i] > 0) lo -= Rational(h.direction[i]);
    if (h.direction[i] < 0) hi -= Rational(h.direction[i]);
    m_lo[i] = ceil_rational(lo - w[i]);
    m_hi[i] = floor_rational(hi - w[i]);
  }
  for (Integer mx = m_lo[0]; mx <= m_hi[0]; ++mx) {
    for (Integer my = m_lo[1]; my <= m_hi[1]; ++my) {
      const std::array<Rational, 2> v{w[0] + mx, w[1] + my};
      const Rational t = (Rational(h.direction[1]) * v[0] - Rational(h.direction[0]) * v[1]) / det;
      const Rational s = (Rational(g.direction[1]) * v[0] - Rational(g.direction[0]) * v[1]) / det;
      if (t < 0 || t >= 1 || s < 0 || s >= 1) continue;
      IntersectionDatum datum;
      datum.point = {to_double(frac1(g.origin[0] + t * Rational(g.direction[0]))),
                     to_double(frac1(g.origin[1] + t * Rational(g.direction[1])))};
      datum.sign = sign;
      datum.angle_x = angle;
      data.push_back(datum);
    }
  }
  if (Integer(data.size()) != abs(d2)) {
    throw Error(ErrorCode::Internal, "transversal intersection count differs from |det2|");
  }
  return data;
}

double corollary_link(const std::vector<T2Geodesic>& gamma,
                      const std::vector<T2Geodesic>& upsilon) {
  if (gamma.empty() || upsilon.empty()) {
    throw Error(ErrorCode::ValidationError, "collections must be nonempty");
  }
  const auto check_trivial = [](const std::vector<T2Geodesic>& m, const char* label) {
    Integer s0 = 0, s1 = 0;
    for (const T2Geodesic& g : m) {
      s0 += g.direction[0];
      s1 += g.direction[1];
    }
    if (s0 != 0 || s1 != 0) {
      throw Error(ErrorCode::NotHomologicallyTrivial,
                  std::string(label) + " lifts to a homologically nontrivial collection");
    }
  };
  check_trivial(gamma, "gamma");
  check_trivial(upsilon, "upsilon");

  // Lifts of a cross pair can only collide when the planar directions are
  // positively collinear (equal fiber angle) and the planar circles coincide.
  for (const T2Geodesic& g : gamma) {
    for (const T2Geodesic& h : upsilon) {
      if (direction_det2(g, h) != 0) continue;
      const Integer dot2 = g.direction[0] * h.direction[0] + g.direction[1] * h.direction[1];
      if (dot2 > 0 && same_circle_2d(g, h)) {
        throw Error(ErrorCode::IntersectingLifts,
                    "a gamma component and an upsilon component lift to the same curve");
      }
    }
  }

  double total = 0.0;
  for (const T2Geodesic& g : gamma) {
    for (const T2Geodesic& h : upsilon) {
      if (direction_det2(g, h) == 0) continue;  // parallel lifts never link
      for (const IntersectionDatum& datum : intersection_data(g, h)) {
        total += datum.sign * (1.0 - datum.angle_x / M_PI) / 2.0;
      }
    }
  }
  return total;
}

}  // namespace t2
}  // namespace torus_link
