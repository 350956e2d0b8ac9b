#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "torus_link/closed_form.hpp"
#include "torus_link/errors.hpp"
#include "torus_link/hodge.hpp"
#include "torus_link/spectral.hpp"
#include "support/random_config.hpp"

using namespace torus_link;

namespace {

Geodesic make(Integer a, Integer b, Integer c, Rational x, Rational y, Rational z) {
  return Geodesic(LatticeVector{std::move(a), std::move(b), std::move(c)},
                  RationalVector{std::move(x), std::move(y), std::move(z)});
}

MultiGeodesic hopf_gamma() {
  return MultiGeodesic({make(1, 0, 0, Rational(0), Rational(0), Rational(0)),
                        make(-1, 0, 0, Rational(0), Rational(0), Rational(1, 2))});
}

MultiGeodesic hopf_upsilon() {
  return MultiGeodesic({make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4)),
                        make(0, -1, 0, Rational(0), Rational(0), Rational(3, 4))});
}

double pair_series_total(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                         const spectral::SpectralParams& params) {
  double total = 0.0;
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      total += spectral::pair_series(g, h, params);
    }
  }
  return total;
}

// Independent route through the exterior-calculus module: sum the heat-damped
// pairing over every sqrt(2)-normalized eigenmode in the cutoff box (hence the
// factor 2 on the raw product), three covectors and both phases, frequencies
// taken once per {k, -k} pair.
double eigenmode_route(const MultiGeodesic& gamma, const MultiGeodesic& upsilon, long box,
                       double t) {
  const std::array<std::array<Rational, 3>, 3> covectors = {{
      {Rational(1), Rational(0), Rational(0)},
      {Rational(0), Rational(1), Rational(0)},
      {Rational(0), Rational(0), Rational(1)},
  }};
  double total = 0.0;
  for (long kx = -box; kx <= box; ++kx) {
    for (long ky = -box; ky <= box; ++ky) {
      for (long kz = -box; kz <= box; ++kz) {
        const LatticeVector k{kx, ky, kz};
        if (k.is_zero() || !is_canonical(k)) continue;
        const double lambda = 4.0 * M_PI * M_PI * to_double(norm2(k));
        const double weight = std::exp(-lambda * t);
        for (const auto& cov : covectors) {
          for (const hodge::Phase phase : {hodge::Phase::cos, hodge::Phase::sin}) {
            const hodge::TrigPolyForm eta = hodge::eigenform(k, cov, phase);
            const hodge::TrigPolyForm star_d_eta = hodge_star(exterior_d(eta));
            double gamma_int = 0.0;
            for (const Geodesic& g : gamma.components) {
              gamma_int += spectral::line_integral(eta, g);
            }
            double upsilon_int = 0.0;
            for (const Geodesic& h : upsilon.components) {
              upsilon_int += spectral::line_integral(star_d_eta, h);
            }
            total += weight * 2.0 * gamma_int * upsilon_int / lambda;
          }
        }
      }
    }
  }
  return spectral::kSeriesOrientation * total;
}

}  // namespace

TEST_CASE("auto cutoffs sit exactly at the weight floor") {
  const double t = 1e-4;
  for (int b2 = 1; b2 <= 5; ++b2) {
    const long k = spectral::auto_kmax(t, Integer(b2));
    const double decay = 4.0 * M_PI * M_PI * b2 * t;
    CHECK(k >= 1);
    CHECK(std::exp(-decay * static_cast<double>(k) * static_cast<double>(k)) <
          spectral::kWeightFloor);
    if (k > 1) {
      const double prev = static_cast<double>(k - 1);
      CHECK(std::exp(-decay * prev * prev) >= spectral::kWeightFloor);
    }
  }

  CHECK_THROWS_AS(spectral::auto_kmax(0.0, Integer(1)), Error);
  CHECK_THROWS_AS(spectral::auto_kmax(1e-4, Integer(0)), Error);
  // Times this small would need > 5e7 terms; the guard refuses instead.
  try {
    spectral::auto_kmax(1e-18, Integer(1));
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
  CHECK_THROWS_AS(spectral::sawtooth_auto_k(1e-18, 4.0 * M_PI * M_PI), Error);
}

TEST_CASE("sawtooth partial sums approach the closed sawtooth") {
  const double limit = spectral::sawtooth_limit(0.25);
  CHECK(limit == doctest::Approx(M_PI / 4.0).epsilon(1e-15));

  CHECK(std::abs(spectral::sawtooth_partial(0.25, 50000, 0.0, 0.0) - limit) < 1e-3);

  const double a = 4.0 * M_PI * M_PI;
  const long k_auto = spectral::sawtooth_auto_k(1e-6, a);
  for (const double x : {1.0 / 16.0, 0.25, 0.5, 11.0 / 16.0}) {
    CHECK(std::abs(spectral::sawtooth_partial(x, k_auto, 1e-6, a) -
                   spectral::sawtooth_limit(x)) < 1e-6);
  }

  CHECK(spectral::sawtooth_partial(0.25, 0, 0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(spectral::sawtooth_partial(0.25, -1, 0.0, 0.0), Error);
  CHECK_THROWS_AS(spectral::sawtooth_limit(0.0), Error);
  CHECK_THROWS_AS(spectral::sawtooth_limit(1.0), Error);
}

TEST_CASE("line integral vanishing laws hold with exact zeros") {
  std::mt19937 rng(9001);
  for (int i = 0; i < 40; ++i) {
    const LatticeVector u = testing::random_direction(rng);
    const auto basis = kernel_basis(u);
    LatticeVector k = testing::random_entry(rng, 2) * basis[0] +
                      testing::random_entry(rng, 2) * basis[1];
    if (k.is_zero()) k = basis[0];

    // Anchor the phase at zero: pick a coordinate with k_i != 0 and solve
    // k . origin = 0 exactly.
    RationalVector origin = testing::random_origin(rng);
    for (std::size_t axis = 0; axis < 3; ++axis) {
      if (k[axis] != 0) {
        origin[axis] = 0;
        origin[axis] = -dot(k, origin) / Rational(k[axis]);
        break;
      }
    }
    const Geodesic g(u, origin);
    REQUIRE(frac(dot(k, g.origin)) == 0);

    const std::array<Rational, 3> along = {Rational(u.x), Rational(u.y), Rational(u.z)};

    // (a) sin phase through a zero of the mode.
    CHECK(spectral::line_integral(hodge::eigenform(k, along, hodge::Phase::sin), g) == 0.0);

    // (b) frequency not orthogonal to the direction.
    LatticeVector bad = testing::random_direction(rng, 2);
    if (dot(bad, u) == 0) bad = bad + u;
    CHECK(spectral::line_integral(hodge::eigenform(bad, along, hodge::Phase::cos), g) == 0.0);

    // (c) covector orthogonal to the direction.
    const std::array<Rational, 3> perp = {Rational(basis[0].x), Rational(basis[0].y),
                                          Rational(basis[0].z)};
    CHECK(spectral::line_integral(hodge::eigenform(k, perp, hodge::Phase::cos), g) == 0.0);

    // Surviving case: cos phase, covector along the direction, value |u|^2.
    const double survived =
        spectral::line_integral(hodge::eigenform(k, along, hodge::Phase::cos), g);
    CHECK(survived == doctest::Approx(to_double(norm2(u))).epsilon(1e-12));
  }

  CHECK_THROWS_AS(spectral::line_integral(hodge::TrigPolyForm(2),
                                          make(1, 0, 0, Rational(0), Rational(0), Rational(0))),
                  Error);
}

TEST_CASE("reduced pair terms reproduce the calibration mode by mode") {
  const Geodesic g = make(1, 0, 0, Rational(0), Rational(0), Rational(0));
  const Geodesic h = make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4));

  const auto first = spectral::curve_pairing_terms(g, h, 1);
  CHECK(first.k == LatticeVector{0, 0, 1});
  CHECK(first.weight == 1.0);
  CHECK(first.gamma_integral == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(first.contribution() == doctest::Approx(1.0 / M_PI).epsilon(1e-13));

  // Partial sums of the undamped contributions converge to the exact pair
  // value 1/4 (alternating tail, error about 1/(pi K)).
  double sum = 0.0;
  for (long n = 1; n <= 20000; ++n) {
    sum += spectral::curve_pairing_terms(g, h, n).contribution();
  }
  CHECK(std::abs(sum - 0.25) < 1e-4);

  CHECK_THROWS_AS(spectral::curve_pairing_terms(g, h, 0), Error);
  try {
    spectral::curve_pairing_terms(
        g, make(2, 0, 0, Rational(0), Rational(1, 2), Rational(0)), 1);
    FAIL("expected Collinear");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Collinear);
  }
}

TEST_CASE("pair series converges to the closed-form pair value") {
  const Geodesic g = make(1, 0, 0, Rational(0), Rational(0), Rational(0));
  const Geodesic h = make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4));
  spectral::SpectralParams params;
  params.t = 1e-6;
  CHECK(std::abs(spectral::pair_series(g, h, params) - 0.25) < 1e-9);

  // Collinear pairs short-circuit to an exact zero.
  params.kmax = 10;
  CHECK(spectral::pair_series(
            g, make(-1, 0, 0, Rational(0), Rational(1, 2), Rational(0)), params) == 0.0);

  std::mt19937 rng(9002);
  int checked = 0;
  while (checked < 25) {
    const Geodesic a = testing::random_geodesic(rng);
    const Geodesic b = testing::random_geodesic(rng);
    if (cross(a.direction, b.direction).is_zero()) continue;
    const LatticeVector beta = primitive_orthogonal(a.direction, b.direction);
    const Rational x = frac(dot(beta, b.origin - a.origin));
    if (x < Rational(1, 16) || x > Rational(15, 16)) continue;

    spectral::SpectralParams fine;
    fine.t = 5e-7 / to_double(norm2(beta));
    const double series = spectral::pair_series(a, b, fine);
    const double exact = to_double(closed_form::pair_term(a, b));
    CHECK(std::abs(series - exact) < 1e-8);
    ++checked;
  }
}

TEST_CASE("pair series parameter validation") {
  const Geodesic g = make(1, 0, 0, Rational(0), Rational(0), Rational(0));
  const Geodesic h = make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4));

  spectral::SpectralParams bad_time;
  bad_time.t = 0.0;
  CHECK_THROWS_AS(spectral::pair_series(g, h, bad_time), Error);

  spectral::SpectralParams bad_kmax;
  bad_kmax.kmax = -1;
  CHECK_THROWS_AS(spectral::pair_series(g, h, bad_kmax), Error);

  spectral::SpectralParams bad_box;
  bad_box.frequency_cutoff = -2;
  CHECK_THROWS_AS(spectral::general_series(hopf_gamma(), hopf_upsilon(), bad_box), Error);
}

TEST_CASE("the general series agrees with the per-pair reduction") {
  spectral::SpectralParams params;
  params.t = 1e-4;
  const double general = spectral::general_series(hopf_gamma(), hopf_upsilon(), params);
  CHECK(std::abs(general - 1.0) < 1e-5);
  CHECK(std::abs(general - pair_series_total(hopf_gamma(), hopf_upsilon(), params)) < 1e-9);

  std::mt19937 rng(9003);
  for (int i = 0; i < 10; ++i) {
    const auto [gamma, upsilon] = testing::random_trivial_pair(rng);
    for (const double t : {1e-2, 1e-3}) {
      spectral::SpectralParams p;
      p.t = t;
      const double lhs = spectral::general_series(gamma, upsilon, p);
      const double rhs = pair_series_total(gamma, upsilon, p);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("the general series equals the raw eigenmode pairing") {
  spectral::SpectralParams params;
  params.t = 1e-2;
  params.frequency_cutoff = 3;

  const double via_modes = eigenmode_route(hopf_gamma(), hopf_upsilon(), 3, params.t);
  const double via_support = spectral::general_series(hopf_gamma(), hopf_upsilon(), params);
  CHECK(std::abs(via_modes - via_support) < 1e-9);

  std::mt19937 rng(9004);
  for (int i = 0; i < 3; ++i) {
    const auto [gamma, upsilon] = testing::random_trivial_pair(rng);
    const double brute = eigenmode_route(gamma, upsilon, 3, params.t);
    const double support = spectral::general_series(gamma, upsilon, params);
    CHECK(std::abs(brute - support) < 1e-9);
  }
}

TEST_CASE("series evaluation is deterministic") {
  spectral::SpectralParams params;
  params.t = 1e-3;
  const double a = spectral::general_series(hopf_gamma(), hopf_upsilon(), params);
  const double b = spectral::general_series(hopf_gamma(), hopf_upsilon(), params);
  CHECK(a == b);

  const Geodesic g = make(1, 2, 0, Rational(0), Rational(0), Rational(0));
  const Geodesic h = make(0, 0, 1, Rational(1, 3), Rational(1, 5), Rational(0));
  CHECK(spectral::pair_series(g, h, params) == spectral::pair_series(g, h, params));
}
