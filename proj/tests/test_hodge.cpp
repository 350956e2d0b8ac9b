#include <array>
#include <bit>
#include <random>
#include <vector>

#include "doctest.h"

#include "torus_link/errors.hpp"
#include "torus_link/hodge.hpp"
#include "support/random_config.hpp"

using namespace torus_link;
using hodge::AxisMask;
using hodge::Phase;
using hodge::TrigPolyForm;
using hodge::TrigScalar;

namespace {

const std::vector<std::vector<AxisMask>> kMasksByDegree = {{0}, {1, 2, 4}, {3, 5, 6}, {7}};

TrigPolyForm random_form(std::mt19937& rng, int degree, int modes = 4) {
  TrigPolyForm f(degree);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 5), coin(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, kMasksByDegree[degree].size() - 1);
  for (int i = 0; i < modes; ++i) {
    f.add_term(testing::random_direction(rng, 2),
               coin(rng) ? Phase::sin : Phase::cos, kMasksByDegree[degree][pick(rng)],
               TrigScalar(Rational(num(rng), den(rng))));
  }
  return f;
}

TrigPolyForm constant_covector(AxisMask axes, const Rational& c) {
  TrigPolyForm f(std::popcount(static_cast<unsigned>(axes)));
  f.add_term(LatticeVector{0, 0, 0}, Phase::cos, axes, TrigScalar(c));
  return f;
}

}  // namespace

TEST_CASE("exact scalar arithmetic over powers of 2 pi") {
  const TrigScalar a(Rational(1, 2), 1);
  const TrigScalar b(Rational(3), 2);
  const TrigScalar prod = a * b;
  CHECK(prod.coeff() == Rational(3, 2));
  CHECK(prod.two_pi_power() == 3);

  CHECK((a - a).is_zero());
  CHECK((a + (-a)).is_zero());

  const TrigScalar mixed = a + b;
  CHECK(!mixed.is_monomial());
  CHECK_THROWS_AS(mixed.coeff(), Error);

  const double tau = 2.0 * M_PI;
  CHECK(a.to_double() == doctest::Approx(0.5 * tau).epsilon(1e-15));
  CHECK(mixed.to_double() == doctest::Approx(0.5 * tau + 3.0 * tau * tau).epsilon(1e-15));

  CHECK(TrigScalar(Rational(0)).is_zero());
  CHECK(TrigScalar().to_double() == 0.0);
}

TEST_CASE("mode canonicalization inside add_term") {
  TrigPolyForm zero_sin(1);
  zero_sin.add_term(LatticeVector{0, 0, 0}, Phase::sin, 1, TrigScalar(Rational(5)));
  CHECK(zero_sin.is_zero());

  TrigPolyForm flipped(0);
  flipped.add_term(LatticeVector{-1, 2, 0}, Phase::cos, 0, TrigScalar(Rational(3)));
  flipped.add_term(LatticeVector{-1, 2, 0}, Phase::sin, 0, TrigScalar(Rational(7)));
  REQUIRE(flipped.terms().size() == 2);
  for (const auto& [key, c] : flipped.terms()) {
    CHECK(key.k == LatticeVector{1, -2, 0});
    if (key.phase == Phase::cos) CHECK(c.coeff() == 3);
    if (key.phase == Phase::sin) CHECK(c.coeff() == -7);
  }

  TrigPolyForm cancel(2);
  cancel.add_term(LatticeVector{1, 0, 1}, Phase::cos, 3, TrigScalar(Rational(2, 3)));
  cancel.add_term(LatticeVector{-1, 0, -1}, Phase::cos, 3, TrigScalar(Rational(-2, 3)));
  CHECK(cancel.is_zero());
}

TEST_CASE("exterior differential on hand-checked modes") {
  // d cos(2 pi x1) = -2 pi sin(2 pi x1) dx1.
  TrigPolyForm f(0);
  f.add_term(LatticeVector{1, 0, 0}, Phase::cos, 0, TrigScalar(Rational(1)));
  TrigPolyForm expected(1);
  expected.add_term(LatticeVector{1, 0, 0}, Phase::sin, 1, TrigScalar(Rational(-1), 1));
  CHECK(exterior_d(f) == expected);

  // d sin(2 pi (x1 + 2 x2)) = 2 pi cos * (dx1 + 2 dx2).
  TrigPolyForm g(0);
  g.add_term(LatticeVector{1, 2, 0}, Phase::sin, 0, TrigScalar(Rational(1)));
  TrigPolyForm dg(1);
  dg.add_term(LatticeVector{1, 2, 0}, Phase::cos, 1, TrigScalar(Rational(1), 1));
  dg.add_term(LatticeVector{1, 2, 0}, Phase::cos, 2, TrigScalar(Rational(2), 1));
  CHECK(exterior_d(g) == dg);

  CHECK_THROWS_AS(exterior_d(TrigPolyForm(3)), Error);
}

TEST_CASE("d squared vanishes identically") {
  std::mt19937 rng(8901);
  for (int i = 0; i < 30; ++i) {
    CHECK(exterior_d(exterior_d(random_form(rng, 0))).is_zero());
    CHECK(exterior_d(exterior_d(random_form(rng, 1))).is_zero());
  }
}

TEST_CASE("hodge star matches the right-handed orientation table") {
  CHECK(hodge_star(constant_covector(1, Rational(1))) == constant_covector(6, Rational(1)));
  CHECK(hodge_star(constant_covector(2, Rational(1))) == constant_covector(5, Rational(-1)));
  CHECK(hodge_star(constant_covector(4, Rational(1))) == constant_covector(3, Rational(1)));
  CHECK(hodge_star(constant_covector(0, Rational(1))) == constant_covector(7, Rational(1)));
  CHECK(hodge_star(constant_covector(7, Rational(1))) == constant_covector(0, Rational(1)));
}

TEST_CASE("hodge star is an involution in every degree") {
  std::mt19937 rng(8902);
  for (int degree = 0; degree <= 3; ++degree) {
    for (int i = 0; i < 20; ++i) {
      const TrigPolyForm f = random_form(rng, degree);
      CHECK(hodge_star(hodge_star(f)) == f);
    }
  }
}

TEST_CASE("codifferential is the exact adjoint of d") {
  std::mt19937 rng(8903);
  for (int degree = 0; degree <= 2; ++degree) {
    for (int i = 0; i < 20; ++i) {
      const TrigPolyForm a = random_form(rng, degree);
      const TrigPolyForm b = random_form(rng, degree + 1);
      CHECK(inner_product(exterior_d(a), b) == inner_product(a, codifferential(b)));
    }
  }
  CHECK_THROWS_AS(codifferential(TrigPolyForm(0)), Error);
}

TEST_CASE("laplacian multiplies eigenmodes by the exact eigenvalue") {
  const LatticeVector k{1, 2, -3};
  const TrigScalar lambda(Rational(norm2(k)), 2);
  for (const Phase phase : {Phase::cos, Phase::sin}) {
    const TrigPolyForm eta =
        hodge::eigenform(k, {Rational(1), Rational(0), Rational(0)}, phase);
    CHECK(laplacian(eta) == lambda * eta);
  }

  // Degree 0 and 3 go through the single-sided compositions.
  TrigPolyForm f(0);
  f.add_term(k, Phase::cos, 0, TrigScalar(Rational(1)));
  CHECK(laplacian(f) == lambda * f);
  TrigPolyForm vol(3);
  vol.add_term(k, Phase::sin, 7, TrigScalar(Rational(1)));
  CHECK(laplacian(vol) == lambda * vol);
}

TEST_CASE("inner product implements Fourier orthogonality") {
  const LatticeVector k{2, -1, 0};
  const TrigPolyForm eta = hodge::eigenform(k, {Rational(1), Rational(0), Rational(0)},
                                            Phase::cos);
  CHECK(inner_product(eta, eta) == TrigScalar(Rational(1, 2)));
  // sqrt(2)-normalized modes have exact unit norm.
  CHECK(TrigScalar(Rational(2)) * inner_product(eta, eta) == TrigScalar(Rational(1)));

  const TrigPolyForm other_phase =
      hodge::eigenform(k, {Rational(1), Rational(0), Rational(0)}, Phase::sin);
  CHECK(inner_product(eta, other_phase).is_zero());

  const TrigPolyForm other_axis =
      hodge::eigenform(k, {Rational(0), Rational(1), Rational(0)}, Phase::cos);
  CHECK(inner_product(eta, other_axis).is_zero());

  const TrigPolyForm other_mode =
      hodge::eigenform(LatticeVector{1, 1, 1}, {Rational(1), Rational(0), Rational(0)},
                       Phase::cos);
  CHECK(inner_product(eta, other_mode).is_zero());

  // Constants integrate with weight 1.
  CHECK(inner_product(constant_covector(0, Rational(3)), constant_covector(0, Rational(5))) ==
        TrigScalar(Rational(15)));

  CHECK_THROWS_AS(inner_product(TrigPolyForm(1), TrigPolyForm(2)), Error);
}

TEST_CASE("eigenform layout and zero-frequency rejection") {
  const TrigPolyForm eta = hodge::eigenform(
      LatticeVector{0, 1, 2}, {Rational(1, 2), Rational(0), Rational(-1, 3)}, Phase::sin);
  REQUIRE(eta.terms().size() == 2);
  CHECK(eta.degree() == 1);

  try {
    hodge::eigenform(LatticeVector{0, 0, 0}, {Rational(1), Rational(0), Rational(0)},
                     Phase::cos);
    FAIL("expected ZeroFrequency");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroFrequency);
  }
}
