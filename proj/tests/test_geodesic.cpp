#include <random>

#include "doctest.h"

#include "torus_link/errors.hpp"
#include "torus_link/geodesic.hpp"
#include "support/random_config.hpp"

using namespace torus_link;

namespace {

Geodesic make(Integer a, Integer b, Integer c, Rational x, Rational y, Rational z) {
  return Geodesic(LatticeVector{std::move(a), std::move(b), std::move(c)},
                  RationalVector{std::move(x), std::move(y), std::move(z)});
}

}  // namespace

TEST_CASE("geodesic construction reduces the origin mod 1") {
  const Geodesic g = make(1, 0, 0, Rational(5, 4), Rational(-1, 3), Rational(2));
  CHECK(g.origin == RationalVector{Rational(1, 4), Rational(2, 3), Rational(0)});
  CHECK(g.direction == LatticeVector{1, 0, 0});

  CHECK_THROWS_AS(make(0, 0, 0, Rational(0), Rational(0), Rational(0)), Error);
  try {
    make(0, 0, 0, Rational(0), Rational(0), Rational(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
  }
}

TEST_CASE("primitive direction detection") {
  CHECK(has_primitive_direction(make(1, 2, -3, Rational(0), Rational(0), Rational(0))));
  CHECK(!has_primitive_direction(make(2, 4, -6, Rational(0), Rational(0), Rational(0))));
  CHECK(!has_primitive_direction(make(0, 0, 5, Rational(0), Rational(0), Rational(0))));
}

TEST_CASE("multi-geodesic homology class and triviality") {
  CHECK_THROWS_AS(MultiGeodesic(std::vector<Geodesic>{}), Error);

  const MultiGeodesic single({make(1, 2, 3, Rational(0), Rational(0), Rational(0))});
  CHECK(homology_class(single) == LatticeVector{1, 2, 3});
  CHECK(!is_homologically_trivial(single));

  const MultiGeodesic pair({make(1, 2, 3, Rational(0), Rational(0), Rational(0)),
                            make(-1, -2, -3, Rational(1, 2), Rational(0), Rational(0))});
  CHECK(homology_class(pair) == LatticeVector{0, 0, 0});
  CHECK(is_homologically_trivial(pair));

  std::mt19937 rng(8801);
  for (int i = 0; i < 50; ++i) {
    CHECK(is_homologically_trivial(testing::random_trivial_collection(rng, 3)));
  }
}

TEST_CASE("same_circle identifies collinear components on one circle") {
  const Geodesic a = make(1, 0, 0, Rational(0), Rational(0), Rational(0));
  // Opposite orientation and doubled speed, image still the x-axis circle.
  CHECK(same_circle(a, make(-2, 0, 0, Rational(1, 2), Rational(0), Rational(0))));
  CHECK(!same_circle(a, make(1, 0, 0, Rational(0), Rational(1, 2), Rational(0))));
  // Non-collinear directions are never the same circle.
  CHECK(!same_circle(a, make(0, 1, 0, Rational(0), Rational(0), Rational(0))));

  // A diagonal circle meets itself after shifting by its own direction.
  const Geodesic d = make(1, 1, 0, Rational(1, 4), Rational(0), Rational(0));
  CHECK(same_circle(d, make(1, 1, 0, Rational(3, 4), Rational(1, 2), Rational(0))));
  CHECK(!same_circle(d, make(1, 1, 0, Rational(3, 4), Rational(0), Rational(0))));
}

TEST_CASE("pairwise disjointness is decided exactly") {
  const Geodesic a = make(1, 0, 0, Rational(0), Rational(0), Rational(0));
  // Meets a at (0,0,0).
  CHECK(!are_disjoint(a, make(0, 1, 0, Rational(0), Rational(0), Rational(0))));
  // Quarter turn up the z-axis: disjoint.
  CHECK(are_disjoint(a, make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4))));
  // Meets a at (1/2, 0, 0) even though the origins differ.
  CHECK(!are_disjoint(a, make(0, 1, 0, Rational(1, 2), Rational(0), Rational(0))));
  // Collinear: parallel circles are disjoint, the same circle is not.
  CHECK(are_disjoint(a, make(1, 0, 0, Rational(0), Rational(1, 2), Rational(0))));
  CHECK(!are_disjoint(a, make(-1, 0, 0, Rational(1, 2), Rational(0), Rational(0))));
}

TEST_CASE("collection disjointness covers all cross pairs") {
  const MultiGeodesic gamma({make(1, 0, 0, Rational(0), Rational(0), Rational(0)),
                             make(-1, 0, 0, Rational(0), Rational(0), Rational(1, 2))});
  const MultiGeodesic clean({make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4)),
                             make(0, -1, 0, Rational(0), Rational(0), Rational(3, 4))});
  const MultiGeodesic touching({make(0, 1, 0, Rational(0), Rational(0), Rational(1, 4)),
                                make(0, -1, 0, Rational(0), Rational(0), Rational(1, 2))});
  CHECK(are_disjoint(gamma, clean));
  CHECK(!are_disjoint(gamma, touching));
}

TEST_CASE("translation shifts origins mod 1 and keeps directions") {
  const Geodesic g = make(2, -1, 0, Rational(3, 4), Rational(0), Rational(1, 2));
  const RationalVector tau{Rational(1, 2), Rational(1, 3), Rational(3, 4)};
  const Geodesic moved = translate(g, tau);
  CHECK(moved.direction == g.direction);
  CHECK(moved.origin == RationalVector{Rational(1, 4), Rational(1, 3), Rational(1, 4)});

  const MultiGeodesic m({g, make(-2, 1, 0, Rational(0), Rational(0), Rational(0))});
  const MultiGeodesic moved_m = translate(m, tau);
  REQUIRE(moved_m.components.size() == 2);
  CHECK(moved_m.components[0].origin == moved.origin);
  CHECK(moved_m.components[1].origin == frac(tau));
}

TEST_CASE("collection warnings flag wrapping and shared circles") {
  const MultiGeodesic clean({make(1, 0, 0, Rational(0), Rational(0), Rational(0)),
                             make(-1, 0, 0, Rational(0), Rational(0), Rational(1, 2))});
  CHECK(collection_warnings(clean, "gamma").empty());

  const MultiGeodesic wrapped({make(2, 0, 0, Rational(0), Rational(0), Rational(0)),
                               make(-2, 0, 0, Rational(0), Rational(0), Rational(1, 2))});
  CHECK(collection_warnings(wrapped, "gamma").size() == 2);

  const MultiGeodesic shared({make(1, 0, 0, Rational(0), Rational(0), Rational(0)),
                              make(-1, 0, 0, Rational(1, 2), Rational(0), Rational(0))});
  CHECK(collection_warnings(shared, "gamma").size() == 1);
}
