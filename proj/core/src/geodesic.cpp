#include "torus_link/geodesic.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {

Geodesic::Geodesic(LatticeVector dir, RationalVector orig)
    : direction(std::move(dir)), origin(frac(std::move(orig))) {
  if (direction.x == 0 && direction.y == 0 && direction.z == 0) {
    throw Error(ErrorCode::ValidationError, "geodesic direction must be nonzero");
  }
}

bool has_primitive_direction(const Geodesic& g) { return vector_gcd(g.direction) == 1; }

MultiGeodesic::MultiGeodesic(std::vector<Geodesic> comps) : components(std::move(comps)) {
  if (components.empty()) {
    throw Error(ErrorCode::ValidationError, "a multi-geodesic needs at least one component");
  }
}

LatticeVector homology_class(const MultiGeodesic& m) {
  LatticeVector sum{0, 0, 0};
  for (const Geodesic& g : m.components) sum = sum + g.direction;
  return sum;
}

bool is_homologically_trivial(const MultiGeodesic& m) {
  const LatticeVector h = homology_class(m);
  return h.x == 0 && h.y == 0 && h.z == 0;
}

bool same_circle(const Geodesic& g, const Geodesic& h) {
  const LatticeVector w = cross(g.direction, h.direction);
  if (w.x != 0 || w.y != 0 || w.z != 0) return false;
  // Same line direction. The circles coincide iff the offset lies in the
  // line's translate lattice: offset . k is an integer for both kernel
  // basis vectors k of direction^perp.
  const auto basis = kernel_basis(g.direction);
  const RationalVector offset = h.origin - g.origin;
  return frac(dot(basis[0], offset)) == 0 && frac(dot(basis[1], offset)) == 0;
}

bool are_disjoint(const Geodesic& g, const Geodesic& h) {
  const LatticeVector w = cross(g.direction, h.direction);
  if (w.x == 0 && w.y == 0 && w.z == 0) {
    return !same_circle(g, h);
  }
  // Transverse directions: the circles meet iff the offset crosses the
  // common orthogonal axis by an integer amount.
  const LatticeVector beta = primitive(w);
  const RationalVector mu = h.origin - g.origin;
  return frac(dot(beta, mu)) != 0;
}

bool are_disjoint(const MultiGeodesic& gamma, const MultiGeodesic& upsilon) {
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      if (!are_disjoint(g, h)) return false;
    }
  }
  return true;
}

Geodesic translate(const Geodesic& g, const RationalVector& tau) {
  return Geodesic(g.direction, g.origin + tau);
}

MultiGeodesic translate(const MultiGeodesic& m, const RationalVector& tau) {
  std::vector<Geodesic> comps;
  comps.reserve(m.components.size());
  for (const Geodesic& g : m.components) comps.push_back(translate(g, tau));
  return MultiGeodesic(std::move(comps));
}

std::vector<std::string> collection_warnings(const MultiGeodesic& m, const std::string& label) {
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    const Geodesic& g = m.components[i];
    const Integer gcd = vector_gcd(g.direction);
    if (gcd != 1) {
      warnings.push_back(label + "[" + std::to_string(i) + "]: direction is not primitive; the component wraps its circle " +
                         format_integer(gcd) + " times");
    }
    for (std::size_t j = i + 1; j < m.components.size(); ++j) {
      if (same_circle(g, m.components[j])) {
        warnings.push_back(label + "[" + std::to_string(i) + "] and " + label + "[" +
                           std::to_string(j) + "] lie on the same circle");
      }
    }
  }
  return warnings;
}

}  // namespace torus_link
