#include "torus_link/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstddef>
#include <string>

#include "torus_link/errors.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {

Rational frac(const Rational& x) {
  Rational f = x - floor_rational(x);
  return f;
}

Integer floor_rational(const Rational& x) {
  Integer q = numerator(x) / denominator(x);
  // cpp_rational keeps denominator > 0; integer division truncates toward 0,
  // so negative non-integers need one more step down.
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) {
    --q;
  }
  return q;
}

Integer ceil_rational(const Rational& x) { return -floor_rational(-x); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

double to_double(const Rational& x) { return x.convert_to<double>(); }

double to_double(const Integer& n) { return n.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  const auto fail = [&text]() {
    throw Error(ErrorCode::ValidationError,
                "not a rational literal: \"" + text + "\" (expected \"p\" or \"p/q\")");
  };
  const auto parse_int = [&fail](const std::string& part) -> Integer {
    if (part.empty()) fail();
    const std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) fail();
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') fail();
    }
    Integer magnitude(part.substr(start));
    return part[0] == '-' ? Integer(-magnitude) : magnitude;
  };
  if (text.empty()) fail();
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_int(text));
  }
  if (text.find('/', slash + 1) != std::string::npos) fail();
  const Integer num = parse_int(text.substr(0, slash));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) fail();
  return Rational(num, den);
}

std::string format_rational(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += '/';
    out += denominator(x).str();
  }
  return out;
}

std::string format_integer(const Integer& n) { return n.str(); }

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Integer det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return dot(a, cross(b, c));
}

Integer norm2(const LatticeVector& a) { return dot(a, a); }

Integer vector_gcd(const LatticeVector& a) {
  using boost::multiprecision::gcd;
  Integer g = gcd(gcd(abs(a.x), abs(a.y)), abs(a.z));
  return g;
}

LatticeVector primitive(const LatticeVector& a) {
  const Integer g = vector_gcd(a);
  if (g == 0) {
    throw Error(ErrorCode::DomainError, "primitive part of the zero vector is undefined");
  }
  return {a.x / g, a.y / g, a.z / g};
}

bool is_canonical(const LatticeVector& a) {
  if (a.x != 0) return a.x > 0;
  if (a.y != 0) return a.y > 0;
  return a.z > 0;
}

LatticeVector canonical(const LatticeVector& a) { return is_canonical(a) ? a : -a; }

LatticeVector primitive_orthogonal(const LatticeVector& u, const LatticeVector& v) {
  const LatticeVector w = cross(u, v);
  if (w.x == 0 && w.y == 0 && w.z == 0) {
    throw Error(ErrorCode::Collinear, "directions are collinear; no common orthogonal axis");
  }
  return primitive(w);
}

namespace {

// Extended gcd on nonnegative inputs: returns g = gcd(a, b) and sets
// x, y with a*x + b*y = g.
Integer extended_gcd(Integer a, Integer b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_x = 1, cur_x = 0;
  Integer old_y = 0, cur_y = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * cur_x;
    old_x = cur_x;
    cur_x = tmp;
    tmp = old_y - q * cur_y;
    old_y = cur_y;
    cur_y = tmp;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

}  // namespace

std::array<LatticeVector, 2> kernel_basis(const LatticeVector& d) {
  if (d.x == 0 && d.y == 0 && d.z == 0) {
    throw Error(ErrorCode::DomainError, "kernel basis of the zero vector is undefined");
  }
  const LatticeVector p = primitive(d);
  std::array<LatticeVector, 2> basis;
  if (p.x == 0 && p.y == 0) {
    // p = (0, 0, ±1): the orthogonal lattice is the coordinate plane, ordered
    // so the cross product below lands on +p rather than -p.
    if (p.z > 0) {
      basis = {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0}};
    } else {
      basis = {LatticeVector{0, 1, 0}, LatticeVector{1, 0, 0}};
    }
  } else {
    // g = gcd(a, b) > 0 and ax + by = g give one kernel vector in the z = 0
    // plane and a second one closing the plane: with h = gcd(g, c) = 1 for
    // primitive p the pair below spans d^perp over the integers.
    Integer x, y;
    const Integer g = extended_gcd(abs(p.x), abs(p.y), x, y);
    if (p.x < 0) x = -x;
    if (p.y < 0) y = -y;
    basis = {LatticeVector{-p.y / g, p.x / g, Integer(0)},
             LatticeVector{-x * p.z, -y * p.z, g}};
  }
  // Correctness certificate: an oriented Z-basis of p^perp has cross product p.
  if (cross(basis[0], basis[1]) != p) {
    throw Error(ErrorCode::Internal, "kernel basis certificate failed");
  }
  return basis;
}

RationalVector to_rational(const LatticeVector& a) {
  return {Rational(a.x), Rational(a.y), Rational(a.z)};
}

Rational dot(const LatticeVector& a, const RationalVector& b) {
  return Rational(a.x) * b.x + Rational(a.y) * b.y + Rational(a.z) * b.z;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

RationalVector cross(const RationalVector& a, const RationalVector& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return dot(a, cross(b, c));
}

RationalVector frac(const RationalVector& v) { return {frac(v.x), frac(v.y), frac(v.z)}; }

}  // namespace torus_link
