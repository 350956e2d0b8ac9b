#include "torus_link/hodge.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <utility>

#include "torus_link/errors.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {
namespace hodge {

TrigScalar::TrigScalar(Rational coeff, int two_pi_power) {
  add_term(two_pi_power, coeff);
}

void TrigScalar::add_term(int power, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(power, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TrigScalar::coeff() const {
  if (terms_.empty()) return 0;
  if (terms_.size() > 1) {
    throw Error(ErrorCode::Internal, "scalar mixes several powers of 2*pi");
  }
  return terms_.begin()->second;
}

int TrigScalar::two_pi_power() const {
  if (terms_.empty()) return 0;
  if (terms_.size() > 1) {
    throw Error(ErrorCode::Internal, "scalar mixes several powers of 2*pi");
  }
  return terms_.begin()->first;
}

double TrigScalar::to_double() const {
  double total = 0.0;
  for (const auto& [power, q] : terms_) {
    total += torus_link::to_double(q) * std::pow(2.0 * M_PI, power);
  }
  return total;
}

TrigScalar TrigScalar::operator-() const {
  TrigScalar out;
  for (const auto& [power, q] : terms_) out.terms_.emplace(power, -q);
  return out;
}

TrigScalar operator+(const TrigScalar& a, const TrigScalar& b) {
  TrigScalar out = a;
  for (const auto& [power, q] : b.terms_) out.add_term(power, q);
  return out;
}

TrigScalar operator-(const TrigScalar& a, const TrigScalar& b) {
  TrigScalar out = a;
  for (const auto& [power, q] : b.terms_) out.add_term(power, -q);
  return out;
}

TrigScalar operator*(const TrigScalar& a, const TrigScalar& b) {
  TrigScalar out;
  for (const auto& [pa, qa] : a.terms_) {
    for (const auto& [pb, qb] : b.terms_) {
      out.add_term(pa + pb, qa * qb);
    }
  }
  return out;
}

TrigPolyForm::TrigPolyForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > 3) {
    throw Error(ErrorCode::DomainError, "form degree must be 0..3");
  }
}

void TrigPolyForm::add_term(const LatticeVector& k, Phase phase, AxisMask axes,
                            const TrigScalar& c) {
  if (std::popcount(static_cast<unsigned>(axes)) != degree_ || axes > 7) {
    throw Error(ErrorCode::Internal, "axis mask does not match the form degree");
  }
  if (c.is_zero()) return;

  ModeKey key{k, phase, axes};
  TrigScalar value = c;
  const bool zero_mode = (k.x == 0 && k.y == 0 && k.z == 0);
  if (zero_mode) {
    if (phase == Phase::sin) return;  // sin(0) = 0
  } else if (!is_canonical(k)) {
    // cos is even and sin is odd in the frequency.
    key.k = -k;
    if (phase == Phase::sin) value = -value;
  }

  auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second = it->second + value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TrigPolyForm TrigPolyForm::operator-() const {
  TrigPolyForm out(degree_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

TrigPolyForm operator+(const TrigPolyForm& a, const TrigPolyForm& b) {
  if (a.degree_ != b.degree_) {
    throw Error(ErrorCode::DegreeMismatch, "cannot add forms of different degree");
  }
  TrigPolyForm out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.k, key.phase, key.axes, c);
  return out;
}

TrigPolyForm operator-(const TrigPolyForm& a, const TrigPolyForm& b) {
  if (a.degree_ != b.degree_) {
    throw Error(ErrorCode::DegreeMismatch, "cannot subtract forms of different degree");
  }
  TrigPolyForm out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.k, key.phase, key.axes, -c);
  return out;
}

TrigPolyForm operator*(const TrigScalar& c, const TrigPolyForm& a) {
  TrigPolyForm out(a.degree_);
  if (c.is_zero()) return out;
  for (const auto& [key, v] : a.terms_) {
    const TrigScalar scaled = c * v;
    if (!scaled.is_zero()) out.terms_.emplace(key, scaled);
  }
  return out;
}

namespace {

Integer component(const LatticeVector& k, int axis) {
  switch (axis) {
    case 0: return k.x;
    case 1: return k.y;
    default: return k.z;
  }
}

// Sign of the permutation sending (axes of A ascending, axes of the
// complement ascending) to (1, 2, 3).
int star_sign(AxisMask axes) {
  std::array<int, 3> perm{};
  int pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (axes & (1u << i)) perm[pos++] = i;
  }
  for (int i = 0; i < 3; ++i) {
    if (!(axes & (1u << i))) perm[pos++] = i;
  }
  int sign = 1;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

TrigPolyForm exterior_d(const TrigPolyForm& f) {
  if (f.degree() == 3) {
    throw Error(ErrorCode::DegreeOverflow, "exterior differential of a 3-form");
  }
  TrigPolyForm out(f.degree() + 1);
  for (const auto& [key, c] : f.terms()) {
    for (int i = 0; i < 3; ++i) {
      if (key.axes & (1u << i)) continue;  // dx_i ^ dx_i = 0
      const Integer ki = component(key.k, i);
      if (ki == 0) continue;
      // d/dx_i cos(2 pi k.x) = -(2 pi) k_i sin, d/dx_i sin = +(2 pi) k_i cos.
      Rational factor(key.phase == Phase::cos ? -ki : ki);
      // Sorting dx_i past the factors of dx_A that precede it.
      for (int a = 0; a < i; ++a) {
        if (key.axes & (1u << a)) factor = -factor;
      }
      const Phase flipped = key.phase == Phase::cos ? Phase::sin : Phase::cos;
      out.add_term(key.k, flipped, static_cast<AxisMask>(key.axes | (1u << i)),
                   TrigScalar(factor, 1) * c);
    }
  }
  return out;
}

TrigPolyForm hodge_star(const TrigPolyForm& f) {
  TrigPolyForm out(3 - f.degree());
  for (const auto& [key, c] : f.terms()) {
    const int sign = star_sign(key.axes);
    const TrigScalar scaled = sign == 1 ? c : -c;
    out.add_term(key.k, key.phase, static_cast<AxisMask>(~key.axes & 7u), scaled);
  }
  return out;
}

TrigPolyForm codifferential(const TrigPolyForm& f) {
  if (f.degree() == 0) {
    throw Error(ErrorCode::DegreeUnderflow, "codifferential of a 0-form");
  }
  TrigPolyForm out = hodge_star(exterior_d(hodge_star(f)));
  // (-1)^(3(k+1)+1): minus on odd degrees, plus on 2-forms.
  return f.degree() % 2 == 1 ? -out : out;
}

TrigPolyForm laplacian(const TrigPolyForm& f) {
  if (f.degree() == 0) return codifferential(exterior_d(f));
  if (f.degree() == 3) return exterior_d(codifferential(f));
  return exterior_d(codifferential(f)) + codifferential(exterior_d(f));
}

TrigScalar inner_product(const TrigPolyForm& a, const TrigPolyForm& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "inner product needs equal degrees");
  }
  // Fourier orthogonality: distinct canonical modes, phases or coordinate
  // covectors pair to zero; cos^2 and sin^2 of a nonzero mode integrate to
  // 1/2 and the constant mode to 1.
  TrigScalar total;
  const auto& lhs = a.terms();
  const auto& rhs = b.terms();
  for (const auto& [key, ca] : lhs) {
    const auto it = rhs.find(key);
    if (it == rhs.end()) continue;
    const bool zero_mode = key.k.x == 0 && key.k.y == 0 && key.k.z == 0;
    const TrigScalar weight(zero_mode ? Rational(1) : Rational(1, 2));
    total = total + weight * ca * it->second;
  }
  return total;
}

TrigPolyForm eigenform(const LatticeVector& k, const std::array<Rational, 3>& covector,
                       Phase phase) {
  if (k.x == 0 && k.y == 0 && k.z == 0) {
    throw Error(ErrorCode::ZeroFrequency, "eigenforms need a nonzero frequency");
  }
  TrigPolyForm out(1);
  for (int i = 0; i < 3; ++i) {
    out.add_term(k, phase, static_cast<AxisMask>(1u << i), TrigScalar(covector[i]));
  }
  return out;
}

}  // namespace hodge
}  // namespace torus_link
