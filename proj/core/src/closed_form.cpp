#include "torus_link/closed_form.hpp"

#include <cstddef>
#include <utility>

#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {
namespace closed_form {

PairTerm pair_term_detail(std::size_t gamma_index, std::size_t upsilon_index,
                          const Geodesic& g, const Geodesic& h) {
  PairTerm term;
  term.gamma_index = gamma_index;
  term.upsilon_index = upsilon_index;
  term.beta = LatticeVector{0, 0, 0};
  term.det3 = 0;
  term.mu_dot_beta_frac = 0;
  term.value = 0;

  const LatticeVector w = cross(g.direction, h.direction);
  if (w.x == 0 && w.y == 0 && w.z == 0) {
    if (same_circle(g, h)) {
      throw Error(ErrorCode::SameCircle,
                  "pair term undefined: the two components trace the same circle");
    }
    return term;  // disjoint parallel circles never link pairwise
  }

  term.beta = primitive(w);
  term.det3 = det3(g.direction, h.direction, term.beta);
  const RationalVector mu = h.origin - g.origin;
  term.mu_dot_beta_frac = frac(dot(term.beta, mu));
  if (term.mu_dot_beta_frac == 0) {
    throw Error(ErrorCode::IntersectingCurves,
                "pair term undefined: the two components intersect");
  }
  term.value = Rational(term.det3) * (1 - 2 * term.mu_dot_beta_frac) /
               (2 * Rational(norm2(term.beta)));
  return term;
}

Rational pair_term(const Geodesic& g, const Geodesic& h) {
  return pair_term_detail(0, 0, g, h).value;
}

LinkReport linking_number(const MultiGeodesic& gamma, const MultiGeodesic& upsilon,
                          bool require_trivial) {
  const bool gamma_trivial = is_homologically_trivial(gamma);
  const bool upsilon_trivial = is_homologically_trivial(upsilon);
  if (require_trivial && (!gamma_trivial || !upsilon_trivial)) {
    throw Error(ErrorCode::NotHomologicallyTrivial,
                std::string(!gamma_trivial ? "gamma" : "upsilon") +
                    " has nonzero homology class; linking number undefined");
  }

  LinkReport report;
  report.total = 0;
  for (std::size_t i = 0; i < gamma.components.size(); ++i) {
    for (std::size_t j = 0; j < upsilon.components.size(); ++j) {
      PairTerm term =
          pair_term_detail(i, j, gamma.components[i], upsilon.components[j]);
      report.total += term.value;
      report.terms.push_back(std::move(term));
    }
  }
  report.is_integer = is_integer(report.total);

  for (auto&& w : collection_warnings(gamma, "gamma")) report.warnings.push_back(w);
  for (auto&& w : collection_warnings(upsilon, "upsilon")) report.warnings.push_back(w);
  if (!gamma_trivial) {
    report.warnings.push_back("gamma is not homologically trivial; the total is not a linking number");
  }
  if (!upsilon_trivial) {
    report.warnings.push_back("upsilon is not homologically trivial; the total is not a linking number");
  }

  if (gamma_trivial && upsilon_trivial && !report.is_integer) {
    throw Error(ErrorCode::Internal,
                "pair terms of trivial collections summed to the non-integer " +
                    format_rational(report.total));
  }
  return report;
}

}  // namespace closed_form
}  // namespace torus_link
