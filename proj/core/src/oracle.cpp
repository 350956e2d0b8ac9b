#include "torus_link/oracle.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torus_link/errors.hpp"
#include "torus_link/lattice.hpp"
#include "torus_link/rational.hpp"

namespace torus_link {
namespace oracle {

bool Triangle3::is_degenerate() const { return cross(b - a, c - a).is_zero(); }

bool Strip3::is_degenerate() const { return cross(edge_s, edge_t).is_zero(); }

RationalVector schedule_apex(int n) {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  if (n < 0 || n >= kMaxApexAttempts) {
    throw Error(ErrorCode::DomainError, "apex schedule index out of range");
  }
  return {Rational(1, kPrimes[n]), Rational(1, kPrimes[n + 1]), Rational(1, kPrimes[n + 2])};
}

namespace {

bool is_lattice(const RationalVector& v) {
  return is_integer(v.x) && is_integer(v.y) && is_integer(v.z);
}

LatticeVector to_lattice(const RationalVector& v) {
  return {numerator(v.x), numerator(v.y), numerator(v.z)};
}

// Adds an oriented segment [from -> to] with multiplicity m to the cycle:
// lattice displacements become loops keyed by circle, others become
// anchored segments with a sign-normalized displacement.
void accumulate_segment(FormalOneCycle& cycle, const RationalVector& from,
                        const RationalVector& to, const Integer& m) {
  if (m == 0) return;
  const RationalVector disp = to - from;
  if (disp.is_zero()) return;

  if (is_lattice(disp)) {
    const LatticeVector e = to_lattice(disp);
    const Integer wraps = vector_gcd(e);
    const LatticeVector dir = primitive(e);
    const LatticeVector c = canonical(dir);
    Integer signed_mult = m * wraps;
    if (dir != c) signed_mult = -signed_mult;
    const auto basis = kernel_basis(c);
    LoopKey key{c, frac(dot(basis[0], from)), frac(dot(basis[1], from))};
    auto [it, inserted] = cycle.loops.emplace(std::move(key), signed_mult);
    if (!inserted) {
      it->second += signed_mult;
      if (it->second == 0) cycle.loops.erase(it);
    }
    return;
  }

  const bool forward = disp.x != 0 ? disp.x > 0 : (disp.y != 0 ? disp.y > 0 : disp.z > 0);
  SegmentKey key;
  Integer signed_mult;
  if (forward) {
    key = SegmentKey{frac(from), disp};
    signed_mult = m;
  } else {
    key = SegmentKey{frac(to), -disp};
    signed_mult = -m;
  }
  auto [it, inserted] = cycle.segments.emplace(std::move(key), signed_mult);
  if (!inserted) {
    it->second += signed_mult;
    if (it->second == 0) cycle.segments.erase(it);
  }
}

}  // namespace

FormalOneCycle cycle_of(const MultiGeodesic& m) {
  FormalOneCycle cycle;
  for (const Geodesic& g : m.components) {
    accumulate_segment(cycle, g.origin, g.origin + to_rational(g.direction), 1);
  }
  return cycle;
}

Chain2 build_bounding_chain(const MultiGeodesic& gamma, const RationalVector& apex) {
  if (!is_homologically_trivial(gamma)) {
    throw Error(ErrorCode::NotHomologicallyTrivial,
                "only a homologically trivial collection bounds a 2-chain");
  }
  Chain2 chain;
  chain.apex = apex;
  LatticeVector partial{0, 0, 0};
  for (const Geodesic& g : gamma.components) {
    chain.strips.push_back(Strip3{g.origin, apex - g.origin, to_rational(g.direction)});
    const LatticeVector prev = partial;
    partial = partial + g.direction;
    chain.triangles.push_back(
        Triangle3{apex, apex + to_rational(prev), apex + to_rational(partial)});
  }
  return chain;
}

FormalOneCycle chain_boundary(const Chain2& chain) {
  FormalOneCycle cycle;
  for (const Strip3& s : chain.strips) {
    // Traversal order: the component edge first, then up the side, back along
    // the apex-parallel edge, down the other side. As oriented multiplicities:
    //   +[c -> c+t] +[c+t -> c+t+s] -[c+s -> c+s+t] -[c -> c+s].
    const RationalVector c0 = s.corner;
    const RationalVector ct = c0 + s.edge_t;
    const RationalVector cs = c0 + s.edge_s;
    const RationalVector cts = ct + s.edge_s;
    accumulate_segment(cycle, c0, ct, 1);
    accumulate_segment(cycle, ct, cts, 1);
    accumulate_segment(cycle, cs, cts, -1);
    accumulate_segment(cycle, c0, cs, -1);
  }
  for (const Triangle3& t : chain.triangles) {
    accumulate_segment(cycle, t.a, t.b, 1);
    accumulate_segment(cycle, t.b, t.c, 1);
    accumulate_segment(cycle, t.c, t.a, 1);
  }
  return cycle;
}

namespace {

struct Piece {
  RationalVector base;
  RationalVector edge1;  // first frame vector
  RationalVector edge2;  // second frame vector
  bool triangular = false;
};

// Exact signed crossings of the closed geodesic h through one planar piece,
// summed over every lattice translate of the lifted segment that can reach
// the piece's bounding box. Throws Degenerate on any boundary or in-plane
// incidence.
Integer piece_crossings(const Piece& piece, const Geodesic& h) {
  const RationalVector e = to_rational(h.direction);
  const RationalVector normal = cross(piece.edge1, piece.edge2);

  // Componentwise bounding box of the piece.
  RationalVector box_lo = piece.base;
  RationalVector box_hi = piece.base;
  const auto grow = [&box_lo, &box_hi](const RationalVector& p) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (p[i] < box_lo[i]) box_lo[i] = p[i];
      if (p[i] > box_hi[i]) box_hi[i] = p[i];
    }
  };
  grow(piece.base + piece.edge1);
  grow(piece.base + piece.edge2);
  if (!piece.triangular) grow(piece.base + piece.edge1 + piece.edge2);

  // Translates m with segment span overlapping the box, componentwise.
  std::array<Integer, 3> m_lo, m_hi;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational lo = h.origin[i] + (h.direction[i] < 0 ? Rational(h.direction[i]) : Rational(0));
    const Rational hi = h.origin[i] + (h.direction[i] > 0 ? Rational(h.direction[i]) : Rational(0));
    m_lo[i] = ceil_rational(box_lo[i] - hi);
    m_hi[i] = floor_rational(box_hi[i] - lo);
  }

  const Rational d = det3(e, piece.edge1, piece.edge2);
  const Rational g11 = dot(piece.edge1, piece.edge1);
  const Rational g12 = dot(piece.edge1, piece.edge2);
  const Rational g22 = dot(piece.edge2, piece.edge2);
  const Rational gram_det = g11 * g22 - g12 * g12;  // > 0: piece is non-degenerate

  Integer count = 0;
  for (Integer mx = m_lo[0]; mx <= m_hi[0]; ++mx) {
    for (Integer my = m_lo[1]; my <= m_hi[1]; ++my) {
      for (Integer mz = m_lo[2]; mz <= m_hi[2]; ++mz) {
        const RationalVector start{h.origin.x + mx, h.origin.y + my, h.origin.z + mz};
        const RationalVector w = piece.base - start;

        if (d == 0) {
          // Segment parallel to the piece plane. Off-plane translates miss;
          // in-plane ones are degenerate iff the segment meets the closed
          // piece, decided by clipping t against the region constraints.
          if (dot(normal, w) != 0) continue;
          const RationalVector rel = -w;  // start - base, lies in the plane
          const Rational c1 = dot(rel, piece.edge1), c1e = dot(e, piece.edge1);
          const Rational c2 = dot(rel, piece.edge2), c2e = dot(e, piece.edge2);
          // Plane coordinates of start + t e: alpha(t), beta(t) affine in t.
          const Rational a0 = (g22 * c1 - g12 * c2) / gram_det;
          const Rational a1 = (g22 * c1e - g12 * c2e) / gram_det;
          const Rational b0 = (g11 * c2 - g12 * c1) / gram_det;
          const Rational b1 = (g11 * c2e - g12 * c1e) / gram_det;

          Rational t_lo(0), t_hi(1);
          bool empty = false;
          const auto clip = [&t_lo, &t_hi, &empty](const Rational& p, const Rational& q,
                                                   const Rational& lo, const Rational& hi) {
            if (empty) return;
            if (q == 0) {
              if (p < lo || p > hi) empty = true;
              return;
            }
            Rational a = (lo - p) / q;
            Rational b = (hi - p) / q;
            if (a > b) std::swap(a, b);
            if (a > t_lo) t_lo = a;
            if (b < t_hi) t_hi = b;
            if (t_lo > t_hi) empty = true;
          };
          clip(a0, a1, 0, 1);
          clip(b0, b1, 0, 1);
          if (piece.triangular) clip(a0 + b0, a1 + b1, 0, 1);
          if (!empty) {
            throw Error(ErrorCode::Degenerate, "curve runs inside the plane of a surface piece");
          }
          continue;
        }

        // Transversal line: Cramer solution of start + t e = base + s1 E1 + s2 E2.
        const Rational t = det3(w, piece.edge1, piece.edge2) / d;
        if (t < 0 || t >= 1) continue;  // [0,1): t = 1 is the next translate's t = 0
        const Rational s1 = -det3(e, w, piece.edge2) / d;
        const Rational s2 = -det3(e, piece.edge1, w) / d;

        bool inside, boundary;
        if (piece.triangular) {
          const Rational s12 = s1 + s2;
          inside = s1 > 0 && s2 > 0 && s12 < 1;
          boundary = !inside && s1 >= 0 && s2 >= 0 && s12 <= 1;
        } else {
          inside = s1 > 0 && s1 < 1 && s2 > 0 && s2 < 1;
          boundary = !inside && s1 >= 0 && s1 <= 1 && s2 >= 0 && s2 <= 1;
        }
        if (boundary) {
          throw Error(ErrorCode::Degenerate, "curve meets the boundary of a surface piece");
        }
        if (inside) count += d > 0 ? 1 : -1;
      }
    }
  }
  return count;
}

}  // namespace

Integer signed_crossings(const Chain2& chain, const Geodesic& h) {
  Integer total = 0;
  for (const Strip3& s : chain.strips) {
    if (s.is_degenerate()) continue;
    total += piece_crossings(Piece{s.corner, s.edge_t, s.edge_s, false}, h);
  }
  for (const Triangle3& t : chain.triangles) {
    if (t.is_degenerate()) continue;
    total += piece_crossings(Piece{t.a, t.b - t.a, t.c - t.a, true}, h);
  }
  return total;
}

OracleResult oracle_link_report(const MultiGeodesic& gamma, const MultiGeodesic& upsilon) {
  if (!is_homologically_trivial(gamma) || !is_homologically_trivial(upsilon)) {
    throw Error(ErrorCode::NotHomologicallyTrivial,
                std::string(is_homologically_trivial(gamma) ? "upsilon" : "gamma") +
                    " has nonzero homology class; linking number undefined");
  }
  for (const Geodesic& g : gamma.components) {
    for (const Geodesic& h : upsilon.components) {
      if (are_disjoint(g, h)) continue;
      if (same_circle(g, h)) {
        throw Error(ErrorCode::SameCircle,
                    "a gamma component and an upsilon component trace the same circle");
      }
      throw Error(ErrorCode::IntersectingCurves,
                  "a gamma component intersects an upsilon component");
    }
  }

  const FormalOneCycle expected = cycle_of(gamma);
  for (int attempt = 0; attempt < kMaxApexAttempts; ++attempt) {
    const RationalVector apex = schedule_apex(attempt);
    const Chain2 chain = build_bounding_chain(gamma, apex);
    if (!(chain_boundary(chain) == expected)) {
      throw Error(ErrorCode::Internal, "bounding chain boundary does not reproduce gamma");
    }
    try {
      Integer raw = 0;
      for (const Geodesic& h : upsilon.components) {
        raw += signed_crossings(chain, h);
      }
      OracleResult result;
      result.total = (kCrossingOrientation * raw).convert_to<long long>();
      result.apex = apex;
      result.attempts = attempt + 1;
      return result;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate) throw;
      // boundary incidence at this apex; move to the next scheduled apex
    }
  }
  throw Error(ErrorCode::PersistentDegeneracy,
              "every scheduled apex produced a boundary incidence");
}

long long oracle_link(const MultiGeodesic& gamma, const MultiGeodesic& upsilon) {
  return oracle_link_report(gamma, upsilon).total;
}

}  // namespace oracle
}  // namespace torus_link
