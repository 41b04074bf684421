#include "deginf/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "deginf/cone.hpp"
#include "deginf/matrix.hpp"

namespace deginf {

namespace {

std::size_t affine_rank(const std::vector<RationalVector>& pts, std::size_t n) {
  if (pts.size() < 2) return 0;
  std::vector<RationalVector> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Rational cross2(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Facet> hull_facets_2d(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end(), [](const RationalVector& a, const RationalVector& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Andrew monotone chain, counter-clockwise.
  std::vector<RationalVector> hull;
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross2(hull[hull.size() - 2], hull[hull.size() - 1], *it).sign() <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());

  std::vector<Facet> facets;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RationalVector& p = hull[i];
    const RationalVector& q = hull[(i + 1) % hull.size()];
    RationalVector normal = {q[1] - p[1], p[0] - q[0]};  // outward for ccw edges
    LatticeVector omega = primitive_vector(normal).vector;
    facets.push_back({omega, dot(rational_vector(omega), p)});
  }
  return facets;
}

RationalVector cross3(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::vector<Facet> hull_facets_3d(const std::vector<RationalVector>& pts) {
  std::set<std::pair<LatticeVector, Rational>> seen;
  std::vector<Facet> facets;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        RationalVector normal = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        if (is_zero(normal)) continue;
        Rational offset = dot(normal, pts[i]);
        bool below = true, above = true;
        for (const auto& p : pts) {
          int s = (dot(normal, p) - offset).sign();
          if (s > 0) below = false;
          if (s < 0) above = false;
          if (!below && !above) break;
        }
        if (!below && !above) continue;
        if (above) {  // flip so every point sits on the <= side
          normal = scale(normal, Rational(-1));
          offset = -offset;
        }
        auto prim = primitive_vector(normal);
        Rational c = offset / prim.scale;
        if (seen.emplace(prim.vector, c).second) facets.push_back({prim.vector, c});
      }
  return facets;
}

}  // namespace

std::vector<Facet> facets_from_vertices(std::size_t n,
                                        const std::vector<RationalVector>& vertices) {
  if (n != 2 && n != 3)
    fail(Errc::ConfigError, "facet enumeration implemented for n in {2, 3} only");
  for (const auto& v : vertices)
    if (v.size() != n) fail(Errc::DomainMismatch, "vertex of wrong dimension");
  if (affine_rank(vertices, n) != n)
    fail(Errc::DegeneratePolytope, "vertices do not affinely span the ambient space");
  return n == 2 ? hull_facets_2d(vertices) : hull_facets_3d(vertices);
}

std::vector<RationalVector> vertices_from_facets(std::size_t n, const std::vector<Facet>& facets) {
  if (n != 2 && n != 3)
    fail(Errc::ConfigError, "vertex enumeration implemented for n in {2, 3} only");

  auto feasible = [&](const RationalVector& x) {
    for (const auto& f : facets)
      if (dot(rational_vector(f.normal), x) > f.offset) return false;
    return true;
  };

  std::vector<RationalVector> result;
  auto consider = [&](const RationalVector& x) {
    if (!feasible(x)) return;
    if (std::find(result.begin(), result.end(), x) == result.end()) result.push_back(x);
  };

  if (n == 2) {
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = i + 1; j < facets.size(); ++j) {
        const auto& a = facets[i].normal;
        const auto& b = facets[j].normal;
        Rational det = Rational(a[0] * b[1] - a[1] * b[0]);
        if (det.is_zero()) continue;
        Rational x0 = (facets[i].offset * Rational(b[1]) - facets[j].offset * Rational(a[1])) / det;
        Rational x1 = (Rational(a[0]) * facets[j].offset - Rational(b[0]) * facets[i].offset) / det;
        consider({x0, x1});
      }
  } else {
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = i + 1; j < facets.size(); ++j)
        for (std::size_t k = j + 1; k < facets.size(); ++k) {
          RationalMatrix m(3, 3);
          for (std::size_t c = 0; c < 3; ++c) {
            m.at(0, c) = Rational(facets[i].normal[c]);
            m.at(1, c) = Rational(facets[j].normal[c]);
            m.at(2, c) = Rational(facets[k].normal[c]);
          }
          if (determinant(m).is_zero()) continue;
          RationalVector rhs = {facets[i].offset, facets[j].offset, facets[k].offset};
          consider(matrix_invert(m).inverse * rhs);
        }
  }
  return result;
}

const std::vector<RationalVector>& RationalPolytope::vertices() const {
  if (vertices_.empty())
    fail(Errc::ConfigError, "polytope has no vertex representation available");
  return vertices_;
}

RingDomain RationalPolytope::ring_domain() const {
  return mode_ == OriginMode::Interior ? laurent_domain(n_) : polynomial_domain(2);
}

void RationalPolytope::validate_mode() const {
  if (mode_ == OriginMode::Interior) {
    for (const auto& f : facets_)
      if (f.offset.sign() <= 0)
        fail(Errc::OriginNotInterior, "facet with offset " + f.offset.str());
    return;
  }
  if (n_ != 2) fail(Errc::ConfigError, "VERTEX_ON_AXES mode is planar only");
  bool has_x_axis = false, has_y_axis = false;
  for (const auto& f : facets_) {
    if (f.normal == LatticeVector{-1, 0} && f.offset.is_zero()) {
      has_x_axis = true;
    } else if (f.normal == LatticeVector{0, -1} && f.offset.is_zero()) {
      has_y_axis = true;
    } else if (!f.normal.all_positive() || f.offset.sign() <= 0) {
      fail(Errc::InvalidPolygon,
           "non-axis edge with normal " + f.normal.str() + " is not negative-slope");
    }
  }
  if (!has_x_axis || !has_y_axis)
    fail(Errc::InvalidPolygon, "polygon is missing an axis edge");
  if (!vertices_.empty()) {
    RationalVector origin(n_, Rational(0));
    if (std::find(vertices_.begin(), vertices_.end(), origin) == vertices_.end())
      fail(Errc::InvalidPolygon, "origin is not a vertex");
  }
}

RationalPolytope RationalPolytope::from_vertices(std::size_t n, OriginMode mode,
                                                 std::vector<RationalVector> vertices) {
  RationalPolytope p;
  p.n_ = n;
  p.mode_ = mode;
  p.facets_ = facets_from_vertices(n, vertices);
  // Keep only the actual hull vertices: recover them from the facets.
  p.vertices_ = vertices_from_facets(n, p.facets_);
  p.validate_mode();
  return p;
}

RationalPolytope RationalPolytope::from_facets(std::size_t n, OriginMode mode,
                                               std::vector<Facet> facets) {
  RationalPolytope p;
  p.n_ = n;
  p.mode_ = mode;
  for (auto& f : facets) {
    if (f.normal.dim() != n) fail(Errc::DomainMismatch, "facet normal of wrong dimension");
    if (f.normal.is_zero()) fail(Errc::DegeneratePolytope, "zero facet normal");
    if (f.normal != f.normal.primitive())
      fail(Errc::ConfigError, "facet normal " + f.normal.str() + " is not primitive");
  }
  p.facets_ = std::move(facets);

  std::vector<RationalVector> rows;
  for (const auto& f : p.facets_) rows.push_back(rational_vector(f.normal));
  if (nonpositive_cone_has_ray(rows, n))
    fail(Errc::Unbounded, "recession cone of the H-representation is nontrivial");

  if (n <= 3) {
    p.vertices_ = vertices_from_facets(n, p.facets_);
    if (p.vertices_.empty()) fail(Errc::DegeneratePolytope, "H-representation has no vertices");
  }
  p.validate_mode();
  return p;
}

RationalPolytope RationalPolytope::from_both(std::size_t n, OriginMode mode,
                                             std::vector<RationalVector> vertices,
                                             std::vector<Facet> facets) {
  RationalPolytope p = from_vertices(n, mode, std::move(vertices));
  // Mutual containment: the derived facet set must match the given one.
  auto key = [](const Facet& f) { return std::make_pair(f.normal, f.offset); };
  std::set<std::pair<LatticeVector, Rational>> derived, given;
  for (const auto& f : p.facets_) derived.insert(key(f));
  for (const auto& f : facets) given.insert(key(f));
  if (derived != given)
    fail(Errc::DegeneratePolytope, "V- and H-representations describe different sets");
  return p;
}

Subdegree subdegree_from_polytope(const RationalPolytope& p) {
  RingDomain dom = p.ring_domain();
  std::vector<WeightedDegree> parts;
  for (const auto& f : p.facets()) {
    if (f.offset.is_zero()) continue;  // axis edges carry no semidegree
    RationalVector w;
    w.reserve(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i) w.push_back(Rational(f.normal[i]) / f.offset);
    parts.emplace_back(dom, std::move(w));
  }
  if (parts.empty()) fail(Errc::DegeneratePolytope, "polytope has no positive-offset facets");
  return Subdegree(std::move(parts));
}

DegreeValue eval_by_scaling(const RationalPolytope& p, const LaurentPolynomial& f) {
  if (f.domain() != p.ring_domain())
    fail(Errc::DomainMismatch, "polynomial ring does not match the polytope mode");
  if (f.is_zero()) return DegreeValue::neg_infinity();

  DegreeValue best = DegreeValue::neg_infinity();
  for (const auto& [alpha, coef] : f.terms()) {
    Rational r(0);
    for (const auto& facet : p.facets()) {
      Rational side(dot(facet.normal, alpha));
      if (facet.offset.is_zero()) {
        if (side.sign() > 0)
          fail(Errc::InternalInvariant, "support escapes a zero-offset facet halfspace");
        continue;
      }
      r = std::max(r, side / facet.offset);
    }
    best = max(best, DegreeValue(r));
  }
  return best;
}

std::vector<LatticeVector> lattice_points_scaled(const RationalPolytope& p, unsigned d) {
  const auto& verts = p.vertices();  // ConfigError when unavailable
  const std::size_t n = p.dim();

  Rational dd(static_cast<long>(d));
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    mn *= dd;
    mx *= dd;
    mpz_fdiv_q(lo[i].get_mpz_t(), mn.num().get_mpz_t(), mn.den().get_mpz_t());  // floor
    mpz_cdiv_q(hi[i].get_mpz_t(), mx.num().get_mpz_t(), mx.den().get_mpz_t());  // ceil
  }

  std::vector<LatticeVector> points;
  LatticeVector cursor(n);
  for (std::size_t i = 0; i < n; ++i) cursor[i] = lo[i];
  while (true) {
    bool inside = true;
    for (const auto& f : p.facets())
      if (Rational(dot(f.normal, cursor)) > f.offset * dd) {
        inside = false;
        break;
      }
    if (inside) points.push_back(cursor);

    std::size_t i = n;
    while (i-- > 0) {
      if (cursor[i] < hi[i]) {
        ++cursor[i];
        break;
      }
      cursor[i] = lo[i];
      if (i == 0) return points;
    }
  }
}

SemigroupResult semigroup_generators(const RationalPolytope& p, unsigned d_max) {
  if (d_max == 0) fail(Errc::ConfigError, "d_max must be positive");
  SemigroupResult result{{}, false};

  for (unsigned d = 1; d <= d_max; ++d) {
    // Minimal total degree reachable as a sum of the generators found so far.
    // Same-degree generators cannot reduce their peers (the budget saturates),
    // so the map can be built once per degree.
    std::map<LatticeVector, unsigned> reach;
    reach.emplace(LatticeVector(p.dim()), 0u);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [vec, deg] : std::map<LatticeVector, unsigned>(reach))
        for (const auto& [gvec, gdeg] : result.generators) {
          unsigned nd = deg + gdeg;
          if (nd > d) continue;
          LatticeVector sum = vec + gvec;
          auto it = reach.find(sum);
          if (it == reach.end() || it->second > nd) {
            reach[sum] = nd;
            grew = true;
          }
        }
    }

    auto points = lattice_points_scaled(p, d);
    std::sort(points.begin(), points.end(), graded_lex_less);
    std::size_t fresh = 0;
    for (const auto& alpha : points) {
      if (alpha.is_zero()) continue;
      auto it = reach.find(alpha);
      if (it != reach.end() && it->second <= d) continue;
      result.generators.emplace_back(alpha, d);
      ++fresh;
    }
    if (d == d_max) result.saturated = (fresh == 0);
  }
  return result;
}

}  // namespace deginf
