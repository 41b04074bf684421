#include "deginf/toric.hpp"

#include <algorithm>

#include "deginf/cone.hpp"

namespace deginf {

namespace {

Integer det2(const LatticeVector& a, const LatticeVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// Decreasing slope v2/v1 (positive entries), i.e. decreasing angle.
bool canonical_normal_order(const LatticeVector& a, const LatticeVector& b) {
  return sgn(det2(a, b)) < 0 ? true : false;
}

int angle_sector(const LatticeVector& v) {
  int sx = sgn(v[0]), sy = sgn(v[1]);
  if (sx > 0 && sy >= 0) return 0;
  if (sx <= 0 && sy > 0) return 1;
  if (sx < 0 && sy <= 0) return 2;
  return 3;
}

bool ccw_angle_less(const LatticeVector& a, const LatticeVector& b) {
  int sa = angle_sector(a), sb = angle_sector(b);
  if (sa != sb) return sa < sb;
  return sgn(det2(a, b)) > 0;
}

}  // namespace

Polygon2::Polygon2(RationalPolytope poly) : poly_(std::move(poly)) {
  if (poly_.mode() != OriginMode::VertexOnAxes)
    fail(Errc::InvalidPolygon, "surface polygon must be in VERTEX_ON_AXES mode");
  for (const auto& f : poly_.facets()) {
    if (f.offset.is_zero()) continue;
    if (!f.normal.all_positive())
      fail(Errc::InvalidPolygon, "edge normal " + f.normal.str() + " is not positive");
    normals_.push_back(f.normal);
  }
  if (normals_.empty()) fail(Errc::InvalidPolygon, "polygon has no non-axis edges");
  for (std::size_t i = 0; i < normals_.size(); ++i)
    for (std::size_t j = i + 1; j < normals_.size(); ++j)
      if (sgn(det2(normals_[i], normals_[j])) == 0)
        fail(Errc::InvalidPolygon, "proportional edge normals");
  std::sort(normals_.begin(), normals_.end(), canonical_normal_order);
}

std::vector<LatticeVector> polygon_normals(const Polygon2& p) { return p.normals(); }

Fan2 complete_fan(const std::vector<LatticeVector>& normals) {
  Fan2 fan;
  fan.rays = normals;
  fan.rays.push_back(LatticeVector{-1, 0});
  fan.rays.push_back(LatticeVector{0, -1});
  for (auto& r : fan.rays) r = r.primitive();
  std::sort(fan.rays.begin(), fan.rays.end(), ccw_angle_less);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto& u = fan.rays[i];
    const auto& v = fan.rays[(i + 1) % fan.rays.size()];
    if (sgn(det2(u, v)) <= 0)
      fail(Errc::InvalidFan, "consecutive rays " + u.str() + ", " + v.str() +
                                 " are not positively oriented");
  }
  return fan;
}

RationalMatrix linking_matrix(const std::vector<RationalVector>& vs) {
  const std::size_t k = vs.size();
  const std::size_t n = k ? vs.front().size() : 0;
  for (const auto& v : vs) {
    if (v.size() != n) fail(Errc::DomainMismatch, "mixed dimensions in linking matrix input");
    for (const auto& x : v)
      if (x.sign() <= 0) fail(Errc::NotPositive, "linking matrix needs positive coordinates");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool proportional = true;
      for (std::size_t m = 1; m < n && proportional; ++m)
        proportional = (vs[i][0] * vs[j][m] == vs[j][0] * vs[i][m]);
      if (proportional) fail(Errc::ConfigError, "proportional vectors in linking matrix input");
    }

  RationalMatrix l(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational best = vs[j][0] / vs[i][0];
      for (std::size_t m = 1; m < n; ++m) best = std::max(best, vs[j][m] / vs[i][m]);
      l.at(i, j) = best;
    }
  return l;
}

RationalMatrix linking_matrix(const std::vector<LatticeVector>& vs) {
  std::vector<RationalVector> qs;
  qs.reserve(vs.size());
  for (const auto& v : vs) qs.push_back(rational_vector(v));
  return linking_matrix(qs);
}

LinkingIntersection intersection_via_linking(const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs)
    if (v.dim() != 2) fail(Errc::DomainMismatch, "surface route needs plane vectors");
  RationalMatrix l = linking_matrix(vs);
  Rational det_l = determinant(l);
  if (det_l.is_zero())
    fail(Errc::InternalInvariant,
         "singular linking matrix in the plane; these are provably invertible");

  RationalVector diag;
  diag.reserve(vs.size());
  for (const auto& v : vs) diag.push_back(Rational(Integer(1), v[0] * v[1]));
  RationalMatrix d = RationalMatrix::diagonal(diag);
  return {l, d, matrix_invert(l).inverse * d, det_l};
}

RationalMatrix intersection_via_fan(const Fan2& fan, const std::vector<LatticeVector>& curve_rays) {
  const std::size_t r = fan.rays.size();
  if (r < 3) fail(Errc::InvalidFan, "a complete fan needs at least three rays");
  std::vector<std::size_t> idx;
  for (const auto& c : curve_rays) {
    auto it = std::find(fan.rays.begin(), fan.rays.end(), c.primitive());
    if (it == fan.rays.end()) fail(Errc::InvalidFan, "curve ray " + c.str() + " not in the fan");
    idx.push_back(static_cast<std::size_t>(it - fan.rays.begin()));
  }

  auto self_intersection = [&](std::size_t i) {
    const auto& prev = fan.rays[(i + r - 1) % r];
    const auto& cur = fan.rays[i];
    const auto& next = fan.rays[(i + 1) % r];
    Rational numer(det2(prev, next));
    Rational denom(det2(prev, cur) * det2(cur, next));
    return -(numer / denom);
  };

  RationalMatrix m(curve_rays.size(), curve_rays.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (idx[a] == idx[b]) {
        m.at(a, b) = self_intersection(idx[a]);
      } else if ((idx[a] + 1) % r == idx[b]) {
        m.at(a, b) = Rational(Integer(1), det2(fan.rays[idx[a]], fan.rays[idx[b]]));
      } else if ((idx[b] + 1) % r == idx[a]) {
        m.at(a, b) = Rational(Integer(1), det2(fan.rays[idx[b]], fan.rays[idx[a]]));
      }  // else disjoint invariant curves: 0
    }
  return m;
}

IntersectionReport intersection_report(const Polygon2& p) {
  const auto& vs = p.normals();
  LinkingIntersection via_l = intersection_via_linking(vs);
  RationalMatrix via_fan = intersection_via_fan(complete_fan(vs), vs);
  bool agree = (via_l.intersection == via_fan);
  return {vs, via_l.linking, via_l.boundary, via_l.intersection, via_fan, via_l.det_linking,
          agree};
}

Rational linking_at_infinity_2d(const Subdegree& delta, const WeightedDegree& pole,
                                const std::array<std::array<long, 2>, 2>& map_matrix) {
  if (delta.domain.n != 2 || pole.weight.size() != 2)
    fail(Errc::DomainMismatch, "linking numbers are implemented exactly in the plane only");
  Integer det_m = Integer(map_matrix[0][0]) * map_matrix[1][1] -
                  Integer(map_matrix[0][1]) * map_matrix[1][0];
  if (sgn(det_m) == 0) fail(Errc::NotDominant, "map matrix is singular");

  std::vector<RationalVector> ws;
  for (const auto& part : delta.parts) {
    bool seen = false;
    for (const auto& w : ws) seen = seen || w == part.weight;
    if (!seen) ws.push_back(part.weight);
  }

  // Candidate rays: linearity breaks of delta (pair tie lines) plus the
  // domain-cone edges. Extrema and minima of the homogeneous ratio live here.
  std::vector<LatticeVector> candidates;
  const bool polynomial = delta.domain.mode == RingMode::Polynomial;
  if (polynomial) {
    candidates.push_back(LatticeVector{1, 0});
    candidates.push_back(LatticeVector{0, 1});
  }
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      RationalVector diff = ws[i] - ws[j];
      if (is_zero(diff)) continue;
      auto p = primitive_vector(diff).vector;
      LatticeVector rot{0, 0};
      rot[0] = -p[1];
      rot[1] = p[0];
      for (const auto& ray : {rot, -rot}) {
        if (polynomial && !ray.all_nonnegative()) continue;
        candidates.push_back(ray);
      }
    }

  auto delta_at = [&](const LatticeVector& a) {
    Rational best = dot(ws.front(), a);
    for (std::size_t i = 1; i < ws.size(); ++i) best = std::max(best, dot(ws[i], a));
    return best;
  };

  if (candidates.empty())
    fail(Errc::NotProjective, "degree function cannot be positive on the whole lattice");
  for (const auto& r : candidates)
    if (delta_at(r).sign() <= 0)
      fail(Errc::NotProjective, "degree function is not positive at " + r.str());

  auto pulled = [&](const LatticeVector& a) {
    LatticeVector image{0, 0};
    image[0] = Integer(map_matrix[0][0]) * a[0] + Integer(map_matrix[0][1]) * a[1];
    image[1] = Integer(map_matrix[1][0]) * a[0] + Integer(map_matrix[1][1]) * a[1];
    return dot(pole.weight, image);
  };

  Rational best = pulled(candidates.front()) / delta_at(candidates.front());
  for (const auto& r : candidates) best = std::max(best, pulled(r) / delta_at(r));
  return best;
}

Rational linking_lower_bound_sampled(const Subdegree& delta, const WeightedDegree& pole,
                                     const std::vector<LatticeVector>& map_rows, long cap) {
  const std::size_t n = delta.domain.n;
  if (map_rows.size() != pole.weight.size())
    fail(Errc::DomainMismatch, "map row count differs from the pole dimension");
  for (const auto& row : map_rows)
    if (row.dim() != n) fail(Errc::DomainMismatch, "map row of wrong dimension");
  if (cap < 1) fail(Errc::ConfigError, "sampling cap must be positive");

  const long lo = delta.domain.mode == RingMode::Laurent ? -cap : 0;
  std::vector<long> cursor(n, lo);
  std::optional<Rational> best;
  while (true) {
    LatticeVector alpha(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = cursor[i];
    if (!alpha.is_zero()) {
      DegreeValue dv = eval_subdegree(delta, LaurentPolynomial::monomial(delta.domain, alpha));
      if (dv.value().sign() > 0) {
        LatticeVector image(map_rows.size());
        for (std::size_t i = 0; i < map_rows.size(); ++i) image[i] = dot(map_rows[i], alpha);
        Rational ratio = dot(pole.weight, image) / dv.value();
        if (!best || ratio > *best) best = ratio;
      }
    }
    std::size_t i = n;
    bool done = true;
    while (i-- > 0) {
      if (cursor[i] < cap) {
        ++cursor[i];
        done = false;
        break;
      }
      cursor[i] = lo;
    }
    if (done) break;
  }
  if (!best) fail(Errc::NotProjective, "no positive degree value in the sampling box");
  return *best;
}

NefResult nef_membership(const std::vector<LatticeVector>& vs, const RationalVector& m) {
  const std::size_t k = vs.size();
  if (m.size() != k) fail(Errc::DomainMismatch, "coefficient count differs from curve count");
  for (const auto& c : m)
    if (c.sign() <= 0) fail(Errc::NotPositive, "nef test needs positive coefficients");

  // Witness route: a monomial per part with <v_i, a>/m_i >= <v_j, a>/m_j.
  NefResult result;
  result.certificates.resize(k);
  bool nef_witness = true;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<RationalVector> rows;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      rows.push_back(scale(rational_vector(vs[i]), m[i].reciprocal()) -
                     scale(rational_vector(vs[j]), m[j].reciprocal()));
    }
    result.certificates[i] = nonneg_cone_ray_2d(rows);
    nef_witness = nef_witness && result.certificates[i].has_value();
  }

  // Intersection route.
  LinkingIntersection li = intersection_via_linking(vs);
  result.intersection_values = li.intersection * m;
  bool nef_intersection = true, ample = true;
  for (const auto& x : result.intersection_values) {
    if (x.sign() < 0) nef_intersection = false;
    if (x.sign() <= 0) ample = false;
  }

  if (nef_witness != nef_intersection)
    fail(Errc::InternalInvariant, "nef witness route and intersection route disagree");
  result.nef = nef_intersection;
  result.ample = nef_intersection && ample;
  return result;
}

bool ampleness_at_infinity(const Polygon2& p) {
  const auto& vs = p.normals();

  // Divisor-at-infinity coefficients 1/d_j, aligned with the canonical
  // normal order: the part of normal v has weight v/c, scaled by e.
  std::vector<Rational> offsets;
  for (const auto& v : vs) {
    bool found = false;
    for (const auto& f : p.polytope().facets())
      if (f.normal == v) {
        offsets.push_back(f.offset);
        found = true;
      }
    if (!found) fail(Errc::InternalInvariant, "polygon normal lost its facet");
  }

  Integer e = 1;
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < 2; ++i) e = lcm(e, (Rational(vs[j][i]) / offsets[j]).den());

  RationalVector m;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    LatticeVector scaled{0, 0};
    for (std::size_t i = 0; i < 2; ++i) {
      Rational x = Rational(vs[j][i]) / offsets[j] * Rational(e);
      scaled[i] = x.num();
    }
    m.push_back(Rational(Integer(1), scaled.content()));
  }
  return nef_membership(vs, m).ample;
}

}  // namespace deginf
