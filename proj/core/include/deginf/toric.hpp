#ifndef DEGINF_TORIC_HPP
#define DEGINF_TORIC_HPP

#include <array>
#include <optional>
#include <vector>

#include "deginf/degree.hpp"
#include "deginf/matrix.hpp"
#include "deginf/polytope.hpp"

namespace deginf {

/// The plane polygon of the surface construction plus its non-axis primitive
/// normals in canonical order (decreasing slope v2/v1, i.e. sweeping from near
/// (0,1) toward (1,0)).
class Polygon2 {
 public:
  explicit Polygon2(RationalPolytope poly);

  const RationalPolytope& polytope() const { return poly_; }
  const std::vector<LatticeVector>& normals() const { return normals_; }

 private:
  RationalPolytope poly_;
  std::vector<LatticeVector> normals_;
};

std::vector<LatticeVector> polygon_normals(const Polygon2& p);

/// Complete fan of primitive rays in counter-clockwise order with positive
/// consecutive determinants. Carrier for the intersection-number oracle.
struct Fan2 {
  std::vector<LatticeVector> rays;
};

/// Closure of the positive normals by the rays (-1, 0) and (0, -1).
Fan2 complete_fan(const std::vector<LatticeVector>& normals);

/// Max-ratio matrix l_ij = max_m v_jm / v_im for positive pairwise
/// non-proportional vectors.
RationalMatrix linking_matrix(const std::vector<RationalVector>& vs);
RationalMatrix linking_matrix(const std::vector<LatticeVector>& vs);

/// 'L I = D' route: D_jj = 1/(v_j1 * v_j2), I = L^{-1} D.
struct LinkingIntersection {
  RationalMatrix linking;       // L
  RationalMatrix boundary;      // D (diagonal)
  RationalMatrix intersection;  // I
  Rational det_linking;
};
LinkingIntersection intersection_via_linking(const std::vector<LatticeVector>& vs);

/// Fan route: the standard simplicial-surface determinant formulas. For
/// consecutive rays u_prev, u, u_next the curve of u has self-intersection
/// -det(u_prev, u_next) / (det(u_prev, u) * det(u, u_next)); adjacent curves
/// meet in 1/det, non-adjacent invariant curves in 0.
RationalMatrix intersection_via_fan(const Fan2& fan, const std::vector<LatticeVector>& curve_rays);

/// Both routes side by side; agree demands exact entrywise equality.
struct IntersectionReport {
  std::vector<LatticeVector> normals;
  RationalMatrix linking;           // L
  RationalMatrix boundary;          // D
  RationalMatrix intersection_linking;
  RationalMatrix intersection_fan;
  Rational det_linking;
  bool agree;
};
IntersectionReport intersection_report(const Polygon2& p);

/// Linking number at infinity in the plane: the exact supremum of
/// <w_pole, M alpha> / delta(alpha) over nonzero lattice points of the domain
/// cone. delta must be strictly positive there (checked); extrema of the
/// piecewise linear/linear ratio sit on tie rays and domain edges, which makes
/// the computation a finite exact scan.
Rational linking_at_infinity_2d(const Subdegree& delta, const WeightedDegree& pole,
                                const std::array<std::array<long, 2>, 2>& map_matrix);
inline Rational linking_at_infinity_2d(const WeightedDegree& delta, const WeightedDegree& pole,
                                       const std::array<std::array<long, 2>, 2>& map_matrix) {
  return linking_at_infinity_2d(Subdegree({delta}), pole, map_matrix);
}

/// Sampled lower bound for the linking number in any dimension: maximizes the
/// ratio over lattice points of the domain cone with |alpha|_inf <= cap.
/// A lower bound only -- exact maximization is offered in the plane by
/// linking_at_infinity_2d; callers must treat this value as approximate.
Rational linking_lower_bound_sampled(const Subdegree& delta, const WeightedDegree& pole,
                                     const std::vector<LatticeVector>& map_rows, long cap);

/// Nef membership of D = sum m_i C_i by two independent routes that must
/// agree: per-part witness monomials (LP route) versus nonnegativity of I*m
/// (intersection route). Ample iff all intersection values are positive.
struct NefResult {
  bool nef;
  bool ample;
  std::vector<std::optional<LatticeVector>> certificates;  // witness per part
  RationalVector intersection_values;                      // I * m
};
NefResult nef_membership(const std::vector<LatticeVector>& vs, const RationalVector& m);

/// Nef/ample test of the divisor at infinity with its 1/d_j coefficients;
/// returns the ample flag.
bool ampleness_at_infinity(const Polygon2& p);

}  // namespace deginf

#endif
