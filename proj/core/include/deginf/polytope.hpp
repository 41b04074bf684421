#ifndef DEGINF_POLYTOPE_HPP
#define DEGINF_POLYTOPE_HPP

#include <vector>

#include "deginf/degree.hpp"
#include "deginf/lattice.hpp"

namespace deginf {

/// Supporting halfspace <normal, x> <= offset with a primitive outward normal.
struct Facet {
  LatticeVector normal;
  Rational offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Interior: origin strictly inside (the Laurent-ring construction).
/// VertexOnAxes: the plane polygon with one vertex at the origin, two edges
/// along the axes and negative-slope edges elsewhere (the polynomial-ring
/// construction).
enum class OriginMode { Interior, VertexOnAxes };

class RationalPolytope {
 public:
  static RationalPolytope from_vertices(std::size_t n, OriginMode mode,
                                        std::vector<RationalVector> vertices);
  static RationalPolytope from_facets(std::size_t n, OriginMode mode, std::vector<Facet> facets);
  static RationalPolytope from_both(std::size_t n, OriginMode mode,
                                    std::vector<RationalVector> vertices,
                                    std::vector<Facet> facets);

  std::size_t dim() const { return n_; }
  OriginMode mode() const { return mode_; }
  const std::vector<Facet>& facets() const { return facets_; }
  bool has_vertices() const { return !vertices_.empty(); }
  const std::vector<RationalVector>& vertices() const;

  /// Ring the polytope's degree function lives on: Laurent for Interior mode,
  /// polynomial for VertexOnAxes.
  RingDomain ring_domain() const;

 private:
  RationalPolytope() = default;
  void validate_mode() const;

  std::size_t n_ = 0;
  OriginMode mode_ = OriginMode::Interior;
  std::vector<RationalVector> vertices_;  // may be empty for n > 3 H-rep input
  std::vector<Facet> facets_;
};

/// Complete H-representation of the hull of full-dimensional point sets,
/// n in {2, 3}. 2-D by monotone-chain edge walking, 3-D by exhaustive
/// supporting-plane search over vertex triples.
std::vector<Facet> facets_from_vertices(std::size_t n, const std::vector<RationalVector>& vertices);

/// Vertex recovery from an H-representation (n <= 3): feasible intersections
/// of n facet hyperplanes.
std::vector<RationalVector> vertices_from_facets(std::size_t n, const std::vector<Facet>& facets);

/// One weighted part normal/offset per facet with positive offset; the axis
/// facets of VertexOnAxes mode carry no part.
Subdegree subdegree_from_polytope(const RationalPolytope& p);

/// inf{r >= 0 : supp(f) in r*P} straight from the H-representation. Kept
/// deliberately separate from the subdegree route so the two can oracle each
/// other.
DegreeValue eval_by_scaling(const RationalPolytope& p, const LaurentPolynomial& f);

/// All lattice points of d*P (bounding-box scan; Unbounded when the
/// recession cone is nontrivial).
std::vector<LatticeVector> lattice_points_scaled(const RationalPolytope& p, unsigned d);

/// Greedy saturation of the graded point semigroup {(alpha, d) : alpha in dP}:
/// a point is a generator iff it is not a sum of earlier generators within the
/// degree budget (the degree marker (0, 1) is implicit). saturated reports
/// whether degree d_max produced no new generators.
struct SemigroupResult {
  std::vector<std::pair<LatticeVector, unsigned>> generators;
  bool saturated;
};
SemigroupResult semigroup_generators(const RationalPolytope& p, unsigned d_max);

}  // namespace deginf

#endif
