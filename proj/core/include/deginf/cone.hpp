#ifndef DEGINF_CONE_HPP
#define DEGINF_CONE_HPP

#include <optional>
#include <vector>

#include "deginf/lattice.hpp"
#include "deginf/laurent.hpp"

namespace deginf {

/// One linear constraint <coeffs, x> >= rhs.
struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
};

/// Exact Fourier-Motzkin feasibility over Q. Returns a satisfying point or
/// nullopt. Intended for the handful of low-dimensional systems this project
/// needs; constraint growth is not a concern at that scale.
std::optional<RationalVector> fm_feasible(std::vector<LinearConstraint> constraints,
                                          std::size_t num_vars);

/// Integer point alpha != 0 in the domain lattice with <r, alpha> > 0 for every
/// row, or nullopt. Solved as LP feasibility of the homogenized system
/// <r, alpha> >= t, t >= 1 (plus alpha >= 0 in polynomial mode); a rational
/// solution is cleared to a primitive integer one.
std::optional<LatticeVector> strict_cone_feasible(const std::vector<RationalVector>& strict_rows,
                                                  const RingDomain& domain);

/// Nonzero lattice point of the closed cone {alpha >= 0, <r, alpha> >= 0 for
/// all rows} in the plane, or nullopt when the cone is {0}. Exact: a nonzero
/// 2-D rational cone always has an extreme ray lying on some constraint line,
/// so scanning the rotated constraint normals (plus the axes) is exhaustive.
std::optional<LatticeVector> nonneg_cone_ray_2d(const std::vector<RationalVector>& rows);

/// True when {d : <row, d> <= 0 for all rows} contains a nonzero vector;
/// used as the recession-cone test behind Unbounded errors.
bool nonpositive_cone_has_ray(const std::vector<RationalVector>& rows, std::size_t num_vars);

}  // namespace deginf

#endif
