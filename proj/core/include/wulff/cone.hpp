#ifndef WULFF_CONE_HPP
#define WULFF_CONE_HPP

#include <span>
#include <vector>

#include "wulff/geometry.hpp"

// Polyhedral-cone primitives shared by the body, transforms and metric
// modules. Cones are given by their generators as rows of a matrix.

namespace wulff {

/// Numerical rank: number of singular values above `tolerance`.
int numeric_rank(const Matrix& m, double tolerance = tol::kRayIdentity);

/// Orthonormal basis (columns) of {x : rows * x = 0}.
Matrix null_space(const Matrix& rows, double tolerance = tol::kRayIdentity);

/// Orthonormal basis (columns) of the column span of `spanning`.
Matrix span_basis(const Matrix& spanning, double tolerance = tol::kRayIdentity);

/// Canonical orthonormal basis of the column span of `spanning`: the reduced
/// row echelon form of the subspace's orthogonal projector, followed by
/// Gram-Schmidt in pivot order. Equal subspaces give equal bases.
Matrix canonical_subspace_basis(const Matrix& spanning,
                                double tolerance = tol::kRayIdentity);

/// Extreme rays of the pointed cone {y : a y >= 0}; `a` must have full
/// column rank. Incremental double-description method. Rays are unit.
std::vector<Vector> extreme_rays_pointed(const Matrix& a);

/// The dual cone {q : q.g >= 0 for every generator row g} split into its
/// lineality space and the extreme rays of its pointed part (which lies in
/// the orthogonal complement of the lineality space).
struct DualConeParts {
  Matrix lineality;          // canonical orthonormal basis, one column each
  std::vector<Vector> rays;  // unit extreme rays of the pointed part
  bool is_zero() const { return lineality.cols() == 0 && rays.empty(); }
};

DualConeParts dual_cone_parts(const Matrix& generator_rows);

/// Generators of the dual cone, in the convention "+/- lineality basis, then
/// pointed rays", sorted lexicographically. Throws kPolarEmpty when the dual
/// cone is {0}.
std::vector<UnitPoint> dual_cone_convert(std::span<const UnitPoint> generators);

/// Stacks the coordinates of `points` as rows.
Matrix rows_of(std::span<const UnitPoint> points);

/// A face of a polyhedral cone: indices into the generator list, an
/// orthonormal basis of its linear span and its dimension (as a cone).
struct Face {
  std::vector<int> generators;
  Matrix basis;
  int dim = 0;
};

/// All nonempty faces (including the cone itself), obtained as intersections
/// of the generator sets active on each support normal.
std::vector<Face> enumerate_faces(const Matrix& generator_rows,
                                  const Matrix& normal_rows,
                                  double activity_tolerance = tol::kRayIdentity);

}  // namespace wulff

#endif  // WULFF_CONE_HPP
