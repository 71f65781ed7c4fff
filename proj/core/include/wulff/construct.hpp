#ifndef WULFF_CONSTRUCT_HPP
#define WULFF_CONSTRUCT_HPP

#include "wulff/body.hpp"

// Builders for polytopal bodies: cap approximants, dilations, intersections
// and rigid motions.

namespace wulff {

/// Unit directions spread over the unit sphere of the tangent space at
/// `center` (expressed in ambient coordinates): m equally spaced directions
/// on S^1, a Fibonacci lattice on S^2, +/- axes plus a fixed lattice above.
std::vector<Vector> tangent_directions(const UnitPoint& center, int m);

/// Points at geodesic distance `radius` from `center` in the directions of
/// tangent_directions(center, m); on S^1 the two points at +/- radius.
std::vector<UnitPoint> cap_ring(const UnitPoint& center, double radius, int m);

/// Hull of cap_ring: a polytope inscribed in the closed cap B(center, radius).
SphericalBody cap_polytope(const UnitPoint& center, double radius, int m);

/// The n+1 vertices of a regular simplex of circumradius `radius` around p.
std::vector<UnitPoint> regular_simplex_around(const UnitPoint& p, double radius);

/// Hull of rings of radius eps around every generator. Its vertices lie in
/// B(body, eps), but the hull can bulge past it (spherical dilations are not
/// convex in general). Requires a pointed body and 0 < eps < pi/2.
SphericalBody dilate(const SphericalBody& body, double eps, int m);

/// a ∩ b. Throws kDegenerate when the intersection is empty.
SphericalBody intersect(const SphericalBody& a, const SphericalBody& b);

/// The body with every generator mapped through the orthogonal matrix r.
SphericalBody rotate(const SphericalBody& body, const Matrix& r);

/// Rotation by `angle` in the coordinate plane (i, j) of R^dim.
Matrix plane_rotation(int dim, int i, int j, double angle);

}  // namespace wulff

#endif  // WULFF_CONSTRUCT_HPP
