#ifndef WULFF_BODY_HPP
#define WULFF_BODY_HPP

#include <optional>
#include <span>
#include <vector>

#include "wulff/cone.hpp"
#include "wulff/geometry.hpp"

namespace wulff {

/// A closed spherically convex subset of S^n: the cap cone(generators) ∩ S^n
/// of a polyhedral cone, stored with both its generators (V-representation)
/// and its support normals (H-representation, the generators of the dual
/// cone).
///
/// Non-pointed cones store their lineality space as +/- pairs of a canonical
/// orthonormal basis; lower-dimensional bodies therefore carry +/- normals
/// spanning the orthogonal complement of their linear span, which makes the
/// span condition part of ordinary normal tests. The whole sphere has no
/// support normals.
class SphericalBody {
 public:
  /// Unchecked constructor; prefer from_generators(). Both lists must share
  /// one dimension and generators must be nonempty.
  SphericalBody(std::vector<UnitPoint> generators,
                std::vector<UnitPoint> support_normals, bool canonical);

  int sphere_dim() const { return generators_.front().sphere_dim(); }
  int space_dim() const { return generators_.front().space_dim(); }

  const std::vector<UnitPoint>& generators() const { return generators_; }
  const std::vector<UnitPoint>& support_normals() const { return normals_; }
  bool canonical() const { return canonical_; }

  /// Generators / normals stacked as rows.
  const Matrix& generator_rows() const { return generator_rows_; }
  const Matrix& normal_rows() const { return normal_rows_; }

  /// Dimension of the linear span of the cone.
  int rank() const { return rank_; }

 private:
  std::vector<UnitPoint> generators_;
  std::vector<UnitPoint> normals_;
  Matrix generator_rows_;
  Matrix normal_rows_;
  int rank_ = 0;
  bool canonical_ = false;
};

/// Canonical body whose point set is cone(points) ∩ S^n (the spherical
/// convex hull when the points are hemispherical).
SphericalBody from_generators(std::span<const UnitPoint> points);
SphericalBody from_generators(std::initializer_list<UnitPoint> points);

/// The closed hemisphere H(center).
SphericalBody hemisphere_body(const UnitPoint& center);

/// Redundancy-free, lexicographically ordered form; idempotent.
SphericalBody canonicalize(const SphericalBody& body);

/// u.q >= -tol::kMembership for every support normal u.
bool contains(const SphericalBody& body, const UnitPoint& q);

/// max(0, -min_u u.q): how far q violates the H-representation.
double containment_defect(const SphericalBody& body, const Vector& q);

/// Every generator of `inner` is contained in `outer`.
bool body_subset(const SphericalBody& inner, const SphericalBody& outer);

/// A q with q.g >= tol::kStrict for every generator g, verified before it is
/// returned; nullopt when the cone is not pointed.
std::optional<UnitPoint> hemisphere_witness(const SphericalBody& body);

bool is_hemispherical(const SphericalBody& body);

/// Full-dimensional cone with a strictly interior ray.
bool has_interior(const SphericalBody& body);

/// min(p.g over generators, u.p over normals), or -infinity when the body is
/// not full-dimensional. Positive exactly when W ∩ H(-p) is empty and p is
/// an interior point.
double wulff_margin(const SphericalBody& body, const UnitPoint& p);

/// wulff_margin(body, p) >= tol::kStrict.
bool is_wulff_relative(const SphericalBody& body, const UnitPoint& p);

/// Generator lists match as sets, pairwise within `tolerance` radians.
bool bodies_equal(const SphericalBody& a, const SphericalBody& b,
                  Angle tolerance = Angle(tol::kRayIdentity));

/// Hausdorff distance between the two finite generator sets; used to report
/// how far apart two representations are.
double generator_set_distance(const SphericalBody& a, const SphericalBody& b);

/// Faces of the cone (see enumerate_faces).
std::vector<Face> body_faces(const SphericalBody& body);

}  // namespace wulff

#endif  // WULFF_BODY_HPP
