#ifndef WULFF_GEOMETRY_HPP
#define WULFF_GEOMETRY_HPP

#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "wulff/errors.hpp"

namespace wulff {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Tolerance hierarchy: ray identity > membership > construction.
namespace tol {
inline constexpr double kConstruction = 1e-12;
inline constexpr double kMembership = 1e-10;
inline constexpr double kRayIdentity = 1e-9;
// Strict inequalities of the form "> 0" are evaluated as ">= kStrict".
inline constexpr double kStrict = 1e-9;
// Vectors shorter than this are rejected when normalizing.
inline constexpr double kZeroVector = 1e-9;
}  // namespace tol

/// A geodesic length in radians, always within [0, pi].
class Angle {
 public:
  constexpr Angle() = default;
  /// Values within 1e-12 outside [0, pi] are clamped; anything further out
  /// throws kInvalidArgument.
  explicit Angle(double radians);

  constexpr double radians() const { return radians_; }

  friend constexpr bool operator==(Angle, Angle) = default;
  friend constexpr auto operator<=>(Angle a, Angle b) {
    return a.radians_ <=> b.radians_;
  }

 private:
  double radians_ = 0.0;
};

/// A point of S^n stored as a unit vector of R^{n+1}.
class UnitPoint {
 public:
  /// Normalizes `coords`. Throws kDegenerate when the norm is below
  /// tol::kZeroVector and kInvalidArgument for fewer than two coordinates.
  /// Coordinates already unit to within 4 ulp keep their exact bits.
  explicit UnitPoint(const Vector& coords);
  UnitPoint(std::initializer_list<double> coords);

  /// n, the dimension of the sphere.
  int sphere_dim() const { return static_cast<int>(coords_.size()) - 1; }
  /// n + 1, the dimension of the ambient Euclidean space.
  int space_dim() const { return static_cast<int>(coords_.size()); }

  const Vector& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }
  double dot(const UnitPoint& other) const { return coords_.dot(other.coords_); }

  UnitPoint antipode() const;

  friend bool operator==(const UnitPoint& a, const UnitPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  Vector coords_;
};

/// Strict lexicographic order on coordinates; used for canonical ordering.
bool lexicographic_less(const Vector& a, const Vector& b);

void require_same_dim(const UnitPoint& p, const UnitPoint& q);

/// Great-circle distance, computed as atan2(|q - (p.q) p|, p.q).
Angle geodesic_distance(const UnitPoint& p, const UnitPoint& q);
/// Same formula on raw unit vectors; no dimension checks.
double geodesic_distance(const Vector& p, const Vector& q);

/// Normalized chord point ((1-t)p + tq) / |(1-t)p + tq|, t in [0, 1].
/// Throws kDegenerate for antipodal p, q.
UnitPoint arc_point(const UnitPoint& p, const UnitPoint& q, double t);

/// center.q >= -tolerance, i.e. q lies in the closed hemisphere H(center).
bool hemisphere_contains(const UnitPoint& center, const UnitPoint& q,
                         double tolerance = tol::kMembership);

/// Orthonormal basis (as columns) of the orthogonal complement of `v`.
Matrix orthonormal_complement(const Vector& v);

/// Point at geodesic distance `radius` from `center` in the unit tangent
/// direction `tangent` (tangent must be orthogonal to center).
UnitPoint exp_map(const UnitPoint& center, const Vector& tangent, double radius);

/// `count` points uniformly distributed (area measure) in the open cap of
/// geodesic radius `radius` around `center`. Deterministic in `seed`.
/// Requires 0 < radius < pi/2 and count >= 1.
std::vector<UnitPoint> sample_cap(const UnitPoint& center, Angle radius,
                                  std::uint64_t seed, int count);

/// `count` points uniformly distributed on the whole of S^n.
std::vector<UnitPoint> sample_sphere(int sphere_dim, std::uint64_t seed,
                                     int count);

/// Cumulative (unnormalized) area of a cap of geodesic radius `theta` on S^n,
/// i.e. the integral of sin^{n-1} from 0 to theta.
double cap_area_integral(int sphere_dim, double theta);

}  // namespace wulff

#endif  // WULFF_GEOMETRY_HPP
