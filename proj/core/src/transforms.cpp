#include "wulff/transforms.hpp"

#include <algorithm>
#include <cassert>

#include "wulff/nnls.hpp"

namespace wulff {

bool polar_admissible(const SphericalBody& body) {
  return !body.support_normals().empty();
}

SphericalBody polar(const SphericalBody& body) {
  return from_generators(dual_cone_convert(body.generators()));
}

SphericalBody dual_wulff(const SphericalBody& body, const UnitPoint& p) {
  if (!is_wulff_relative(body, p)) {
    throw GeometryError(ErrorCode::kNotAWulffShape,
                        "dual_wulff: body is not a Wulff shape relative to p");
  }
  SphericalBody dual = polar(body);
  if (!is_wulff_relative(dual, p)) {
    throw GeometryError(ErrorCode::kNotAWulffShape,
                        "dual_wulff: dual lost the Wulff property (ill-conditioned input)");
  }
  return dual;
}

SphericalBody spherical_hull(std::span<const UnitPoint> points) {
  if (points.empty()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "spherical_hull: no points");
  }
  const Matrix rows = rows_of(points);
  const LdpResult ldp = least_distance(rows, Vector::Ones(rows.rows()));
  if (!ldp.feasible || (rows * ldp.x.normalized()).minCoeff() < tol::kStrict) {
    throw GeometryError(ErrorCode::kNotHemispherical,
                        "spherical_hull: points are not contained in an open hemisphere");
  }
  SphericalBody hull = from_generators(points);
  assert(bodies_equal(hull, double_polar(hull), Angle(1e-10)));
  return hull;
}

SphericalBody double_polar(const SphericalBody& body) { return polar(polar(body)); }

double antitone_defect(const SphericalBody& a, const SphericalBody& b) {
  const SphericalBody pa = polar(a);
  const SphericalBody pb = polar(b);
  double worst = 0.0;
  for (const auto& g : pb.generators()) {
    worst = std::max(worst, containment_defect(pa, g.coords()));
  }
  return worst;
}

bool polar_antitone_check(const SphericalBody& a, const SphericalBody& b) {
  require_same_dim(a.generators().front(), b.generators().front());
  if (!body_subset(a, b)) {
    throw GeometryError(ErrorCode::kPrecondition, "polar_antitone_check: a is not inside b");
  }
  if (!polar_admissible(a) || !polar_admissible(b)) {
    throw GeometryError(ErrorCode::kPolarEmpty, "polar_antitone_check: empty polar");
  }
  return antitone_defect(a, b) <= tol::kMembership;
}

}  // namespace wulff
