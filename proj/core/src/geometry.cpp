#include "wulff/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace wulff {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kPolarEmpty: return "polar-empty";
    case ErrorCode::kNotAWulffShape: return "not-a-wulff-shape";
    case ErrorCode::kNotHemispherical: return "not-hemispherical";
    case ErrorCode::kNoSeparator: return "no-separator";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

Angle::Angle(double radians) {
  if (!(radians >= -tol::kConstruction && radians <= kPi + tol::kConstruction)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "angle " + std::to_string(radians) + " outside [0, pi]");
  }
  radians_ = std::clamp(radians, 0.0, kPi);
}

UnitPoint::UnitPoint(const Vector& coords) : coords_(coords) {
  if (coords_.size() < 2) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "a point of S^n needs at least two coordinates");
  }
  if (!coords_.allFinite()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "non-finite coordinate");
  }
  const double norm = coords_.norm();
  if (norm < tol::kZeroVector) {
    throw GeometryError(ErrorCode::kDegenerate,
                        "cannot normalize a near-zero vector");
  }
  if (std::abs(norm - 1.0) > 4.0 * std::numeric_limits<double>::epsilon()) {
    coords_ /= norm;
  }
}

UnitPoint::UnitPoint(std::initializer_list<double> coords)
    : UnitPoint(Vector(Eigen::Map<const Vector>(
          coords.begin(), static_cast<Eigen::Index>(coords.size())))) {}

UnitPoint UnitPoint::antipode() const { return UnitPoint(Vector(-coords_)); }

bool lexicographic_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

void require_same_dim(const UnitPoint& p, const UnitPoint& q) {
  if (p.space_dim() != q.space_dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch,
                        "points live on S^" + std::to_string(p.sphere_dim()) +
                            " and S^" + std::to_string(q.sphere_dim()));
  }
}

double geodesic_distance(const Vector& p, const Vector& q) {
  // Half-angle form: symmetric in p, q and well conditioned near 0 and pi.
  return 2.0 * std::atan2((p - q).norm(), (p + q).norm());
}

Angle geodesic_distance(const UnitPoint& p, const UnitPoint& q) {
  require_same_dim(p, q);
  return Angle(geodesic_distance(p.coords(), q.coords()));
}

UnitPoint arc_point(const UnitPoint& p, const UnitPoint& q, double t) {
  require_same_dim(p, q);
  if (!(t >= 0.0 && t <= 1.0)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "arc parameter outside [0, 1]");
  }
  if (geodesic_distance(p.coords(), q.coords()) >= kPi - tol::kConstruction) {
    throw GeometryError(ErrorCode::kDegenerate, "arc between antipodal points");
  }
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  return UnitPoint(Vector((1.0 - t) * p.coords() + t * q.coords()));
}

bool hemisphere_contains(const UnitPoint& center, const UnitPoint& q,
                         double tolerance) {
  require_same_dim(center, q);
  return center.dot(q) >= -tolerance;
}

Matrix orthonormal_complement(const Vector& v) {
  const auto d = v.size();
  Eigen::HouseholderQR<Matrix> qr(v);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return q.rightCols(d - 1);
}

UnitPoint exp_map(const UnitPoint& center, const Vector& tangent, double radius) {
  return UnitPoint(Vector(std::cos(radius) * center.coords() +
                          std::sin(radius) * tangent));
}

double cap_area_integral(int sphere_dim, double theta) {
  // I_m(t) = int_0^t sin^m, with I_0 = t, I_1 = 1 - cos t and
  // I_m = (-sin^{m-1} cos + (m-1) I_{m-2}) / m.
  const int m = sphere_dim - 1;
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  double prev2 = theta;         // I_0
  double prev1 = 1.0 - c;       // I_1
  if (m == 0) return prev2;
  if (m == 1) return prev1;
  double cur = 0.0;
  for (int k = 2; k <= m; ++k) {
    cur = (-std::pow(s, k - 1) * c + (k - 1) * prev2) / k;
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

namespace {

Vector gaussian_vector(std::mt19937_64& rng, Eigen::Index size) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(size);
  for (Eigen::Index i = 0; i < size; ++i) v[i] = normal(rng);
  return v;
}

Vector random_unit(std::mt19937_64& rng, Eigen::Index size) {
  for (;;) {
    Vector v = gaussian_vector(rng, size);
    const double n = v.norm();
    if (n > 1e-6) return v / n;
  }
}

}  // namespace

std::vector<UnitPoint> sample_cap(const UnitPoint& center, Angle radius,
                                  std::uint64_t seed, int count) {
  const double rho = radius.radians();
  if (!(rho > 0.0 && rho < kHalfPi)) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "cap radius must lie in (0, pi/2)");
  }
  if (count < 1) {
    throw GeometryError(ErrorCode::kInvalidArgument, "count must be >= 1");
  }
  const int n = center.sphere_dim();
  const Matrix tangent_basis = orthonormal_complement(center.coords());
  const double total = cap_area_integral(n, rho);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<UnitPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const Vector dir = tangent_basis * random_unit(rng, n);
    // Invert the radial CDF by bisection; the open cap excludes rho itself.
    const double target = uniform(rng) * total;
    double lo = 0.0, hi = rho;
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (cap_area_integral(n, mid) < target ? lo : hi) = mid;
    }
    double theta = 0.5 * (lo + hi);
    theta = std::min(theta, std::nextafter(rho, 0.0));
    out.push_back(exp_map(center, dir, theta));
  }
  return out;
}

std::vector<UnitPoint> sample_sphere(int sphere_dim, std::uint64_t seed,
                                     int count) {
  if (sphere_dim < 1 || count < 1) {
    throw GeometryError(ErrorCode::kInvalidArgument,
                        "sample_sphere needs sphere_dim >= 1 and count >= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<UnitPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.emplace_back(random_unit(rng, sphere_dim + 1));
  }
  return out;
}

}  // namespace wulff
