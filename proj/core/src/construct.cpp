#include "wulff/construct.hpp"

#include <algorithm>
#include <cmath>

namespace wulff {

namespace {

// Fibonacci lattice on S^2, as coefficients in a 3-dimensional basis.
std::vector<Vector> fibonacci_directions(int m) {
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Vector> out;
  for (int k = 0; k < m; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / m;
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vector v(3);
    v << rho * std::cos(golden * k), rho * std::sin(golden * k), z;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<Vector> tangent_directions(const UnitPoint& center, int m) {
  if (m < 1) throw GeometryError(ErrorCode::kInvalidArgument, "need at least one direction");
  const Matrix basis = orthonormal_complement(center.coords());
  const Eigen::Index t = basis.cols();
  std::vector<Vector> coeffs;
  if (t == 1) {
    coeffs = {Vector::Constant(1, 1.0), Vector::Constant(1, -1.0)};
  } else if (t == 2) {
    for (int k = 0; k < m; ++k) {
      const double phi = 2.0 * kPi * k / m;
      Vector v(2);
      v << std::cos(phi), std::sin(phi);
      coeffs.push_back(v);
    }
  } else if (t == 3) {
    coeffs = fibonacci_directions(std::max(m, 4));
  } else {
    for (Eigen::Index i = 0; i < t; ++i) {
      coeffs.push_back(Vector::Unit(t, i));
      coeffs.push_back(-Vector::Unit(t, i));
    }
    for (const UnitPoint& u : sample_sphere(static_cast<int>(t) - 1, 0x5eed, std::max(0, m - 2 * static_cast<int>(t)))) {
      coeffs.push_back(u.coords());
    }
  }
  std::vector<Vector> out;
  out.reserve(coeffs.size());
  for (const Vector& c : coeffs) out.push_back(basis * c);
  return out;
}

std::vector<UnitPoint> cap_ring(const UnitPoint& center, double radius, int m) {
  if (!(radius > 0.0 && radius < kHalfPi)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "cap radius must lie in (0, pi/2)");
  }
  std::vector<UnitPoint> out;
  for (const Vector& dir : tangent_directions(center, m)) {
    out.push_back(exp_map(center, dir, radius));
  }
  return out;
}

SphericalBody cap_polytope(const UnitPoint& center, double radius, int m) {
  return from_generators(cap_ring(center, radius, m));
}

std::vector<UnitPoint> regular_simplex_around(const UnitPoint& p, double radius) {
  const int n = p.sphere_dim();
  // Vertices e_i - centroid of the standard simplex in R^{n+1}, expressed in
  // an orthonormal basis of the hyperplane they span.
  const Matrix plane = orthonormal_complement(Vector::Ones(n + 1).normalized());
  const Matrix tangent = orthonormal_complement(p.coords());
  std::vector<UnitPoint> out;
  for (int i = 0; i <= n; ++i) {
    const Vector vertex = Vector::Unit(n + 1, i) - Vector::Constant(n + 1, 1.0 / (n + 1));
    const Vector dir = tangent * (plane.transpose() * vertex).normalized();
    out.push_back(exp_map(p, dir, radius));
  }
  return out;
}

SphericalBody dilate(const SphericalBody& body, double eps, int m) {
  if (!(eps > 0.0 && eps < kHalfPi)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "dilate: eps must lie in (0, pi/2)");
  }
  if (!is_hemispherical(body)) {
    throw GeometryError(ErrorCode::kNotHemispherical, "dilate: body is not pointed");
  }
  std::vector<UnitPoint> points;
  for (const auto& g : body.generators()) {
    const auto ring = cap_ring(g, eps, m);
    points.insert(points.end(), ring.begin(), ring.end());
  }
  return from_generators(points);
}

SphericalBody intersect(const SphericalBody& a, const SphericalBody& b) {
  require_same_dim(a.generators().front(), b.generators().front());
  if (body_subset(a, b)) return a;
  if (body_subset(b, a)) return b;
  std::vector<UnitPoint> normals = a.support_normals();
  normals.insert(normals.end(), b.support_normals().begin(), b.support_normals().end());
  try {
    return from_generators(dual_cone_convert(from_generators(normals).generators()));
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::kPolarEmpty) throw;
    throw GeometryError(ErrorCode::kDegenerate, "intersect: the bodies are disjoint");
  }
}

SphericalBody rotate(const SphericalBody& body, const Matrix& r) {
  if (r.rows() != body.space_dim() || r.cols() != body.space_dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "rotate: matrix size mismatch");
  }
  std::vector<UnitPoint> points;
  for (const auto& g : body.generators()) points.emplace_back(Vector(r * g.coords()));
  return from_generators(points);
}

Matrix plane_rotation(int dim, int i, int j, double angle) {
  if (i < 0 || j < 0 || i >= dim || j >= dim || i == j) {
    throw GeometryError(ErrorCode::kInvalidArgument, "plane_rotation: bad axes");
  }
  Matrix r = Matrix::Identity(dim, dim);
  r(i, i) = std::cos(angle);
  r(j, j) = std::cos(angle);
  r(i, j) = -std::sin(angle);
  r(j, i) = std::sin(angle);
  return r;
}

}  // namespace wulff
