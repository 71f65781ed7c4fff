#include "wulff/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wulff/nnls.hpp"

namespace wulff {

namespace {

// Recomputed vectors this close to an input vector keep the input's bits, so
// canonicalization is idempotent bit for bit.
constexpr double kSnap = 1e-14;

void sort_lexicographic(std::vector<UnitPoint>& points) {
  std::sort(points.begin(), points.end(), [](const UnitPoint& a, const UnitPoint& b) {
    return lexicographic_less(a.coords(), b.coords());
  });
}

UnitPoint snapped(const Vector& v, std::span<const Vector> originals) {
  for (const Vector& o : originals) {
    if ((o - v).norm() <= kSnap) return UnitPoint(o);
  }
  return UnitPoint(v);
}

std::vector<Vector> deduplicate(std::span<const UnitPoint> points) {
  std::vector<Vector> out;
  for (const auto& p : points) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Vector& v) {
      return geodesic_distance(v, p.coords()) <= tol::kRayIdentity;
    });
    if (!seen) out.push_back(p.coords());
  }
  return out;
}

Matrix stack(const std::vector<Vector>& rows, Eigen::Index d) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

Matrix stack_excluding(const std::vector<Vector>& rows, std::size_t skip, Eigen::Index d) {
  Matrix m(static_cast<Eigen::Index>(rows.size()) - 1, d);
  Eigen::Index r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i != skip) m.row(r++) = rows[i].transpose();
  }
  return m;
}

// Canonical generator list of cone(points): +/- lineality basis followed by
// the irredundant pointed generators, sorted.
std::vector<UnitPoint> canonical_generators(std::span<const UnitPoint> points) {
  const std::vector<Vector> unique = deduplicate(points);
  const Eigen::Index d = unique.front().size();
  const Matrix all = stack(unique, d);

  std::vector<Vector> two_sided;
  for (const Vector& g : unique) {
    if (project_onto_cone(all, -g).distance <= tol::kRayIdentity) two_sided.push_back(g);
  }
  Matrix lineality(d, 0);
  if (!two_sided.empty()) {
    lineality = canonical_subspace_basis(stack(two_sided, d).transpose());
  }

  std::vector<UnitPoint> out;
  if (lineality.cols() == d) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const Vector e = Vector::Unit(d, i);
      out.emplace_back(e);
      out.emplace_back(Vector(-e));
    }
    sort_lexicographic(out);
    return out;
  }

  std::vector<Vector> signed_originals(unique);
  for (const Vector& g : unique) signed_originals.push_back(-g);
  for (Eigen::Index k = 0; k < lineality.cols(); ++k) {
    const UnitPoint e = snapped(lineality.col(k), signed_originals);
    out.push_back(e);
    out.push_back(snapped(-e.coords(), signed_originals));
  }

  std::vector<Vector> pointed;
  for (const Vector& g : unique) {
    Vector v = g - lineality * (lineality.transpose() * g);
    const double len = v.norm();
    if (len <= tol::kZeroVector) continue;
    v /= len;
    const UnitPoint p = snapped(v, unique);
    const bool seen = std::any_of(pointed.begin(), pointed.end(), [&](const Vector& w) {
      return geodesic_distance(w, p.coords()) <= tol::kRayIdentity;
    });
    if (!seen) pointed.push_back(p.coords());
  }
  std::sort(pointed.begin(), pointed.end(), lexicographic_less);

  for (std::size_t i = 0; i < pointed.size() && pointed.size() > 1;) {
    const Matrix others = stack_excluding(pointed, i, d);
    if (project_onto_cone(others, pointed[i]).distance <= tol::kMembership) {
      pointed.erase(pointed.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  for (const Vector& v : pointed) out.emplace_back(v);
  sort_lexicographic(out);
  return out;
}

}  // namespace

SphericalBody::SphericalBody(std::vector<UnitPoint> generators,
                             std::vector<UnitPoint> support_normals, bool canonical)
    : generators_(std::move(generators)),
      normals_(std::move(support_normals)),
      canonical_(canonical) {
  if (generators_.empty()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "a body needs at least one generator");
  }
  for (const auto& g : generators_) require_same_dim(generators_.front(), g);
  for (const auto& u : normals_) require_same_dim(generators_.front(), u);
  generator_rows_ = rows_of(generators_);
  normal_rows_ = normals_.empty() ? Matrix(0, space_dim()) : rows_of(normals_);
  rank_ = numeric_rank(generator_rows_);
}

SphericalBody from_generators(std::span<const UnitPoint> points) {
  if (points.empty()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "from_generators: empty point list");
  }
  for (const auto& p : points) require_same_dim(points.front(), p);
  std::vector<UnitPoint> gens = canonical_generators(points);
  std::vector<UnitPoint> normals;
  try {
    std::vector<Vector> gen_coords;
    for (const auto& g : gens) gen_coords.push_back(g.coords());
    for (const auto& u : dual_cone_convert(gens)) {
      normals.push_back(snapped(u.coords(), gen_coords));
    }
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::kPolarEmpty) throw;
  }
  return SphericalBody(std::move(gens), std::move(normals), true);
}

SphericalBody from_generators(std::initializer_list<UnitPoint> points) {
  return from_generators(std::span<const UnitPoint>(points.begin(), points.size()));
}

SphericalBody hemisphere_body(const UnitPoint& center) {
  const Matrix basis = orthonormal_complement(center.coords());
  std::vector<UnitPoint> points{center};
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    points.emplace_back(Vector(basis.col(k)));
    points.emplace_back(Vector(-basis.col(k)));
  }
  return from_generators(points);
}

SphericalBody canonicalize(const SphericalBody& body) {
  return from_generators(body.generators());
}

double containment_defect(const SphericalBody& body, const Vector& q) {
  if (body.support_normals().empty()) return 0.0;
  return std::max(0.0, -(body.normal_rows() * q).minCoeff());
}

bool contains(const SphericalBody& body, const UnitPoint& q) {
  if (q.space_dim() != body.space_dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "contains: dimension mismatch");
  }
  return containment_defect(body, q.coords()) <= tol::kMembership;
}

bool body_subset(const SphericalBody& inner, const SphericalBody& outer) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const UnitPoint& g) { return contains(outer, g); });
}

std::optional<UnitPoint> hemisphere_witness(const SphericalBody& body) {
  const Matrix& g = body.generator_rows();
  const LdpResult ldp = least_distance(g, Vector::Ones(g.rows()));
  if (!ldp.feasible || ldp.x.norm() <= tol::kZeroVector) return std::nullopt;
  const UnitPoint q(ldp.x);
  if ((g * q.coords()).minCoeff() < tol::kStrict) return std::nullopt;
  return q;
}

bool is_hemispherical(const SphericalBody& body) {
  return hemisphere_witness(body).has_value();
}

bool has_interior(const SphericalBody& body) {
  if (body.rank() < body.space_dim()) return false;
  const Matrix& u = body.normal_rows();
  if (u.rows() == 0) return true;
  const LdpResult ldp = least_distance(u, Vector::Ones(u.rows()));
  if (!ldp.feasible || ldp.x.norm() <= tol::kZeroVector) return false;
  return (u * ldp.x.normalized()).minCoeff() >= tol::kStrict;
}

double wulff_margin(const SphericalBody& body, const UnitPoint& p) {
  require_same_dim(body.generators().front(), p);
  if (body.rank() < body.space_dim()) return -std::numeric_limits<double>::infinity();
  double margin = (body.generator_rows() * p.coords()).minCoeff();
  if (body.normal_rows().rows() > 0) {
    margin = std::min(margin, (body.normal_rows() * p.coords()).minCoeff());
  }
  return margin;
}

bool is_wulff_relative(const SphericalBody& body, const UnitPoint& p) {
  return wulff_margin(body, p) >= tol::kStrict;
}

bool bodies_equal(const SphericalBody& a, const SphericalBody& b, Angle tolerance) {
  if (a.space_dim() != b.space_dim()) {
    throw GeometryError(ErrorCode::kDimensionMismatch, "bodies_equal: dimension mismatch");
  }
  if (a.generators().size() != b.generators().size()) return false;
  std::vector<char> used(b.generators().size(), 0);
  for (const auto& g : a.generators()) {
    bool matched = false;
    for (std::size_t j = 0; j < used.size(); ++j) {
      if (!used[j] && geodesic_distance(g, b.generators()[j]) <= tolerance) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

double generator_set_distance(const SphericalBody& a, const SphericalBody& b) {
  auto directed = [](const SphericalBody& x, const SphericalBody& y) {
    double worst = 0.0;
    for (const auto& g : x.generators()) {
      double best = kPi;
      for (const auto& h : y.generators()) {
        best = std::min(best, geodesic_distance(g, h).radians());
      }
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<Face> body_faces(const SphericalBody& body) {
  return enumerate_faces(body.generator_rows(), body.normal_rows());
}

}  // namespace wulff
