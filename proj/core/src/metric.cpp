#include "wulff/metric.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <queue>

#include "wulff/nnls.hpp"
#include "wulff/transforms.hpp"

namespace wulff {

namespace {

constexpr double kDefaultResolution = 0.005;
constexpr double kProjectionFloor = 1e-12;
constexpr double kSeparationGap = 1e-7;
constexpr double kLemma2Band = 1e-6;
constexpr std::size_t kMaxCells = 2'000'000;

// Geodesic distance from unit x to the body; see point_body_distance.
double distance_to(const Vector& x, const SphericalBody& b) {
  if (containment_defect(b, x) <= 0.0) return 0.0;
  const ConeProjection proj = project_onto_cone(b.generator_rows(), x);
  const double inside = proj.point.norm();
  if (inside > kProjectionFloor) return std::atan2(proj.distance, inside);
  // x is in the negative dual cone: the nearest point is a generator.
  double best = kPi;
  for (const auto& g : b.generators()) {
    best = std::min(best, geodesic_distance(x, g.coords()));
  }
  return best;
}

Matrix stacked(const Matrix& top, const Matrix& bottom) {
  Matrix m(top.rows() + bottom.rows(), std::max(top.cols(), bottom.cols()));
  if (top.rows() > 0) m.topRows(top.rows()) = top;
  if (bottom.rows() > 0) m.bottomRows(bottom.rows()) = bottom;
  return m;
}

// Membership test for a face of `a`: simplicial faces use barycentric
// coordinates, others fall back to the body's normals.
class FaceMembership {
 public:
  FaceMembership(const SphericalBody& a, const Face& face) : body_(a) {
    if (static_cast<int>(face.generators.size()) == face.dim) {
      Matrix cols(a.space_dim(), face.dim);
      for (int k = 0; k < face.dim; ++k) {
        cols.col(k) = a.generators()[face.generators[k]].coords();
      }
      solver_ = cols.colPivHouseholderQr();
      simplicial_ = true;
    }
  }

  bool contains(const Vector& v) const {
    if (simplicial_) return solver_.solve(v).minCoeff() >= -kProjectionFloor;
    return containment_defect(body_, v) <= tol::kMembership;
  }

 private:
  const SphericalBody& body_;
  Eigen::ColPivHouseholderQR<Matrix> solver_;
  bool simplicial_ = false;
};

std::vector<Face> faces_with_span(const SphericalBody& body, int lo, int hi) {
  std::vector<Face> out;
  for (Face& f : body_faces(body)) {
    if (f.dim >= lo && f.dim < hi) out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triangulation for the sampled path: orthants of the lineality space times a
// pulling triangulation of the pointed part.

std::vector<std::vector<int>> pulling(const std::vector<Vector>& gens,
                                      const std::vector<int>& subset, int k) {
  if (static_cast<int>(subset.size()) <= k) return {subset};
  const int apex = subset.front();
  Matrix rows(static_cast<Eigen::Index>(subset.size()), gens.front().size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = gens[subset[i]].transpose();
  }
  std::vector<std::vector<int>> out;
  for (const Vector& u : dual_cone_parts(rows).rays) {
    std::vector<int> facet;
    for (int i : subset) {
      if (std::abs(u.dot(gens[i])) <= tol::kRayIdentity) facet.push_back(i);
    }
    if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
    for (auto& simplex : pulling(gens, facet, k - 1)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

std::vector<Matrix> triangulate(const SphericalBody& body) {
  const auto& g = body.generators();
  const Eigen::Index d = body.space_dim();
  std::vector<char> paired(g.size(), 0);
  std::vector<Vector> lineality, pointed;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (paired[i]) continue;
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (!paired[j] && (g[i].coords() + g[j].coords()).norm() <= kProjectionFloor) {
        paired[i] = paired[j] = 1;
        lineality.push_back(g[i].coords());
        break;
      }
    }
    if (!paired[i]) pointed.push_back(g[i].coords());
  }

  std::vector<std::vector<int>> cells{{}};
  if (!pointed.empty()) {
    std::vector<int> all(pointed.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    const int k = body.rank() - static_cast<int>(lineality.size());
    cells = pulling(pointed, all, k);
  }

  std::vector<Matrix> out;
  const std::size_t orthants = std::size_t{1} << lineality.size();
  for (std::size_t signs = 0; signs < orthants; ++signs) {
    for (const auto& cell : cells) {
      Matrix v(static_cast<Eigen::Index>(lineality.size() + cell.size()), d);
      Eigen::Index r = 0;
      for (std::size_t j = 0; j < lineality.size(); ++j) {
        v.row(r++) = ((signs >> j) & 1U ? -1.0 : 1.0) * lineality[j].transpose();
      }
      for (int i : cell) v.row(r++) = pointed[i].transpose();
      out.push_back(std::move(v));
    }
  }
  return out;
}

struct Cell {
  Matrix vertices;
  Vector values;
  double upper = kPi;
};

// Valid for any x in the cell: |f(x) - f(v_i)| <= |x v_i| <= eccentricity of
// v_i, provided the cell lies in the hemisphere around v_i.
double cell_upper_bound(const Cell& c) {
  double ub = kPi;
  for (Eigen::Index i = 0; i < c.vertices.rows(); ++i) {
    double ecc = 0.0;
    for (Eigen::Index j = 0; j < c.vertices.rows(); ++j) {
      ecc = std::max(ecc, geodesic_distance(Vector(c.vertices.row(i).transpose()),
                                            Vector(c.vertices.row(j).transpose())));
    }
    if (ecc <= kHalfPi) ub = std::min(ub, c.values[i] + ecc);
  }
  return std::min(ub, kPi);
}

}  // namespace

double default_resolution() {
  if (const char* env = std::getenv("WULFF_DEFAULT_RESOLUTION")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && value > 0.0 && value < 0.1) return value;
  }
  return kDefaultResolution;
}

Angle point_body_distance(const UnitPoint& x, const SphericalBody& body) {
  require_same_dim(x, body.generators().front());
  return Angle(distance_to(x.coords(), body));
}

DistanceResult sampled_directed_distance(const SphericalBody& a, const SphericalBody& b,
                                         double resolution) {
  require_same_dim(a.generators().front(), b.generators().front());
  if (!(resolution > 0.0)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "sampling resolution must be positive");
  }
  auto cmp = [](const Cell& x, const Cell& y) { return x.upper < y.upper; };
  std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);
  double lower = 0.0;
  for (Matrix& v : triangulate(a)) {
    Cell c{std::move(v), Vector(), kPi};
    c.values.resize(c.vertices.rows());
    for (Eigen::Index i = 0; i < c.vertices.rows(); ++i) {
      c.values[i] = distance_to(c.vertices.row(i).transpose(), b);
      lower = std::max(lower, c.values[i]);
    }
    c.upper = cell_upper_bound(c);
    queue.push(std::move(c));
  }

  std::size_t processed = 0;
  while (!queue.empty() && queue.top().upper - lower > resolution &&
         processed++ < kMaxCells) {
    Cell c = queue.top();
    queue.pop();
    Eigen::Index bi = 0, bj = 0;
    double longest = -1.0;
    for (Eigen::Index i = 0; i < c.vertices.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < c.vertices.rows(); ++j) {
        const double len = geodesic_distance(Vector(c.vertices.row(i).transpose()),
                                             Vector(c.vertices.row(j).transpose()));
        if (len > longest) {
          longest = len;
          bi = i;
          bj = j;
        }
      }
    }
    const Vector mid = (c.vertices.row(bi) + c.vertices.row(bj)).transpose().normalized();
    const double fm = distance_to(mid, b);
    lower = std::max(lower, fm);
    for (Eigen::Index replaced : {bi, bj}) {
      Cell child = c;
      child.vertices.row(replaced) = mid.transpose();
      child.values[replaced] = fm;
      child.upper = cell_upper_bound(child);
      queue.push(std::move(child));
    }
  }
  const double gap = queue.empty() ? 0.0 : std::max(0.0, queue.top().upper - lower);
  return DistanceResult{Angle(lower), gap, false};
}

DistanceResult directed_distance(const SphericalBody& a, const SphericalBody& b,
                                 const DistanceOptions& options) {
  require_same_dim(a.generators().front(), b.generators().front());
  const double resolution = options.resolution > 0.0 ? options.resolution : default_resolution();
  if (options.force_sampling) return sampled_directed_distance(a, b, resolution);
  if (body_subset(a, b)) return DistanceResult{Angle(0.0), 0.0, true};

  const int d = a.space_dim();
  // Points of a in the negative dual of b are at distance >= pi/2 from b;
  // the farthest one solves a least-distance problem.
  const Matrix m = stacked(a.normal_rows(), -b.generator_rows());
  Vector h = Vector::Zero(m.rows());
  h.tail(b.generator_rows().rows()).setOnes();
  const LdpResult far = least_distance(m, h);
  if (far.feasible && far.x.norm() > tol::kZeroVector) {
    const Vector x = far.x.normalized();
    return DistanceResult{Angle(std::max(kHalfPi, distance_to(x, b))), 0.0, true};
  }
  if (!dual_cone_parts(m).is_zero()) return DistanceResult{Angle(kHalfPi), 0.0, true};

  // Otherwise every point of a has a nonzero projection onto cone(b), and
  // |x P_C x|^2 is C^1; interior critical points on a face F of a, with the
  // projection in the relative interior of a face G of b, are eigenvectors of
  // B_F^T P_G B_F. Vertices of a cover the zero-dimensional faces.
  const std::vector<Face> faces_a = faces_with_span(a, 2, d);
  const std::vector<Face> faces_b = faces_with_span(b, 1, d);
  if (faces_a.size() * faces_b.size() > options.face_pair_budget) {
    return sampled_directed_distance(a, b, resolution);
  }

  double best = 0.0;
  for (const auto& g : a.generators()) best = std::max(best, distance_to(g.coords(), b));
  for (const Face& fa : faces_a) {
    const FaceMembership member(a, fa);
    for (const Face& fb : faces_b) {
      const Matrix c = fb.basis.transpose() * fa.basis;
      const Eigen::SelfAdjointEigenSolver<Matrix> eig(c.transpose() * c);
      for (Eigen::Index k = 0; k < eig.eigenvectors().cols(); ++k) {
        const Vector v = fa.basis * eig.eigenvectors().col(k);
        for (double sign : {1.0, -1.0}) {
          const Vector w = sign * v;
          if (member.contains(w)) best = std::max(best, distance_to(w, b));
        }
      }
    }
  }
  return DistanceResult{Angle(std::min(best, kPi)), 0.0, true};
}

DistanceResult hausdorff(const SphericalBody& a, const SphericalBody& b,
                         const DistanceOptions& options) {
  const DistanceResult ab = directed_distance(a, b, options);
  const DistanceResult ba = directed_distance(b, a, options);
  return DistanceResult{std::max(ab.angle, ba.angle),
                        std::max(ab.error_bound, ba.error_bound), ab.exact && ba.exact};
}

Angle hemisphere_hausdorff(const UnitPoint& p, const UnitPoint& q) {
  const Angle closed(std::min(geodesic_distance(p, q).radians(), kHalfPi));
  assert(std::abs(closed.radians() -
                  hausdorff(hemisphere_body(p), hemisphere_body(q)).radians()) <= 1e-8);
  return closed;
}

bool dilation_contains(const SphericalBody& body, Angle r, const UnitPoint& x) {
  if (!(r.radians() > 0.0 && r.radians() < kPi)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "dilation radius must lie in (0, pi)");
  }
  return point_body_distance(x, body).radians() <= r.radians() + tol::kMembership;
}

Lemma2Outcome lemma2_compare(const SphericalBody& w, Angle r, int samples,
                             std::uint64_t seed) {
  if (!(r.radians() > 0.0 && r.radians() < kHalfPi)) {
    throw GeometryError(ErrorCode::kPrecondition, "lemma2_check: r must lie in (0, pi/2)");
  }
  if (!polar_admissible(w)) {
    throw GeometryError(ErrorCode::kPrecondition, "lemma2_check: polar of w is empty");
  }
  if (samples < 1) {
    throw GeometryError(ErrorCode::kInvalidArgument, "lemma2_check: samples must be >= 1");
  }
  const SphericalBody dual = polar(w);
  Lemma2Outcome out;
  out.samples = samples;
  for (const UnitPoint& x : sample_sphere(w.sphere_dim(), seed, samples)) {
    // Left: distance to the polar. Right: max_{P in w} |xP| = pi - d(-x, w).
    const double to_dual = distance_to(x.coords(), dual);
    const double farthest = kPi - distance_to(-x.coords(), w);
    const double right_threshold = kHalfPi + r.radians();
    if (std::abs(to_dual - r.radians()) <= kLemma2Band ||
        std::abs(farthest - right_threshold) <= kLemma2Band) {
      continue;
    }
    ++out.compared;
    if ((to_dual <= r.radians()) != (farthest <= right_threshold)) ++out.mismatches;
  }
  return out;
}

bool lemma2_check(const SphericalBody& w, Angle r, int samples, std::uint64_t seed) {
  return lemma2_compare(w, r, samples, seed).agree();
}

UnitPoint separate(const SphericalBody& a, const SphericalBody& b) {
  require_same_dim(a.generators().front(), b.generators().front());
  const Matrix& ga = a.generator_rows();
  const Matrix& gb = b.generator_rows();

  const Matrix both = stacked(ga, gb);
  const LdpResult common = least_distance(both, Vector::Ones(both.rows()));
  if (!common.feasible ||
      (both * common.x.normalized()).minCoeff() < tol::kStrict) {
    throw GeometryError(ErrorCode::kNoSeparator,
                        "bodies do not lie in a common open hemisphere");
  }

  const Matrix m = stacked(ga, -gb);
  Vector h = Vector::Zero(m.rows());
  h.tail(gb.rows()).setOnes();
  const LdpResult sep = least_distance(m, h);
  if (!sep.feasible || 1.0 / sep.x.norm() < std::sin(kSeparationGap)) {
    throw GeometryError(ErrorCode::kNoSeparator,
                        "bodies intersect or are closer than the separation gap");
  }
  const UnitPoint q(sep.x);
  if ((ga * q.coords()).minCoeff() < -tol::kMembership ||
      (gb * q.coords()).maxCoeff() > -tol::kStrict) {
    throw GeometryError(ErrorCode::kNoSeparator, "separator failed verification");
  }
  return q;
}

}  // namespace wulff
