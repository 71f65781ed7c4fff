#include "wulff/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wulff {

int numeric_rank(const Matrix& m, double tolerance) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const Vector& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > tolerance) ++rank;
  }
  return rank;
}

Matrix null_space(const Matrix& rows, double tolerance) {
  const Eigen::Index d = rows.cols();
  if (rows.rows() == 0) return Matrix::Identity(d, d);
  Eigen::JacobiSVD<Matrix> svd(rows, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > tolerance) ++rank;
  }
  return svd.matrixV().rightCols(d - rank);
}

Matrix span_basis(const Matrix& spanning, double tolerance) {
  const Eigen::Index d = spanning.rows();
  if (spanning.cols() == 0) return Matrix(d, 0);
  Eigen::JacobiSVD<Matrix> svd(spanning, Eigen::ComputeFullU);
  const Vector& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > tolerance) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

Matrix canonical_subspace_basis(const Matrix& spanning, double tolerance) {
  const Matrix q = span_basis(spanning, tolerance);
  const Eigen::Index d = q.rows();
  const Eigen::Index rank = q.cols();
  if (rank == 0) return Matrix(d, 0);

  Matrix r = q * q.transpose();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < d && row < rank; ++col) {
    Eigen::Index pivot = row;
    for (Eigen::Index i = row + 1; i < d; ++i) {
      if (std::abs(r(i, col)) > std::abs(r(pivot, col))) pivot = i;
    }
    if (std::abs(r(pivot, col)) <= tolerance) continue;
    r.row(row).swap(r.row(pivot));
    r.row(row) /= r(row, col);
    for (Eigen::Index i = 0; i < d; ++i) {
      if (i != row) r.row(i) -= r(i, col) * r.row(row);
    }
    ++row;
  }

  Matrix basis(d, rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    Vector v = r.row(k).transpose();
    for (Eigen::Index j = 0; j < k; ++j) v -= basis.col(j).dot(v) * basis.col(j);
    basis.col(k) = v.normalized();
  }
  return basis;
}

namespace {

constexpr double kZeroSlack = 1e-10;

struct DdRay {
  Vector v;
  std::vector<char> zero;  // indexed by constraint row; meaningful once processed
};

bool adjacent(const Matrix& a, const DdRay& p, const DdRay& n,
              const std::vector<char>& processed) {
  const Eigen::Index r = a.cols();
  std::vector<Eigen::Index> common;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (processed[i] && p.zero[i] && n.zero[i]) common.push_back(i);
  }
  if (static_cast<Eigen::Index>(common.size()) < r - 2) return false;
  if (r - 2 <= 0) return true;
  Matrix sub(static_cast<Eigen::Index>(common.size()), r);
  for (std::size_t k = 0; k < common.size(); ++k) sub.row(k) = a.row(common[k]);
  return numeric_rank(sub, tol::kRayIdentity) == r - 2;
}

}  // namespace

std::vector<Vector> extreme_rays_pointed(const Matrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index r = a.cols();
  if (r == 0) return {};

  Eigen::ColPivHouseholderQR<Matrix> qr(a.transpose());
  if (qr.rank() < r) {
    throw GeometryError(ErrorCode::kDegenerate,
                        "double description needs full column rank");
  }
  const auto& perm = qr.colsPermutation().indices();
  std::vector<Eigen::Index> init(perm.data(), perm.data() + r);

  std::vector<char> processed(m, 0);
  Matrix basis_rows(r, r);
  for (Eigen::Index k = 0; k < r; ++k) {
    basis_rows.row(k) = a.row(init[k]);
    processed[init[k]] = 1;
  }
  const Matrix inv = basis_rows.inverse();

  std::vector<DdRay> rays;
  rays.reserve(r);
  for (Eigen::Index k = 0; k < r; ++k) {
    DdRay ray{inv.col(k).normalized(), std::vector<char>(m, 0)};
    for (Eigen::Index i = 0; i < m; ++i) {
      ray.zero[i] = processed[i] && std::abs(a.row(i).dot(ray.v)) <= kZeroSlack;
    }
    rays.push_back(std::move(ray));
  }

  for (Eigen::Index row = 0; row < m; ++row) {
    if (processed[row]) continue;
    const Vector constraint = a.row(row).transpose();
    std::vector<double> slack(rays.size());
    std::vector<std::size_t> plus, minus;
    std::vector<DdRay> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      slack[k] = constraint.dot(rays[k].v);
      if (slack[k] > kZeroSlack) {
        plus.push_back(k);
      } else if (slack[k] < -kZeroSlack) {
        minus.push_back(k);
      }
    }
    if (minus.empty()) {
      for (auto& ray : rays) ray.zero[row] = std::abs(constraint.dot(ray.v)) <= kZeroSlack;
      processed[row] = 1;
      continue;
    }
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        if (!adjacent(a, rays[p], rays[q], processed)) continue;
        Vector v = slack[p] * rays[q].v - slack[q] * rays[p].v;
        const double len = v.norm();
        if (len <= tol::kZeroVector) continue;
        next.push_back(DdRay{v / len, std::vector<char>(m, 0)});
      }
    }
    processed[row] = 1;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (slack[k] >= -kZeroSlack) next.push_back(std::move(rays[k]));
    }
    for (auto& ray : next) {
      for (Eigen::Index i = 0; i < m; ++i) {
        ray.zero[i] = processed[i] && std::abs(a.row(i).dot(ray.v)) <= kZeroSlack;
      }
    }
    rays.swap(next);
    if (rays.empty()) break;
  }

  std::vector<Vector> out;
  for (auto& ray : rays) {
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const Vector& u) {
      return geodesic_distance(u, ray.v) <= tol::kRayIdentity;
    });
    if (!duplicate) out.push_back(std::move(ray.v));
  }
  return out;
}

Matrix rows_of(std::span<const UnitPoint> points) {
  if (points.empty()) return Matrix(0, 0);
  Matrix m(static_cast<Eigen::Index>(points.size()), points.front().space_dim());
  for (std::size_t i = 0; i < points.size(); ++i) {
    m.row(static_cast<Eigen::Index>(i)) = points[i].coords().transpose();
  }
  return m;
}

DualConeParts dual_cone_parts(const Matrix& generator_rows) {
  const Eigen::Index d = generator_rows.cols();
  Eigen::JacobiSVD<Matrix> svd(generator_rows, Eigen::ComputeFullV);
  const Vector& s = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > tol::kRayIdentity) ++rank;
  }
  const Matrix row_space = svd.matrixV().leftCols(rank);

  DualConeParts parts;
  parts.lineality = canonical_subspace_basis(svd.matrixV().rightCols(d - rank));
  if (rank > 0) {
    for (const Vector& y : extreme_rays_pointed(generator_rows * row_space)) {
      parts.rays.push_back((row_space * y).normalized());
    }
  }
  return parts;
}

std::vector<UnitPoint> dual_cone_convert(std::span<const UnitPoint> generators) {
  if (generators.empty()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "no generators");
  }
  for (const auto& g : generators) require_same_dim(generators.front(), g);
  const DualConeParts parts = dual_cone_parts(rows_of(generators));
  if (parts.is_zero()) {
    throw GeometryError(ErrorCode::kPolarEmpty,
                        "the generators span the whole space; dual cone is {0}");
  }
  std::vector<UnitPoint> out;
  for (Eigen::Index k = 0; k < parts.lineality.cols(); ++k) {
    out.emplace_back(Vector(parts.lineality.col(k)));
    out.emplace_back(Vector(-parts.lineality.col(k)));
  }
  for (const Vector& ray : parts.rays) out.emplace_back(ray);
  std::sort(out.begin(), out.end(), [](const UnitPoint& x, const UnitPoint& y) {
    return lexicographic_less(x.coords(), y.coords());
  });
  return out;
}

std::vector<Face> enumerate_faces(const Matrix& generator_rows,
                                  const Matrix& normal_rows,
                                  double activity_tolerance) {
  const int m = static_cast<int>(generator_rows.rows());
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;

  std::set<std::vector<int>> faces{all};
  for (Eigen::Index u = 0; u < normal_rows.rows(); ++u) {
    std::vector<int> facet;
    for (int i = 0; i < m; ++i) {
      if (std::abs(normal_rows.row(u).dot(generator_rows.row(i))) <= activity_tolerance) {
        facet.push_back(i);
      }
    }
    if (facet.empty()) continue;
    std::vector<std::vector<int>> added;
    for (const auto& f : faces) {
      std::vector<int> meet;
      std::set_intersection(f.begin(), f.end(), facet.begin(), facet.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && !faces.contains(meet)) added.push_back(std::move(meet));
    }
    faces.insert(added.begin(), added.end());
  }

  std::vector<Face> out;
  out.reserve(faces.size());
  for (const auto& f : faces) {
    Matrix cols(generator_rows.cols(), static_cast<Eigen::Index>(f.size()));
    for (std::size_t k = 0; k < f.size(); ++k) {
      cols.col(static_cast<Eigen::Index>(k)) = generator_rows.row(f[k]).transpose();
    }
    Face face;
    face.generators = f;
    face.basis = span_basis(cols);
    face.dim = static_cast<int>(face.basis.cols());
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    return x.dim != y.dim ? x.dim < y.dim : x.generators < y.generators;
  });
  return out;
}

}  // namespace wulff
