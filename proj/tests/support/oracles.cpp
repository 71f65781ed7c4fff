#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace wulff::oracle {

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

Matrix lu_kernel(const Matrix& m, Eigen::Index cols) {
  if (m.rows() == 0) return Matrix::Identity(cols, cols);
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-10);
  return lu.kernel();
}

int lu_rank(const Matrix& m) {
  if (m.rows() == 0) return 0;
  Eigen::FullPivLU<Matrix> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

}  // namespace

BruteDual brute_dual(const Matrix& g) {
  const Eigen::Index d = g.cols();
  BruteDual out;
  Matrix n = lu_kernel(g, d);
  if (lu_rank(g) == d) n = Matrix(d, 0);
  out.lineality_projector =
      n.cols() ? Matrix(n * (n.transpose() * n).inverse() * n.transpose()) : Matrix::Zero(d, d);
  const int r = lu_rank(g);
  for (const auto& s : subsets(static_cast<int>(g.rows()), r - 1)) {
    Matrix sys(static_cast<Eigen::Index>(s.size()) + n.cols(), d);
    for (std::size_t i = 0; i < s.size(); ++i) sys.row(static_cast<Eigen::Index>(i)) = g.row(s[i]);
    if (n.cols()) sys.bottomRows(n.cols()) = n.transpose();
    const Matrix k = lu_kernel(sys, d);
    if (k.cols() != 1) continue;
    for (double sign : {1.0, -1.0}) {
      const Vector q = sign * k.col(0).normalized();
      if ((g * q).minCoeff() < -1e-10) continue;
      const bool seen = std::any_of(out.rays.begin(), out.rays.end(),
                                    [&](const Vector& v) { return (v - q).norm() <= 1e-9; });
      if (!seen) out.rays.push_back(q);
    }
  }
  return out;
}

FaceDistance::FaceDistance(const SphericalBody& body) : body_(body) {
  const int m = static_cast<int>(body.generators().size());
  const int d = body.space_dim();
  for (int k = 1; k <= std::min(m, d); ++k) {
    for (const auto& s : subsets(m, k)) {
      Matrix cols(d, k);
      for (int i = 0; i < k; ++i) cols.col(i) = body.generators()[s[i]].coords();
      Eigen::HouseholderQR<Matrix> qr(cols);
      if (lu_rank(cols) < k) continue;
      bases_.push_back(qr.householderQ() * Matrix::Identity(d, k));
    }
  }
}

double FaceDistance::operator()(const Vector& x) const {
  if (containment_defect(body_, x) <= 0.0) return 0.0;
  double best = kPi;
  for (const auto& g : body_.generators()) best = std::min(best, geodesic_distance(x, g.coords()));
  for (const Matrix& q : bases_) {
    const Vector p = q * (q.transpose() * x);
    const double len = p.norm();
    if (len <= 1e-12) continue;
    const Vector y = p / len;
    if (containment_defect(body_, y) <= tol::kMembership) {
      best = std::min(best, geodesic_distance(x, y));
    }
  }
  return best;
}

namespace {

struct Simplex {
  std::vector<Vector> v;
  std::vector<double> f;
  double ub = kPi;
};

void bound(Simplex& s) {
  double diam = 0.0;
  for (std::size_t i = 0; i < s.v.size(); ++i) {
    for (std::size_t j = i + 1; j < s.v.size(); ++j) {
      diam = std::max(diam, geodesic_distance(s.v[i], s.v[j]));
    }
  }
  const double fmax = *std::max_element(s.f.begin(), s.f.end());
  // A cell whose vertices all lie in b lies in b (b is convex).
  if (fmax == 0.0 && diam <= kHalfPi) {
    s.ub = 0.0;
    return;
  }
  s.ub = diam <= kHalfPi ? std::min(kPi, fmax + diam) : kPi;
}

}  // namespace

Sampled sampled_directed(const SphericalBody& a, const SphericalBody& b, double delta) {
  const FaceDistance f(b);
  const int m = static_cast<int>(a.generators().size());
  const int r = a.rank();
  auto cmp = [](const Simplex& x, const Simplex& y) { return x.ub < y.ub; };
  std::priority_queue<Simplex, std::vector<Simplex>, decltype(cmp)> queue(cmp);
  double lower = 0.0;
  double pruned = 0.0;  // largest upper bound of a discarded cell
  for (const auto& s : subsets(m, r)) {
    Simplex cell;
    Matrix cols(a.space_dim(), r);
    for (int i = 0; i < r; ++i) {
      cell.v.push_back(a.generators()[s[i]].coords());
      cols.col(i) = cell.v.back();
    }
    if (lu_rank(cols) < r) continue;
    for (const Vector& v : cell.v) {
      cell.f.push_back(f(v));
      lower = std::max(lower, cell.f.back());
    }
    bound(cell);
    queue.push(std::move(cell));
  }
  while (!queue.empty() && queue.top().ub - lower > delta) {
    Simplex s = queue.top();
    queue.pop();
    std::size_t bi = 0, bj = 1;
    double longest = -1.0;
    for (std::size_t i = 0; i < s.v.size(); ++i) {
      for (std::size_t j = i + 1; j < s.v.size(); ++j) {
        const double len = geodesic_distance(s.v[i], s.v[j]);
        if (len > longest) {
          longest = len;
          bi = i;
          bj = j;
        }
      }
    }
    const Vector mid = (s.v[bi] + s.v[bj]).normalized();
    const double fm = f(mid);
    lower = std::max(lower, fm);
    for (std::size_t replaced : {bi, bj}) {
      Simplex child = s;
      child.v[replaced] = mid;
      child.f[replaced] = fm;
      bound(child);
      if (child.ub > lower + delta) queue.push(std::move(child));
      else pruned = std::max(pruned, child.ub);
    }
  }
  const double top = queue.empty() ? pruned : std::max(pruned, queue.top().ub);
  return Sampled{lower, std::max(0.0, top - lower)};
}

}  // namespace wulff::oracle
