#include "wulff/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace wulff {

namespace {

// Least squares on the passive columns; entries outside `passive` are zero.
Vector passive_solve(const Matrix& a, const Vector& b,
                     const std::vector<Eigen::Index>& passive) {
  Matrix sub(a.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t k = 0; k < passive.size(); ++k) sub.col(k) = a.col(passive[k]);
  const Vector zs = sub.colPivHouseholderQr().solve(b);
  Vector z = Vector::Zero(a.cols());
  for (std::size_t k = 0; k < passive.size(); ++k) z[passive[k]] = zs[k];
  return z;
}

}  // namespace

NnlsResult nnls(const Matrix& a, const Vector& b) {
  const Eigen::Index n = a.cols();
  Vector x = Vector::Zero(n);
  std::vector<bool> in_passive(n, false);
  std::vector<bool> blocked(n, false);
  std::vector<Eigen::Index> passive;

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * std::max(1.0, b.norm()));
  const double w_tol = 1e-14 * scale * static_cast<double>(std::max<Eigen::Index>(n, a.rows()));
  const int max_outer = static_cast<int>(3 * n + 10);

  bool converged = false;
  for (int outer = 0; outer < max_outer; ++outer) {
    const Vector w = a.transpose() * (b - a * x);
    Eigen::Index t = -1;
    double best = w_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[j] && !blocked[j] && w[j] > best) {
        best = w[j];
        t = j;
      }
    }
    if (t < 0) {
      converged = true;
      break;
    }
    passive.push_back(t);
    in_passive[t] = true;

    for (int inner = 0; inner < max_outer; ++inner) {
      const Vector z = passive_solve(a, b, passive);
      // A column that enters with a non-positive coefficient is numerically
      // dependent on the passive set; drop it for this sweep.
      if (inner == 0 && z[t] <= 0.0) {
        passive.pop_back();
        in_passive[t] = false;
        blocked[t] = true;
        break;
      }
      bool all_positive = true;
      for (Eigen::Index j : passive) {
        if (z[j] <= 0.0) {
          all_positive = false;
          break;
        }
      }
      if (all_positive) {
        x = z;
        std::fill(blocked.begin(), blocked.end(), false);
        break;
      }
      double alpha = std::numeric_limits<double>::infinity();
      for (Eigen::Index j : passive) {
        if (z[j] <= 0.0) alpha = std::min(alpha, x[j] / (x[j] - z[j]));
      }
      x += alpha * (z - x);
      std::vector<Eigen::Index> kept;
      for (Eigen::Index j : passive) {
        if (x[j] > 1e-15) {
          kept.push_back(j);
        } else {
          x[j] = 0.0;
          in_passive[j] = false;
        }
      }
      passive.swap(kept);
      if (passive.empty()) break;
    }
  }

  NnlsResult result;
  result.fitted = a * x;
  result.residual_norm = (result.fitted - b).norm();
  result.x = std::move(x);
  result.converged = converged;
  return result;
}

LdpResult least_distance(const Matrix& g, const Vector& h) {
  const Eigen::Index d = g.cols();
  Matrix e(d + 1, g.rows());
  e.topRows(d) = g.transpose();
  e.row(d) = h.transpose();
  Vector f = Vector::Zero(d + 1);
  f[d] = 1.0;

  const NnlsResult sol = nnls(e, f);
  const Vector r = sol.fitted - f;
  LdpResult out;
  if (sol.residual_norm <= 1e-12 || r[d] >= 0.0) {
    return out;
  }
  // An infeasible but ill-conditioned system can leave a small nonzero
  // residual; the candidate is only accepted if it satisfies G x >= h.
  Vector x = -r.head(d) / r[d];
  const double slack = 1e-9 * (1.0 + x.norm());
  if (g.rows() > 0 && (g * x - h).minCoeff() < -slack) return out;
  out.feasible = true;
  out.x = std::move(x);
  return out;
}

ConeProjection project_onto_cone(const Matrix& generators, const Vector& x) {
  const NnlsResult sol = nnls(generators.transpose(), x);
  return ConeProjection{sol.fitted, sol.residual_norm};
}

}  // namespace wulff
