#ifndef WULFF_NNLS_HPP
#define WULFF_NNLS_HPP

#include "wulff/geometry.hpp"

namespace wulff {

struct NnlsResult {
  Vector x;               // minimizer, x >= 0
  Vector fitted;          // A x
  double residual_norm;   // |A x - b|
  bool converged;
};

/// Lawson-Hanson active-set solver for min |A x - b| subject to x >= 0.
NnlsResult nnls(const Matrix& a, const Vector& b);

struct LdpResult {
  bool feasible = false;
  Vector x;  // minimum-norm solution of G x >= h when feasible
};

/// Least-distance programming: min |x| subject to G x >= h, reduced to an
/// NNLS problem on [G^T; h^T].
LdpResult least_distance(const Matrix& g, const Vector& h);

struct ConeProjection {
  Vector point;        // nearest point of cone(rows of generators) to x
  double distance;     // |x - point|
};

/// Euclidean projection of x onto the cone spanned by the rows of
/// `generators`.
ConeProjection project_onto_cone(const Matrix& generators, const Vector& x);

}  // namespace wulff

#endif  // WULFF_NNLS_HPP
