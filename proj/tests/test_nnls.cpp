#include <gtest/gtest.h>

#include "wulff/nnls.hpp"

using namespace wulff;

TEST(Nnls, UnconstrainedOptimumIsReturnedWhenNonnegative) {
  Matrix a(3, 2);
  a << 1, 0, 0, 1, 1, 1;
  const Vector b = a * Eigen::Vector2d(0.5, 2.0);
  const NnlsResult r = nnls(a, b);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 0.5, 1e-12);
  EXPECT_NEAR(r.x[1], 2.0, 1e-12);
  EXPECT_NEAR(r.residual_norm, 0.0, 1e-12);
}

TEST(Nnls, ClampsNegativeCoefficients) {
  Matrix a = Matrix::Identity(2, 2);
  const NnlsResult r = nnls(a, Eigen::Vector2d(-1.0, 3.0));
  EXPECT_EQ(r.x[0], 0.0);
  EXPECT_NEAR(r.x[1], 3.0, 1e-14);
  EXPECT_NEAR(r.residual_norm, 1.0, 1e-14);
}

TEST(Nnls, SatisfiesKktConditions) {
  std::srand(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = Matrix::Random(6, 9);
    const Vector b = Vector::Random(6);
    const NnlsResult r = nnls(a, b);
    ASSERT_TRUE(r.converged);
    const Vector w = a.transpose() * (b - a * r.x);
    for (Eigen::Index j = 0; j < r.x.size(); ++j) {
      EXPECT_GE(r.x[j], 0.0);
      EXPECT_LE(w[j], 1e-10);
      if (r.x[j] > 0) EXPECT_NEAR(w[j], 0.0, 1e-10);
    }
  }
}

TEST(LeastDistance, FindsMinimumNormPoint) {
  // min |x| s.t. x0 >= 1, x1 >= 2.
  const LdpResult r = least_distance(Matrix::Identity(2, 2), Eigen::Vector2d(1, 2));
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x[0], 1.0, 1e-12);
  EXPECT_NEAR(r.x[1], 2.0, 1e-12);
}

TEST(LeastDistance, DetectsInfeasibility) {
  Matrix g(2, 1);
  g << 1, -1;
  EXPECT_FALSE(least_distance(g, Eigen::Vector2d(1, 1)).feasible);
}

TEST(LeastDistance, RejectsNearSolutionsOfIllConditionedInfeasibleSystems) {
  // Normals of a thin sliver polygon plus a point far inside the sliver's
  // hemisphere: no x has x.g <= -1 while staying in the sliver.
  Matrix g(7, 3);
  g << -0.755557, 0.654903, -0.0153346,
       -0.755003, 0.655542, -0.0153179,
       -0.754857, 0.655712, -0.015269,
        0.754856, -0.655711, 0.0153361,
        0.75493, -0.655626, 0.0153413,
        0.755102, -0.655427, 0.0153757,
       -0.00531521, -0.0429655, -0.999062;
  Vector h = Vector::Zero(7);
  h[6] = 1.0;
  const LdpResult r = least_distance(g, h);
  if (r.feasible) EXPECT_GE((g * r.x - h).minCoeff(), -1e-8);
}

TEST(ProjectOntoCone, InsideOutsideAndPolar) {
  Matrix g(2, 3);
  g << 1, 0, 0, 0, 1, 0;
  const ConeProjection inside = project_onto_cone(g, Eigen::Vector3d(0.3, 0.4, 0.0));
  EXPECT_NEAR(inside.distance, 0.0, 1e-14);
  const ConeProjection up = project_onto_cone(g, Eigen::Vector3d(0.3, -0.4, 0.5));
  EXPECT_NEAR(up.point[0], 0.3, 1e-14);
  EXPECT_NEAR(up.point[1], 0.0, 1e-14);
  EXPECT_NEAR(up.distance, std::sqrt(0.16 + 0.25), 1e-14);
  EXPECT_NEAR(project_onto_cone(g, Eigen::Vector3d(-1, -1, 0)).point.norm(), 0.0, 1e-14);
}
