#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wulff/construct.hpp"
#include "wulff/harness.hpp"
#include "wulff/metric.hpp"

using namespace wulff;

namespace {
const UnitPoint kNorth{0, 0, 1};
}

TEST(TangentDirections, AreUnitAndTangent) {
  for (int dim : {1, 2, 3, 4}) {
    const UnitPoint c = pole(dim);
    const auto dirs = tangent_directions(c, 12);
    ASSERT_FALSE(dirs.empty());
    for (const Vector& t : dirs) {
      EXPECT_NEAR(t.norm(), 1.0, 1e-14);
      EXPECT_NEAR(t.dot(c.coords()), 0.0, 1e-14);
    }
  }
  EXPECT_EQ(tangent_directions(pole(1), 12).size(), 2u);
}

TEST(CapRing, PointsAtRadius) {
  const UnitPoint c{0.3, -0.4, 0.866};
  for (const auto& q : cap_ring(c, 0.7, 20)) {
    EXPECT_NEAR(geodesic_distance(q, c).radians(), 0.7, 1e-13);
  }
  EXPECT_THROW(cap_polytope(c, kHalfPi, 8), GeometryError);
  EXPECT_THROW(cap_polytope(c, 0.0, 8), GeometryError);
}

TEST(CapPolytope, InscribedInCap) {
  const SphericalBody cap = cap_polytope(kNorth, 0.5, 16);
  EXPECT_EQ(cap.generators().size(), 16u);
  EXPECT_TRUE(contains(cap, kNorth));
  // Inradius of a regular 16-gon inscribed in a cap of radius 0.5.
  const double inradius = std::atan(std::tan(0.5) * std::cos(kPi / 16));
  for (const auto& u : cap.support_normals()) {
    EXPECT_NEAR(kHalfPi - geodesic_distance(u, kNorth).radians(), inradius, 1e-12);
  }
}

TEST(RegularSimplex, EquidistantVertices) {
  for (int dim : {1, 2, 3}) {
    const UnitPoint p = pole(dim);
    const auto verts = regular_simplex_around(p, 0.3);
    ASSERT_EQ(static_cast<int>(verts.size()), dim + 1);
    for (const auto& v : verts) EXPECT_NEAR(geodesic_distance(v, p).radians(), 0.3, 1e-13);
    for (std::size_t i = 1; i < verts.size(); ++i) {
      EXPECT_NEAR(geodesic_distance(verts[0], verts[1]).radians(),
                  geodesic_distance(verts[i - 1], verts[i]).radians(), 1e-13);
    }
    EXPECT_TRUE(contains(from_generators(verts), p));
  }
}

TEST(Dilate, ContainsBodyAndStaysInsideDilation) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const SphericalBody w = gen_convex(2, rng());
    const SphericalBody d = dilate(w, 0.1, 12);
    EXPECT_TRUE(body_subset(w, d));
    for (const auto& g : d.generators()) {
      EXPECT_LE(point_body_distance(g, w).radians(), 0.1 + 1e-12);
    }
  }
  EXPECT_THROW(dilate(hemisphere_body(kNorth), 0.1, 8), GeometryError);
}

TEST(Intersect, CapsAndEmptyIntersection) {
  const SphericalBody a = cap_polytope(kNorth, 0.6, 12);
  const SphericalBody b = cap_polytope(UnitPoint{std::sin(0.5), 0, std::cos(0.5)}, 0.6, 12);
  const SphericalBody both = intersect(a, b);
  EXPECT_TRUE(body_subset(both, a));
  EXPECT_TRUE(body_subset(both, b));
  EXPECT_TRUE(contains(both, UnitPoint{std::sin(0.25), 0, std::cos(0.25)}));
  EXPECT_TRUE(bodies_equal(intersect(a, hemisphere_body(kNorth)), a));

  const SphericalBody far = cap_polytope(UnitPoint{1, 0, 0}, 0.3, 8);
  try {
    intersect(a, far);
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
}

TEST(Rotate, IsAnIsometry) {
  const SphericalBody a = gen_convex(2, 12);
  const SphericalBody b = gen_convex(2, 13);
  const Matrix r = plane_rotation(3, 0, 2, 0.7) * plane_rotation(3, 1, 2, -0.4);
  EXPECT_NEAR(hausdorff(rotate(a, r), rotate(b, r)).radians(), hausdorff(a, b).radians(), 1e-12);
  EXPECT_TRUE(bodies_equal(rotate(rotate(a, r), r.transpose()), a, Angle(1e-12)));
}
