#ifndef WULFF_METRIC_HPP
#define WULFF_METRIC_HPP

#include <cstddef>
#include <cstdint>

#include "wulff/body.hpp"

namespace wulff {

/// A distance together with a certified bound on its error. Exact paths
/// report error_bound = 0.
struct DistanceResult {
  Angle angle;
  double error_bound = 0.0;
  bool exact = true;

  double radians() const { return angle.radians(); }
};

struct DistanceOptions {
  /// Resolution of the sampled fallback, in radians.
  double resolution = -1.0;  // negative: default_resolution()
  /// Face pairs the exact path may examine before falling back to sampling.
  std::size_t face_pair_budget = 200000;
  /// Skip the exact path entirely (used for cross-checks).
  bool force_sampling = false;
};

/// Sampling resolution from WULFF_DEFAULT_RESOLUTION, else 0.005 rad.
double default_resolution();

/// min over y in body of |xy|. Exact: Euclidean projection onto the cone when
/// it is nonzero, otherwise the nearest generator.
Angle point_body_distance(const UnitPoint& x, const SphericalBody& body);

/// max over x in a of point_body_distance(x, b).
DistanceResult directed_distance(const SphericalBody& a, const SphericalBody& b,
                                 const DistanceOptions& options = {});

/// Sampled directed distance: Lipschitz branch and bound over a
/// triangulation of a; the returned error bound is at most `resolution`.
DistanceResult sampled_directed_distance(const SphericalBody& a, const SphericalBody& b,
                                         double resolution);

/// Pompeiu-Hausdorff distance.
DistanceResult hausdorff(const SphericalBody& a, const SphericalBody& b,
                         const DistanceOptions& options = {});

/// h(H(p), H(q)) in closed form: min(|pq|, pi/2).
Angle hemisphere_hausdorff(const UnitPoint& p, const UnitPoint& q);

/// x lies in the closed dilation B(body, r); requires 0 < r < pi.
bool dilation_contains(const SphericalBody& body, Angle r, const UnitPoint& x);

struct Lemma2Outcome {
  int samples = 0;
  int compared = 0;    // outside the boundary band
  int mismatches = 0;  // among compared points
  bool agree() const { return mismatches == 0; }
};

/// Compares x ∈ B(w°, r) with x ∈ ∩_{P ∈ w} B(H(P), r) on `samples` uniform
/// points of S^n, ignoring points within 1e-6 of either boundary.
/// Requires 0 < r < pi/2 and a nonempty polar.
Lemma2Outcome lemma2_compare(const SphericalBody& w, Angle r, int samples,
                             std::uint64_t seed);
bool lemma2_check(const SphericalBody& w, Angle r, int samples, std::uint64_t seed);

/// Q with a ⊂ H(Q) and b ∩ H(Q) = ∅ (support of Q on b at most -1e-9).
/// Throws kNoSeparator when the bodies intersect, are closer than 1e-7, or
/// do not lie in a common open hemisphere.
UnitPoint separate(const SphericalBody& a, const SphericalBody& b);

}  // namespace wulff

#endif  // WULFF_METRIC_HPP
