// Acceptance run: one PASS/FAIL line per property, tolerances pinned here.
// Exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wulff/wulff.hpp"

using namespace wulff;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::vector<PropertyReport> run(const std::string& suite, int trials, int dim, std::uint64_t seed,
                                double tolerance = 1e-8) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.trials = trials;
  cfg.dim = dim;
  cfg.seed = seed;
  cfg.tolerance = tolerance;
  cfg.sampling_resolution = 0.005;
  return run_suite(cfg);
}

// Rows whose label starts with `prefix`; counts failures and the worst value.
struct Tally {
  int rows = 0;
  int failed = 0;
  double worst = 0.0;
};
Tally tally(const std::vector<PropertyReport>& reports, const std::string& prefix = "") {
  Tally t;
  for (const auto& r : reports) {
    if (r.label.rfind(prefix, 0) != 0) continue;
    ++t.rows;
    if (!r.pass) ++t.failed;
    t.worst = std::max(t.worst, r.value);
  }
  return t;
}

double measured(const PropertyReport& r, const std::string& key) {
  for (const auto& m : r.measured) {
    if (m.label == key) return m.value;
  }
  return NAN;
}

Verdict isometry() {
  const auto t0 = Clock::now();
  const Tally s2 = tally(run("isometry", 500, 2, 1000));
  const Tally s3 = tally(run("isometry", 100, 3, 2000));
  const double secs = seconds_since(t0);
  const bool ok = s2.rows == 500 && s3.rows == 100 && s2.failed + s3.failed == 0 && secs <= 120.0;
  return {ok, fmt("S2 %d/%d, S3 %d/%d, max |dh| %.2e (tol 1e-8), %.1f s (limit 120 s)",
                  s2.rows - s2.failed, s2.rows, s3.rows - s3.failed, s3.rows,
                  std::max(s2.worst, s3.worst), secs)};
}

Verdict bilipschitz() {
  const auto reports = run("bilipschitz", 500, 2, 3000);
  const Tally t = tally(reports);
  int sampled = 0;
  for (const auto& r : reports) sampled += r.error_bound.has_value() && *r.error_bound > 0;
  return {t.rows == 500 && t.failed == 0,
          fmt("%d/%d pairs inside [h/2 - tol, 2h + tol] (%d on the sampled path)",
              t.rows - t.failed, t.rows, sampled)};
}

Verdict tightness() {
  const auto reports = run("tightness", 20, 2, 4000);
  int rows = 0, ok = 0;
  double lo = INFINITY, hi = -INFINITY, worst = 0.0;
  for (const auto& r : reports) {
    if (r.label != "ratio_gamma_0.01") continue;
    ++rows;
    const double ratio = measured(r, "ratio");
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    worst = std::max(worst, r.value);
    ok += r.value <= 1e-6 && ratio >= 1.993 && ratio < 2.0;
  }
  return {rows == 20 && ok == rows,
          fmt("|P1P2| = pi - 0.01: ratio in [%.6f, %.6f], max |ratio - (pi-0.01)/(pi/2)| %.2e "
              "(tol 1e-6)", lo, hi, worst)};
}

Verdict double_dual() {
  const auto reports = run("double_dual", 200, 2, 5000);
  const Tally t = tally(reports);
  bool point = false, hemi = false;
  for (const auto& r : reports) {
    point = point || (r.label == "point" && r.pass);
    hemi = hemi || (r.label == "hemisphere" && r.pass);
  }
  return {t.rows == 202 && t.failed == 0 && point && hemi,
          fmt("%d/%d bodies (incl. {P}, H(P)) equal their double polar within 1e-9",
              t.rows - t.failed, t.rows)};
}

bool same_rays(std::vector<Vector> a, std::vector<Vector> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Vector& v : a) {
    auto it = std::find_if(b.begin(), b.end(),
                           [&](const Vector& w) { return geodesic_distance(v, w) <= tol; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

Verdict dd_oracle() {
  std::mt19937_64 rng(6000);
  std::normal_distribution<double> normal;
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 3;
    const int m = 1 + static_cast<int>(rng() % 12);
    Vector bias(d);
    for (int j = 0; j < d; ++j) bias[j] = normal(rng);
    const double pull = std::uniform_real_distribution<double>(0.0, 2.0)(rng);
    Matrix g(m, d);
    for (int i = 0; i < m; ++i) {
      Vector v(d);
      for (int j = 0; j < d; ++j) v[j] = normal(rng);
      g.row(i) = (v + pull * bias.normalized()).normalized().transpose();
    }
    const DualConeParts parts = dual_cone_parts(g);
    const oracle::BruteDual brute = oracle::brute_dual(g);
    const double lin = (parts.lineality * parts.lineality.transpose() - brute.lineality_projector).norm();
    agree += lin <= 1e-9 && same_rays(parts.rays, brute.rays, 1e-9);
  }
  return {agree == 200, fmt("%d/200 generator sets (dims 2-4, <= 12 generators) match within 1e-9", agree)};
}

Verdict hausdorff_oracle() {
  constexpr double delta = 0.005;
  std::mt19937_64 rng(7000);
  int pairs = 0, agree = 0;
  double worst = 0.0;
  while (pairs < 50) {
    const int dim = pairs < 35 ? 2 : 3;
    const SphericalBody a = gen_convex(dim, rng());
    const SphericalBody b = gen_convex(dim, rng());
    if (!is_hemispherical(a) || !is_hemispherical(b)) continue;
    ++pairs;
    const double exact = directed_distance(a, b).radians();
    const oracle::Sampled s = oracle::sampled_directed(a, b, delta);
    const double diff = std::abs(exact - s.lower);
    worst = std::max(worst, diff);
    agree += diff <= 2 * delta;
  }
  return {agree == pairs, fmt("%d/%d pairs, max |exact - sampled| %.2e (tol 2*0.005)", agree, pairs, worst)};
}

Verdict hemisphere_closed_form() {
  const Tally t = tally(run("metric_lemmas", 100, 2, 8000), "lemma1");
  return {t.rows == 100 && t.failed == 0,
          fmt("%d/%d hemisphere pairs, max |closed - generic| %.2e (tol max(1e-8, 2*0.005))",
              t.rows - t.failed, t.rows, t.worst)};
}

Verdict dilation_membership() {
  const auto reports = run("metric_lemmas", 20, 2, 9000);
  const Tally t = tally(reports, "lemma2");
  int compared = 0;
  for (const auto& r : reports) {
    if (r.label == "lemma2_mismatches") compared += static_cast<int>(measured(r, "compared"));
  }
  return {t.rows == 20 && t.failed == 0,
          fmt("%d/%d (W, r) cases with 10^4 samples, %d compared points, %d mismatches",
              t.rows - t.failed, t.rows, compared, static_cast<int>(t.worst))};
}

// Bounding cap of a hemispherical body: centroid direction, max generator angle.
std::pair<UnitPoint, double> bounding_cap(const SphericalBody& b) {
  Vector sum = Vector::Zero(b.space_dim());
  for (const auto& g : b.generators()) sum += g.coords();
  const UnitPoint c(sum);
  double r = 0.0;
  for (const auto& g : b.generators()) r = std::max(r, geodesic_distance(c, g).radians());
  return {c, r};
}

Verdict separation() {
  std::mt19937_64 rng(10000);
  int pairs = 0, ok = 0;
  double min_gap = INFINITY;
  while (pairs < 100) {
    const int dim = pairs < 70 ? 2 : 3;
    const SphericalBody a = gen_convex(dim, rng());
    SphericalBody b = gen_convex(dim, rng());
    const auto [ca, ra] = bounding_cap(a);
    const auto [cb, rb] = bounding_cap(b);
    if (ra >= kHalfPi || rb >= kHalfPi) continue;
    // Move b so that the bounding caps are disjoint by a random gap, and the
    // pair still fits in an open hemisphere.
    const double gap = std::exp(std::uniform_real_distribution<double>(std::log(1e-3), 0.0)(rng));
    const double sep = ra + rb + gap;
    if (sep + ra + rb >= kPi - 1e-3) continue;
    const Vector dir = orthonormal_complement(ca.coords()).col(0);
    const UnitPoint target = exp_map(ca, dir, sep);
    // Rotation taking cb to target: reflect twice (Householder).
    auto householder = [](const Vector& u, const Vector& v) {
      const Vector w = (u - v).normalized();
      return Matrix(Matrix::Identity(u.size(), u.size()) - 2.0 * w * w.transpose());
    };
    const Matrix r1 = householder(cb.coords(), -target.coords());
    const Matrix r2 = householder(-target.coords(), target.coords());
    b = rotate(b, r2 * r1);
    ++pairs;
    min_gap = std::min(min_gap, gap);
    try {
      const UnitPoint q = separate(a, b);
      const bool a_inside = (a.generator_rows() * q.coords()).minCoeff() >= -tol::kMembership;
      const bool b_outside = (b.generator_rows() * q.coords()).maxCoeff() <= -1e-9;
      ok += a_inside && b_outside;
    } catch (const GeometryError&) {
    }
  }
  return {ok == pairs, fmt("%d/%d disjoint pairs separated and rechecked (smallest cap gap %.1e rad)",
                           ok, pairs, min_gap)};
}

Verdict antitone_closure() {
  const auto reports = run("antitone_closure", 200, 2, 11000);
  const Tally anti = tally(reports, "antitone");
  const Tally wulff = tally(reports, "wulff_dual");
  return {anti.rows == 200 && wulff.rows == 200 && anti.failed + wulff.failed == 0,
          fmt("antitone %d/%d (max defect %.1e, tol 1e-10), Wulff duals %d/%d",
              anti.rows - anti.failed, anti.rows, anti.worst, wulff.rows - wulff.failed, wulff.rows)};
}

Verdict union_closure() {
  const auto reports = run("union_closure", 50, 2, 12000);
  const Tally t = tally(reports);
  const int points = tally(reports, "point_monotone").rows;
  const int arcs = tally(reports, "arc_monotone").rows;
  return {t.rows == 300 && t.failed == 0 && points > 0 && arcs > 0,
          fmt("%d/%d rows over 50 bodies (%d points, %d arcs, rest convex/Wulff): W_i valid, "
              "h(W_i, W) decreasing", t.rows - t.failed, t.rows, points, arcs)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"isometry", isometry},
      {"bilipschitz", bilipschitz},
      {"tightness", tightness},
      {"double_dual", double_dual},
      {"dual_conversion_oracle", dd_oracle},
      {"hausdorff_oracle", hausdorff_oracle},
      {"hemisphere_closed_form", hemisphere_closed_form},
      {"dilation_membership", dilation_membership},
      {"separation", separation},
      {"antitone_and_wulff_closure", antitone_closure},
      {"union_of_closures", union_closure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("%s %2zu %-28s %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
