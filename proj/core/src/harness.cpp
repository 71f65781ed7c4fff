#include "wulff/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "wulff/construct.hpp"
#include "wulff/metric.hpp"
#include "wulff/transforms.hpp"

namespace wulff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kLemma2Samples = 10000;
constexpr int kRingPoints2 = 16;  // dilation ring size on S^2
constexpr int kRingPoints3 = 24;  // Fibonacci directions on S^3

using TrialFn = std::function<std::vector<PropertyReport>(std::uint64_t seed, int index)>;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Vector random_tangent(const UnitPoint& p, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const Matrix basis = orthonormal_complement(p.coords());
  Vector c(basis.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = normal(rng);
  return basis * c.normalized();
}

UnitPoint random_point_near(const UnitPoint& p, double max_angle, std::mt19937_64& rng) {
  return exp_map(p, random_tangent(p, rng), uniform(rng, 0.0, max_angle));
}

PropertyReport make_report(const std::string& suite, std::uint64_t seed, int dim,
                           std::string label, double value, double target, double tolerance,
                           std::optional<double> error_bound = {},
                           std::vector<Measurement> measured = {}) {
  PropertyReport r;
  r.suite = suite;
  r.trial_seed = seed;
  r.dim = dim;
  r.label = std::move(label);
  r.value = value;
  r.target = target;
  r.tolerance = tolerance;
  r.error_bound = error_bound;
  r.pass = !std::isnan(value) && value <= target + tolerance;
  r.measured = std::move(measured);
  return r;
}

std::optional<double> bound_of(const DistanceResult& d) {
  if (d.exact) return std::nullopt;
  return d.error_bound;
}

std::optional<double> combined_bound(std::initializer_list<DistanceResult> ds) {
  std::optional<double> out;
  for (const auto& d : ds) {
    if (!d.exact) out = std::max(out.value_or(0.0), d.error_bound);
  }
  return out;
}

// Runs the trials on a small thread pool; results are merged in trial order.
std::vector<PropertyReport> run_trials(const SuiteConfig& cfg, const std::string& suite,
                                       const TrialFn& trial) {
  validate(cfg);
  std::vector<std::vector<PropertyReport>> per_trial(static_cast<std::size_t>(cfg.trials));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.trials; i = next++) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
      const auto start = std::chrono::steady_clock::now();
      std::vector<PropertyReport> rows;
      try {
        rows = trial(seed, i);
      } catch (const std::exception& e) {
        rows = {make_report(suite, seed, cfg.dim, std::string("skipped: ") + e.what(), kInf, 0.0,
                            cfg.tolerance)};
      }
      const double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start).count();
      for (auto& r : rows) r.wall_ms = ms;
      per_trial[static_cast<std::size_t>(i)] = std::move(rows);
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = std::min(threads, cfg.trials);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<PropertyReport> out;
  for (auto& rows : per_trial) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

// Squeezes the points toward the great sphere through `center` orthogonal to
// a random tangent axis, in gnomonic coordinates.
std::vector<UnitPoint> squeeze(const std::vector<UnitPoint>& points, const UnitPoint& center,
                               double factor, std::mt19937_64& rng) {
  const Vector axis = random_tangent(center, rng);
  std::vector<UnitPoint> out;
  for (const auto& q : points) {
    Vector x = q.coords() / q.dot(center) - center.coords();
    x -= (1.0 - factor) * axis.dot(x) * axis;
    out.emplace_back(Vector(center.coords() + x));
  }
  return out;
}

int ring_points(int dim) { return dim == 2 ? kRingPoints2 : kRingPoints3; }

}  // namespace

void validate(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw GeometryError(ErrorCode::kInvalidArgument, "trials must be >= 1");
  if (cfg.dim < 1) throw GeometryError(ErrorCode::kInvalidArgument, "dim must be >= 1");
  if (!(cfg.tolerance >= 0.0)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "tolerance must be >= 0");
  }
  if (!(cfg.sampling_resolution > 0.0 && cfg.sampling_resolution < 0.1)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "resolution must lie in (0, 0.1)");
  }
}

UnitPoint pole(int sphere_dim) {
  return UnitPoint(Vector(Vector::Unit(sphere_dim + 1, sphere_dim)));
}

SphericalBody gen_wulff(const UnitPoint& p, int k, double rho, std::uint64_t seed) {
  const int n = p.sphere_dim();
  if (k < n + 2) throw GeometryError(ErrorCode::kInvalidArgument, "gen_wulff: k < n + 2");
  if (!(rho > 0.0 && rho < kHalfPi - 0.05)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "gen_wulff: rho out of range");
  }
  const std::vector<UnitPoint> core = regular_simplex_around(p, 0.02);
  for (std::uint64_t attempt = 0; attempt < 100; ++attempt) {
    std::vector<UnitPoint> points = sample_cap(p, Angle(rho), seed + attempt * 0x9E3779B97F4A7C15ULL, k);
    points.insert(points.end(), core.begin(), core.end());
    SphericalBody w = from_generators(points);
    if (is_wulff_relative(w, p)) return w;
  }
  throw GeometryError(ErrorCode::kNotAWulffShape, "gen_wulff: no valid shape after 100 attempts");
}

const char* to_string(ConvexKind kind) {
  switch (kind) {
    case ConvexKind::kStandard: return "standard";
    case ConvexKind::kEccentric: return "eccentric";
    case ConvexKind::kNearArc: return "near_arc";
    case ConvexKind::kArc: return "arc";
    case ConvexKind::kNearHemisphere: return "near_hemisphere";
    case ConvexKind::kPoint: return "point";
  }
  return "unknown";
}

SphericalBody gen_convex(int sphere_dim, ConvexKind kind, std::mt19937_64& rng) {
  const UnitPoint north = pole(sphere_dim);
  const int n = sphere_dim;
  switch (kind) {
    case ConvexKind::kStandard:
    case ConvexKind::kEccentric:
    case ConvexKind::kNearArc: {
      const UnitPoint center = random_point_near(north, 0.2, rng);
      const int k = uniform_int(rng, n + 1, 12);
      const double rho = uniform(rng, 0.1, 1.2);
      auto points = sample_cap(center, Angle(rho), rng(), k);
      if (kind == ConvexKind::kEccentric) points = squeeze(points, center, uniform(rng, 0.05, 0.3), rng);
      if (kind == ConvexKind::kNearArc) points = squeeze(points, center, uniform(rng, 1e-4, 1e-3), rng);
      return from_generators(points);
    }
    case ConvexKind::kArc: {
      const UnitPoint a = random_point_near(north, 1.0, rng);
      const UnitPoint b = random_point_near(north, 1.0, rng);
      return from_generators({a, b});
    }
    case ConvexKind::kNearHemisphere: {
      const UnitPoint center = random_point_near(north, 0.02, rng);
      return cap_polytope(center, uniform(rng, 1.4, 1.5), uniform_int(rng, 6, 16));
    }
    case ConvexKind::kPoint:
      return from_generators({random_point_near(north, 1.2, rng)});
  }
  throw GeometryError(ErrorCode::kInvalidArgument, "unknown convex kind");
}

SphericalBody gen_convex(int sphere_dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gen_convex(sphere_dim, ConvexKind::kStandard, rng);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "isometry",        "bilipschitz",   "tightness",     "double_dual",
      "antitone_closure", "metric_lemmas", "union_closure"};
  return names;
}

std::vector<PropertyReport> suite_isometry(const SuiteConfig& cfg) {
  const std::string name = "isometry";
  const DistanceOptions opts{cfg.sampling_resolution};
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    const UnitPoint p = pole(cfg.dim);
    const SphericalBody w1 = gen_wulff(p, uniform_int(rng, cfg.dim + 2, 12), uniform(rng, 0.1, 1.2), rng());
    const SphericalBody w2 = gen_wulff(p, uniform_int(rng, cfg.dim + 2, 12), uniform(rng, 0.1, 1.2), rng());
    const DistanceResult h = hausdorff(w1, w2, opts);
    const DistanceResult hd = hausdorff(dual_wulff(w1, p), dual_wulff(w2, p), opts);
    const double delta = std::abs(hd.radians() - h.radians());
    return std::vector<PropertyReport>{make_report(
        name, seed, cfg.dim, "abs_h_dual_minus_h", delta, 0.0, cfg.tolerance,
        combined_bound({h, hd}), {{"h", h.radians()}, {"h_dual", hd.radians()}})};
  });
}

std::vector<PropertyReport> suite_bilipschitz(const SuiteConfig& cfg) {
  const std::string name = "bilipschitz";
  const DistanceOptions opts{cfg.sampling_resolution};
  static constexpr ConvexKind kKinds[] = {ConvexKind::kStandard, ConvexKind::kEccentric,
                                          ConvexKind::kNearArc,  ConvexKind::kArc,
                                          ConvexKind::kNearHemisphere, ConvexKind::kPoint};
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    const ConvexKind ka = kKinds[uniform_int(rng, 0, 5)];
    const ConvexKind kb = kKinds[uniform_int(rng, 0, 5)];
    const SphericalBody w1 = gen_convex(cfg.dim, ka, rng);
    const SphericalBody w2 = gen_convex(cfg.dim, kb, rng);
    const DistanceResult h = hausdorff(w1, w2, opts);
    const DistanceResult hd = hausdorff(polar(w1), polar(w2), opts);
    const double violation = std::max(hd.radians() - 2.0 * h.radians(), 0.5 * h.radians() - hd.radians());
    const auto bound = combined_bound({h, hd});
    const double tolerance = bound ? 2.0 * cfg.sampling_resolution : cfg.tolerance;
    return std::vector<PropertyReport>{make_report(
        name, seed, cfg.dim, std::string("sandwich_") + to_string(ka) + "_" + to_string(kb),
        violation, 0.0, tolerance, bound,
        {{"h", h.radians()}, {"h_dual", hd.radians()}})};
  });
}

std::vector<PropertyReport> suite_tightness(const SuiteConfig& cfg) {
  const std::string name = "tightness";
  const DistanceOptions opts{cfg.sampling_resolution};
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    std::vector<PropertyReport> rows;
    for (double gamma : {0.5, 0.1, 0.01}) {
      const UnitPoint p1 = sample_sphere(cfg.dim, rng(), 1).front();
      const UnitPoint p2 = exp_map(p1, random_tangent(p1, rng), kPi - gamma);
      const DistanceResult h = hausdorff(hemisphere_body(p1), hemisphere_body(p2), opts);
      const DistanceResult hd = hausdorff(polar(hemisphere_body(p1)), polar(hemisphere_body(p2)), opts);
      const double ratio = hd.radians() / h.radians();
      const double expected = geodesic_distance(p1, p2).radians() / kHalfPi;
      std::ostringstream label;
      label << "ratio_gamma_" << gamma;
      rows.push_back(make_report(name, seed, cfg.dim, label.str(), std::abs(ratio - expected), 0.0,
                                 1e-6, combined_bound({h, hd}),
                                 {{"ratio", ratio},
                                  {"lower_bound", 2.0 - 2.0 * gamma / kPi},
                                  {"h", h.radians()},
                                  {"h_dual", hd.radians()}}));
    }
    return rows;
  });
}

std::vector<PropertyReport> suite_double_dual(const SuiteConfig& cfg) {
  const std::string name = "double_dual";
  auto check = [&](std::uint64_t seed, const std::string& label, const SphericalBody& w) {
    const SphericalBody ww = double_polar(w);
    const double gap = bodies_equal(ww, w, Angle(tol::kRayIdentity)) ? generator_set_distance(ww, w)
                                                                      : kInf;
    return make_report(name, seed, cfg.dim, label, gap, 0.0, tol::kRayIdentity, {},
                       {{"generators", static_cast<double>(w.generators().size())},
                        {"generators_double_dual", static_cast<double>(ww.generators().size())}});
  };
  static constexpr ConvexKind kKinds[] = {ConvexKind::kStandard, ConvexKind::kEccentric,
                                          ConvexKind::kNearArc, ConvexKind::kArc,
                                          ConvexKind::kPoint};
  return run_trials(cfg, name, [&](std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed);
    const ConvexKind kind = kKinds[uniform_int(rng, 0, 4)];
    std::vector<PropertyReport> rows{
        check(seed, std::string("hull_") + to_string(kind), gen_convex(cfg.dim, kind, rng))};
    if (index == 0) {
      const UnitPoint p = sample_sphere(cfg.dim, seed, 1).front();
      rows.push_back(check(seed, "point", from_generators({p})));
      rows.push_back(check(seed, "hemisphere", hemisphere_body(p)));
    }
    return rows;
  });
}

std::vector<PropertyReport> suite_antitone_closure(const SuiteConfig& cfg) {
  const std::string name = "antitone_closure";
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    // Nested pair: a is the hull of some vertices of b and some interior
    // convex combinations of them.
    const SphericalBody b = gen_convex(cfg.dim, ConvexKind::kStandard, rng);
    std::vector<UnitPoint> inner;
    for (const auto& g : b.generators()) {
      if (uniform(rng, 0.0, 1.0) < 0.5) inner.push_back(g);
    }
    const int extra = uniform_int(rng, 1, 4);
    for (int e = 0; e < extra; ++e) {
      Vector mix = Vector::Zero(b.space_dim());
      for (const auto& g : b.generators()) mix += uniform(rng, 0.0, 1.0) * g.coords();
      inner.emplace_back(mix);
    }
    const SphericalBody a = from_generators(inner);
    const double defect = antitone_defect(a, b);

    const UnitPoint p = pole(cfg.dim);
    const SphericalBody w = gen_wulff(p, uniform_int(rng, cfg.dim + 2, 12), uniform(rng, 0.1, 1.2), rng());
    const double margin = wulff_margin(polar(w), p);
    return std::vector<PropertyReport>{
        make_report(name, seed, cfg.dim, "antitone_defect", defect, 0.0, tol::kMembership),
        make_report(name, seed, cfg.dim, "wulff_dual_defect", tol::kStrict - margin, 0.0, 0.0, {},
                    {{"dual_margin", margin}})};
  });
}

std::vector<PropertyReport> suite_metric_lemmas(const SuiteConfig& cfg) {
  const std::string name = "metric_lemmas";
  const DistanceOptions opts{cfg.sampling_resolution};
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    std::vector<PropertyReport> rows;

    const UnitPoint p = sample_sphere(cfg.dim, rng(), 1).front();
    const UnitPoint q = exp_map(p, random_tangent(p, rng), uniform(rng, 0.0, kHalfPi));
    const double closed = hemisphere_hausdorff(p, q).radians();
    const DistanceResult generic = hausdorff(hemisphere_body(p), hemisphere_body(q), opts);
    rows.push_back(make_report(name, seed, cfg.dim, "lemma1_closed_vs_generic",
                               std::abs(closed - generic.radians()), 0.0,
                               std::max(1e-8, 2.0 * cfg.sampling_resolution), bound_of(generic),
                               {{"pq", geodesic_distance(p, q).radians()},
                                {"closed_form", closed},
                                {"generic", generic.radians()}}));

    const bool wulff = uniform(rng, 0.0, 1.0) < 0.5;
    const SphericalBody w = wulff ? gen_wulff(pole(cfg.dim), uniform_int(rng, cfg.dim + 2, 12),
                                              uniform(rng, 0.1, 1.2), rng())
                                  : gen_convex(cfg.dim, ConvexKind::kStandard, rng);
    const double r = uniform(rng, 0.05, kHalfPi - 0.05);
    const Lemma2Outcome l2 = lemma2_compare(w, Angle(r), kLemma2Samples, rng());
    rows.push_back(make_report(name, seed, cfg.dim, "lemma2_mismatches",
                               static_cast<double>(l2.mismatches), 0.0, 0.0, {},
                               {{"r", r},
                                {"samples", static_cast<double>(l2.samples)},
                                {"compared", static_cast<double>(l2.compared)}}));
    return rows;
  });
}

std::vector<PropertyReport> suite_union_closure(const SuiteConfig& cfg) {
  const std::string name = "union_closure";
  const DistanceOptions opts{cfg.sampling_resolution};
  return run_trials(cfg, name, [&](std::uint64_t seed, int) {
    std::mt19937_64 rng(seed);
    const UnitPoint p = pole(cfg.dim);
    // W always contains P, so P is the base point of the approximating
    // Wulff sequence.
    std::string kind;
    std::vector<UnitPoint> points{p};
    switch (uniform_int(rng, 0, 3)) {
      case 0:
        kind = "point";
        break;
      case 1: {
        kind = "arc";
        const Vector t = random_tangent(p, rng);
        points = {exp_map(p, t, uniform(rng, 0.05, 0.6)), exp_map(p, -t, uniform(rng, 0.0, 0.6))};
        break;
      }
      case 2: {
        kind = "convex";
        const UnitPoint c = random_point_near(p, 0.3, rng);
        for (const auto& q : sample_cap(c, Angle(0.3), rng(), uniform_int(rng, 2, 8))) points.push_back(q);
        break;
      }
      default: {
        kind = "wulff";
        const SphericalBody w0 = gen_wulff(p, uniform_int(rng, cfg.dim + 2, 10), uniform(rng, 0.1, 0.6), rng());
        points = w0.generators();
      }
    }
    const SphericalBody w = from_generators(points);

    std::vector<PropertyReport> rows;
    std::vector<double> dist;
    std::optional<double> bound;
    for (int i : {4, 8, 16, 32}) {
      const double eps = 1.0 / i;
      const SphericalBody wi = intersect(dilate(w, eps, ring_points(cfg.dim)),
                                         cap_polytope(p, kHalfPi - eps, ring_points(cfg.dim)));
      const DistanceResult h = hausdorff(wi, w, opts);
      if (!h.exact) bound = std::max(bound.value_or(0.0), h.error_bound);
      dist.push_back(h.radians());
      const double margin = wulff_margin(wi, p);
      rows.push_back(make_report(name, seed, cfg.dim, kind + "_wulff_defect_i" + std::to_string(i),
                                 tol::kStrict - margin, 0.0, 0.0, bound_of(h),
                                 {{"margin", margin}, {"h", h.radians()}, {"eps", eps}}));
    }
    double monotone = 0.0;
    for (std::size_t k = 1; k < dist.size(); ++k) monotone = std::max(monotone, dist[k] - dist[k - 1]);
    const double slack = 1e-9 + 2.0 * bound.value_or(0.0);
    rows.push_back(make_report(name, seed, cfg.dim, kind + "_monotone_violation", monotone, 0.0, slack,
                               bound, {{"h4", dist[0]}, {"h8", dist[1]}, {"h16", dist[2]}, {"h32", dist[3]}}));
    rows.push_back(make_report(name, seed, cfg.dim, kind + "_rate_violation", dist[3] - dist[0] / 4.0,
                               0.0, slack, bound, {{"h4", dist[0]}, {"h32", dist[3]}}));
    return rows;
  });
}

std::vector<PropertyReport> run_suite(const SuiteConfig& cfg) {
  using SuiteFn = std::vector<PropertyReport> (*)(const SuiteConfig&);
  static const std::map<std::string, SuiteFn> table{
      {"isometry", suite_isometry},           {"bilipschitz", suite_bilipschitz},
      {"tightness", suite_tightness},         {"double_dual", suite_double_dual},
      {"antitone_closure", suite_antitone_closure}, {"metric_lemmas", suite_metric_lemmas},
      {"union_closure", suite_union_closure}};
  validate(cfg);
  if (cfg.suite == "all") {
    std::vector<PropertyReport> all;
    for (const auto& name : suite_names()) {
      auto rows = table.at(name)(cfg);
      all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
  }
  const auto it = table.find(cfg.suite);
  if (it == table.end()) {
    throw GeometryError(ErrorCode::kInvalidArgument, "unknown suite '" + cfg.suite + "'");
  }
  return it->second(cfg);
}

void write_csv(std::ostream& out, const std::vector<PropertyReport>& reports, bool include_timing) {
  out << "suite,trial_seed,dim,label,value,target,tolerance,error_bound,pass";
  if (include_timing) out << ",ms";
  out << '\n';
  auto num = [&](double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
  };
  for (const auto& r : reports) {
    out << r.suite << ',' << r.trial_seed << ',' << r.dim << ',' << '"' << r.label << '"' << ','
        << num(r.value) << ',' << num(r.target) << ',' << num(r.tolerance) << ','
        << (r.error_bound ? num(*r.error_bound) : std::string()) << ','
        << (r.pass ? "true" : "false");
    if (include_timing) out << ',' << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
    out << '\n';
  }
}

std::string summarize(const std::vector<PropertyReport>& reports) {
  struct Tally {
    int rows = 0;
    int failed = 0;
    double worst = -kInf;  // max of value - (target + tolerance)
    double ms = 0.0;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  for (const auto& r : reports) {
    if (!tallies.contains(r.suite)) order.push_back(r.suite);
    Tally& t = tallies[r.suite];
    ++t.rows;
    if (!r.pass) ++t.failed;
    t.worst = std::max(t.worst, r.value - (r.target + r.tolerance));
    t.ms += r.wall_ms;
  }
  std::ostringstream out;
  out << std::left << std::setw(18) << "suite" << std::setw(8) << "rows" << std::setw(8) << "failed"
      << std::setw(16) << "worst_slack" << "status\n";
  for (const auto& name : order) {
    const Tally& t = tallies[name];
    out << std::left << std::setw(18) << name << std::setw(8) << t.rows << std::setw(8) << t.failed
        << std::setw(16) << std::setprecision(4) << t.worst << (t.failed ? "FAIL" : "ok") << '\n';
  }
  return out.str();
}

std::optional<std::string> first_failing_suite(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return r.suite;
  }
  return std::nullopt;
}

}  // namespace wulff
