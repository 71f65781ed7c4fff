#ifndef WULFF_HARNESS_HPP
#define WULFF_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wulff/body.hpp"
#include "wulff/metric.hpp"

// Random shape generation and the property suites. Every suite produces one
// or more PropertyReport rows per trial; a row passes iff
// value <= target + tolerance, so each row is self-checking.

namespace wulff {

struct SuiteConfig {
  std::string suite = "all";
  int trials = 1;
  int dim = 2;  // sphere dimension n
  std::uint64_t seed = 1;
  double tolerance = 1e-8;
  double sampling_resolution = default_resolution();
  std::string output_path;
  int threads = 0;  // 0: hardware concurrency
};

/// Throws kInvalidArgument unless trials >= 1, dim >= 1, tolerance >= 0 and
/// 0 < sampling_resolution < 0.1.
void validate(const SuiteConfig& cfg);

struct Measurement {
  std::string label;
  double value = 0.0;
};

struct PropertyReport {
  std::string suite;
  std::uint64_t trial_seed = 0;
  int dim = 0;
  std::string label;
  double value = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  std::optional<double> error_bound;
  bool pass = false;
  std::vector<Measurement> measured;
  double wall_ms = 0.0;
};

/// The north pole e_n of S^n.
UnitPoint pole(int sphere_dim);

/// Random Wulff shape relative to p: k points in the open cap B(p, rho) plus
/// a regular simplex of radius 0.02 around p, hulled. Requires
/// k >= n + 2 and 0 < rho < pi/2 - 0.05; retries up to 100 seeds.
SphericalBody gen_wulff(const UnitPoint& p, int k, double rho, std::uint64_t seed);

enum class ConvexKind { kStandard, kEccentric, kNearArc, kArc, kNearHemisphere, kPoint };
const char* to_string(ConvexKind kind);

/// Random spherical convex body of the given kind, contained in the open
/// hemisphere around the pole (every point within 1.55 rad of it).
SphericalBody gen_convex(int sphere_dim, ConvexKind kind, std::mt19937_64& rng);
SphericalBody gen_convex(int sphere_dim, std::uint64_t seed);

/// Suite names in execution order for "all".
const std::vector<std::string>& suite_names();

std::vector<PropertyReport> suite_isometry(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_bilipschitz(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_tightness(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_double_dual(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_antitone_closure(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_metric_lemmas(const SuiteConfig& cfg);
std::vector<PropertyReport> suite_union_closure(const SuiteConfig& cfg);

/// Runs cfg.suite (a name or "all"); throws kInvalidArgument for unknown
/// names.
std::vector<PropertyReport> run_suite(const SuiteConfig& cfg);

void write_csv(std::ostream& out, const std::vector<PropertyReport>& reports,
               bool include_timing = true);
std::string summarize(const std::vector<PropertyReport>& reports);

/// Name of the first suite with a failing row, if any.
std::optional<std::string> first_failing_suite(const std::vector<PropertyReport>& reports);

}  // namespace wulff

#endif  // WULFF_HARNESS_HPP
