#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "wulff/construct.hpp"
#include "wulff/harness.hpp"
#include "wulff/metric.hpp"
#include "wulff/shape_io.hpp"
#include "wulff/transforms.hpp"

namespace wulff {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string format_angle(double radians) {
  std::ostringstream s;
  s << std::setprecision(17) << radians;
  return s.str();
}

void emit_shape(const ShapeSpec& spec, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << format_shape(spec);
  } else {
    write_shape_file(path, spec);
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical Wulff shapes: polar transform, Hausdorff distances and property suites",
               "wulff"};
  app.require_subcommand(1);

  std::string shape_a, shape_b, output;

  auto* dual = app.add_subcommand("dual", "Polar (dual) body of a shape file");
  dual->add_option("shape", shape_a, "Input shape file")->required();
  dual->add_option("-o,--out", output, "Write the dual here instead of stdout");

  auto* haus = app.add_subcommand("hausdorff", "Pompeiu-Hausdorff distance between two shapes");
  haus->add_option("a", shape_a, "First shape file")->required();
  haus->add_option("b", shape_b, "Second shape file")->required();

  auto* hull = app.add_subcommand("hull", "Spherical convex hull of a point file");
  hull->add_option("points", shape_a, "Shape file whose generators are the points")->required();
  hull->add_option("-o,--out", output, "Write the hull here instead of stdout");

  auto* sep = app.add_subcommand("separate", "Separating hemisphere center for two shapes");
  sep->add_option("a", shape_a, "Shape inside H(Q)")->required();
  sep->add_option("b", shape_b, "Shape disjoint from H(Q)")->required();

  SuiteConfig cfg;
  auto* verify = app.add_subcommand("verify", "Run property suites and write a CSV report");
  verify->add_option("--suite", cfg.suite, "Suite name or 'all'")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Trials per suite")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--dim", cfg.dim, "Sphere dimension n")->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Base seed; trial i uses seed + i")->capture_default_str();
  verify->add_option("--tol", cfg.tolerance, "Tolerance of exact-path checks")->capture_default_str();
  verify->add_option("--resolution", cfg.sampling_resolution,
                     "Sampling resolution in radians (default from WULFF_DEFAULT_RESOLUTION)")
      ->capture_default_str();
  verify->add_option("--out", cfg.output_path, "CSV report path");
  verify->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->capture_default_str();

  std::string kind = "wulff";
  int gen_dim = 2;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a random shape file");
  gen->add_option("--kind", kind, "wulff or convex")->check(CLI::IsMember({"wulff", "convex"}))
      ->capture_default_str();
  gen->add_option("--dim", gen_dim, "Sphere dimension n")->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  gen->add_option("-o,--out", output, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dual) {
      const ShapeSpec spec = read_shape_file(shape_a);
      const SphericalBody body = shape_body(spec);
      const std::string label = spec.label ? *spec.label + "_dual" : "dual";
      emit_shape(body_spec(polar(body), label), output, out);
    } else if (*haus) {
      const DistanceResult h = hausdorff(shape_body(read_shape_file(shape_a)),
                                         shape_body(read_shape_file(shape_b)));
      out << format_angle(h.radians());
      if (!h.exact) out << " +/- " << format_angle(h.error_bound);
      out << '\n';
    } else if (*hull) {
      const ShapeSpec spec = read_shape_file(shape_a);
      emit_shape(body_spec(spherical_hull(shape_points(spec)), spec.label), output, out);
    } else if (*sep) {
      const UnitPoint q = separate(shape_body(read_shape_file(shape_a)),
                                   shape_body(read_shape_file(shape_b)));
      for (int i = 0; i < q.space_dim(); ++i) out << (i ? " " : "") << format_angle(q[i]);
      out << '\n';
    } else if (*verify) {
      const std::vector<PropertyReport> reports = run_suite(cfg);
      if (!cfg.output_path.empty()) {
        std::ofstream csv(cfg.output_path);
        if (!csv) {
          err << "error: cannot write " << cfg.output_path << '\n';
          return kExitFailure;
        }
        write_csv(csv, reports);
      }
      out << summarize(reports);
      if (const auto failing = first_failing_suite(reports)) {
        err << "error: suite '" << *failing << "' failed\n";
        return kExitFailure;
      }
    } else if (*gen) {
      const SphericalBody body =
          kind == "wulff"
              ? [&] {
                  std::mt19937_64 rng(gen_seed);
                  const int k = std::uniform_int_distribution<int>(gen_dim + 2, 12)(rng);
                  const double rho = std::uniform_real_distribution<double>(0.2, 1.2)(rng);
                  return gen_wulff(pole(gen_dim), k, rho, rng());
                }()
              : gen_convex(gen_dim, gen_seed);
      emit_shape(body_spec(body, kind + "_seed_" + std::to_string(gen_seed)), output, out);
    }
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.code() == ErrorCode::kInvalidArgument &&
                       std::string(e.what()).find("unknown suite") != std::string::npos;
    return usage ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}

}  // namespace wulff
