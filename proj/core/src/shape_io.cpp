#include "wulff/shape_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wulff {

namespace {

using nlohmann::json;

int line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Offset of the opening bracket of generators[row] (or of the key itself when
// row < 0), found by a string-aware bracket scan. Only used for diagnostics.
std::size_t locate_generator(std::string_view text, int row) {
  const std::size_t key = text.find("\"generators\"");
  if (key == std::string_view::npos) return 0;
  if (row < 0) return key;
  int depth = 0;
  int seen = -1;
  bool in_string = false;
  for (std::size_t i = text.find('[', key); i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') ++i;
      else if (c == '"') in_string = false;
      continue;
    }
    if (c == '"') in_string = true;
    else if (c == '[' || c == '{') {
      ++depth;
      if (depth == 2 && ++seen == row) return i;
    } else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    }
  }
  return key;
}

[[noreturn]] void fail(std::string_view source, std::string_view text, std::size_t offset,
                       const std::string& field, const std::string& message) {
  std::ostringstream out;
  out << source << ':' << line_of_offset(text, offset) << ": " << field << ": " << message;
  throw GeometryError(ErrorCode::kParse, out.str());
}

}  // namespace

ShapeSpec parse_shape(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(source, text, e.byte > 0 ? e.byte - 1 : 0, "<document>", "malformed JSON");
  }
  if (!doc.is_object()) fail(source, text, 0, "<document>", "expected a JSON object");

  ShapeSpec spec;
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1) {
    fail(source, text, text.find("\"dim\""), "dim", "expected an integer >= 1");
  }
  spec.dim = doc["dim"].get<int>();

  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail(source, text, text.find("\"label\""), "label", "expected a string");
    spec.label = doc["label"].get<std::string>();
  }

  if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty()) {
    fail(source, text, locate_generator(text, -1), "generators", "expected a nonempty array of rows");
  }
  const json& rows = doc["generators"];
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    const std::size_t at = locate_generator(text, static_cast<int>(i));
    if (!rows[i].is_array()) fail(source, text, at, field, "expected an array of numbers");
    if (rows[i].size() != static_cast<std::size_t>(spec.dim) + 1) {
      fail(source, text, at, field,
           "expected " + std::to_string(spec.dim + 1) + " coordinates, got " +
               std::to_string(rows[i].size()));
    }
    std::vector<double> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (!rows[i][j].is_number()) {
        fail(source, text, at, field + "[" + std::to_string(j) + "]", "expected a number");
      }
      row.push_back(rows[i][j].get<double>());
    }
    Eigen::Map<const Vector> v(row.data(), static_cast<Eigen::Index>(row.size()));
    if (!v.allFinite() || v.norm() < tol::kZeroVector) {
      fail(source, text, at, field, "row must be finite and nonzero");
    }
    spec.generator_rows.push_back(std::move(row));
  }
  return spec;
}

ShapeSpec read_shape_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw GeometryError(ErrorCode::kParse, path.string() + ": cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_shape(buffer.str(), path.string());
}

std::string format_shape(const ShapeSpec& spec) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << spec.dim << ",\n";
  if (spec.label) out << "  \"label\": " << json(*spec.label).dump() << ",\n";
  out << "  \"generators\": [\n";
  for (std::size_t i = 0; i < spec.generator_rows.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < spec.generator_rows[i].size(); ++j) {
      if (j) out << ", ";
      out << json(spec.generator_rows[i][j]).dump();
    }
    out << (i + 1 < spec.generator_rows.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

void write_shape_file(const std::filesystem::path& path, const ShapeSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw GeometryError(ErrorCode::kInvalidArgument, path.string() + ": cannot write");
  out << format_shape(spec);
}

std::vector<UnitPoint> shape_points(const ShapeSpec& spec) {
  std::vector<UnitPoint> points;
  for (std::size_t i = 0; i < spec.generator_rows.size(); ++i) {
    const auto& row = spec.generator_rows[i];
    if (row.size() != static_cast<std::size_t>(spec.dim) + 1) {
      throw GeometryError(ErrorCode::kParse,
                          "generators[" + std::to_string(i) + "]: wrong coordinate count");
    }
    try {
      points.emplace_back(Eigen::Map<const Vector>(row.data(), static_cast<Eigen::Index>(row.size())));
    } catch (const GeometryError& e) {
      throw GeometryError(ErrorCode::kParse,
                          "generators[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return points;
}

SphericalBody shape_body(const ShapeSpec& spec) { return from_generators(shape_points(spec)); }

ShapeSpec body_spec(const SphericalBody& body, std::optional<std::string> label) {
  ShapeSpec spec;
  spec.dim = body.sphere_dim();
  spec.label = std::move(label);
  for (const auto& g : body.generators()) {
    spec.generator_rows.emplace_back(g.coords().data(), g.coords().data() + g.coords().size());
  }
  return spec;
}

}  // namespace wulff
