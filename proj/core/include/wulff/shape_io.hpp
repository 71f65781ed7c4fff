#ifndef WULFF_SHAPE_IO_HPP
#define WULFF_SHAPE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wulff/body.hpp"

// Shape files are JSON objects:
//
//   {
//     "dim": 2,                       // sphere dimension n
//     "label": "square",              // optional
//     "generators": [[x0, x1, x2], ...]  // rows of n + 1 reals
//   }
//
// Numbers are written in shortest round-trip form, so canonical bodies
// survive a write/read cycle bit for bit.

namespace wulff {

struct ShapeSpec {
  int dim = 0;
  std::vector<std::vector<double>> generator_rows;
  std::optional<std::string> label;
};

/// Parses shape text; errors are kParse with "<source>:<line>: <field>: ...".
ShapeSpec parse_shape(std::string_view text, std::string_view source = "<input>");
ShapeSpec read_shape_file(const std::filesystem::path& path);

std::string format_shape(const ShapeSpec& spec);
void write_shape_file(const std::filesystem::path& path, const ShapeSpec& spec);

/// Validates every row as a UnitPoint (kParse on zero rows).
std::vector<UnitPoint> shape_points(const ShapeSpec& spec);
SphericalBody shape_body(const ShapeSpec& spec);
ShapeSpec body_spec(const SphericalBody& body, std::optional<std::string> label = {});

}  // namespace wulff

#endif  // WULFF_SHAPE_IO_HPP
