#include <gtest/gtest.h>

#include <filesystem>

#include "wulff/harness.hpp"
#include "wulff/shape_io.hpp"

using namespace wulff;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_shape(text, "shape.json");
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "expected a parse error";
  return {};
}

}  // namespace

TEST(ShapeIo, ReadsGoldenSquare) {
  const ShapeSpec spec = read_shape_file(WULFF_TEST_DATA_DIR "/square.json");
  EXPECT_EQ(spec.dim, 2);
  ASSERT_TRUE(spec.label.has_value());
  EXPECT_EQ(*spec.label, "square");
  EXPECT_EQ(spec.generator_rows.size(), 4u);
  EXPECT_EQ(shape_body(spec).generators().size(), 4u);
}

TEST(ShapeIo, RoundTripIsBitStable) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SphericalBody body = gen_convex(2 + seed % 2, seed);
    const ShapeSpec spec = body_spec(body, "b" + std::to_string(seed));
    const std::string text = format_shape(spec);
    const ShapeSpec back = parse_shape(text);
    EXPECT_EQ(back.generator_rows, spec.generator_rows);
    EXPECT_EQ(back.label, spec.label);
    EXPECT_EQ(format_shape(back), text);
    const SphericalBody again = shape_body(back);
    EXPECT_EQ(again.generators(), body.generators());
  }
}

TEST(ShapeIo, WritesAndReadsFiles) {
  const auto path = std::filesystem::temp_directory_path() / "wulff_shape_io_test.json";
  const ShapeSpec spec = body_spec(gen_convex(2, 3));
  write_shape_file(path, spec);
  EXPECT_EQ(read_shape_file(path).generator_rows, spec.generator_rows);
  std::filesystem::remove(path);
  EXPECT_THROW(read_shape_file(path), GeometryError);
}

TEST(ShapeIo, DiagnosticsCarryLineAndField) {
  const std::string text = "{\n  \"dim\": 2,\n  \"generators\": [\n    [0, 0, 1],\n    [1, 0]\n  ]\n}\n";
  EXPECT_EQ(parse_error(text), "parse: shape.json:5: generators[1]: expected 3 coordinates, got 2");

  const std::string zero = "{\"dim\": 1,\n\"generators\": [[1, 0],\n [0, 0]]}";
  EXPECT_EQ(parse_error(zero), "parse: shape.json:3: generators[1]: row must be finite and nonzero");

  EXPECT_NE(parse_error("{\"dim\": 2, \"generators\": [[0, \"x\", 1]]}").find("generators[0][1]"),
            std::string::npos);
  EXPECT_NE(parse_error("{\"generators\": [[0, 1]]}").find(": dim: "), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 0, \"generators\": [[1]]}").find("dim"), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 1}").find("generators"), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 1, \"generators\": []}").find("nonempty"), std::string::npos);
  EXPECT_NE(parse_error("[1, 2]").find("expected a JSON object"), std::string::npos);
  EXPECT_NE(parse_error("{\"dim\": 1, \"label\": 3, \"generators\": [[1, 0]]}").find("label"),
            std::string::npos);
  EXPECT_EQ(parse_error("{\n\"dim\": 1,\n\"generators\": [[1, 0],\n").substr(0, 18), "parse: shape.json:");
}

TEST(ShapeIo, UnnormalizedRowsAreNormalized) {
  const ShapeSpec spec = parse_shape("{\"dim\": 1, \"generators\": [[3, 4]]}");
  const auto pts = shape_points(spec);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_NEAR(pts[0][0], 0.6, 1e-16);
  EXPECT_NEAR(pts[0][1], 0.8, 1e-16);
}
