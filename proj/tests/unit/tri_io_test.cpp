#include <gtest/gtest.h>

#include "flatland/tri_io.hpp"
#include "support.hpp"

namespace flatland {
namespace {

TEST(TriFormat, WriteThenRead) {
  const Triangulation t = testing::make("Q(5,3)");
  const std::string text = to_tri_string(t);
  EXPECT_EQ(text.substr(0, text.find('\n')), "15 30");
  const FaceList back = parse_tri_string(text);
  EXPECT_EQ(build_triangulation(back.n, back.faces), t);
}

TEST(TriFormat, CommentsBlankLinesAndUnsortedFaces) {
  const FaceList f = parse_tri_string("# tetrahedron\n\n4 4\n2 1 0\n0 1 3\n# middle\n0 2 3\n1 2 3\n");
  EXPECT_EQ(f.n, 4);
  ASSERT_EQ(f.faces.size(), 4u);
  EXPECT_EQ(f.faces[0], (Face{0, 1, 2}));
}

TEST(TriFormat, CarriageReturnsAreTolerated) {
  EXPECT_EQ(parse_tri_string("3 1\r\n0 1 2\r\n").faces.size(), 1u);
}

struct BadInput {
  const char* text;
  int line;
};

class TriFormatErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(TriFormatErrors, ReportsTheLine) {
  try {
    parse_tri_string(GetParam().text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), GetParam().line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, TriFormatErrors,
    ::testing::Values(BadInput{"", 1}, BadInput{"# only a comment\n", 2},
                      BadInput{"4\n", 1}, BadInput{"4 x\n", 1},
                      BadInput{"4 2\n0 1 2\n0 1\n", 3}, BadInput{"4 1\n0 1 4\n", 2},
                      BadInput{"4 1\n0 1 1\n", 2}, BadInput{"4 1\n0 1 2\n1 2 3\n", 3},
                      BadInput{"4 3\n0 1 2\n", 3}, BadInput{"0 0\n", 1},
                      BadInput{"4 1\n0 1 -2\n", 2}, BadInput{"4 1\n0 1 2 3\n", 2}));

}  // namespace
}  // namespace flatland
