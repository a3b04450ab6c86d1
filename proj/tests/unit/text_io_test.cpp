#include <doctest.h>

#include <sstream>
#include <string>

#include "smoothorb/error.hpp"
#include "smoothorb/text_io.hpp"

using namespace smoothorb;

namespace {

MatroidText matroid(const std::string& text) {
  std::istringstream in(text);
  return parse_matroid_text(in);
}

ComplexMatrix matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix_text(in);
}

std::string parse_error(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Parse);
    return e.what();
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("matroid files") {
  const auto m = matroid("# octahedron\n4 2\n1 2\n\n1 3  # comment\n1 4\n2 3\n2 4\n3 4\n");
  CHECK(m.n == 4);
  CHECK(m.k == 2);
  CHECK(m.bases.size() == 6);
  CHECK(m.bases[1] == BasisSet::from_elements({1, 3}));

  const auto point = matroid("3 0\n");
  REQUIRE(point.bases.size() == 1);
  CHECK(point.bases[0].empty());

  CHECK(parse_error([] { matroid(""); }).find("header") != std::string::npos);
  CHECK(parse_error([] { matroid("4 2\n2 1\n"); }).find("line 2") != std::string::npos);
  CHECK(parse_error([] { matroid("4 2\n1 2\n1 2\n"); }).find("line 3") != std::string::npos);
  CHECK(parse_error([] { matroid("4 2\n1 2 3\n"); }).find("line 2") != std::string::npos);
  CHECK(parse_error([] { matroid("4 2\n1 x\n"); }).find("line 2") != std::string::npos);
  CHECK(parse_error([] { matroid("4 2\n1 5\n"); }).find("line 2") != std::string::npos);
  parse_error([] { matroid("4\n"); });
  parse_error([] { matroid("4 2 1\n"); });
}

TEST_CASE("matrix files") {
  const auto a = matrix("2 2\n1 i\n1/2+3/4i  -2\n");
  CHECK(a.rows() == 2);
  CHECK(a(0, 1) == GaussianRational(0, 1));
  CHECK(a(1, 0) == GaussianRational(Rational(1, 2), Rational(3, 4)));
  CHECK(parse_error([] { matrix("2 2\n1 0\n"); }).find("found 1") != std::string::npos);
  CHECK(parse_error([] { matrix("2 2\n1 0\n1 q\n"); }).find("column 2") != std::string::npos);
  CHECK(parse_error([] { matrix("2 2\n1 0 0\n1 1\n"); }).find("row 1") != std::string::npos);
  parse_error([] { matrix("2 2\n1 0\n1 1\n5 5\n"); });
}
