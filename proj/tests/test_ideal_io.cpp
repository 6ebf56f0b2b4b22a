#include <doctest.h>

#include "bmres/ideal_io.hpp"

using namespace bmres;

TEST_CASE("letter shorthand maps letters alphabetically") {
  auto ideal = parse_ideal_inline("xy; yz; xz");
  REQUIRE(ideal.num_vars() == 3);
  REQUIRE(ideal.num_gens() == 3);
  CHECK(ideal.gen(0) == Monomial({1, 1, 0}));
  CHECK(ideal.gen(1) == Monomial({0, 1, 1}));
  CHECK(ideal.gen(2) == Monomial({1, 0, 1}));
}

TEST_CASE("letter exponents require a caret") {
  auto ideal = parse_ideal_inline("a^2*b, b^3");
  CHECK(ideal.gen(0) == Monomial({2, 1}));
  CHECK(ideal.gen(1) == Monomial({0, 3}));
  CHECK_THROWS_AS(parse_ideal_inline("a2"), ParseError);
}

TEST_CASE("indexed notation") {
  auto ideal = parse_ideal_inline("x1^2*x2; x3");
  REQUIRE(ideal.num_vars() == 3);
  CHECK(ideal.gen(0) == Monomial({2, 1, 0}));
  CHECK(ideal.gen(1) == Monomial({0, 0, 1}));
  // a bare x followed by digits is the indexed variable, not a letter
  CHECK(parse_ideal_inline("x2; x1").gen(0) == Monomial({0, 1}));
  CHECK_THROWS_AS(parse_ideal_inline("x0"), ParseError);
}

TEST_CASE("csv lines in file format") {
  auto ideal = parse_ideal_text("# comment\n1,1,0\n\n0,1,1 # trailing\n");
  REQUIRE(ideal.num_vars() == 3);
  CHECK(ideal.gen(0) == Monomial({1, 1, 0}));
  CHECK(ideal.gen(1) == Monomial({0, 1, 1}));
  CHECK_THROWS_AS(parse_ideal_text("1,1\n1,1,0\n"), ParseError);
}

TEST_CASE("csv and indexed may mix, letters may not") {
  auto ideal = parse_ideal_text("1,1,0\nx3^2\n");
  CHECK(ideal.gen(1) == Monomial({0, 0, 2}));
  CHECK_THROWS_AS(parse_ideal_text("1,1,0\nxy\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_inline("x1*y"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_ideal_text("xy\nbad(\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_ideal_text("# only comments\n"), ParseError);
}

TEST_CASE("parsed ideals are minimalized") {
  auto ideal = parse_ideal_inline("x; x^2*y; y^3");
  REQUIRE(ideal.num_gens() == 2);
  CHECK(ideal.gen(0) == Monomial({1, 0}));
  CHECK(ideal.gen(1) == Monomial({0, 3}));
}
