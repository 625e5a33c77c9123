#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "prerb/expr.hpp"
#include "prerb/sampling.hpp"

using namespace prerb;

TEST_CASE("parses words and signed rational terms") {
  CHECK(parse_expr("x1 y1", 1).term_count() == 1);
  CHECK(parse_expr("R(y1 x1) - 1/2 x1 x1", 1).term_count() == 2);
  CHECK(parse_expr("R(y1 x1) - 1/2 x1 x1", 1).coefficient(tst::W("x1 x1")) ==
        Rational(-1, 2));
  CHECK(parse_expr("-y1", 1) == Rational(-1) * parse_expr("y1", 1));
  CHECK(parse_expr("2/4 x1", 1) == parse_expr("1/2 x1", 1));
  CHECK(parse_expr("0", 1).is_zero());
  CHECK(parse_expr("x1y1", 1) == parse_expr("x1 y1", 1));
}

TEST_CASE("rejects malformed input with positions") {
  CHECK_THROWS_AS(parse_expr("R()", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("x", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("x1 +", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("R(x1", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("1/0 x1", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("z1", 1), ParseError);
  CHECK_THROWS_AS(parse_expr("R(x1 + y1)", 1), ParseError);

  try {
    parse_expr("x1 x3", 2);
    FAIL("expected out-of-range letter to throw");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("printing is deterministic and descending") {
  CHECK(print_expr(parse_expr("y1 + y1 x1", 1)) == "y1 x1 + y1");
  CHECK(print_expr(Polynomial()) == "0");
  CHECK(print_expr(parse_expr("1/2 x1 x1 - 1/2 x1", 1)) ==
        "1/2 x1 x1 - 1/2 x1");
  CHECK(print_expr(parse_expr("-y1 + 2 R(y1 x1)", 1)) == "2 R(y1 x1) - y1");
  CHECK(print_expr(parse_expr("-1/2 y1 - x1", 1)) == "-x1 - 1/2 y1");
}

TEST_CASE("print round-trips through parse on random polynomials") {
  Sampler s(3, 123);
  SampleBounds b{5, 2};
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = s.poly(b);
    CHECK(parse_expr(print_expr(p), 3) == p);
  }
}

TEST_CASE("star words print with a hole marker") {
  auto occ = occurrences(tst::W("R(x1 y1)"), tst::W("x1 y1"));
  REQUIRE(occ.size() == 1);
  CHECK(print_star(occ[0]) == "R(*)");
}
