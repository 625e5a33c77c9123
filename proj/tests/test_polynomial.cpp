#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "prerb/polynomial.hpp"
#include "prerb/sampling.hpp"

using namespace prerb;
using tst::P;
using tst::W;

TEST_CASE("multiplication concatenates monomials") {
  CHECK(P("x1") * P("y1") == P("x1 y1"));
  CHECK(P("x1 + y1") * P("x1") == P("x1 x1 + y1 x1"));
}

TEST_CASE("addition cancels exactly") {
  CHECK((P("x1") - P("x1")).is_zero());
  CHECK(P("x1 - y1") + P("y1") == P("x1"));
}

TEST_CASE("scaling is exact rational arithmetic") {
  CHECK(Rational(1, 2) * P("2 y1") == P("y1"));
  CHECK(Rational(1, 3) * P("y1") == P("1/3 y1"));
  CHECK((Rational(0) * P("y1")).is_zero());
}

TEST_CASE("leading monomial is the compare-maximal key") {
  CHECK(P("x1 y1 + y1 x1").leading_monomial() == W("x1 y1"));
  CHECK(P("R(y1) + x1").leading_monomial() == W("R(y1)"));
  CHECK(P("5 y1").leading_monomial() == W("y1"));
  CHECK(P("5 y1").leading_coefficient() == 5);
  CHECK_THROWS_AS(Polynomial().leading_monomial(), ZeroPolynomialError);
}

TEST_CASE("no zero coefficients are stored") {
  Polynomial p;
  p.add_term(W("x1"), Rational(1, 2));
  p.add_term(W("x1"), Rational(-1, 2));
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK(p.coefficient(W("x1")) == 0);
}

TEST_CASE("multiplication is associative and distributive on random triples") {
  Sampler s(2, 4);
  SampleBounds b{3, 1};
  for (int i = 0; i < 50; ++i) {
    const Polynomial p = s.poly(b), q = s.poly(b), r = s.poly(b);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
  }
}

TEST_CASE("monomial-linear substitution and wrapping") {
  StarWord q(RWord({Atom::star(), Atom(Letter::x(1))}));
  CHECK(substitute(q, P("y1 + 2 y2")) == P("y1 x1 + 2 y2 x1"));
  CHECK(wrap_each(P("y1 - 1/2 x1 x1")) == P("R(y1) - 1/2 R(x1 x1)"));
  CHECK(wrap_each(Polynomial()).is_zero());
}
