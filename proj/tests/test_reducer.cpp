#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "prerb/reducer.hpp"
#include "prerb/sampling.hpp"

using namespace prerb;
using tst::P;
using tst::W;

TEST_CASE("worked normal forms in the n=1 running algebra") {
  Reducer red(tst::hat1());
  CHECK(red.normal_form(P("x1 y1")) == P("y1 x1 + y1"));
  CHECK(red.normal_form(P("R(x1 x1)")).is_zero());
  CHECK(red.normal_form(P("R(y1)")) == P("x1"));
  CHECK(red.normal_form(P("R(y1 x1)")) == P("1/2 x1 x1 - 1/2 x1"));
  // hand-derived deeper values
  CHECK(red.normal_form(P("x1 y1 y1")) == P("y1 y1 x1 + 2 y1 y1"));
  CHECK(red.normal_form(P("R(y1 R(y1 y1))")) ==
        P("x1 R(y1 y1) - R(y1 y1 x1) - 2 R(y1 y1)"));
  CHECK(red.normal_form(P("R(x1 y1)")) == P("1/2 x1 x1 + 1/2 x1"));
}

TEST_CASE("worked normal forms in the n=2 unital algebra") {
  Reducer red(tst::hat2());
  CHECK(red.normal_form(P("x2 y1", 2)) == P("y1 x2 + y2", 2));
  CHECK(red.normal_form(P("R(y2 x2)", 2)) == P("1/2 x2 x2", 2));
  CHECK(red.normal_form(P("R(y2 x1)", 2)) == P("x1 x2 - R(y1 x2) - x2", 2));
  CHECK(red.normal_form(P("x2 x1", 2)) == P("x1 x2", 2));
}

TEST_CASE("the Rota-Baxter product rule in the free algebra") {
  Reducer red(tst::hat1());
  // R(y1)R(y1) and x1 x1 have the same normal form
  CHECK(red.normal_form(P("R(y1) R(y1)")) == red.normal_form(P("x1 x1")));
  CHECK(red.normal_form(P("R(y1) R(y1)")) == P("x1 x1"));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(W("y1 x1")));
  CHECK(is_irreducible(W("y1 y1")));
  CHECK_FALSE(is_irreducible(W("R(y1 x1)")));
  CHECK_FALSE(is_irreducible(W("R(R(x1 x1) y1 y2)")));  // inner all-x wrap
  CHECK(is_irreducible(W("R(R(y1 y2) y1 y2)")));
  CHECK(is_irreducible(W("x1")));
}

TEST_CASE("degree-1 polynomials are already normal") {
  Reducer red(tst::hat2());
  const Polynomial p = P("2 y1 - 1/3 x2 + x1", 2);
  CHECK(red.normal_form(p) == p);
}

TEST_CASE("normal forms are idempotent and structurally irreducible") {
  Reducer red(tst::hat2());
  Sampler s(2, 31337);
  SampleBounds b{5, 2};
  for (int i = 0; i < 120; ++i) {
    const Polynomial p = s.poly(b);
    const Polynomial nf = red.normal_form(p);
    CHECK(red.normal_form(nf) == nf);
    for (const auto& [w, c] : nf.terms()) {
      CHECK(is_irreducible(w));
      // no descending letter runs, no adjacent wraps, at any depth
      std::vector<const RWord*> stack{&w};
      while (!stack.empty()) {
        const RWord* cur = stack.back();
        stack.pop_back();
        for (int a = 0; a + 1 < cur->deg(); ++a) {
          const Atom &u = cur->atom(a), &v = cur->atom(a + 1);
          if (u.is_letter() && v.is_letter())
            CHECK(u.letter() <= v.letter());
          CHECK(!(u.is_wrap() && v.is_wrap()));
        }
        for (const Atom& at : cur->atoms())
          if (at.is_wrap()) stack.push_back(&at.content());
      }
    }
  }
}

TEST_CASE("the two strategies agree") {
  Reducer red(tst::hat1());
  const Polynomial p = P("x1 y1 y1");
  const Polynomial a = red.reduce_with_strategy(p, Strategy::LargestFirst);
  const Polynomial b = red.reduce_with_strategy(p, Strategy::SmallestFirst);
  CHECK(a == b);
  CHECK(a == P("y1 y1 x1 + 2 y1 y1"));

  Reducer red2(tst::hat2());
  Sampler s(2, 777);
  SampleBounds bounds{6, 2};
  for (int i = 0; i < 200; ++i) {
    const Polynomial q = s.poly(bounds);
    const Polynomial nfa = red2.reduce_with_strategy(q, Strategy::LargestFirst);
    const Polynomial nfb = red2.reduce_with_strategy(q, Strategy::SmallestFirst);
    CHECK(nfa == nfb);
    CHECK(nfa == red2.normal_form(q));  // memoized path agrees too
  }
}

TEST_CASE("rewrite traces certify membership in the rule ideal") {
  Reducer red(tst::hat2());
  Sampler s(2, 4242);
  SampleBounds b{5, 2};
  for (int i = 0; i < 40; ++i) {
    const Polynomial p = s.poly(b);
    Trace trace;
    const Polynomial nf = red.reduce_with_strategy(p, Strategy::LargestFirst, &trace);
    Polynomial certified;
    for (const ReduceStep& step : trace)
      certified += step.coeff * substitute(step.context, step.relation.poly);
    CHECK(p - nf == certified);
  }
}

TEST_CASE("family subsetting restricts the rules applied") {
  Reducer straight(tst::hat1(), FamilySet::straighten_only());
  CHECK(straight.normal_form(P("R(y1)")) == P("R(y1)"));
  CHECK(straight.normal_form(P("x1 y1")) == P("y1 x1 + y1"));
  CHECK(straight.normal_form(P("R(x1 y1)")) == P("R(y1 x1) + R(y1)"));
  Reducer full(tst::hat1());
  CHECK_FALSE(full.normal_form(P("R(x1 y1)")) == P("R(y1 x1) + R(y1)"));
}

TEST_CASE("the step limit guard throws instead of spinning") {
  Reducer red(tst::hat1());
  red.set_step_limit(1);
  CHECK_THROWS_AS(red.normal_form(P("R(y1 x1 y1 x1) R(y1 x1)")),
                  StepLimitExceeded);
}
