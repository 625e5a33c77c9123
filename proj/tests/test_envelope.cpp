#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "prerb/confluence.hpp"
#include "prerb/envelope.hpp"

using namespace prerb;
using tst::P;
using tst::W;

namespace {
EnvelopeElem elem(Envelope& env, std::string_view text) {
  return env.normalize(tst::P(text, env.hat().dim()));
}
}  // namespace

TEST_CASE("quotient arithmetic basics") {
  Envelope env(tst::hat1());
  CHECK(env.apply_r(elem(env, "y1")).poly == P("x1"));
  CHECK(env.apply_r(elem(env, "x1")).poly.is_zero());
  CHECK(env.apply_r(EnvelopeElem{}).poly.is_zero());
  CHECK(env.mul(elem(env, "y1"), elem(env, "y1")).poly == P("y1 y1"));
  CHECK(env.apply_r(elem(env, "2 y1 - x1")).poly == P("2 x1"));
}

TEST_CASE("derived products in the running algebra") {
  Envelope env(tst::hat1());
  CHECK(env.succ(elem(env, "y1"), elem(env, "y1")).poly == P("y1 x1 + y1"));
  CHECK(env.prec(elem(env, "y1"), elem(env, "y1")).poly == P("y1 x1"));
  CHECK(env.succ(elem(env, "x1"), elem(env, "y1 x1 + 3 R(y1 y1)")).poly
            .is_zero());
  CHECK(env.induced(elem(env, "y1"), elem(env, "y1")).poly == P("y1"));
}

TEST_CASE("the operator law holds exactly in the quotient") {
  Envelope env(tst::hat1());
  // u = v = y1 by hand: R(y1)R(y1) vs R(R(y1)y1 + y1R(y1))
  const EnvelopeElem y1 = elem(env, "y1");
  CHECK(env.mul(env.apply_r(y1), env.apply_r(y1)).poly == P("x1 x1"));

  const CheckResult r1 = env.check_rb_law(200, {5, 2}, 20250811);
  CHECK(r1.pass());
  CHECK(r1.total == 200);

  Envelope env2(tst::hat2());
  const CheckResult r2 = env2.check_rb_law(50, {4, 2}, 7);
  CHECK(r2.pass());
}

TEST_CASE("dendriform axioms hold on sampled triples") {
  Envelope env(tst::hat1());
  const CheckResult r = env.check_dendriform(100, {4, 1}, 99);
  CHECK(r.pass());
  CHECK(r.total == 300);  // three axioms per triple

  Envelope env2(tst::hat2());
  CHECK(env2.check_dendriform(30, {4, 1}, 5).pass());
}

TEST_CASE("the pre-Lie algebra embeds into its envelope") {
  for (auto [alg, hat] :
       {std::pair{tst::idempotent1(), &tst::hat1()},
        std::pair{tst::unital2(), &tst::hat2()}}) {
    Envelope env(*hat);
    const auto checks = env.check_embedding(alg, 60, {4, 1}, 11);
    for (const auto& c : checks) {
      INFO(c.name);
      CHECK(c.pass());
      CHECK(c.total > 0);
    }
  }
}

TEST_CASE("embedding recovers the pre-Lie product on basis pairs") {
  Envelope env(tst::hat1());
  // y1 o y1 = y1 > y1 - y1 < y1 = (y1 x1 + y1) - y1 x1 = y1 = image of e.e
  CHECK(env.induced(elem(env, "y1"), elem(env, "y1")).poly == P("y1"));

  const HatLie zero_hat = build_hat(PreLieAlgebra::zero(2));
  Envelope env2(zero_hat);
  CHECK(env2.induced(elem(env2, "y1"), elem(env2, "y2")).poly.is_zero());
}

TEST_CASE("iterated operator products collapse to a single application") {
  Envelope env(tst::hat1());
  CHECK(env.check_long_rb({W("y1"), W("y1")}));  // k = 2 is the operator law
  CHECK(env.check_long_rb({W("y1"), W("y1"), W("y1")}));
  CHECK(env.check_long_rb({W("y1 x1"), W("y1"), W("x1 y1"), W("y1 y1")}));

  Envelope env2(tst::hat2());
  Sampler s(2, 314);
  for (int k = 2; k <= 4; ++k) {
    std::vector<RWord> args;
    for (int i = 0; i < k; ++i) args.push_back(s.word({3, 1}));
    CHECK(env2.check_long_rb(args));
  }
  CHECK_THROWS_AS(env.check_long_rb({W("y1")}), std::invalid_argument);
}

TEST_CASE("powers of the operator image expand the collapse rule") {
  Envelope env(tst::hat1());
  for (int l = 0; l <= 4; ++l) CHECK(env.check_yx_relation(l, 1));

  Envelope env2(tst::hat2());
  for (int l = 0; l <= 3; ++l)
    for (int beta = 1; beta <= 2; ++beta)
      CHECK(env2.check_yx_relation(l, beta));

  // l = 1 by hand: R(y1 x1) = 1/2 (x1^2 + R([y1,x1])) = 1/2 x1^2 - 1/2 x1
  CHECK(env.normalize(P("R(y1 x1)")).poly == P("1/2 x1 x1 - 1/2 x1"));
}

TEST_CASE("the straightening identity of iterated brackets") {
  Envelope env(tst::hat1());
  CHECK(env.lemma34_check(0, Letter::x(1), Letter::y(1)));
  CHECK(env.lemma34_check(1, Letter::x(1), Letter::y(1)));
  CHECK(env.lemma34_check(4, Letter::x(1), Letter::y(1)));

  Envelope env2(tst::hat2());
  for (int l = 0; l <= 4; ++l)
    for (int uc = 0; uc < 4; ++uc)
      for (int vc = 0; vc < 4; ++vc)
        CHECK(env2.lemma34_check(l, Letter::from_code(uc), Letter::from_code(vc)));
}

TEST_CASE("the binomial coefficient identity holds exactly") {
  for (int l = 0; l <= 12; ++l) CHECK(Envelope::binomial_identity_holds(l));
}

TEST_CASE("env_mul is associative and the operator law holds on samples") {
  Envelope env(tst::hat2());
  Sampler s(2, 1234);
  SampleBounds b{3, 1};
  for (int i = 0; i < 25; ++i) {
    const EnvelopeElem a = env.normalize(s.poly(b));
    const EnvelopeElem bb = env.normalize(s.poly(b));
    const EnvelopeElem c = env.normalize(s.poly(b));
    CHECK(env.mul(env.mul(a, bb), c).poly == env.mul(a, env.mul(bb, c)).poly);
  }
}

TEST_CASE("confluence sampling finds no disagreement") {
  const CheckResult r = confluence_sample(tst::hat1(), 200, {6, 2}, 555);
  CHECK(r.pass());
  CHECK(r.total == 200);
  const CheckResult r2 = confluence_sample(tst::hat2(), 100, {5, 2}, 556);
  CHECK(r2.pass());

  // an already-irreducible monomial is returned by both strategies
  Reducer red(tst::hat1());
  const Polynomial p = P("y1 x1");
  CHECK(red.reduce_with_strategy(p, Strategy::LargestFirst) == p);
  CHECK(red.reduce_with_strategy(p, Strategy::SmallestFirst) == p);
}
