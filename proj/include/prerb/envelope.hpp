#pragma once

#include <string>
#include <utility>
#include <vector>

#include "prerb/check_result.hpp"
#include "prerb/expr.hpp"
#include "prerb/reducer.hpp"
#include "prerb/sampling.hpp"

namespace prerb {

/// An element of the enveloping quotient, represented by its normal form.
struct EnvelopeElem {
  Polynomial poly;
};

/// Arithmetic in the universal enveloping Rota-Baxter algebra of the double,
/// modeled on normal-form representatives: the product is concatenation
/// followed by reduction, the operator wraps each monomial. The derived
/// products are a > b = R(a) b and a < b = a R(b).
class Envelope {
 public:
  explicit Envelope(const HatLie& h)
      : hat_(&h), red_(h), straighten_(h, FamilySet::straighten_only()) {}
  explicit Envelope(HatLie&&) = delete;  // keeps a reference

  const HatLie& hat() const { return *hat_; }

  EnvelopeElem normalize(const Polynomial& p) { return {red_.normal_form(p)}; }
  EnvelopeElem mul(const EnvelopeElem& a, const EnvelopeElem& b) {
    return {red_.normal_form(a.poly * b.poly)};
  }
  EnvelopeElem apply_r(const EnvelopeElem& a) {
    return {red_.normal_form(wrap_each(a.poly))};
  }
  EnvelopeElem succ(const EnvelopeElem& a, const EnvelopeElem& b) {
    return mul(apply_r(a), b);
  }
  EnvelopeElem prec(const EnvelopeElem& a, const EnvelopeElem& b) {
    return mul(a, apply_r(b));
  }
  /// a o b = a > b - b < a; pre-Lie on any dendriform algebra.
  EnvelopeElem induced(const EnvelopeElem& a, const EnvelopeElem& b) {
    EnvelopeElem s = succ(a, b), p = prec(b, a);
    return {s.poly - p.poly};
  }
  EnvelopeElem embed_elem(const HatElem& e) { return normalize(embed(e)); }

  /// R(u)R(v) = R(R(u)v + uR(v)) on sampled pairs of normal forms.
  CheckResult check_rb_law(int samples, const SampleBounds& bounds,
                           std::uint64_t seed) {
    CheckResult res{"rb-law", 0, {}};
    Sampler s(hat_->dim(), seed);
    for (int i = 0; i < samples; ++i) {
      const EnvelopeElem u = normalize(s.poly(bounds));
      const EnvelopeElem v = normalize(s.poly(bounds));
      const EnvelopeElem ru = apply_r(u), rv = apply_r(v);
      const Polynomial lhs = mul(ru, rv).poly;
      const Polynomial rhs =
          red_.normal_form(wrap_each(mul(ru, v).poly + mul(u, rv).poly));
      ++res.total;
      if (!(lhs == rhs))
        res.failures.push_back({print_expr(u.poly) + " ; " + print_expr(v.poly),
                                "difference " + print_expr(lhs - rhs)});
    }
    return res;
  }

  /// The three axioms relating > and < on sampled triples.
  CheckResult check_dendriform(int triples, const SampleBounds& bounds,
                               std::uint64_t seed) {
    CheckResult res{"dendriform-axioms", 0, {}};
    Sampler s(hat_->dim(), seed);
    for (int i = 0; i < triples; ++i) {
      EnvelopeElem a = normalize(s.poly(bounds));
      EnvelopeElem b = normalize(s.poly(bounds));
      EnvelopeElem c = normalize(s.poly(bounds));
      if (i == 0) a = embed_elem(HatElem::unit(hat_->dim(), Letter::x(1)));
      check_axioms(a, b, c, res);
    }
    return res;
  }

  /// Injectivity on letters, product preservation on basis pairs, the
  /// commutator-versus-bracket identity, and left-symmetry of the induced
  /// product on sampled triples.
  std::vector<CheckResult> check_embedding(const PreLieAlgebra& alg,
                                           int samples,
                                           const SampleBounds& bounds,
                                           std::uint64_t seed) {
    const int n = hat_->dim();
    std::vector<CheckResult> out;

    CheckResult inj{"embedding-injective", 0, {}};
    for (int a = 1; a <= n; ++a) {
      const EnvelopeElem ya = embed_elem(HatElem::unit(n, Letter::y(a)));
      ++inj.total;
      if (!(ya.poly == Polynomial(letter_word(Letter::y(a)))) ||
          !red_.is_irreducible(letter_word(Letter::y(a))))
        inj.failures.push_back({"y" + std::to_string(a), "image not a basis word"});
      for (int b = 1; b < a; ++b) {
        ++inj.total;
        if (ya.poly == embed_elem(HatElem::unit(n, Letter::y(b))).poly)
          inj.failures.push_back({"y" + std::to_string(a),
                                  "collides with y" + std::to_string(b)});
      }
    }
    out.push_back(std::move(inj));

    CheckResult prod{"embedding-product", 0, {}};
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const EnvelopeElem ya = embed_elem(HatElem::unit(n, Letter::y(a)));
        const EnvelopeElem yb = embed_elem(HatElem::unit(n, Letter::y(b)));
        Polynomial expect;
        for (int k = 1; k <= n; ++k)
          expect.add_term(letter_word(Letter::y(k)),
                          alg.product[a - 1][b - 1][k - 1]);
        ++prod.total;
        if (!(induced(ya, yb).poly == expect))
          prod.failures.push_back(
              {"y" + std::to_string(a) + " o y" + std::to_string(b),
               "got " + print_expr(induced(ya, yb).poly) + ", expected " +
                   print_expr(expect)});
      }
    out.push_back(std::move(prod));

    CheckResult lie{"embedding-lie-envelope", 0, {}};
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        const Letter u = Letter::from_code(i), v = Letter::from_code(j);
        const EnvelopeElem eu{Polynomial(letter_word(u))};
        const EnvelopeElem ev{Polynomial(letter_word(v))};
        const Polynomial comm = mul(eu, ev).poly - mul(ev, eu).poly;
        const Polynomial want = embed(hat_->basis_bracket(u, v));
        ++lie.total;
        if (!(comm == want))
          lie.failures.push_back({print_word(letter_word(u)) + " , " +
                                      print_word(letter_word(v)),
                                  "difference " + print_expr(comm - want)});
      }
    out.push_back(std::move(lie));

    CheckResult sym{"induced-left-symmetry", 0, {}};
    Sampler s(n, seed);
    for (int i = 0; i < samples; ++i) {
      const EnvelopeElem a = normalize(s.poly(bounds));
      const EnvelopeElem b = normalize(s.poly(bounds));
      const EnvelopeElem c = normalize(s.poly(bounds));
      const Polynomial lhs =
          induced(induced(a, b), c).poly - induced(a, induced(b, c)).poly;
      const Polynomial rhs =
          induced(induced(b, a), c).poly - induced(b, induced(a, c)).poly;
      ++sym.total;
      if (!(lhs == rhs))
        sym.failures.push_back({print_expr(a.poly) + " ; " +
                                    print_expr(b.poly) + " ; " +
                                    print_expr(c.poly),
                                "difference " + print_expr(lhs - rhs)});
    }
    out.push_back(std::move(sym));
    return out;
  }

  /// R(a_1)...R(a_k) equals R of the sum with one argument unwrapped in each
  /// position, k >= 2.
  bool check_long_rb(const std::vector<RWord>& args) {
    const std::size_t k = args.size();
    if (k < 2) throw std::invalid_argument("need at least two arguments");
    RWord lhs;
    for (const RWord& a : args) lhs = concat(lhs, wrap_word(a));
    Polynomial rhs_sum;
    for (std::size_t m = 0; m < k; ++m) {
      RWord w;
      for (std::size_t i = 0; i < k; ++i)
        w = concat(w, i == m ? args[i] : wrap_word(args[i]));
      rhs_sum.add_term(w, Rational(1));
    }
    return red_.normal_form(Polynomial(lhs)) ==
           red_.normal_form(wrap_each(rhs_sum));
  }

  /// Both displayed power identities:
  ///   R(y x^l) = 1/(l+1) (x^{l+1} + sum_i (-1)^i C(l+1,i) R([y,x^(i-1)] x^{l+1-i}))
  ///   x^{l+1} = R(y)^{l+1} = R(y x^l + x y x^{l-1} + ... + x^l y)
  /// for x = x_b, y = y_b.
  bool check_yx_relation(int l, int beta) {
    const int n = hat_->dim();
    const Letter xb = Letter::x(beta), yb = Letter::y(beta);
    auto xpow = [&](int p) {
      return RWord(std::vector<Atom>(static_cast<std::size_t>(p), Atom(xb)));
    };
    const Polynomial lhs = red_.normal_form(
        Polynomial(wrap_word(concat(letter_word(yb), xpow(l)))));
    Polynomial rhs(concat(xpow(l), letter_word(xb)));  // x^{l+1}
    for (int i = 2; i <= l + 1; ++i) {
      const HatElem br = hat_->iterated_bracket(HatElem::unit(n, yb), xb, i - 1);
      const Rational coef = (i % 2 == 0 ? Rational(1) : Rational(-1)) *
                            binomial(static_cast<unsigned long>(l + 1),
                                     static_cast<unsigned long>(i));
      rhs += coef * wrap_each(embed(br) * xpow(l + 1 - i));
    }
    const bool first =
        lhs == red_.normal_form(Rational(1, static_cast<unsigned long>(l + 1)) * rhs);

    RWord power_product;  // R(y)...R(y), l+1 factors
    for (int i = 0; i <= l; ++i)
      power_product = concat(power_product, wrap_word(letter_word(yb)));
    Polynomial spread;  // y x^l + x y x^{l-1} + ... + x^l y
    for (int m = 0; m <= l; ++m)
      spread.add_term(concat(concat(xpow(m), letter_word(yb)), xpow(l - m)),
                      Rational(1));
    const Polynomial xp = red_.normal_form(Polynomial(concat(xpow(l), letter_word(xb))));
    const bool second = xp == red_.normal_form(Polynomial(power_product)) &&
                        xp == red_.normal_form(wrap_each(spread));
    return first && second;
  }

  /// (l+1) v u^l = sum_i (-1)^i C(l+1,i) [v,u^(i-1)] u^{l+1-i}
  ///             + (v u^l + u v u^{l-1} + ... + u^l v)
  /// in the enveloping algebra of the double, for any two letters; checked
  /// with straightening only, no operator rules.
  bool lemma34_check(int l, Letter u, Letter v) {
    const int n = hat_->dim();
    auto upow = [&](int p) {
      return RWord(std::vector<Atom>(static_cast<std::size_t>(p), Atom(u)));
    };
    Polynomial lhs = Rational(l + 1) *
                     Polynomial(concat(letter_word(v), upow(l)));
    Polynomial rhs;
    for (int i = 2; i <= l + 1; ++i) {
      const HatElem br = hat_->iterated_bracket(HatElem::unit(n, v), u, i - 1);
      const Rational coef = (i % 2 == 0 ? Rational(1) : Rational(-1)) *
                            binomial(static_cast<unsigned long>(l + 1),
                                     static_cast<unsigned long>(i));
      rhs += coef * (embed(br) * upow(l + 1 - i));
    }
    for (int m = 0; m <= l; ++m)
      rhs.add_term(concat(concat(upow(m), letter_word(v)), upow(l - m)),
                   Rational(1));
    return straighten_.normal_form(lhs) == straighten_.normal_form(rhs);
  }

  /// (l+1) C(l,i-1) - (i-1) C(l+1,i) = C(l+1,i) for 2 <= i <= l+1.
  static bool binomial_identity_holds(int l) {
    for (int i = 2; i <= l + 1; ++i) {
      const Rational lhs =
          Rational(l + 1) * binomial(static_cast<unsigned long>(l),
                                     static_cast<unsigned long>(i - 1)) -
          Rational(i - 1) * binomial(static_cast<unsigned long>(l + 1),
                                     static_cast<unsigned long>(i));
      if (lhs != binomial(static_cast<unsigned long>(l + 1),
                          static_cast<unsigned long>(i)))
        return false;
    }
    return true;
  }

 private:
  void check_axioms(const EnvelopeElem& a, const EnvelopeElem& b,
                    const EnvelopeElem& c, CheckResult& res) {
    const EnvelopeElem ab_s = succ(a, b), ab_p = prec(a, b);
    const EnvelopeElem bc_s = succ(b, c), bc_p = prec(b, c);
    const EnvelopeElem sum_ab{ab_s.poly + ab_p.poly};
    const EnvelopeElem sum_bc{bc_s.poly + bc_p.poly};
    struct Case {
      const char* name;
      Polynomial lhs, rhs;
    };
    Case cases[3] = {
        {"(a>b + a<b)>c = a>(b>c)", succ(sum_ab, c).poly, succ(a, bc_s).poly},
        {"(a>b)<c = a>(b<c)", prec(ab_s, c).poly, succ(a, bc_p).poly},
        {"a<(b>c + b<c) = (a<b)<c", prec(a, sum_bc).poly, prec(ab_p, c).poly}};
    for (const Case& cs : cases) {
      ++res.total;
      if (!(cs.lhs == cs.rhs))
        res.failures.push_back(
            {print_expr(a.poly) + " ; " + print_expr(b.poly) + " ; " +
                 print_expr(c.poly),
             std::string(cs.name) + ", difference " +
                 print_expr(cs.lhs - cs.rhs)});
    }
  }

  const HatLie* hat_;
  Reducer red_;
  Reducer straighten_;
};

}  // namespace prerb
