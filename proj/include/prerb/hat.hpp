#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "prerb/polynomial.hpp"
#include "prerb/prelie.hpp"
#include "prerb/rational.hpp"
#include "prerb/words.hpp"

namespace prerb {

/// Element of the doubled Lie algebra: a coefficient vector over the 2n
/// basis letters, indexed by letter code (y1, x1, y2, x2, ...).
class HatElem {
 public:
  explicit HatElem(int n) : coef_(2 * static_cast<std::size_t>(n), Rational(0)) {}

  static HatElem unit(int n, Letter l) {
    HatElem e(n);
    e.at(l) = 1;
    return e;
  }

  int dim() const { return static_cast<int>(coef_.size()) / 2; }
  Rational& at(Letter l) { return coef_[static_cast<std::size_t>(l.code())]; }
  const Rational& at(Letter l) const {
    return coef_[static_cast<std::size_t>(l.code())];
  }
  const std::vector<Rational>& coefficients() const { return coef_; }

  bool is_zero() const {
    for (const auto& c : coef_)
      if (sign(c) != 0) return false;
    return true;
  }
  bool x_part_zero() const { return part_zero(Letter::Kind::X); }
  bool y_part_zero() const { return part_zero(Letter::Kind::Y); }

  HatElem& operator+=(const HatElem& o) {
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
    return *this;
  }
  HatElem& operator-=(const HatElem& o) {
    for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
    return *this;
  }
  HatElem& operator*=(const Rational& c) {
    for (auto& v : coef_) v *= c;
    return *this;
  }
  friend HatElem operator+(HatElem a, const HatElem& b) { return a += b; }
  friend HatElem operator-(HatElem a, const HatElem& b) { return a -= b; }
  friend HatElem operator*(const Rational& c, HatElem e) { return e *= c; }
  HatElem operator-() const {
    HatElem r(*this);
    for (auto& v : r.coef_) v = -v;
    return r;
  }
  friend bool operator==(const HatElem& a, const HatElem& b) {
    return a.coef_ == b.coef_;
  }

 private:
  bool part_zero(Letter::Kind k) const {
    const int n = dim();
    for (int i = 1; i <= n; ++i)
      if (sign(at(Letter(k, i))) != 0) return false;
    return true;
  }
  std::vector<Rational> coef_;
};

/// The encoding of a doubled-algebra element as a degree-1 polynomial.
inline Polynomial embed(const HatElem& e) {
  Polynomial p;
  for (int code = 0; code < 2 * e.dim(); ++code) {
    Letter l = Letter::from_code(code);
    p.add_term(letter_word(l), e.at(l));
  }
  return p;
}

/// The Lie algebra on L + L' induced by a pre-Lie product, with the weight-0
/// Rota-Baxter operator R(y_a) = x_a, R(x_a) = 0. The pre-Lie product a.b is
/// split as a>b := a.b, a<b := -b.a, which gives
///   [x_a, x_b] = (a.b - b.a) in the x-copy,
///   [x_a, y_b] = (a.b) in the y-copy,   [y_a, y_b] = 0.
class HatLie {
 public:
  int dim() const { return n_; }

  const HatElem& basis_bracket(Letter a, Letter b) const {
    return table_[static_cast<std::size_t>(a.code())]
                 [static_cast<std::size_t>(b.code())];
  }
  HatElem& mutable_basis_bracket(Letter a, Letter b) {
    return table_[static_cast<std::size_t>(a.code())]
                 [static_cast<std::size_t>(b.code())];
  }

  HatElem bracket(const HatElem& a, const HatElem& b) const {
    HatElem out(n_);
    for (int i = 0; i < 2 * n_; ++i) {
      const Letter u = Letter::from_code(i);
      if (sign(a.at(u)) == 0) continue;
      for (int j = 0; j < 2 * n_; ++j) {
        const Letter v = Letter::from_code(j);
        if (sign(b.at(v)) == 0) continue;
        out += (a.at(u) * b.at(v)) * basis_bracket(u, v);
      }
    }
    return out;
  }

  /// R(y_a) = x_a, R(x_a) = 0, extended linearly.
  HatElem rb(const HatElem& e) const {
    HatElem out(n_);
    for (int i = 1; i <= n_; ++i)
      out.at(Letter::x(i)) = e.at(Letter::y(i));
    return out;
  }

  /// [[...[[a, x], x] ...], x] with p brackets; p = 0 returns a. The result
  /// stays in the y-span whenever a does.
  HatElem iterated_bracket(HatElem a, Letter x, int p) const {
    const HatElem xe = HatElem::unit(n_, x);
    for (int i = 0; i < p; ++i) a = bracket(a, xe);
    return a;
  }

  static HatLie from_pre_lie(const PreLieAlgebra& alg) {
    if (auto v = find_pre_lie_violation(alg))
      throw std::invalid_argument(
          "structure constants violate the pre-Lie identity on basis triple (" +
          std::to_string(v->i + 1) + "," + std::to_string(v->j + 1) + "," +
          std::to_string(v->k + 1) + ")");
    const int n = alg.dim;
    HatLie h;
    h.n_ = n;
    h.table_.assign(2 * static_cast<std::size_t>(n),
                    std::vector<HatElem>(2 * static_cast<std::size_t>(n),
                                         HatElem(n)));
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const auto& ab = alg.basis_product(a - 1, b - 1);
        const auto& ba = alg.basis_product(b - 1, a - 1);
        HatElem xx(n), xy(n);
        for (int k = 1; k <= n; ++k) {
          xx.at(Letter::x(k)) = ab[k - 1] - ba[k - 1];
          xy.at(Letter::y(k)) = ab[k - 1];
        }
        h.mutable_basis_bracket(Letter::x(a), Letter::x(b)) = xx;
        h.mutable_basis_bracket(Letter::x(a), Letter::y(b)) = xy;
        h.mutable_basis_bracket(Letter::y(b), Letter::x(a)) = -xy;
        // [y_a, y_b] stays zero.
      }
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<HatElem>> table_;
};

inline HatLie build_hat(const PreLieAlgebra& alg) {
  return HatLie::from_pre_lie(alg);
}

struct HatCheckIssue {
  std::string kind;  // "antisymmetry" | "jacobi" | "rota-baxter"
  std::vector<int> letters;  // letter codes involved
};

/// Verifies antisymmetry and the Jacobi identity on basis triples and the
/// weight-0 Rota-Baxter identity [R(a),R(b)] = R([R(a),b] + [a,R(b)]) on
/// basis pairs. Returns every failure found.
inline std::vector<HatCheckIssue> check_hat_lie_rb(const HatLie& h) {
  std::vector<HatCheckIssue> issues;
  const int m = 2 * h.dim();
  for (int i = 0; i < m; ++i) {
    const Letter a = Letter::from_code(i);
    const HatElem ea = HatElem::unit(h.dim(), a);
    for (int j = 0; j < m; ++j) {
      const Letter b = Letter::from_code(j);
      const HatElem eb = HatElem::unit(h.dim(), b);
      if (!(h.basis_bracket(a, b) + h.basis_bracket(b, a)).is_zero())
        issues.push_back({"antisymmetry", {i, j}});
      const HatElem lhs = h.bracket(h.rb(ea), h.rb(eb));
      const HatElem rhs =
          h.rb(h.bracket(h.rb(ea), eb) + h.bracket(ea, h.rb(eb)));
      if (!(lhs - rhs).is_zero()) issues.push_back({"rota-baxter", {i, j}});
      for (int k = 0; k < m; ++k) {
        const Letter c = Letter::from_code(k);
        const HatElem ec = HatElem::unit(h.dim(), c);
        HatElem jac = h.bracket(h.basis_bracket(a, b), ec);
        jac += h.bracket(h.basis_bracket(b, c), ea);
        jac += h.bracket(h.basis_bracket(c, a), eb);
        if (!jac.is_zero()) issues.push_back({"jacobi", {i, j, k}});
      }
    }
  }
  return issues;
}

}  // namespace prerb
