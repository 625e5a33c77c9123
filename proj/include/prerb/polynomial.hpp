#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "prerb/rational.hpp"
#include "prerb/words.hpp"

namespace prerb {

struct ZeroPolynomialError : std::logic_error {
  ZeroPolynomialError() : std::logic_error("zero polynomial has no leading monomial") {}
};

/// Element of the free associative algebra with operator R: a finite map
/// from basis words to exact rational coefficients. Terms are kept in
/// strictly decreasing monomial order with no zero coefficients, so begin()
/// is the leading term.
class Polynomial {
 public:
  using TermMap = std::map<RWord, Rational, RWordGreater>;

  Polynomial() = default;
  explicit Polynomial(const RWord& w) { add_term(w, Rational(1)); }
  Polynomial(const RWord& w, Rational c) { add_term(w, std::move(c)); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const& { return terms_; }
  // rvalue form returns by value so that range-for over a temporary is safe
  TermMap terms() && { return std::move(terms_); }

  void add_term(const RWord& w, const Rational& c) {
    if (sign(c) == 0) return;
    if (!well_formed(w))
      throw std::invalid_argument("polynomial monomials must be well-formed words");
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sign(it->second) == 0) terms_.erase(it);
    }
  }

  const RWord& leading_monomial() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    return terms_.begin()->second;
  }
  bool is_monic() const {
    return !terms_.empty() && terms_.begin()->second == 1;
  }

  Rational coefficient(const RWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Polynomial& operator*=(const Rational& c) {
    if (sign(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, coef] : terms_) coef *= c;
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator*(const Rational& c, Polynomial p) {
    p *= c;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Rational& c) {
    p *= c;
    return p;
  }

  /// Bilinear extension of word concatenation.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (!(w == it->first) || c != it->second) return false;
      ++it;
    }
    return true;
  }

 private:
  TermMap terms_;
};

inline Polynomial word_poly(const RWord& w) { return Polynomial(w); }

/// R applied monomial-wise; the linear extension of wrapping.
inline Polynomial wrap_each(const Polynomial& p) {
  Polynomial r;
  for (const auto& [w, c] : p.terms()) r.add_term(wrap_word(w), c);
  return r;
}

/// q|_p, monomial-linear in p.
inline Polynomial substitute(const StarWord& q, const Polynomial& p) {
  Polynomial r;
  for (const auto& [w, c] : p.terms()) r.add_term(substitute(q, w), c);
  return r;
}

inline Polynomial operator*(const Polynomial& p, const RWord& w) {
  Polynomial r;
  for (const auto& [u, c] : p.terms()) r.add_term(concat(u, w), c);
  return r;
}
inline Polynomial operator*(const RWord& w, const Polynomial& p) {
  Polynomial r;
  for (const auto& [u, c] : p.terms()) r.add_term(concat(w, u), c);
  return r;
}

}  // namespace prerb
