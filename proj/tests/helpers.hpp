#pragma once

#include <string>

#include "prerb/expr.hpp"
#include "prerb/hat.hpp"
#include "prerb/prelie.hpp"
#include "prerb/words.hpp"

namespace tst {

using namespace prerb;

inline Atom ax(int i) { return Atom(Letter::x(i)); }
inline Atom ay(int i) { return Atom(Letter::y(i)); }

inline RWord W(std::string_view text, int n = 4) {
  return prerb::parse_expr(text, n).leading_monomial();
}
inline Polynomial P(std::string_view text, int n = 4) {
  return prerb::parse_expr(text, n);
}

/// n = 1 with e.e = e; the running example algebra.
inline PreLieAlgebra idempotent1() {
  PreLieAlgebra a = PreLieAlgebra::zero(1, "idempotent1");
  a.product[0][0][0] = 1;
  return a;
}

/// n = 2 associative algebra with e1 a unit and e2^2 = 0.
inline PreLieAlgebra unital2() {
  PreLieAlgebra a = PreLieAlgebra::zero(2, "unital2");
  a.product[0][0][0] = 1;  // e1 e1 = e1
  a.product[0][1][1] = 1;  // e1 e2 = e2
  a.product[1][0][1] = 1;  // e2 e1 = e2
  return a;
}

inline const HatLie& hat1() {
  static const HatLie h = build_hat(idempotent1());
  return h;
}
inline const HatLie& hat2() {
  static const HatLie h = build_hat(unital2());
  return h;
}

}  // namespace tst
