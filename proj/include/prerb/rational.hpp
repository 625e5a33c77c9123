#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace prerb {

/// Exact arbitrary-precision rational scalar. All coefficient arithmetic in
/// the library is exact; floating point is never used.
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }

/// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// C(n, k) as an exact rational (0 when k > n).
inline Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace prerb
