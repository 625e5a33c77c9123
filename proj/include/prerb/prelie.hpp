#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prerb/rational.hpp"

namespace prerb {

/// Finite-dimensional algebra given by structure constants:
/// e_i * e_j = sum_k product[i][j][k] e_k (0-indexed internally, the
/// letters of the term layer are 1-indexed).
struct PreLieAlgebra {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> product;
  std::string name;

  static PreLieAlgebra zero(int n, std::string name = "zero") {
    PreLieAlgebra a;
    a.dim = n;
    a.name = std::move(name);
    a.product.assign(n, std::vector<std::vector<Rational>>(
                            n, std::vector<Rational>(n, Rational(0))));
    return a;
  }

  const std::vector<Rational>& basis_product(int i, int j) const {
    return product[i][j];
  }

  /// u * v extended bilinearly to coefficient vectors.
  std::vector<Rational> multiply(const std::vector<Rational>& u,
                                 const std::vector<Rational>& v) const {
    std::vector<Rational> out(dim, Rational(0));
    for (int i = 0; i < dim; ++i) {
      if (sign(u[i]) == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (sign(v[j]) == 0) continue;
        const Rational c = u[i] * v[j];
        for (int k = 0; k < dim; ++k) out[k] += c * product[i][j][k];
      }
    }
    return out;
  }
};

struct PreLieViolation {
  int i, j, k;  // basis triple (e_i, e_j, e_k), 0-indexed
};

/// Left-symmetry of the associator on basis triples:
/// (e_i e_j) e_k - e_i (e_j e_k) = (e_j e_i) e_k - e_j (e_i e_k).
/// Sufficient by multilinearity.
inline std::optional<PreLieViolation> find_pre_lie_violation(
    const PreLieAlgebra& a) {
  const int n = a.dim;
  auto unit = [&](int i) {
    std::vector<Rational> e(n, Rational(0));
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto ei = unit(i), ej = unit(j), ek = unit(k);
        auto lhs = a.multiply(a.multiply(ei, ej), ek);
        const auto l2 = a.multiply(ei, a.multiply(ej, ek));
        auto rhs = a.multiply(a.multiply(ej, ei), ek);
        const auto r2 = a.multiply(ej, a.multiply(ei, ek));
        bool ok = true;
        for (int t = 0; t < n && ok; ++t)
          ok = (lhs[t] - l2[t]) == (rhs[t] - r2[t]);
        if (!ok) return PreLieViolation{i, j, k};
      }
  return std::nullopt;
}

inline bool check_pre_lie(const PreLieAlgebra& a) {
  return !find_pre_lie_violation(a).has_value();
}

}  // namespace prerb
