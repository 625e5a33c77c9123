#pragma once

#include <cstdint>

#include "prerb/check_result.hpp"
#include "prerb/expr.hpp"
#include "prerb/reducer.hpp"
#include "prerb/sampling.hpp"

namespace prerb {

/// Reduces pseudo-random polynomials under the two strategies and reports
/// any disagreement. Deterministic given the seed.
inline CheckResult confluence_sample(const HatLie& h, int count,
                                     const SampleBounds& bounds,
                                     std::uint64_t seed) {
  CheckResult res{"confluence", 0, {}};
  Reducer red(h);
  Sampler s(h.dim(), seed);
  for (int i = 0; i < count; ++i) {
    const Polynomial p = s.poly(bounds);
    const Polynomial a = red.reduce_with_strategy(p, Strategy::LargestFirst);
    const Polynomial b = red.reduce_with_strategy(p, Strategy::SmallestFirst);
    ++res.total;
    if (!(a == b))
      res.failures.push_back({print_expr(p),
                              "largest-first " + print_expr(a) +
                                  " != smallest-first " + print_expr(b)});
  }
  return res;
}

}  // namespace prerb
