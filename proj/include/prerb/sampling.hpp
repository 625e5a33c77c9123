#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prerb/polynomial.hpp"
#include "prerb/rational.hpp"
#include "prerb/words.hpp"

namespace prerb {

struct SampleBounds {
  int max_letters = 6;  // total letters at all depths
  int max_rdeg = 2;
};

/// Deterministic pseudo-random words and polynomials; the draw sequence is a
/// function of the seed only, so reports built from samples are reproducible.
class Sampler {
 public:
  Sampler(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  Letter letter() { return Letter::from_code(static_cast<int>(below(2 * n_))); }

  RWord word(const SampleBounds& b) {
    int letters = 1 + static_cast<int>(below(static_cast<std::uint64_t>(b.max_letters)));
    int wraps = b.max_rdeg;
    return gen(letters, wraps);
  }

  Polynomial poly(const SampleBounds& b, int max_terms = 4) {
    Polynomial p;
    const int terms = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < terms; ++t) p.add_term(word(b), coefficient());
    return p;
  }

  Rational coefficient() {
    long num = 1 + static_cast<long>(below(3));
    if (below(2) == 0) num = -num;
    const unsigned long den = 1 + static_cast<unsigned long>(below(3));
    Rational c(num, den);
    c.canonicalize();
    return c;
  }

 private:
  // Nonempty word spending exactly `letters` letters and at most `wraps` Rs.
  RWord gen(int letters, int wraps) {
    std::vector<Atom> atoms;
    while (letters > 0) {
      if (wraps > 0 && below(4) == 0) {
        const int inner_letters = 1 + static_cast<int>(below(static_cast<std::uint64_t>(letters)));
        const int inner_wraps = static_cast<int>(below(static_cast<std::uint64_t>(wraps)));
        RWord content = gen(inner_letters, inner_wraps);
        letters -= content.letters();
        wraps -= 1 + content.deg_r();
        atoms.push_back(Atom::wrap(std::move(content)));
      } else {
        atoms.emplace_back(letter());
        --letters;
      }
    }
    return RWord(std::move(atoms));
  }

  int n_;
  std::mt19937_64 rng_;
};

}  // namespace prerb
