#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prerb/hat.hpp"
#include "prerb/polynomial.hpp"
#include "prerb/rules.hpp"

namespace prerb {

struct StepLimitExceeded : std::runtime_error {
  StepLimitExceeded()
      : std::runtime_error("reduction step limit exceeded; the rewrite system "
                           "should terminate, so this indicates a bug") {}
};

/// Which reducible monomial of the polynomial is rewritten next, and which
/// redex inside it. Normal forms do not depend on the choice; the two
/// strategies exist to witness that.
enum class Strategy {
  LargestFirst,   // largest reducible monomial, leftmost-outermost redex
  SmallestFirst,  // smallest reducible monomial, rightmost-innermost redex
};

struct ReduceStep {
  Rational coeff;
  StarWord context;
  Relation relation;
};
using Trace = std::vector<ReduceStep>;

inline bool is_irreducible(const RWord& w,
                           const FamilySet& fams = FamilySet::all()) {
  return !find_match(w, fams).has_value();
}

/// Exhaustive rewriting modulo the selected families. normal_form() memoizes
/// per-word normal forms (sound because normal forms are unique);
/// reduce_with_strategy() follows one rewriting order faithfully and can
/// record the rewrite trace.
class Reducer {
 public:
  explicit Reducer(const HatLie& h, FamilySet fams = FamilySet::all())
      : hat_(&h), families_(fams) {}
  Reducer(HatLie&&, FamilySet = FamilySet::all()) = delete;  // keeps a reference

  const HatLie& hat() const { return *hat_; }
  const FamilySet& families() const { return families_; }

  void set_step_limit(std::uint64_t limit) { step_limit_ = limit; }
  std::uint64_t steps() const { return steps_; }

  Polynomial normal_form(const Polynomial& p) {
    Polynomial out;
    for (const auto& [w, c] : p.terms()) out += c * word_normal_form(w);
    return out;
  }
  Polynomial normal_form(const RWord& w) { return word_normal_form(w); }

  Polynomial reduce_with_strategy(const Polynomial& p, Strategy strategy,
                                  Trace* trace = nullptr) {
    std::map<RWord, Rational, RWordGreater> pending(p.terms().begin(),
                                                    p.terms().end());
    std::map<RWord, Rational, RWordGreater> done;
    while (!pending.empty()) {
      auto it = strategy == Strategy::LargestFirst ? pending.begin()
                                                   : std::prev(pending.end());
      RWord w = it->first;
      Rational c = it->second;
      pending.erase(it);
      if (sign(c) == 0) continue;
      auto m = pick_match(w, strategy);
      if (!m) {
        auto [dit, inserted] = done.emplace(std::move(w), c);
        if (!inserted) {
          dit->second += c;
          if (sign(dit->second) == 0) done.erase(dit);
        }
        continue;
      }
      bump_steps();
      if (trace)
        trace->push_back({c, m->context, relation_from_match(*m, *hat_)});
      const Polynomial replacement = substitute(m->context, expand(*m, *hat_));
      for (const auto& [nw, nc] : replacement.terms()) {
        const Rational add = c * nc;
        if (auto dit = done.find(nw); dit != done.end()) {
          dit->second += add;
          if (sign(dit->second) == 0) done.erase(dit);
          continue;
        }
        auto [pit, inserted] = pending.emplace(nw, add);
        if (!inserted) {
          pit->second += add;
          if (sign(pit->second) == 0) pending.erase(pit);
        }
      }
    }
    Polynomial out;
    for (const auto& [w, c] : done) out.add_term(w, c);
    return out;
  }

  bool is_irreducible(const RWord& w) const {
    return prerb::is_irreducible(w, families_);
  }

 private:
  std::optional<RuleMatch> pick_match(const RWord& w, Strategy s) const {
    auto core = detail::pick_core(w, families_,
                                  s == Strategy::LargestFirst
                                      ? detail::PickSide::Min
                                      : detail::PickSide::Max);
    if (!core) return std::nullopt;
    return detail::to_match(w, std::move(*core));
  }

  void bump_steps() {
    if (++steps_ > step_limit_) throw StepLimitExceeded();
  }

  const Polynomial& word_normal_form(const RWord& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    auto m = find_match(w, families_);
    if (!m) return memo_.emplace(w, Polynomial(w)).first->second;
    bump_steps();
    const Polynomial replacement = substitute(m->context, expand(*m, *hat_));
    Polynomial out;
    for (const auto& [nw, nc] : replacement.terms())
      out += nc * word_normal_form(nw);
    return memo_.emplace(w, std::move(out)).first->second;
  }

  const HatLie* hat_;
  FamilySet families_;
  std::unordered_map<RWord, Polynomial, RWordHash> memo_;
  std::uint64_t steps_ = 0;
  std::uint64_t step_limit_ = 100'000'000;
};

/// One-call convenience over a transient reducer.
inline Polynomial normal_form(const Polynomial& p, const HatLie& h,
                              FamilySet fams = FamilySet::all()) {
  Reducer red(h, fams);
  return red.normal_form(p);
}

}  // namespace prerb
