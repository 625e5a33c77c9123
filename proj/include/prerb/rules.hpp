#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "prerb/hat.hpp"
#include "prerb/polynomial.hpp"
#include "prerb/rational.hpp"
#include "prerb/words.hpp"

namespace prerb {

/// The four relation families, in reduction priority order.
///   Straighten: u v -> v u + [u, v] for a descending adjacent letter pair.
///   RotaBaxter: R(a)R(b) -> R(R(a)b + aR(b)).
///   XZero:      R(<operator-shaped all-x content>) -> 0.
///   YCollapse:  R(<content ending y_b x_b^k [R(z)]>) -> its expansion.
enum class RuleFamily { Straighten = 0, RotaBaxter = 1, XZero = 2, YCollapse = 3 };

inline const char* family_name(RuleFamily f) {
  switch (f) {
    case RuleFamily::Straighten: return "straighten";
    case RuleFamily::RotaBaxter: return "rota-baxter";
    case RuleFamily::XZero: return "x-zero";
    case RuleFamily::YCollapse: return "y-collapse";
  }
  return "?";
}

inline bool is_letter_word(const RWord& w) {
  return w.deg() == 1 && w.atom(0).is_letter();
}

/// Decomposition of a wrap content against the operator rule shapes
///   [R(z1)] X1 R(z2) X2 ... R(zs) Xs [y_b x_b^k] [R(z_end)]
/// with nonempty interior x-blocks X1..X_{s-1}, every z a non-letter word,
/// and (collapse case) every letter of Xs strictly below x_b.
struct OperatorShape {
  std::optional<RWord> lead_z;                // z1
  std::vector<std::vector<Letter>> xblocks;   // X1..Xs, s >= 1
  std::vector<RWord> mid_z;                   // z2..zs (size s-1)
  std::optional<RWord> tail_z;                // z_end
  std::optional<Letter> y;                    // collapse letter y_b
  int k = 0;                                  // trailing x_b count

  int s() const { return static_cast<int>(xblocks.size()); }
  bool is_collapse() const { return y.has_value(); }

  /// Number of z slots: slot 0 = lead, 1..s-1 = mid, s = tail.
  int z_slots() const { return s() + 1; }
  bool z_present(int slot) const {
    if (slot == 0) return lead_z.has_value();
    if (slot == s()) return tail_z.has_value();
    return true;
  }
  const RWord& z_at(int slot) const {
    if (slot == 0) return *lead_z;
    if (slot == s()) return *tail_z;
    return mid_z[static_cast<std::size_t>(slot - 1)];
  }
};

namespace detail {

/// Rebuilds the wrap content, with hooks used by rule expansion:
///   unwrap_slot: z slot whose wrap is removed (content spliced), -1 = none;
///   sub_block/sub_pos: x-block letter replaced by its y partner, -1 = none;
///   middle: atoms standing in for the y_b x_b^k segment.
inline RWord build_shape_content(const OperatorShape& sh, int unwrap_slot,
                                 int sub_block, int sub_pos,
                                 const std::vector<Atom>& middle) {
  std::vector<Atom> atoms;
  auto put_z = [&](int slot) {
    if (!sh.z_present(slot)) return;
    const RWord& z = sh.z_at(slot);
    if (slot == unwrap_slot)
      atoms.insert(atoms.end(), z.atoms().begin(), z.atoms().end());
    else
      atoms.push_back(Atom::wrap(z));
  };
  put_z(0);
  for (int j = 0; j < sh.s(); ++j) {
    const auto& block = sh.xblocks[static_cast<std::size_t>(j)];
    for (int t = 0; t < static_cast<int>(block.size()); ++t) {
      Letter l = block[static_cast<std::size_t>(t)];
      if (j == sub_block && t == sub_pos) l = Letter::y(l.index());
      atoms.emplace_back(l);
    }
    if (j + 1 < sh.s()) put_z(j + 1);
  }
  atoms.insert(atoms.end(), middle.begin(), middle.end());
  put_z(sh.s());
  return RWord(std::move(atoms));
}

}  // namespace detail

inline RWord shape_content(const OperatorShape& sh) {
  std::vector<Atom> middle;
  if (sh.is_collapse()) {
    middle.emplace_back(*sh.y);
    middle.insert(middle.end(), static_cast<std::size_t>(sh.k),
                  Atom(Letter::x(sh.y->index())));
  }
  return detail::build_shape_content(sh, -1, -1, -1, middle);
}

inline RWord shape_lhs(const OperatorShape& sh) {
  return wrap_word(shape_content(sh));
}

/// Parses a wrap content against the operator shapes. Returns the XZero
/// decomposition (no y-letter, at least one x-letter) or the YCollapse one
/// (single trailing y_b x_b^k group); nullopt when the content fits neither.
inline std::optional<OperatorShape> match_operator_shape(const RWord& content) {
  const auto& atoms = content.atoms();
  const int m = content.deg();
  OperatorShape sh;
  int i = 0;
  auto non_letter = [](const RWord& z) { return !is_letter_word(z); };
  if (m > 0 && atoms[0].is_wrap()) {
    if (!non_letter(atoms[0].content())) return std::nullopt;
    sh.lead_z = atoms[0].content();
    i = 1;
  }
  for (;;) {
    std::vector<Letter> run;
    while (i < m && atoms[static_cast<std::size_t>(i)].is_letter() &&
           atoms[static_cast<std::size_t>(i)].letter().is_x()) {
      run.push_back(atoms[static_cast<std::size_t>(i)].letter());
      ++i;
    }
    if (i == m) {
      if (run.empty()) return std::nullopt;  // ends in a wrap or is empty
      sh.xblocks.push_back(std::move(run));
      return sh;  // XZero
    }
    const Atom& a = atoms[static_cast<std::size_t>(i)];
    if (a.is_letter()) {  // a y-letter: the collapse group starts here
      const Letter yb = a.letter();
      const Letter xb = Letter::x(yb.index());
      for (const Letter& l : run)
        if (!(l < xb)) return std::nullopt;  // x_b must dominate Xs
      sh.xblocks.push_back(std::move(run));
      sh.y = yb;
      ++i;
      while (i < m && atoms[static_cast<std::size_t>(i)].is_letter() &&
             atoms[static_cast<std::size_t>(i)].letter() == xb) {
        ++sh.k;
        ++i;
      }
      if (i < m) {
        if (i != m - 1 || !atoms[static_cast<std::size_t>(i)].is_wrap() ||
            !non_letter(atoms[static_cast<std::size_t>(i)].content()))
          return std::nullopt;
        sh.tail_z = atoms[static_cast<std::size_t>(i)].content();
        ++i;
      }
      return sh;  // YCollapse
    }
    // a wrap: trailing z after Xs, or an interior z before the next block
    if (i == m - 1) {
      if (run.empty()) return std::nullopt;  // adjacent wraps / no x-block
      if (!non_letter(a.content())) return std::nullopt;
      sh.xblocks.push_back(std::move(run));
      sh.tail_z = a.content();
      return sh;  // XZero
    }
    if (run.empty()) return std::nullopt;  // interior blocks are nonempty
    if (!non_letter(a.content())) return std::nullopt;
    sh.xblocks.push_back(std::move(run));
    sh.mid_z.push_back(a.content());
    ++i;
  }
}

struct StraightenMatch {
  Letter hi, lo;  // hi > lo
};
struct RotaBaxterMatch {
  RWord a, b;
};
using MatchParams = std::variant<StraightenMatch, RotaBaxterMatch, OperatorShape>;

/// A located occurrence of a leading pattern inside an ambient word.
struct RuleMatch {
  RuleFamily family;
  StarWord context;        // ambient context; substituting lhs reproduces the word
  RWord lhs;               // the matched leading word
  MatchParams params;
  std::vector<int> loc;    // wrap-descent path plus start index, for ordering
};

struct FamilySet {
  bool straighten = true, rota_baxter = true, x_zero = true, y_collapse = true;

  static FamilySet all() { return {}; }
  static FamilySet straighten_only() { return {true, false, false, false}; }
  bool contains(RuleFamily f) const {
    switch (f) {
      case RuleFamily::Straighten: return straighten;
      case RuleFamily::RotaBaxter: return rota_baxter;
      case RuleFamily::XZero: return x_zero;
      case RuleFamily::YCollapse: return y_collapse;
    }
    return false;
  }
};

namespace detail {

struct MatchLoc {
  std::vector<int> path;  // wrap-atom indices from the root
  int start = 0;
  int len = 1;
};

inline RWord build_context_tree(const RWord& w, const MatchLoc& loc,
                                std::size_t depth = 0) {
  if (depth == loc.path.size())
    return punch_hole(w, static_cast<std::size_t>(loc.start),
                      static_cast<std::size_t>(loc.len));
  const int i = loc.path[depth];
  return rewrap_at(w, static_cast<std::size_t>(i),
                   build_context_tree(w.atom(static_cast<std::size_t>(i)).content(),
                                      loc, depth + 1));
}

/// A located match before its context word is materialized.
struct MatchCore {
  RuleFamily family;
  MatchLoc loc;
  RWord lhs;
  MatchParams params;
};

/// (family, depth, location) — reduction strategies pick the min or the max.
inline bool core_key_less(const MatchCore& a, const MatchCore& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.loc.path.size() != b.loc.path.size())
    return a.loc.path.size() < b.loc.path.size();
  if (a.loc.path != b.loc.path) return a.loc.path < b.loc.path;
  return a.loc.start < b.loc.start;
}

template <typename Sink>
inline void scan_matches(const RWord& w, std::vector<int>& path,
                         const FamilySet& fams, Sink&& sink) {
  const int m = w.deg();
  for (int i = 0; i < m; ++i) {
    const Atom& a = w.atom(static_cast<std::size_t>(i));
    if (i + 1 < m) {
      const Atom& b = w.atom(static_cast<std::size_t>(i + 1));
      if (fams.straighten && a.is_letter() && b.is_letter() &&
          a.letter() > b.letter())
        sink(MatchCore{RuleFamily::Straighten,
                       MatchLoc{path, i, 2},
                       RWord({a, b}),
                       StraightenMatch{a.letter(), b.letter()}});
      if (fams.rota_baxter && a.is_wrap() && b.is_wrap())
        sink(MatchCore{RuleFamily::RotaBaxter,
                       MatchLoc{path, i, 2},
                       RWord({a, b}),
                       RotaBaxterMatch{a.content(), b.content()}});
    }
    if (a.is_wrap()) {
      if (fams.x_zero || fams.y_collapse) {
        if (auto sh = match_operator_shape(a.content())) {
          const RuleFamily fam =
              sh->is_collapse() ? RuleFamily::YCollapse : RuleFamily::XZero;
          if (fams.contains(fam))
            sink(MatchCore{fam, MatchLoc{path, i, 1}, RWord({a}),
                           std::move(*sh)});
        }
      }
      path.push_back(i);
      scan_matches(a.content(), path, fams, sink);
      path.pop_back();
    }
  }
}

inline RuleMatch to_match(const RWord& root, MatchCore&& core) {
  StarWord context(build_context_tree(root, core.loc));
  std::vector<int> key = std::move(core.loc.path);
  key.push_back(core.loc.start);
  return RuleMatch{core.family, std::move(context), std::move(core.lhs),
                   std::move(core.params), std::move(key)};
}

inline bool match_key_less(const RuleMatch& a, const RuleMatch& b) {
  if (a.family != b.family) return a.family < b.family;
  if (a.loc.size() != b.loc.size()) return a.loc.size() < b.loc.size();
  return a.loc < b.loc;
}

enum class PickSide { Min, Max };

inline std::optional<MatchCore> pick_core(const RWord& w,
                                          const FamilySet& fams,
                                          PickSide side) {
  std::optional<MatchCore> best;
  std::vector<int> path;
  scan_matches(w, path, fams, [&](MatchCore&& core) {
    if (!best) {
      best = std::move(core);
      return;
    }
    const bool take = side == PickSide::Min ? core_key_less(core, *best)
                                            : core_key_less(*best, core);
    if (take) best = std::move(core);
  });
  return best;
}

}  // namespace detail

/// Every leading-pattern occurrence of the selected families, at all depths.
inline std::vector<RuleMatch> find_all_matches(
    const RWord& w, const FamilySet& fams = FamilySet::all()) {
  std::vector<RuleMatch> out;
  std::vector<int> path;
  detail::scan_matches(w, path, fams, [&](detail::MatchCore&& core) {
    out.push_back(detail::to_match(w, std::move(core)));
  });
  return out;
}

/// Leftmost-outermost occurrence under the family priority
/// Straighten > RotaBaxter > XZero > YCollapse; absent iff w is irreducible.
inline std::optional<RuleMatch> find_match(
    const RWord& w, const FamilySet& fams = FamilySet::all()) {
  auto core = detail::pick_core(w, fams, detail::PickSide::Min);
  if (!core) return std::nullopt;
  return detail::to_match(w, std::move(*core));
}

/// Structural side conditions of the operator shapes; the matcher
/// guarantees them, hand-built matches are revalidated by expand().
inline void validate_shape(const OperatorShape& sh) {
  for (int j = 0; j + 1 < sh.s(); ++j)
    if (sh.xblocks[static_cast<std::size_t>(j)].empty())
      throw std::invalid_argument("interior x-blocks must be nonempty");
  for (int slot = 0; slot < sh.z_slots(); ++slot)
    if (sh.z_present(slot) && is_letter_word(sh.z_at(slot)))
      throw std::invalid_argument("wrapped arguments must not be single letters");
  if (sh.is_collapse()) {
    const Letter xb = Letter::x(sh.y->index());
    if (!sh.y->is_y())
      throw std::invalid_argument("collapse letter must be of y kind");
    for (const Letter& l : sh.xblocks.back())
      if (!(l < xb))
        throw std::invalid_argument(
            "collapse needs x_b above every letter of the last x-block");
    if (sh.k < 0) throw std::invalid_argument("negative power");
  } else {
    if (sh.xblocks.empty() || sh.xblocks.back().empty())
      throw std::invalid_argument("the last x-block must be nonempty");
  }
  for (const auto& block : sh.xblocks)
    for (const Letter& l : block)
      if (!l.is_x())
        throw std::invalid_argument("x-blocks may contain only x-letters");
}

/// The replacement polynomial r of a match, so that the relation reads
/// lhs - r. Every monomial of r is strictly below lhs.
inline Polynomial expand(const RuleMatch& m, const HatLie& h) {
  switch (m.family) {
    case RuleFamily::Straighten: {
      const auto& p = std::get<StraightenMatch>(m.params);
      if (!(p.hi > p.lo))
        throw std::invalid_argument("straighten pair must be descending");
      Polynomial r(RWord({Atom(p.lo), Atom(p.hi)}));
      r += embed(h.basis_bracket(p.hi, p.lo));
      return r;
    }
    case RuleFamily::RotaBaxter: {
      const auto& p = std::get<RotaBaxterMatch>(m.params);
      Polynomial r(wrap_word(concat(wrap_word(p.a), p.b)));
      r += Polynomial(wrap_word(concat(p.a, wrap_word(p.b))));
      return r;
    }
    case RuleFamily::XZero:
      validate_shape(std::get<OperatorShape>(m.params));
      return Polynomial();
    case RuleFamily::YCollapse: {
      const auto& sh = std::get<OperatorShape>(m.params);
      if (!sh.is_collapse())
        throw std::invalid_argument("collapse expansion needs a y-letter");
      validate_shape(sh);
      const Letter yb = *sh.y;
      const Letter xb = Letter::x(yb.index());
      const int k = sh.k;
      const int n = h.dim();
      if (yb.index() > n)
        throw std::invalid_argument("letter index exceeds algebra dimension");
      for (const auto& block : sh.xblocks)
        for (const Letter& l : block)
          if (l.index() > n)
            throw std::invalid_argument("letter index exceeds algebra dimension");
      std::vector<Atom> powers;  // x_b^{k+1}
      powers.insert(powers.end(), static_cast<std::size_t>(k + 1), Atom(xb));
      // Unwrapped word, trailing group promoted to x_b^{k+1}.
      Polynomial acc(detail::build_shape_content(sh, -1, -1, -1, powers));
      // Iterated-bracket corrections.
      for (int i = 2; i <= k + 1; ++i) {
        const HatElem br = h.iterated_bracket(HatElem::unit(n, yb), xb, i - 1);
        if (br.is_zero()) continue;
        const Rational coef =
            (i % 2 == 0 ? Rational(1) : Rational(-1)) *
            binomial(static_cast<unsigned long>(k + 1), static_cast<unsigned long>(i));
        std::vector<Atom> middle;
        middle.reserve(static_cast<std::size_t>(k + 2 - i));
        middle.emplace_back(yb);  // placeholder, replaced per bracket letter
        middle.insert(middle.end(), static_cast<std::size_t>(k + 1 - i), Atom(xb));
        for (int code = 0; code < 2 * n; ++code) {
          const Letter mu = Letter::from_code(code);
          const Rational c = br.at(mu);
          if (sign(c) == 0) continue;
          middle[0] = Atom(mu);
          acc.add_term(
              wrap_word(detail::build_shape_content(sh, -1, -1, -1, middle)),
              coef * c);
        }
      }
      // One z unwrapped per present slot.
      for (int slot = 0; slot < sh.z_slots(); ++slot) {
        if (!sh.z_present(slot)) continue;
        acc.add_term(
            wrap_word(detail::build_shape_content(sh, slot, -1, -1, powers)),
            Rational(-1));
      }
      // One x-block letter converted to its y partner per position.
      for (int j = 0; j < sh.s(); ++j) {
        const int lj = static_cast<int>(sh.xblocks[static_cast<std::size_t>(j)].size());
        for (int t = 0; t < lj; ++t)
          acc.add_term(
              wrap_word(detail::build_shape_content(sh, -1, j, t, powers)),
              Rational(-1));
      }
      acc *= Rational(1, static_cast<unsigned long>(k + 1));
      return acc;
    }
  }
  throw std::logic_error("unreachable rule family");
}

/// A monic relation: lhs minus its replacement.
struct Relation {
  RuleFamily family;
  RWord lhs;
  Polynomial poly;
};

inline Relation relation_from_match(const RuleMatch& m, const HatLie& h) {
  Polynomial p(m.lhs);
  p -= expand(m, h);
  return Relation{m.family, m.lhs, std::move(p)};
}

/// Monic, leading monomial equals lhs, every other monomial strictly below.
inline bool validate_relation(const Relation& r) {
  if (r.poly.is_zero() || !r.poly.is_monic()) return false;
  if (!(r.poly.leading_monomial() == r.lhs)) return false;
  for (auto it = std::next(r.poly.terms().begin()); it != r.poly.terms().end();
       ++it)
    if (!word_less(it->first, r.lhs)) return false;
  return true;
}

/// Words bucketed by (total letter count, R-degree); generation order is
/// deterministic.
class WordTable {
 public:
  WordTable(int n, int max_letters, int max_rdeg)
      : max_letters_(max_letters), max_rdeg_(max_rdeg) {
    buckets_.assign(static_cast<std::size_t>(max_letters + 1),
                    std::vector<std::vector<RWord>>(
                        static_cast<std::size_t>(max_rdeg + 1)));
    std::vector<Atom> cur;
    for (int r = 0; r <= max_rdeg; ++r) gen_level(n, r, cur, 0, 0);
  }

  const std::vector<RWord>& bucket(int letters, int deg_r) const {
    return buckets_[static_cast<std::size_t>(letters)]
                   [static_cast<std::size_t>(deg_r)];
  }
  int max_letters() const { return max_letters_; }
  int max_rdeg() const { return max_rdeg_; }

  /// Applies fn to every word with letters <= L and deg_r <= R.
  template <typename Fn>
  void for_each(int max_l, int max_r, Fn&& fn) const {
    for (int l = 0; l <= max_l; ++l)
      for (int r = 0; r <= max_r; ++r)
        for (const RWord& w : bucket(l, r)) fn(w);
  }

 private:
  void gen_level(int n, int target_rdeg, std::vector<Atom>& cur,
                 int used_letters, int used_rdeg) {
    if (!cur.empty() && used_rdeg == target_rdeg)
      buckets_[static_cast<std::size_t>(used_letters)]
              [static_cast<std::size_t>(used_rdeg)]
                  .push_back(RWord(cur));
    if (used_letters < max_letters_) {
      for (int code = 0; code < 2 * n; ++code) {
        cur.emplace_back(Letter::from_code(code));
        gen_level(n, target_rdeg, cur, used_letters + 1, used_rdeg);
        cur.pop_back();
      }
    }
    for (int cl = 1; cl + used_letters <= max_letters_; ++cl) {
      for (int cr = 0; cr + used_rdeg + 1 <= target_rdeg; ++cr) {
        for (const RWord& content : bucket(cl, cr)) {
          cur.push_back(Atom::wrap(content));
          gen_level(n, target_rdeg, cur, used_letters + cl,
                    used_rdeg + 1 + cr);
          cur.pop_back();
        }
      }
    }
  }

  int max_letters_, max_rdeg_;
  std::vector<std::vector<std::vector<RWord>>> buckets_;
};

namespace detail {

inline Relation shape_relation(const OperatorShape& sh, const HatLie& h) {
  const RWord lhs = shape_lhs(sh);
  RuleMatch m{sh.is_collapse() ? RuleFamily::YCollapse : RuleFamily::XZero,
              StarWord::hole(), lhs, sh, {0}};
  return relation_from_match(m, h);
}

}  // namespace detail

inline Relation straighten_relation(const HatLie& h, Letter hi, Letter lo) {
  RWord lhs({Atom(hi), Atom(lo)});
  RuleMatch m{RuleFamily::Straighten, StarWord::hole(), lhs,
              StraightenMatch{hi, lo}, {0}};
  return relation_from_match(m, h);
}

inline Relation rota_baxter_relation(const RWord& a, const RWord& b) {
  RWord lhs({Atom::wrap(a), Atom::wrap(b)});
  RuleMatch m{RuleFamily::RotaBaxter, StarWord::hole(), lhs,
              RotaBaxterMatch{a, b}, {0}};
  // expansion needs no bracket table; pass a trivial algebra
  static const HatLie kEmpty = HatLie::from_pre_lie(PreLieAlgebra::zero(0));
  return relation_from_match(m, kEmpty);
}

/// Every relation instance whose leading word has at most max_letters
/// letters (counted at every depth) and R-degree at most max_rdeg.
/// Duplicate-free; each relation is monic with verified leading monomial.
inline std::vector<Relation> enumerate_relations(const HatLie& h,
                                                 int max_letters,
                                                 int max_rdeg) {
  std::vector<Relation> out;
  const int n = h.dim();
  if (max_letters >= 2) {
    for (int hi = 0; hi < 2 * n; ++hi)
      for (int lo = 0; lo < hi; ++lo)
        out.push_back(straighten_relation(h, Letter::from_code(hi),
                                          Letter::from_code(lo)));
  }
  if (max_rdeg >= 2 && max_letters >= 2) {
    WordTable words(n, max_letters - 1, max_rdeg - 2);
    words.for_each(max_letters - 1, max_rdeg - 2, [&](const RWord& a) {
      words.for_each(max_letters - a.letters(), max_rdeg - 2 - a.deg_r(),
                     [&](const RWord& b) {
                       out.push_back(rota_baxter_relation(a, b));
                     });
    });
  }
  if (max_rdeg >= 1 && max_letters >= 1) {
    WordTable contents(n, max_letters, max_rdeg - 1);
    contents.for_each(max_letters, max_rdeg - 1, [&](const RWord& c) {
      if (auto sh = match_operator_shape(c))
        out.push_back(detail::shape_relation(*sh, h));
    });
  }
  for (const Relation& r : out)
    if (!validate_relation(r))
      throw std::logic_error("enumerated relation failed validation");
  return out;
}

}  // namespace prerb
