#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prerb {

/// Generator letter x_i or y_i (1-indexed). The letter order is the
/// interleaved one: y1 < x1 < y2 < x2 < ..., encoded so that code comparison
/// is the letter order.
class Letter {
 public:
  enum class Kind { Y = 0, X = 1 };

  Letter(Kind kind, int index)
      : code_(2 * (index - 1) + (kind == Kind::X ? 1 : 0)) {
    if (index < 1) throw std::invalid_argument("letter index must be >= 1");
  }

  static Letter x(int index) { return Letter(Kind::X, index); }
  static Letter y(int index) { return Letter(Kind::Y, index); }
  static Letter from_code(int code) {
    return Letter(code & 1 ? Kind::X : Kind::Y, code / 2 + 1);
  }

  Kind kind() const { return (code_ & 1) ? Kind::X : Kind::Y; }
  bool is_x() const { return kind() == Kind::X; }
  bool is_y() const { return kind() == Kind::Y; }
  int index() const { return code_ / 2 + 1; }
  int code() const { return code_; }

  friend auto operator<=>(const Letter& a, const Letter& b) = default;

 private:
  int code_;
};

class RWord;
using RWordPtr = std::shared_ptr<const RWord>;

/// One symbol of a word: a letter, an R-wrapped subword, or the hole of a
/// context word.
class Atom {
 public:
  explicit Atom(Letter l) : letter_(l.code()) {}

  static Atom wrap(RWord content);
  static Atom wrap(RWordPtr content) {
    Atom a;
    a.letter_ = kWrap;
    a.wrap_ = std::move(content);
    return a;
  }
  static Atom star() {
    Atom a;
    a.letter_ = kStar;
    return a;
  }

  bool is_letter() const { return letter_ >= 0; }
  bool is_wrap() const { return letter_ == kWrap; }
  bool is_star() const { return letter_ == kStar; }

  Letter letter() const { return Letter::from_code(letter_); }
  const RWord& content() const { return *wrap_; }
  const RWordPtr& content_ptr() const { return wrap_; }

  friend bool operator==(const Atom& a, const Atom& b);

 private:
  Atom() = default;
  static constexpr int kWrap = -1;
  static constexpr int kStar = -2;
  int letter_ = kStar;
  RWordPtr wrap_;
};

/// A basis word of the free associative algebra with operator R: a sequence
/// of letters and R-wrapped subwords. The word tree is immutable; size
/// statistics are cached at construction. Empty sequences are permitted as a
/// building convenience but are not valid monomials or wrap contents.
class RWord {
 public:
  RWord() = default;
  explicit RWord(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    for (const Atom& a : atoms_) {
      if (a.is_letter()) {
        ++letters_;
      } else if (a.is_wrap()) {
        deg_r_ += 1 + a.content().deg_r();
        letters_ += a.content().letters();
        stars_ += a.content().stars();
      } else {
        ++stars_;
      }
    }
  }
  RWord(std::initializer_list<Atom> atoms)
      : RWord(std::vector<Atom>(atoms)) {}

  const std::vector<Atom>& atoms() const { return atoms_; }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  bool empty() const { return atoms_.empty(); }

  /// Top-level length over the extended alphabet (letters and R-letters).
  int deg() const { return static_cast<int>(atoms_.size()); }
  /// Number of R symbols at all nesting depths.
  int deg_r() const { return deg_r_; }
  /// Number of letters at all nesting depths.
  int letters() const { return letters_; }
  int stars() const { return stars_; }

 private:
  std::vector<Atom> atoms_;
  int deg_r_ = 0;
  int letters_ = 0;
  int stars_ = 0;
};

inline Atom Atom::wrap(RWord content) {
  if (content.empty())
    throw std::invalid_argument("R-wrap content must be a nonempty word");
  return wrap(std::make_shared<const RWord>(std::move(content)));
}

inline bool operator==(const RWord& u, const RWord& v);

inline bool operator==(const Atom& a, const Atom& b) {
  if (a.letter_ != b.letter_) return false;
  if (!a.is_wrap()) return true;
  if (a.wrap_ == b.wrap_) return true;
  return *a.wrap_ == *b.wrap_;
}

inline bool operator==(const RWord& u, const RWord& v) {
  if (&u == &v) return true;
  if (u.deg() != v.deg() || u.deg_r() != v.deg_r() ||
      u.letters() != v.letters())
    return false;
  for (int i = 0; i < u.deg(); ++i)
    if (!(u.atom(i) == v.atom(i))) return false;
  return true;
}

inline std::size_t hash_value(const RWord& w);

inline std::size_t hash_value(const Atom& a) {
  if (a.is_letter()) return static_cast<std::size_t>(a.letter().code()) + 2;
  if (a.is_star()) return 1;
  return hash_value(a.content()) * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL;
}

inline std::size_t hash_value(const RWord& w) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const Atom& a : w.atoms()) {
    h ^= hash_value(a);
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct RWordHash {
  std::size_t operator()(const RWord& w) const { return hash_value(w); }
};

inline std::strong_ordering compare(const RWord& u, const RWord& v);

/// Atom order within deg-lex: every letter below every R-letter, letters by
/// the interleaved order, R-letters by comparing their contents.
inline std::strong_ordering compare(const Atom& a, const Atom& b) {
  if (a.is_letter()) {
    if (!b.is_letter()) return std::strong_ordering::less;
    return a.letter().code() <=> b.letter().code();
  }
  if (b.is_letter()) return std::strong_ordering::greater;
  return compare(a.content(), b.content());
}

/// The monomial order: first by total R-degree, then deg-lex over the
/// extended alphabet. Total, well-founded on bounded words, and compatible
/// with contexts.
inline std::strong_ordering compare(const RWord& u, const RWord& v) {
  if (u.deg_r() != v.deg_r()) return u.deg_r() <=> v.deg_r();
  if (u.deg() != v.deg()) return u.deg() <=> v.deg();
  for (int i = 0; i < u.deg(); ++i) {
    auto c = compare(u.atom(i), v.atom(i));
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

inline bool word_less(const RWord& u, const RWord& v) {
  return compare(u, v) == std::strong_ordering::less;
}

/// Descending comparator; polynomial term maps use it so that begin() is the
/// leading monomial.
struct RWordGreater {
  bool operator()(const RWord& u, const RWord& v) const {
    return compare(u, v) == std::strong_ordering::greater;
  }
};

inline RWord concat(const RWord& u, const RWord& v) {
  std::vector<Atom> atoms;
  atoms.reserve(u.atoms().size() + v.atoms().size());
  atoms.insert(atoms.end(), u.atoms().begin(), u.atoms().end());
  atoms.insert(atoms.end(), v.atoms().begin(), v.atoms().end());
  return RWord(std::move(atoms));
}

inline RWord wrap_word(const RWord& w) { return RWord({Atom::wrap(w)}); }

inline RWord letter_word(Letter l) { return RWord({Atom(l)}); }

/// A word tree with exactly one hole, written * below. Substitution splices
/// a word's atom sequence into the hole at the same nesting depth.
class StarWord {
 public:
  explicit StarWord(RWord tree) : tree_(std::move(tree)) {
    if (tree_.stars() != 1)
      throw std::invalid_argument("context word must contain exactly one *");
  }

  static StarWord hole() { return StarWord(RWord({Atom::star()})); }

  const RWord& tree() const { return tree_; }
  bool is_hole() const { return tree_.deg() == 1 && tree_.atom(0).is_star(); }

  friend bool operator==(const StarWord& a, const StarWord& b) {
    return a.tree_ == b.tree_;
  }

 private:
  RWord tree_;
};

namespace detail {

inline RWord splice_star(const RWord& tree, const RWord& u) {
  std::vector<Atom> atoms;
  atoms.reserve(tree.atoms().size() + u.atoms().size());
  for (const Atom& a : tree.atoms()) {
    if (a.is_star()) {
      atoms.insert(atoms.end(), u.atoms().begin(), u.atoms().end());
    } else if (a.is_wrap() && a.content().stars() > 0) {
      atoms.push_back(Atom::wrap(splice_star(a.content(), u)));
    } else {
      atoms.push_back(a);
    }
  }
  return RWord(std::move(atoms));
}

}  // namespace detail

/// q|_u: the hole of q replaced by the atom sequence of u.
inline RWord substitute(const StarWord& q, const RWord& u) {
  if (u.empty()) throw std::invalid_argument("cannot substitute an empty word");
  return detail::splice_star(q.tree(), u);
}

namespace detail {

/// Replaces atoms [pos, pos+len) of w by a single star.
inline RWord punch_hole(const RWord& w, std::size_t pos, std::size_t len) {
  std::vector<Atom> atoms;
  atoms.reserve(w.atoms().size() + 1 - len);
  for (std::size_t i = 0; i < w.atoms().size(); ++i) {
    if (i == pos) {
      atoms.push_back(Atom::star());
      i += len - 1;
    } else {
      atoms.push_back(w.atom(i));
    }
  }
  return RWord(std::move(atoms));
}

/// Replaces atom `pos` of w by a wrap around the given context tree.
inline RWord rewrap_at(const RWord& w, std::size_t pos, RWord inner_tree) {
  std::vector<Atom> atoms = w.atoms();
  atoms[pos] = Atom::wrap(std::move(inner_tree));
  return RWord(std::move(atoms));
}

inline void collect_occurrences(const RWord& w, const RWord& g,
                                std::vector<RWord>& out) {
  const int m = w.deg(), k = g.deg();
  for (int start = 0; start + k <= m; ++start) {
    bool match = true;
    for (int i = 0; i < k && match; ++i)
      match = w.atom(start + i) == g.atom(i);
    if (match) out.push_back(punch_hole(w, start, k));
  }
  for (int i = 0; i < m; ++i) {
    if (!w.atom(i).is_wrap()) continue;
    std::vector<RWord> inner;
    collect_occurrences(w.atom(i).content(), g, inner);
    for (RWord& tree : inner) out.push_back(rewrap_at(w, i, std::move(tree)));
  }
}

}  // namespace detail

/// Every context q with q|_g = w, at all nesting depths. Complete and
/// duplicate-free (distinct hole positions give distinct contexts).
inline std::vector<StarWord> occurrences(const RWord& w, const RWord& g) {
  std::vector<RWord> trees;
  if (!g.empty()) detail::collect_occurrences(w, g, trees);
  std::vector<StarWord> out;
  out.reserve(trees.size());
  for (RWord& t : trees) out.emplace_back(std::move(t));
  return out;
}

/// Well-formed basis word: nonempty, no holes, wrap contents recursively
/// well-formed. Wrap construction already rejects empty contents.
inline bool well_formed(const RWord& w) {
  return !w.empty() && w.stars() == 0;
}

}  // namespace prerb
