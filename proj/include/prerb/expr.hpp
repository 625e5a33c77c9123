#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "prerb/polynomial.hpp"
#include "prerb/rational.hpp"
#include "prerb/words.hpp"

namespace prerb {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + what),
        position(pos) {}
  std::size_t position;
};

namespace detail {

/// Recursive-descent parser for
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := rational? factor+
///   factor := letter | 'R' '(' word ')'
///   word   := factor+
///   letter := ('x'|'y') integer
/// plus the literal "0" for the zero polynomial. R applies to basis words in
/// input syntax; its linear extension lives in the engine.
class ExprParser {
 public:
  ExprParser(std::string_view text, int n) : text_(text), n_(n) {}

  Polynomial parse() {
    skip_ws();
    if (done()) throw ParseError(pos_, "empty expression");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (done()) return Polynomial();
      pos_ = save;  // e.g. "0/2 x1" is not the zero literal
    }
    Polynomial p;
    bool negate = consume('-');
    p += parse_term(negate);
    skip_ws();
    while (!done()) {
      const char op = peek();
      if (op != '+' && op != '-')
        throw ParseError(pos_, std::string("unexpected character '") + op + "'");
      ++pos_;
      p += parse_term(op == '-');
      skip_ws();
    }
    return p;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool consume(char c) {
    skip_ws();
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  long parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError(start, "expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parse_term(bool negate) {
    skip_ws();
    if (done()) throw ParseError(pos_, "expected a term");
    Rational coef(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const long num = parse_integer();
      if (consume('/')) {
        const std::size_t dpos = pos_;
        const long den = parse_integer();
        if (den == 0) throw ParseError(dpos, "zero denominator");
        coef = Rational(num, den);
        coef.canonicalize();
      } else {
        coef = Rational(num);
      }
    }
    RWord w = parse_word();
    if (negate) coef = -coef;
    return Polynomial(w, coef);
  }

  RWord parse_word() {
    std::vector<Atom> atoms;
    for (;;) {
      skip_ws();
      if (done()) break;
      const char c = peek();
      if (c == 'x' || c == 'y') {
        const std::size_t lpos = pos_;
        ++pos_;
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(pos_, "expected a letter index");
        const long idx = parse_integer();
        if (idx < 1 || idx > n_)
          throw ParseError(lpos, "letter index out of range 1.." +
                                     std::to_string(n_));
        atoms.emplace_back(c == 'x' ? Letter::x(static_cast<int>(idx))
                                    : Letter::y(static_cast<int>(idx)));
      } else if (c == 'R') {
        ++pos_;
        skip_ws();
        if (done() || peek() != '(')
          throw ParseError(pos_, "expected '(' after R");
        ++pos_;
        skip_ws();
        if (!done() && peek() == ')')
          throw ParseError(pos_, "R() needs a nonempty word argument");
        RWord content = parse_word();
        if (content.empty())
          throw ParseError(pos_, "R() needs a nonempty word argument");
        skip_ws();
        if (done() || peek() != ')') throw ParseError(pos_, "expected ')'");
        ++pos_;
        atoms.push_back(Atom::wrap(std::move(content)));
      } else {
        break;
      }
    }
    if (atoms.empty()) throw ParseError(pos_, "expected a word");
    return RWord(std::move(atoms));
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_expr(std::string_view text, int n) {
  return detail::ExprParser(text, n).parse();
}

inline void print_word_to(std::ostream& os, const RWord& w) {
  bool first = true;
  for (const Atom& a : w.atoms()) {
    if (!first) os << ' ';
    first = false;
    if (a.is_letter()) {
      os << (a.letter().is_x() ? 'x' : 'y') << a.letter().index();
    } else if (a.is_wrap()) {
      os << "R(";
      print_word_to(os, a.content());
      os << ')';
    } else {
      os << '*';
    }
  }
}

inline std::string print_word(const RWord& w) {
  std::ostringstream os;
  print_word_to(os, w);
  return os.str();
}

inline std::string print_star(const StarWord& q) { return print_word(q.tree()); }

/// Deterministic rendering: monomials in strictly decreasing order, reduced
/// rational coefficients, unit coefficients elided. Round-trips through
/// parse_expr.
inline std::string print_expr(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool neg = sign(c) < 0;
    Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(mag) << ' ';
    print_word_to(os, w);
  }
  return os.str();
}

}  // namespace prerb
