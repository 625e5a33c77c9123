#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prerb/reducer.hpp"
#include "prerb/rules.hpp"

namespace prerb {

/// A critical pair of two monic relations: their leading words overlap
/// (intersection) or nest (inclusion) inside the ambient word w. The value
/// is the difference of the two reductions of w; triviality means it
/// rewrites to zero.
struct Composition {
  enum class Kind { Intersection, Inclusion };

  Kind kind;
  Relation f, g;
  RWord w;
  RWord mu, nu;               // intersection: w = lhs(f) mu = nu lhs(g)
  std::optional<StarWord> q;  // inclusion: w = lhs(f) = q|lhs(g)
  Polynomial value;
};

namespace detail {

inline void validate_composition(const Composition& c) {
  for (const auto& [mon, coef] : c.value.terms())
    if (!word_less(mon, c.w))
      throw std::logic_error("composition value reaches the ambient word");
}

}  // namespace detail

/// All proper overlaps w = lhs(f) mu = nu lhs(g) with both mu and nu
/// nonempty; the degree condition deg w < deg lhs(f) + deg lhs(g) is then
/// exactly the existence of a genuine overlap.
inline std::vector<Composition> intersection_compositions(const Relation& f,
                                                          const Relation& g) {
  std::vector<Composition> out;
  const auto& fa = f.lhs.atoms();
  const auto& ga = g.lhs.atoms();
  const int df = f.lhs.deg(), dg = g.lhs.deg();
  for (int o = 1; o < std::min(df, dg); ++o) {
    bool match = true;
    for (int i = 0; i < o && match; ++i)
      match = fa[static_cast<std::size_t>(df - o + i)] ==
              ga[static_cast<std::size_t>(i)];
    if (!match) continue;
    RWord mu(std::vector<Atom>(ga.begin() + o, ga.end()));
    RWord nu(std::vector<Atom>(fa.begin(), fa.end() - o));
    RWord w = concat(f.lhs, mu);
    Polynomial value = f.poly * mu - nu * g.poly;
    Composition c{Composition::Kind::Intersection, f,  g,
                  std::move(w),                    mu, nu,
                  std::nullopt,                    std::move(value)};
    detail::validate_composition(c);
    out.push_back(std::move(c));
  }
  return out;
}

/// One composition per occurrence of lhs(g) inside lhs(f) at any depth,
/// excluding the identity occurrence of a relation in itself.
inline std::vector<Composition> inclusion_compositions(const Relation& f,
                                                       const Relation& g) {
  std::vector<Composition> out;
  for (StarWord& q : occurrences(f.lhs, g.lhs)) {
    if (q.is_hole() && f.poly == g.poly) continue;
    Polynomial value = f.poly - substitute(q, g.poly);
    Composition c{Composition::Kind::Inclusion, f, g, f.lhs,
                  RWord(),  RWord(), std::move(q), std::move(value)};
    detail::validate_composition(c);
    out.push_back(std::move(c));
  }
  return out;
}

/// Trivial modulo the rule set: the value rewrites to zero. Every rewrite
/// step of the reducer applies inside monomials strictly below w, so this is
/// sufficient for triviality in the critical-pair sense.
inline bool check_trivial(const Composition& c, Reducer& red) {
  return red.normal_form(c.value).is_zero();
}

struct GsbOptions {
  int max_letters = 4;
  int max_rdeg = 2;
  int jobs = 1;
};

struct GsbFailure {
  Composition composition;
  Polynomial residue;
  std::size_t f_index = 0;
  std::size_t ordinal = 0;  // position among the compositions of f
};

struct GsbReport {
  GsbOptions options;
  std::size_t relation_count = 0;
  std::array<std::size_t, 4> relations_per_family{};
  // "<kind> <family of f>/<family of g>" -> count, deterministically ordered
  std::map<std::string, std::uint64_t> composition_counts;
  std::uint64_t total_compositions = 0;
  std::vector<GsbFailure> failures;
  bool pass() const { return failures.empty(); }
};

namespace detail {

struct AtomHash {
  std::size_t operator()(const Atom& a) const { return hash_value(a); }
};

inline std::string pair_key(Composition::Kind k, RuleFamily ff,
                            RuleFamily gf) {
  std::string s =
      k == Composition::Kind::Intersection ? "intersection " : "inclusion ";
  s += family_name(ff);
  s += '/';
  s += family_name(gf);
  return s;
}

}  // namespace detail

/// Enumerates every relation within the bounds, forms all intersection and
/// inclusion compositions among them, and checks each trivial. Composition
/// checking is parallel over relations; the report merge is deterministic.
inline GsbReport verify_gsb(const HatLie& h, const GsbOptions& options) {
  GsbReport report;
  report.options = options;
  const std::vector<Relation> rels =
      enumerate_relations(h, options.max_letters, options.max_rdeg);
  report.relation_count = rels.size();
  for (const Relation& r : rels)
    ++report.relations_per_family[static_cast<std::size_t>(r.family)];

  // overlap candidates share the boundary atom
  std::unordered_map<Atom, std::vector<std::size_t>, detail::AtomHash>
      by_first_atom;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels[i].lhs.deg() >= 2)
      by_first_atom[rels[i].lhs.atom(0)].push_back(i);

  const int jobs = std::max(1, options.jobs);
  struct WorkerOut {
    std::map<std::string, std::uint64_t> counts;
    std::vector<GsbFailure> failures;
    std::uint64_t total = 0;
    std::exception_ptr error;
  };
  std::vector<WorkerOut> outs(static_cast<std::size_t>(jobs));

  auto work = [&](int tid) {
    WorkerOut& out = outs[static_cast<std::size_t>(tid)];
    try {
      Reducer red(h);
      auto handle = [&](std::size_t fi, std::size_t ordinal, Composition&& c) {
        ++out.counts[detail::pair_key(c.kind, c.f.family, c.g.family)];
        ++out.total;
        if (!check_trivial(c, red)) {
          Polynomial residue = red.normal_form(c.value);
          out.failures.push_back(
              {std::move(c), std::move(residue), fi, ordinal});
        }
      };
      for (std::size_t fi = static_cast<std::size_t>(tid); fi < rels.size();
           fi += static_cast<std::size_t>(jobs)) {
        const Relation& f = rels[fi];
        std::size_t ordinal = 0;
        const auto& fa = f.lhs.atoms();
        const int df = f.lhs.deg();
        for (int o = 1; o < df; ++o) {
          auto it = by_first_atom.find(fa[static_cast<std::size_t>(df - o)]);
          if (it == by_first_atom.end()) continue;
          for (std::size_t gi : it->second) {
            const Relation& g = rels[gi];
            if (g.lhs.deg() <= o) continue;
            bool match = true;
            for (int i = 1; i < o && match; ++i)
              match = fa[static_cast<std::size_t>(df - o + i)] ==
                      g.lhs.atom(static_cast<std::size_t>(i));
            if (!match) continue;
            RWord mu(std::vector<Atom>(g.lhs.atoms().begin() + o,
                                       g.lhs.atoms().end()));
            RWord nu(std::vector<Atom>(fa.begin(), fa.end() - o));
            Polynomial value = f.poly * mu - nu * g.poly;
            Composition c{Composition::Kind::Intersection,
                          f,
                          g,
                          concat(f.lhs, mu),
                          std::move(mu),
                          std::move(nu),
                          std::nullopt,
                          std::move(value)};
            detail::validate_composition(c);
            handle(fi, ordinal++, std::move(c));
          }
        }
        // inclusions: every leading pattern inside lhs(f) is an enumerated
        // relation (its size is bounded by the size of lhs(f))
        for (const RuleMatch& m : find_all_matches(f.lhs)) {
          Relation g = relation_from_match(m, h);
          if (m.context.is_hole() && g.poly == f.poly) continue;
          Polynomial value = f.poly - substitute(m.context, g.poly);
          Composition c{Composition::Kind::Inclusion, f,       std::move(g),
                        f.lhs,                        RWord(), RWord(),
                        m.context,                    std::move(value)};
          detail::validate_composition(c);
          handle(fi, ordinal++, std::move(c));
        }
      }
    } catch (...) {
      out.error = std::current_exception();
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work, t);
    for (auto& t : threads) t.join();
  }
  for (const WorkerOut& out : outs)
    if (out.error) std::rethrow_exception(out.error);

  for (WorkerOut& out : outs) {
    for (auto& [key, count] : out.counts)
      report.composition_counts[key] += count;
    report.total_compositions += out.total;
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(out.failures.begin()),
                           std::make_move_iterator(out.failures.end()));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const GsbFailure& a, const GsbFailure& b) {
              return std::pair(a.f_index, a.ordinal) <
                     std::pair(b.f_index, b.ordinal);
            });
  return report;
}

/// Parameters of the unwrap-expansion identity: an operator-shaped word
/// with a designated dominant letter x_b in the last x-block.
struct UnwrapIdentityParams {
  std::optional<RWord> lead_z;
  std::vector<std::vector<Letter>> xblocks;
  std::vector<RWord> mid_z;
  std::optional<RWord> tail_z;
  int beta = 1;
};

/// Checks that an operator-shaped product word equals the sum of its
/// single-unwrap variants in the quotient: unwrapping one R(z_j), or turning
/// one block letter x into its partner y, once per position. The positions
/// of x_b in the last block regroup against the collapsed word
/// <erased block> y_b x_b^p, which enters with canceling coefficients.
/// Reduces to zero for every valid instance.
inline bool check_unwrap_expansion(const UnwrapIdentityParams& params,
                                   const HatLie& h) {
  OperatorShape sh;
  sh.lead_z = params.lead_z;
  sh.xblocks = params.xblocks;
  sh.mid_z = params.mid_z;
  sh.tail_z = params.tail_z;
  validate_shape(sh);
  if (params.beta < 1 || params.beta > h.dim())
    throw std::invalid_argument("dominant letter out of range");
  const Letter xb = Letter::x(params.beta);
  const auto& last = sh.xblocks.back();
  for (const Letter& l : last)
    if (l > xb)
      throw std::invalid_argument("x_b must dominate the last x-block");

  const std::vector<Atom> no_middle;
  Polynomial acc(detail::build_shape_content(sh, -1, -1, -1, no_middle));
  for (int slot = 0; slot < sh.z_slots(); ++slot) {
    if (!sh.z_present(slot)) continue;
    acc.add_term(
        wrap_word(detail::build_shape_content(sh, slot, -1, -1, no_middle)),
        Rational(-1));
  }
  for (int j = 0; j < sh.s(); ++j)
    for (int t = 0;
         t < static_cast<int>(sh.xblocks[static_cast<std::size_t>(j)].size());
         ++t)
      acc.add_term(
          wrap_word(detail::build_shape_content(sh, -1, j, t, no_middle)),
          Rational(-1));

  // the collapsed-word regrouping; +p and -p cancel but are built as stated
  int p = 0;
  OperatorShape collapsed = sh;
  collapsed.xblocks.back().clear();
  for (const Letter& l : last) {
    if (l == xb)
      ++p;
    else
      collapsed.xblocks.back().push_back(l);
  }
  collapsed.y = Letter::y(params.beta);
  collapsed.k = p;
  if (p > 0) {
    const RWord collapsed_word = shape_lhs(collapsed);
    acc.add_term(collapsed_word, Rational(p));
    acc.add_term(collapsed_word, Rational(-p));
  }

  Reducer red(h);
  return red.normal_form(acc).is_zero();
}

}  // namespace prerb
