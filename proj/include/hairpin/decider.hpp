#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hairpin/analysis.hpp"
#include "hairpin/constructions.hpp"
#include "hairpin/error.hpp"
#include "hairpin/hc.hpp"
#include "hairpin/nfa.hpp"

namespace hairpin {

enum class Outcome { regular, non_regular, unknown };

constexpr std::string_view to_string(Outcome o) noexcept {
  switch (o) {
    case Outcome::regular: return "Regular";
    case Outcome::non_regular: return "NonRegular";
    case Outcome::unknown: return "Unknown";
  }
  return "Unknown";
}

struct WordClass {
  std::size_t m = 0;
  std::size_t n = 0;
  bool non_crossing = true;
  bool anchored = false;
};

struct Verdict {
  WordClass word_class;
  Outcome outcome = Outcome::unknown;
  std::string justification;  // construction used, or why nothing applies
  bool mirrored = false;      // decided on complement(w₀); automaton mapped back
  std::optional<Nfa> automaton;
  std::optional<Conditions32> conditions;
  std::optional<Nfa> witness_language;
  std::optional<WitnessReport> witness;  // about complement(w₀) when mirrored
  std::optional<Equivalence> verification;
  std::size_t verify_bound = 0;
};

inline std::size_t default_bound(const Word& w0, const Primer& primer) { return w0.size() + 6 * primer.k() + 16; }

namespace detail {

inline Verdict unknown(Verdict v, std::string reason) {
  v.outcome = Outcome::unknown;
  v.justification = std::move(reason);
  return v;
}

inline Verdict regular(Verdict v, Nfa automaton, std::string how) {
  v.outcome = Outcome::regular;
  v.justification = std::move(how);
  v.automaton = std::move(automaton);
  return v;
}

}  // namespace detail

/// Dispatch by word class without checking the automaton against the
/// closure oracle.
inline Verdict construct(const Word& w0, const Primer& primer) {
  require_same_alphabet(w0, primer);
  const auto a = analyze(w0, primer);
  Verdict v;
  v.word_class = {a.m(), a.n(), a.non_crossing, a.anchored()};

  if (primer.pseudo_palindromic()) {
    if (a.m() <= 1) return detail::regular(std::move(v), literal(w0), "singleton: α = ᾱ occurs at most once");
    return detail::unknown(std::move(v), "crossing: α = ᾱ occurs more than once");
  }
  if (!a.anchored()) return detail::unknown(std::move(v), "w₀ does not start with α and end with ᾱ");
  if (!a.non_crossing) return detail::unknown(std::move(v), "crossing: an α starts after the leftmost ᾱ");

  if (a.m() == 1 && a.n() == 1) return detail::regular(std::move(v), literal(w0), "singleton: (1,1)-word");
  if (a.m() >= 2 && a.u(a.m()) == a.v(a.n()))
    return detail::regular(std::move(v), build_mirror(a), "mirror: u_m = v_n");
  if (a.n() == 1) return detail::regular(std::move(v), build_m1(a), "(m,1) construction");
  if (a.m() == 1) {
    v.mirrored = true;
    return detail::regular(std::move(v), build_1n(a), "(1,n) construction via the complement");
  }
  if (a.m() == 2 && a.n() == 2) return detail::regular(std::move(v), build_22(a), "(2,2) construction");

  if ((a.m() == 3 && a.n() == 2) || (a.m() == 2 && a.n() == 3)) {
    v.mirrored = a.m() == 2;
    const auto b = v.mirrored ? analyze(complement(w0), primer) : a;
    if (!is_primitive(b.u(2)) || !is_primitive(b.v(2)))
      return detail::unknown(std::move(v), "u₂ or v₂ is not primitive, so this is not a faithful (3,2)-word");
    const auto conds = evaluate_conditions(b);
    v.conditions = conds;
    if (auto c = conds.first()) {
      Nfa automaton = build_32_regular(b, *c);
      if (v.mirrored) automaton = reverse_complement(automaton).trimmed();
      return detail::regular(std::move(v), std::move(automaton), "(3,2) condition " + std::to_string(*c));
    }
    v.outcome = Outcome::non_regular;
    v.justification = "(3,2) with no regularity condition";
    v.witness_language = witness_language(b);
    v.witness = witness_family(b, 2, family_word(b, 2).size());
    return v;
  }
  return detail::unknown(std::move(v), "(" + std::to_string(a.m()) + "," + std::to_string(a.n()) +
                                           ")-word outside the decided classes");
}

/// construct(), with Regular verdicts checked against the bounded closure.
inline Verdict decide(const Word& w0, const Primer& primer, std::optional<std::size_t> verify_bound = std::nullopt) {
  Verdict v = construct(w0, primer);
  v.verify_bound = verify_bound.value_or(default_bound(w0, primer));
  if (v.verify_bound < w0.size())
    throw error(errc::bound_too_small, "verify bound " + std::to_string(v.verify_bound) + " is below |w₀|");
  if (v.outcome != Outcome::regular) return v;
  auto eq = equiv_up_to(*v.automaton, closure(w0, primer, v.verify_bound).members, v.verify_bound);
  if (!eq.equal)
    throw error(errc::verification_failed, v.justification + " disagrees with the closure of '" + w0.str() + "' on '" +
                                               eq.counterexample->str() + "'");
  v.verification = eq;
  return v;
}

}  // namespace hairpin
