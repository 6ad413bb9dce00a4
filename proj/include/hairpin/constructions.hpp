#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hairpin/analysis.hpp"
#include "hairpin/error.hpp"
#include "hairpin/hc.hpp"
#include "hairpin/nfa.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

/// A word that one hairpin completion step can add next to the current
/// word, with the least current length at which that step is legal.
struct Atom {
  Word word;
  std::size_t index;  // i of u_i (right atoms) or j of v_j (left atoms)
  std::size_t gate;
};

struct ExtensionSystem {
  PrimerAnalysis analysis;
  std::vector<Atom> left_atoms;   // v_2..v_n
  std::vector<Atom> right_atoms;  // ū_2..ū_m

  /// Length beyond which every atom is enabled.
  std::size_t threshold() const {
    std::size_t t = analysis.word.size();
    for (const auto& a : left_atoms) t = std::max(t, a.gate);
    for (const auto& a : right_atoms) t = std::max(t, a.gate);
    return t;
  }
};

inline ExtensionSystem extension_system(const PrimerAnalysis& a) {
  ExtensionSystem sys{a, {}, {}};
  const std::size_t k = a.k();
  for (std::size_t j = 2; j <= a.n(); ++j) sys.left_atoms.push_back({a.v(j), j, a.v(j).size() + 2 * k});
  for (std::size_t i = 2; i <= a.m(); ++i) sys.right_atoms.push_back({complement(a.u(i)), i, a.u(i).size() + 2 * k});
  return sys;
}

namespace detail {

inline void require_non_crossing_anchored(const PrimerAnalysis& a) {
  if (!a.anchored())
    throw error(errc::not_anchored, "'" + a.word.str() + "' must start with α and end with ᾱ");
  if (!a.non_crossing) throw error(errc::not_non_crossing, "'" + a.word.str() + "' is crossing");
}

inline std::string shape(const PrimerAnalysis& a) {
  return "(" + std::to_string(a.m()) + "," + std::to_string(a.n()) + ")";
}

inline Nfa word_set(const AlphabetPtr& alphabet, const std::vector<Word>& words) {
  return literals(alphabet, std::span<const Word>(words));
}

inline std::vector<Word> complements(const std::vector<Word>& words) {
  std::vector<Word> out;
  for (const auto& w : words) out.push_back(complement(w));
  return out;
}

inline PrimerAnalysis mirrored(const PrimerAnalysis& a) { return analyze(complement(a.word), a.primer); }

}  // namespace detail

/// Sequences of atoms appended to a word of length `start_length`, each
/// atom only once the length reached so far meets its gate. The start word
/// itself is not spelled; every state is accepting, so λ is accepted.
inline Nfa gated_extension(const AlphabetPtr& alphabet, std::size_t start_length, const std::vector<Atom>& atoms) {
  std::size_t cap = start_length;
  for (const auto& a : atoms) cap = std::max(cap, a.gate);
  Nfa out(alphabet);
  std::map<std::size_t, State> at;
  std::vector<std::size_t> work;
  auto get = [&](std::size_t len) {
    len = std::min(len, cap);
    auto [it, fresh] = at.try_emplace(len, 0);
    if (fresh) {
      it->second = out.add_state();
      out.set_accepting(it->second);
      work.push_back(len);
    }
    return it->second;
  };
  out.set_initial(get(start_length));
  while (!work.empty()) {
    const std::size_t len = work.back();
    work.pop_back();
    for (const auto& a : atoms)
      if (a.gate <= len) out.add_path(get(len), a.word.letters(), get(len + a.word.size()));
  }
  return out;
}

namespace detail {

/// Words x with x·w₀ reachable by left steps only, w₀ not spelled.
inline Nfa left_extensions(const PrimerAnalysis& a) {
  const auto sys = extension_system(mirrored(a));
  return reverse_complement(gated_extension(a.word.alphabet_ptr(), a.word.size(), sys.right_atoms));
}

inline Nfa right_extensions(const PrimerAnalysis& a) {
  const auto sys = extension_system(a);
  return gated_extension(a.word.alphabet_ptr(), a.word.size(), sys.right_atoms);
}

}  // namespace detail

inline Nfa build_one_sided(const PrimerAnalysis& a, Direction side) {
  detail::require_non_crossing_anchored(a);
  if (side == Direction::right) return concat(literal(a.word), detail::right_extensions(a)).trimmed();
  return concat(detail::left_extensions(a), literal(a.word)).trimmed();
}

/// (m,1): x_s⋯x_1·w₀·ȳ_1⋯ȳ_t where the right atoms respect their gates in
/// order and max ind(x) ≤ max ind(y).
inline Nfa build_m1(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.n() != 1) throw error(errc::wrong_class, "expected an (m,1)-word, got " + detail::shape(a));
  const auto sys = extension_system(a);
  const std::size_t cap = sys.threshold();
  Nfa out(a.word.alphabet_ptr());

  std::map<std::size_t, State> left;
  for (std::size_t mx = 0; mx <= a.m(); ++mx)
    if (mx != 1) left[mx] = out.add_state();
  out.set_initial(left[0]);
  for (auto [mx, s] : left)
    for (std::size_t i = 2; i <= a.m(); ++i) out.add_path(s, a.u(i).letters(), left[std::max(mx, i)]);

  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, State> right;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> work;
  auto get = [&](std::size_t len, std::size_t mx, std::size_t my) {
    auto key = std::tuple{std::min(len, cap), mx, my};
    auto [it, fresh] = right.try_emplace(key, 0);
    if (fresh) {
      it->second = out.add_state();
      out.set_accepting(it->second, my >= mx);
      work.push_back(key);
    }
    return it->second;
  };
  for (auto [mx, s] : left) out.add_path(s, a.word.letters(), get(a.word.size(), mx, 0));
  while (!work.empty()) {
    auto [len, mx, my] = work.back();
    work.pop_back();
    const State from = get(len, mx, my);
    for (const auto& atom : sys.right_atoms)
      if (atom.gate <= len) out.add_path(from, atom.word.letters(), get(len + atom.word.size(), mx, std::max(my, atom.index)));
  }
  return out.trimmed();
}

/// The displayed regular expression for the (m,1) case, transcribed as is:
/// only the first right atom is gated.
inline Nfa build_m1_literal(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.n() != 1) throw error(errc::wrong_class, "expected an (m,1)-word, got " + detail::shape(a));
  const auto& alphabet = a.word.alphabet_ptr();
  const std::size_t m = a.m();
  Nfa out = literal(a.word);
  if (m < 2) return out;

  auto ubars = [&](std::size_t lo, std::size_t hi) {
    std::vector<Word> ws;
    for (std::size_t i = lo; i <= hi; ++i) ws.push_back(complement(a.u(i)));
    return detail::word_set(alphabet, ws);
  };
  const std::size_t g = a.u(m).size() + 2 * a.k() <= a.word.size() ? m : m - 1;
  const Nfa any_star = star(ubars(2, m));
  for (std::size_t j = 2; j <= m; ++j) {
    std::vector<Word> xs(a.alpha_prefixes.begin() + 1, a.alpha_prefixes.begin() + static_cast<std::ptrdiff_t>(j));
    const Nfa left = star(detail::word_set(alphabet, xs));
    // Some y has index ≥ j: either y_1 itself or a later one.
    const Nfa ys = union_of(concat(ubars(std::max<std::size_t>(j, 2), g), any_star),
                            concat({ubars(2, g), any_star, ubars(j, m), any_star}));
    out = union_of(out, concat({left, literal(a.word), ys}));
  }
  return out.trimmed();
}

/// (1,n), through the complement (n,1) word.
inline Nfa build_1n(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.m() != 1) throw error(errc::wrong_class, "expected a (1,n)-word, got " + detail::shape(a));
  return reverse_complement(build_m1(detail::mirrored(a))).trimmed();
}

namespace detail {

inline void require_mirror(const PrimerAnalysis& a) {
  require_non_crossing_anchored(a);
  if (a.m() < 2 || a.u(a.m()) != a.v(a.n()))
    throw error(errc::wrong_class, "expected u_m = v_n with m ≥ 2 for '" + a.word.str() + "'");
}

}  // namespace detail

/// u_m = v_n: both sides extend independently.
inline Nfa build_mirror(const PrimerAnalysis& a) {
  detail::require_mirror(a);
  return concat({detail::left_extensions(a), literal(a.word), detail::right_extensions(a)}).trimmed();
}

/// {u_1..u_m}*·w₀·{ū_1..ū_m}*.
inline Nfa build_mirror_literal(const PrimerAnalysis& a) {
  detail::require_mirror(a);
  const auto& alphabet = a.word.alphabet_ptr();
  std::vector<Word> us(a.alpha_prefixes.begin() + 1, a.alpha_prefixes.end());
  return concat({star(detail::word_set(alphabet, us)), literal(a.word),
                 star(detail::word_set(alphabet, detail::complements(us)))})
      .trimmed();
}

/// Words reachable from v₂·w₀ for a (2,2)-word w₀:
/// v₂*(v₂w₀)v̄₂* ∪ (v₂⁺u₂)*v₂*(v₂w₀)v̄₂*(ū₂v̄₂⁺)⁺.
inline Nfa build_r22l(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.m() != 2 || a.n() != 2) throw error(errc::wrong_class, "expected a (2,2)-word, got " + detail::shape(a));
  const Word& u2 = a.u(2);
  const Word& v2 = a.v(2);
  const Nfa v = literal(v2);
  const Nfa vbar = literal(complement(v2));
  const Nfa core = concat({star(v), literal(v2 + a.word), star(vbar)});
  const Nfa left = star(concat(plus(v), literal(u2)));
  const Nfa right = plus(concat(literal(complement(u2)), plus(vbar)));
  return union_of(core, concat({left, core, right})).trimmed();
}

/// {w₀} ∪ R_22L ∪ R_22R, the last being the complement-side R_22L.
inline Nfa build_22(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.m() != 2 || a.n() != 2) throw error(errc::wrong_class, "expected a (2,2)-word, got " + detail::shape(a));
  const Nfa right = reverse_complement(build_r22l(detail::mirrored(a)));
  return union_of(union_of(literal(a.word), build_r22l(a)), right).trimmed();
}

/// The three regularity conditions for a (3,2)-word.
struct Conditions32 {
  bool u2_commutes_v2 = false;
  bool u2_commutes_u3 = false;
  bool u3_is_u2v2 = false;

  bool any() const { return u2_commutes_v2 || u2_commutes_u3 || u3_is_u2v2; }
  /// The first condition that holds, in order 1, 2, 3.
  std::optional<int> first() const {
    if (u2_commutes_v2) return 1;
    if (u2_commutes_u3) return 2;
    if (u3_is_u2v2) return 3;
    return std::nullopt;
  }
};

inline void require_32(const PrimerAnalysis& a) {
  detail::require_non_crossing_anchored(a);
  if (a.m() != 3 || a.n() != 2) throw error(errc::wrong_class, "expected a (3,2)-word, got " + detail::shape(a));
}

inline Conditions32 evaluate_conditions(const PrimerAnalysis& a) {
  require_32(a);
  const Word& u2 = a.u(2);
  const Word& u3 = a.u(3);
  const Word& v2 = a.v(2);
  return {commute(u2, v2), commute(u2, u3), u3 == u2 + v2};
}

inline Nfa build_32_regular(const PrimerAnalysis& a, int condition) {
  const auto conds = evaluate_conditions(a);
  const bool holds = condition == 1 ? conds.u2_commutes_v2 : condition == 2 ? conds.u2_commutes_u3
                                                         : condition == 3 ? conds.u3_is_u2v2
                                                                          : false;
  if (!holds)
    throw error(errc::condition_not_satisfied, "condition " + std::to_string(condition) + " does not hold for '" +
                                                   a.word.str() + "'");
  const Primer& p = a.primer;
  const Word& w0 = a.word;
  const Word& u2 = a.u(2);
  const Word& v2 = a.v(2);
  const Word v2bar = complement(v2);
  const Word u2bar = complement(u2);
  const Word head = w0.prefix(w0.size() - v2bar.size());  // w₀ = head·v̄₂

  if (condition == 1) return intersect(build_m1(analyze(head, p)), factor_marker(head + u2bar));

  // Words reachable from v₂·w₀: those of the (m,1)-word v₂·head containing v₂·w₀.
  const Nfa from_left = intersect(build_m1(analyze(v2 + head, p)), factor_marker(v2 + w0));
  Nfa out = union_of(literal(w0), from_left);
  if (condition == 2) {
    const Word tail = w0.suffix(w0.size() - u2.size());  // w₀ = u₂·tail
    return union_of(out, intersect(build_22(analyze(tail, p)), factor_marker(w0))).trimmed();
  }
  out = union_of(out, build_mirror(analyze(w0 + u2bar, p)));
  // w₀·v̄₂·ū₂ = u₂·v₂·w₂
  const Word longer = w0 + v2bar + u2bar;
  const Word w2 = longer.suffix(longer.size() - u2.size() - v2.size());
  return union_of(out, intersect(build_1n(analyze(w2, p)), factor_marker(longer))).trimmed();
}

/// u₃·u₂^{≥2}·v₂·w₀·ū₂^{≥2}·ū₃.
inline Nfa witness_language(const PrimerAnalysis& a) {
  require_32(a);
  const Nfa u2 = literal(a.u(2));
  const Nfa u2bar = literal(complement(a.u(2)));
  return concat({literal(a.u(3)), u2, plus(u2), literal(a.v(2) + a.word), u2bar, plus(u2bar),
                 literal(complement(a.u(3)))});
}

struct FamilyMember {
  std::size_t i;
  Word word;
};

struct WitnessReport {
  Word instance;
  Conditions32 conditions;
  std::size_t bound = 0;
  std::size_t i_max = 0;
  std::vector<FamilyMember> family;   // members of the expected shape, ascending i
  std::vector<Word> extraneous;       // closure ∩ R words outside the family
  std::vector<std::size_t> missing;   // exponents in [2, i_max] absent from the closure

  bool exact() const { return extraneous.empty() && missing.empty(); }
};

/// u₃·u₂^i·v₂·w₀·ū₂^i·ū₃.
inline Word family_word(const PrimerAnalysis& a, std::size_t i) {
  const Word u2 = a.u(2);
  return a.u(3) + power(u2, i) + a.v(2) + a.word + power(complement(u2), i) + complement(a.u(3));
}

/// Filters the bounded closure through the witness language. With i_max = 0
/// the largest exponent whose family word fits the bound is used.
inline WitnessReport witness_family(const PrimerAnalysis& a, std::size_t i_max, std::size_t bound) {
  const auto conds = evaluate_conditions(a);
  if (conds.any()) throw error(errc::condition_violated, "a regularity condition holds for '" + a.word.str() + "'");
  WitnessReport report{a.word, conds, bound, i_max, {}, {}, {}};
  if (report.i_max == 0)
    for (std::size_t i = 2; family_word(a, i).size() <= bound; ++i) report.i_max = i;
  const Nfa r = witness_language(a);
  const auto closure_set = closure(a.word, a.primer, bound);
  std::map<Word, std::size_t> expected;
  for (std::size_t i = 2; i <= report.i_max; ++i) expected.emplace(family_word(a, i), i);
  std::vector<bool> seen(report.i_max + 1, false);
  for (const auto& w : closure_set.members) {
    if (!r.accepts(w)) continue;
    auto it = expected.find(w);
    if (it == expected.end()) {
      report.extraneous.push_back(w);
    } else {
      seen[it->second] = true;
      report.family.push_back({it->second, w});
    }
  }
  std::sort(report.family.begin(), report.family.end(), [](const auto& x, const auto& y) { return x.i < y.i; });
  for (std::size_t i = 2; i <= report.i_max; ++i)
    if (!seen[i]) report.missing.push_back(i);
  return report;
}

}  // namespace hairpin
