#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hairpin/error.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

/// Which list of a PrimerAnalysis an atom belongs to: the α-prefixes u_i or
/// the complements v_j of the ᾱ-suffixes.
enum class AtomSide { prefix, suffix };

/// The α-prefix / ᾱ-suffix structure of a word with respect to a primer.
///
/// Lists are sorted by strictly increasing length, so index i (0-based) in
/// the vectors is u_{i+1} in the usual 1-based notation.
struct PrimerAnalysis {
  Word word;
  Primer primer;
  std::vector<Word> alpha_prefixes;   // u_1..u_m
  std::vector<Word> cbar_suffixes;    // v̄_1..v̄_n
  std::vector<Word> v_words;          // v_j = complement(v̄_j)
  std::vector<std::size_t> alpha_positions;  // ascending start positions of α
  std::vector<std::size_t> cbar_positions;   // ascending start positions of ᾱ
  bool non_crossing = true;
  bool starts_with_alpha = false;
  bool ends_with_cbar_alpha = false;

  std::size_t m() const noexcept { return alpha_prefixes.size(); }
  std::size_t n() const noexcept { return cbar_suffixes.size(); }
  std::size_t k() const noexcept { return primer.k(); }
  bool anchored() const noexcept { return starts_with_alpha && ends_with_cbar_alpha; }

  /// 1-based accessors matching the u_i / v_j notation.
  const Word& u(std::size_t i) const { return alpha_prefixes.at(i - 1); }
  const Word& v(std::size_t j) const { return v_words.at(j - 1); }

  const std::vector<Word>& list(AtomSide side) const { return side == AtomSide::prefix ? alpha_prefixes : v_words; }
};

inline PrimerAnalysis analyze(const Word& w, const Primer& primer) {
  require_same_alphabet(w, primer);
  const std::size_t k = primer.k();
  PrimerAnalysis a{w, primer, {}, {}, {}, {}, {}};
  a.alpha_positions = find_occurrences(primer.alpha(), w);
  a.cbar_positions = find_occurrences(primer.bar(), w);
  for (std::size_t p : a.alpha_positions) a.alpha_prefixes.push_back(w.prefix(p));
  // Longer ᾱ-suffixes start further left.
  for (auto it = a.cbar_positions.rbegin(); it != a.cbar_positions.rend(); ++it) {
    a.cbar_suffixes.push_back(w.substr(*it + k));
    a.v_words.push_back(complement(a.cbar_suffixes.back()));
  }
  a.starts_with_alpha = !a.alpha_positions.empty() && a.alpha_positions.front() == 0;
  a.ends_with_cbar_alpha = !a.cbar_positions.empty() && a.cbar_positions.back() + k == w.size();
  if (primer.pseudo_palindromic()) {
    a.non_crossing = a.m() <= 1;
  } else if (!a.alpha_positions.empty() && !a.cbar_positions.empty()) {
    // The rightmost α starts before the leftmost ᾱ; the two may overlap.
    a.non_crossing = a.alpha_positions.back() < a.cbar_positions.front();
  }
  return a;
}

/// 1-based index of x in the u-list (prefix side) or the v-list (suffix side).
inline std::size_t ind(const Word& x, const PrimerAnalysis& a, AtomSide side) {
  const auto& list = a.list(side);
  auto it = std::find(list.begin(), list.end(), x);
  if (it == list.end())
    throw error(errc::not_a_member, "'" + x.str() + "' is not in the " +
                                        (side == AtomSide::prefix ? "alpha-prefix" : "v") + " list");
  return static_cast<std::size_t>(it - list.begin()) + 1;
}

struct TaggedAtom {
  Word word;
  AtomSide side;
};

/// Result of splitting u as x_1⋯x_i·z with z strictly shorter than x_{i+1}.
///
/// When u equals the whole product x_1⋯x_s there is no next atom: i = s,
/// z = λ and `next` is empty.
struct PrefixDecomposition {
  std::size_t i = 0;
  Word z;
  std::optional<AtomSide> next;           // side of x_{i+1}
  std::size_t next_index = 0;             // ind(x_{i+1}) on that side
  std::optional<std::size_t> z_index;     // ind(z) on the same side, if z is a member

  /// z ∈ {u_1..u_{ind(x_{i+1})-1}} (or the v-list analogue).
  bool z_in_shorter_atoms() const { return next && z_index && *z_index < next_index; }
};

inline PrefixDecomposition decompose_prefix(const Word& u, std::span<const TaggedAtom> xs, const PrimerAnalysis& a) {
  LetterString product;
  for (const auto& x : xs) {
    ind(x.word, a, x.side);  // membership
    product += x.word.letters();
  }
  const Word& alpha = a.primer.alpha();
  const LetterString u_alpha = u.letters() + alpha.letters();
  const LetterString x_alpha = product + alpha.letters();
  if (u_alpha.size() > x_alpha.size() || x_alpha.compare(0, u_alpha.size(), u_alpha) != 0)
    throw error(errc::precondition_violated, "u·α is not a prefix of x_1⋯x_s·α");

  std::size_t consumed = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::size_t len = xs[i].word.size();
    if (consumed <= u.size() && u.size() < consumed + len) {
      PrefixDecomposition d{i, u.substr(consumed), xs[i].side, ind(xs[i].word, a, xs[i].side), std::nullopt};
      const auto& list = a.list(xs[i].side);
      if (auto it = std::find(list.begin(), list.end(), d.z); it != list.end())
        d.z_index = static_cast<std::size_t>(it - list.begin()) + 1;
      return d;
    }
    consumed += len;
  }
  return PrefixDecomposition{xs.size(), Word(u.alphabet_ptr()), std::nullopt, 0, std::nullopt};
}

/// Untagged atoms are looked up in the u-list first, then in the v-list.
inline PrefixDecomposition decompose_prefix(const Word& u, std::span<const Word> xs, const PrimerAnalysis& a) {
  std::vector<TaggedAtom> tagged;
  for (const auto& x : xs) {
    const auto& us = a.alpha_prefixes;
    const auto& vs = a.v_words;
    if (std::find(us.begin(), us.end(), x) != us.end())
      tagged.push_back({x, AtomSide::prefix});
    else if (std::find(vs.begin(), vs.end(), x) != vs.end())
      tagged.push_back({x, AtomSide::suffix});
    else
      throw error(errc::precondition_violated, "'" + x.str() + "' is neither an α-prefix nor a complemented ᾱ-suffix");
  }
  return decompose_prefix(u, std::span<const TaggedAtom>(tagged), a);
}

/// Factors [start, end) that begin with α, end with ᾱ and contain no proper
/// factor with that property. Ascending by start.
inline std::vector<std::pair<std::size_t, std::size_t>> minimal_factors(const Word& w, const Primer& primer) {
  require_same_alphabet(w, primer);
  const std::size_t k = primer.k();
  const auto starts = find_occurrences(primer.alpha(), w);
  const auto ends = find_occurrences(primer.bar(), w);
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t s : starts)
    for (std::size_t e : ends)
      if (e >= s) spans.emplace_back(s, e + k);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [s, e] : spans) {
    bool minimal = std::none_of(spans.begin(), spans.end(), [&](const auto& o) {
      return o != std::pair{s, e} && o.first >= s && o.second <= e;
    });
    if (minimal) out.emplace_back(s, e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hairpin
