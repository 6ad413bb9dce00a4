#pragma once

// Brute-force reference implementations. They work on raw letter strings and
// follow the definitions literally (factorization scans, fixpoint iteration)
// so that they share no code paths with the library under test.

#include <cstddef>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hairpin/hairpin.hpp"

namespace oracle {

using hairpin::AlphabetPtr;
using hairpin::Letter;
using hairpin::LetterString;
using Set = std::set<LetterString>;

inline LetterString bar(const LetterString& w, const hairpin::InvolutionAlphabet& sigma) {
  LetterString out;
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(sigma.bar(w[i]));
  return out;
}

inline bool occurs_at(const LetterString& w, std::size_t pos, const LetterString& p) {
  if (pos + p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (w[pos + i] != p[i]) return false;
  return true;
}

inline std::vector<std::size_t> positions(const LetterString& w, const LetterString& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + p.size() <= w.size(); ++i)
    if (occurs_at(w, i, p)) out.push_back(i);
  return out;
}

inline std::size_t count(const LetterString& w, const LetterString& p) { return positions(w, p).size(); }

/// u with w = u·α·x, shortest first.
inline std::vector<LetterString> alpha_prefixes(const LetterString& w, const LetterString& alpha) {
  std::vector<LetterString> out;
  for (std::size_t i = 0; i + alpha.size() <= w.size(); ++i)
    if (occurs_at(w, i, alpha)) out.push_back(w.substr(0, i));
  return out;
}

/// v̄ with w = y·ᾱ·v̄, shortest first.
inline std::vector<LetterString> cbar_suffixes(const LetterString& w, const LetterString& cbar) {
  std::vector<LetterString> out;
  for (std::size_t i = w.size() + 1; i-- > 0;)
    if (i >= cbar.size() && occurs_at(w, i - cbar.size(), cbar)) out.push_back(w.substr(i));
  return out;
}

/// Every split w = u·α·v·ᾱ with u ≠ λ gives w·ū.
inline Set rhc(const LetterString& w, const LetterString& alpha, const hairpin::InvolutionAlphabet& sigma) {
  Set out;
  const LetterString cbar = bar(alpha, sigma);
  const std::size_t k = alpha.size();
  for (std::size_t u = 1; u + 2 * k <= w.size(); ++u)
    if (occurs_at(w, u, alpha) && occurs_at(w, w.size() - k, cbar)) out.insert(w + bar(w.substr(0, u), sigma));
  return out;
}

/// Every split w = α·v·ᾱ·ū with u ≠ λ gives u·w.
inline Set lhc(const LetterString& w, const LetterString& alpha, const hairpin::InvolutionAlphabet& sigma) {
  Set out;
  const LetterString cbar = bar(alpha, sigma);
  const std::size_t k = alpha.size();
  for (std::size_t tail = 1; tail + 2 * k <= w.size(); ++tail)
    if (occurs_at(w, 0, alpha) && occurs_at(w, w.size() - tail - k, cbar))
      out.insert(bar(w.substr(w.size() - tail), sigma) + w);
  return out;
}

enum class Side { left, right, both };

/// Least fixpoint of the step relation restricted to words of length ≤ bound.
inline Set closure(const LetterString& seed, const LetterString& alpha, const hairpin::InvolutionAlphabet& sigma,
                   std::size_t bound, Side side = Side::both) {
  Set all{seed};
  bool grew = true;
  while (grew) {
    grew = false;
    Set snapshot = all;
    for (const auto& w : snapshot) {
      Set next;
      if (side != Side::left) next.merge(rhc(w, alpha, sigma));
      if (side != Side::right) next.merge(lhc(w, alpha, sigma));
      for (const auto& c : next)
        if (c.size() <= bound && all.insert(c).second) grew = true;
    }
  }
  return all;
}

/// Rightmost α starts before leftmost ᾱ; α = ᾱ counts as crossing once it occurs twice.
inline bool non_crossing(const LetterString& w, const LetterString& alpha, const hairpin::InvolutionAlphabet& sigma) {
  const LetterString cbar = bar(alpha, sigma);
  const auto a = positions(w, alpha);
  const auto c = positions(w, cbar);
  if (alpha == cbar) return a.size() <= 1;
  if (a.empty() || c.empty()) return true;
  return a.back() < c.front();
}

/// Spans [i, j) of factors in αΣ* ∩ Σ*ᾱ containing no other such factor.
inline std::vector<std::pair<std::size_t, std::size_t>> minimal_factors(const LetterString& w, const LetterString& alpha,
                                                                        const hairpin::InvolutionAlphabet& sigma) {
  const LetterString cbar = bar(alpha, sigma);
  auto in_language = [&](std::size_t i, std::size_t j) {
    return j - i >= alpha.size() && occurs_at(w, i, alpha) && occurs_at(w, j - cbar.size(), cbar);
  };
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (!in_language(i, j)) continue;
      bool minimal = true;
      for (std::size_t a = i; a < j && minimal; ++a)
        for (std::size_t b = a + 1; b <= j && minimal; ++b)
          if ((a != i || b != j) && in_language(a, b)) minimal = false;
      if (minimal) out.emplace_back(i, j);
    }
  return out;
}

/// Shortest r with w = r^e.
inline LetterString root(const LetterString& w) {
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (w.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

inline LetterString repeat(const LetterString& w, std::size_t e) {
  LetterString out;
  for (std::size_t i = 0; i < e; ++i) out += w;
  return out;
}

inline hairpin::WordSet to_words(const AlphabetPtr& sigma, const Set& s) {
  hairpin::WordSet out;
  for (const auto& w : s) out.insert(hairpin::Word(sigma, w));
  return out;
}

inline Set letters_of(const hairpin::WordSet& s) {
  Set out;
  for (const auto& w : s) out.insert(w.letters());
  return out;
}

// Random inputs -----------------------------------------------------------

inline LetterString random_letters(std::mt19937& rng, std::size_t alphabet_size, std::size_t len) {
  LetterString out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Letter>(rng() % alphabet_size));
  return out;
}

struct Seed {
  LetterString word;
  LetterString alpha;
};

/// α + middle + ᾱ, or α and ᾱ glued along a common overlap, drawn until the
/// result is non-crossing with α ≠ ᾱ and |w| ≤ max_len.
inline Seed random_non_crossing_seed(std::mt19937& rng, const hairpin::InvolutionAlphabet& sigma,
                                     std::size_t alphabet_size, std::size_t max_k, std::size_t max_len) {
  for (;;) {
    const std::size_t k = 1 + rng() % max_k;
    const LetterString alpha = random_letters(rng, alphabet_size, k);
    const LetterString cbar = bar(alpha, sigma);
    if (alpha == cbar || max_len < k + 1) continue;
    LetterString w;
    if (rng() % 6 == 0) {
      const std::size_t overlap = 1 + rng() % k;
      if (overlap >= k || alpha.substr(k - overlap) != cbar.substr(0, overlap)) continue;
      w = alpha + cbar.substr(overlap);
    } else {
      if (2 * k > max_len) continue;
      w = alpha + random_letters(rng, alphabet_size, rng() % (max_len - 2 * k + 1)) + cbar;
    }
    if (w.size() <= max_len && non_crossing(w, alpha, sigma)) return {w, alpha};
  }
}

}  // namespace oracle
