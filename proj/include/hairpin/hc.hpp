#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "hairpin/error.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

enum class Direction { left, right };
enum class Sides { left, right, both };

using WordSet = std::set<Word>;

/// One hairpin completion step.
///
/// Right: parent = u·α·v·ᾱ, appended = u, child = parent·ū.
/// Left:  parent = α·v'·ᾱ·ū', appended = u', child = u'·parent.
struct HcStep {
  Direction direction;
  Word parent;
  Word child;
  Word appended;
  std::size_t anchor;  // start of the α (right) or ᾱ (left) occurrence used
};

inline std::vector<HcStep> rhc_step(const Word& w, const Primer& primer) {
  require_same_alphabet(w, primer);
  std::vector<HcStep> out;
  const std::size_t k = primer.k();
  if (w.size() < 2 * k + 1 || !is_suffix(primer.bar(), w)) return out;
  for (std::size_t p : find_occurrences(primer.alpha(), w)) {
    if (p == 0) continue;
    if (p + 2 * k > w.size()) break;
    Word u = w.prefix(p);
    out.push_back({Direction::right, w, w + complement(u), std::move(u), p});
  }
  return out;
}

inline std::vector<HcStep> lhc_step(const Word& w, const Primer& primer) {
  require_same_alphabet(w, primer);
  std::vector<HcStep> out;
  const std::size_t k = primer.k();
  if (w.size() < 2 * k + 1 || !is_prefix(primer.alpha(), w)) return out;
  for (std::size_t q : find_occurrences(primer.bar(), w)) {
    if (q < k || q + k >= w.size()) continue;
    Word u = complement(w.substr(q + k));
    out.push_back({Direction::left, w, u + w, std::move(u), q});
  }
  return out;
}

/// Left steps first, each group ordered by anchor.
inline std::vector<HcStep> hc_step(const Word& w, const Primer& primer, Sides sides = Sides::both) {
  std::vector<HcStep> out;
  if (sides != Sides::right) out = lhc_step(w, primer);
  if (sides != Sides::left) {
    auto r = rhc_step(w, primer);
    out.insert(out.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return out;
}

struct ClosureResult {
  Word seed;
  Primer primer;
  std::size_t bound;
  Sides sides;
  WordSet members;
  std::map<Word, HcStep> parent_links;  // child -> first BFS derivation step

  bool contains(const Word& w) const { return members.count(w) > 0; }
};

/// Every word reachable from `seed` whose length is at most `bound`.
///
/// Each step strictly lengthens the word, so pruning successors above the
/// bound loses nothing. Parent links keep the first discovery in BFS order.
inline ClosureResult closure(const Word& seed, const Primer& primer, std::size_t bound, Sides sides = Sides::both) {
  require_same_alphabet(seed, primer);
  if (bound < seed.size())
    throw error(errc::bound_too_small, "bound " + std::to_string(bound) + " is below the seed length " +
                                           std::to_string(seed.size()));
  ClosureResult result{seed, primer, bound, sides, {}, {}};
  std::unordered_set<LetterString> seen{seed.letters()};
  std::vector<Word> frontier{seed};
  result.members.insert(seed);
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (auto& step : hc_step(w, primer, sides)) {
        if (step.child.size() > bound) continue;
        if (!seen.insert(step.child.letters()).second) continue;
        next.push_back(step.child);
        result.members.insert(step.child);
        result.parent_links.emplace(step.child, std::move(step));
      }
    }
    frontier = std::move(next);
  }
  return result;
}

/// A derivation seed → … → target, read off the parent links.
inline std::vector<HcStep> trace(const ClosureResult& result, const Word& target) {
  if (!result.contains(target)) throw error(errc::not_in_closure, "'" + target.str() + "' is not in the closure");
  std::vector<HcStep> path;
  Word current = target;
  while (current != result.seed) {
    const auto& step = result.parent_links.at(current);
    path.push_back(step);
    current = step.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

inline WordSet complement_all(const WordSet& words) {
  WordSet out;
  for (const auto& w : words) out.insert(complement(w));
  return out;
}

}  // namespace hairpin
