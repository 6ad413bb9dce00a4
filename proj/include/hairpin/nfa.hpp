#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hairpin/error.hpp"
#include "hairpin/hc.hpp"
#include "hairpin/word.hpp"

namespace hairpin {

using State = std::uint32_t;

/// Label of an ε-transition.
inline constexpr Letter epsilon = std::numeric_limits<Letter>::max();

struct Edge {
  Letter label;
  State to;
};

/// An ε-NFA over an involution alphabet. Several initial states are allowed.
class Nfa {
 public:
  explicit Nfa(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const InvolutionAlphabet& alphabet() const noexcept { return *alphabet_; }

  std::size_t size() const noexcept { return edges_.size(); }
  std::size_t transition_count() const noexcept {
    std::size_t n = 0;
    for (const auto& e : edges_) n += e.size();
    return n;
  }

  State add_state() {
    edges_.emplace_back();
    initial_.push_back(false);
    accepting_.push_back(false);
    return static_cast<State>(edges_.size() - 1);
  }

  void add_transition(State from, Letter label, State to) {
    if (from >= size() || to >= size()) throw error(errc::precondition_violated, "transition references an undeclared state");
    if (label != epsilon && label >= alphabet_->size()) throw error(errc::unknown_letter, "transition label outside the alphabet");
    edges_[from].push_back({label, to});
  }

  void set_initial(State s, bool on = true) { initial_.at(s) = on; }
  void set_accepting(State s, bool on = true) { accepting_.at(s) = on; }
  bool is_initial(State s) const { return initial_.at(s); }
  bool is_accepting(State s) const { return accepting_.at(s); }
  const std::vector<Edge>& edges(State s) const { return edges_.at(s); }

  std::vector<State> initial_states() const { return flagged(initial_); }
  std::vector<State> accepting_states() const { return flagged(accepting_); }

  /// Adds a chain spelling `letters` from `from`; returns the end state.
  State add_path(State from, const LetterString& letters) {
    State cur = from;
    for (Letter a : letters) {
      State next = add_state();
      add_transition(cur, a, next);
      cur = next;
    }
    return cur;
  }

  /// Chain spelling `letters` from `from` to an existing `to`.
  void add_path(State from, const LetterString& letters, State to) {
    if (letters.empty()) {
      add_transition(from, epsilon, to);
      return;
    }
    State end = add_path(from, letters.substr(0, letters.size() - 1));
    add_transition(end, letters.back(), to);
  }

  /// Copies `other` in; returns the offset of its states.
  State embed(const Nfa& other) {
    require_same(other);
    const State offset = static_cast<State>(size());
    for (State s = 0; s < other.size(); ++s) add_state();
    for (State s = 0; s < other.size(); ++s)
      for (const auto& e : other.edges_[s]) edges_[offset + s].push_back({e.label, offset + e.to});
    return offset;
  }

  void require_same(const Nfa& other) const {
    if (!alphabet_->same_as(*other.alphabet_)) throw error(errc::alphabet_mismatch, "automata over different alphabets");
  }

  std::vector<State> epsilon_closure(std::vector<State> states) const {
    std::vector<bool> in(size(), false);
    for (State s : states) in[s] = true;
    for (std::size_t i = 0; i < states.size(); ++i)
      for (const auto& e : edges_[states[i]])
        if (e.label == epsilon && !in[e.to]) {
          in[e.to] = true;
          states.push_back(e.to);
        }
    std::sort(states.begin(), states.end());
    return states;
  }

  /// Letter successors of a closed state set, each already ε-closed.
  std::map<Letter, std::vector<State>> successors(const std::vector<State>& states) const {
    std::map<Letter, std::vector<State>> out;
    for (State s : states)
      for (const auto& e : edges_[s])
        if (e.label != epsilon) out[e.label].push_back(e.to);
    for (auto& [a, next] : out) {
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      next = epsilon_closure(std::move(next));
    }
    return out;
  }

  bool accepts(const LetterString& w) const {
    auto current = epsilon_closure(initial_states());
    for (Letter a : w) {
      std::vector<State> next;
      for (State s : current)
        for (const auto& e : edges_[s])
          if (e.label == a) next.push_back(e.to);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      current = epsilon_closure(std::move(next));
      if (current.empty()) return false;
    }
    return std::any_of(current.begin(), current.end(), [&](State s) { return accepting_[s]; });
  }

  bool accepts(const Word& w) const { return accepts(w.letters()); }

  /// Fewest letters from each state to an accepting state (max() if none).
  std::vector<std::size_t> distance_to_accept() const {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<Edge>> reverse(size());
    for (State s = 0; s < size(); ++s)
      for (const auto& e : edges_[s]) reverse[e.to].push_back({e.label, s});
    std::vector<std::size_t> dist(size(), inf);
    std::deque<State> queue;
    for (State s = 0; s < size(); ++s)
      if (accepting_[s]) {
        dist[s] = 0;
        queue.push_back(s);
      }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop_front();
      for (const auto& e : reverse[s]) {
        const std::size_t w = e.label == epsilon ? 0 : 1;
        if (dist[s] + w < dist[e.to]) {
          dist[e.to] = dist[s] + w;
          if (w == 0) queue.push_front(e.to);
          else queue.push_back(e.to);
        }
      }
    }
    return dist;
  }

  /// Exactly the accepted words of length ≤ bound.
  WordSet enumerate(std::size_t bound) const {
    WordSet out;
    const auto dist = distance_to_accept();
    auto reach = [&](const std::vector<State>& states) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (State s : states) best = std::min(best, dist[s]);
      return best;
    };
    auto start = epsilon_closure(initial_states());
    if (start.empty() || reach(start) > bound) return out;
    LetterString prefix;
    // Subset construction on the fly: every word is visited once.
    auto visit = [&](auto&& self, const std::vector<State>& states) -> void {
      if (std::any_of(states.begin(), states.end(), [&](State s) { return accepting_[s]; }))
        out.insert(Word(alphabet_, prefix));
      if (prefix.size() == bound) return;
      for (const auto& [a, next] : successors(states)) {
        const std::size_t r = reach(next);
        if (r == std::numeric_limits<std::size_t>::max() || prefix.size() + 1 + r > bound) continue;
        prefix.push_back(a);
        self(self, next);
        prefix.pop_back();
      }
    };
    visit(visit, start);
    return out;
  }

  /// Drops states that are unreachable or cannot reach acceptance.
  Nfa trimmed() const {
    std::vector<bool> forward(size(), false);
    std::vector<State> stack = initial_states();
    for (State s : stack) forward[s] = true;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (const auto& e : edges_[s])
        if (!forward[e.to]) {
          forward[e.to] = true;
          stack.push_back(e.to);
        }
    }
    const auto dist = distance_to_accept();
    std::vector<State> remap(size(), std::numeric_limits<State>::max());
    Nfa out(alphabet_);
    for (State s = 0; s < size(); ++s)
      if (forward[s] && dist[s] != std::numeric_limits<std::size_t>::max()) {
        remap[s] = out.add_state();
        out.initial_[remap[s]] = initial_[s];
        out.accepting_[remap[s]] = accepting_[s];
      }
    for (State s = 0; s < size(); ++s) {
      if (remap[s] == std::numeric_limits<State>::max()) continue;
      for (const auto& e : edges_[s])
        if (remap[e.to] != std::numeric_limits<State>::max()) out.edges_[remap[s]].push_back({e.label, remap[e.to]});
    }
    return out;
  }

 private:
  static std::vector<State> flagged(const std::vector<bool>& flags) {
    std::vector<State> out;
    for (State s = 0; s < flags.size(); ++s)
      if (flags[s]) out.push_back(s);
    return out;
  }

  AlphabetPtr alphabet_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> initial_;
  std::vector<bool> accepting_;
};

// Regular operations ------------------------------------------------------

inline Nfa empty_language(const AlphabetPtr& alphabet) { return Nfa(alphabet); }

inline Nfa literal(const Word& w) {
  Nfa out(w.alphabet_ptr());
  State start = out.add_state();
  out.set_initial(start);
  out.set_accepting(out.add_path(start, w.letters()));
  return out;
}

/// Union of single-word languages.
inline Nfa literals(const AlphabetPtr& alphabet, std::span<const Word> words) {
  Nfa out(alphabet);
  State start = out.add_state();
  out.set_initial(start);
  State accept = out.add_state();
  out.set_accepting(accept);
  for (const auto& w : words) {
    if (!w.alphabet().same_as(*alphabet)) throw error(errc::alphabet_mismatch, "literal over a different alphabet");
    out.add_path(start, w.letters(), accept);
  }
  return out;
}

inline Nfa union_of(const Nfa& a, const Nfa& b) {
  Nfa out(a.alphabet_ptr());
  for (const Nfa* part : {&a, &b}) {
    State off = out.embed(*part);
    for (State s = 0; s < part->size(); ++s) {
      out.set_initial(off + s, part->is_initial(s));
      out.set_accepting(off + s, part->is_accepting(s));
    }
  }
  return out;
}

inline Nfa concat(const Nfa& a, const Nfa& b) {
  Nfa out(a.alphabet_ptr());
  State oa = out.embed(a);
  State ob = out.embed(b);
  for (State s : a.initial_states()) out.set_initial(oa + s);
  for (State s : b.accepting_states()) out.set_accepting(ob + s);
  for (State f : a.accepting_states())
    for (State s : b.initial_states()) out.add_transition(oa + f, epsilon, ob + s);
  return out;
}

inline Nfa concat(std::initializer_list<Nfa> parts) {
  auto it = parts.begin();
  Nfa out = *it;
  for (++it; it != parts.end(); ++it) out = concat(out, *it);
  return out;
}

inline Nfa star(const Nfa& a) {
  Nfa out(a.alphabet_ptr());
  State hub = out.add_state();
  out.set_initial(hub);
  out.set_accepting(hub);
  State off = out.embed(a);
  for (State s : a.initial_states()) out.add_transition(hub, epsilon, off + s);
  for (State f : a.accepting_states()) out.add_transition(off + f, epsilon, hub);
  return out;
}

inline Nfa plus(const Nfa& a) { return concat(a, star(a)); }

/// Product construction; ε-moves of either side interleave.
inline Nfa intersect(const Nfa& a, const Nfa& b) {
  a.require_same(b);
  Nfa out(a.alphabet_ptr());
  std::map<std::pair<State, State>, State> index;
  std::vector<std::pair<State, State>> work;
  auto get = [&](State p, State q) {
    auto [it, fresh] = index.try_emplace({p, q}, 0);
    if (fresh) {
      it->second = out.add_state();
      out.set_accepting(it->second, a.is_accepting(p) && b.is_accepting(q));
      work.emplace_back(p, q);
    }
    return it->second;
  };
  for (State p : a.initial_states())
    for (State q : b.initial_states()) out.set_initial(get(p, q));
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    const State from = index.at({p, q});
    for (const auto& ea : a.edges(p)) {
      if (ea.label == epsilon) {
        out.add_transition(from, epsilon, get(ea.to, q));
        continue;
      }
      for (const auto& eb : b.edges(q))
        if (eb.label == ea.label) out.add_transition(from, ea.label, get(ea.to, eb.to));
    }
    for (const auto& eb : b.edges(q))
      if (eb.label == epsilon) out.add_transition(from, epsilon, get(p, eb.to));
  }
  return out.trimmed();
}

/// Accepts exactly the complements of the words accepted by `a`.
inline Nfa reverse_complement(const Nfa& a) {
  Nfa out(a.alphabet_ptr());
  for (State s = 0; s < a.size(); ++s) {
    out.add_state();
  }
  for (State s = 0; s < a.size(); ++s) {
    out.set_initial(s, a.is_accepting(s));
    out.set_accepting(s, a.is_initial(s));
    for (const auto& e : a.edges(s))
      out.add_transition(e.to, e.label == epsilon ? epsilon : a.alphabet().bar(e.label), s);
  }
  return out;
}

/// Σ*·x·Σ*.
inline Nfa factor_marker(const Word& x) {
  Nfa out(x.alphabet_ptr());
  State start = out.add_state();
  out.set_initial(start);
  State end = out.add_path(start, x.letters());
  out.set_accepting(end);
  for (Letter a = 0; a < x.alphabet().size(); ++a) {
    out.add_transition(start, a, start);
    out.add_transition(end, a, end);
  }
  return out;
}

inline bool accepts(const Nfa& a, const Word& w) { return a.accepts(w); }
inline WordSet enumerate(const Nfa& a, std::size_t bound) { return a.enumerate(bound); }

struct Equivalence {
  bool equal = true;
  std::optional<Word> counterexample;  // shortlex-least word in the symmetric difference
  bool counterexample_accepted = false;  // true: accepted but not a member
  std::size_t accepted_count = 0;
  std::size_t member_count = 0;
};

inline Equivalence equiv_up_to(const Nfa& a, const WordSet& members, std::size_t bound) {
  for (const auto& w : members)
    if (w.size() > bound) throw error(errc::precondition_violated, "member '" + w.str() + "' exceeds the bound");
  const WordSet accepted = a.enumerate(bound);
  Equivalence result;
  result.accepted_count = accepted.size();
  result.member_count = members.size();
  auto extra = std::find_if(accepted.begin(), accepted.end(), [&](const Word& w) { return !members.count(w); });
  auto missing = std::find_if(members.begin(), members.end(), [&](const Word& w) { return !accepted.count(w); });
  if (extra == accepted.end() && missing == members.end()) return result;
  result.equal = false;
  if (missing == members.end() || (extra != accepted.end() && *extra < *missing)) {
    result.counterexample = *extra;
    result.counterexample_accepted = true;
  } else {
    result.counterexample = *missing;
  }
  return result;
}

}  // namespace hairpin
