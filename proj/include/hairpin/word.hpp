#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hairpin/alphabet.hpp"
#include "hairpin/error.hpp"

namespace hairpin {

/// An immutable finite word over an involution alphabet.
///
/// Equality is letter-sequence equality. The ordering is shortlex (length
/// first, then lexicographic by letter id), which is the output order used
/// everywhere.
class Word {
 public:
  Word(AlphabetPtr alphabet, LetterString letters) : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw error(errc::alphabet_mismatch, "word without alphabet");
    for (Letter a : letters_)
      if (a >= alphabet_->size()) throw error(errc::unknown_letter, "letter id out of range");
  }

  explicit Word(AlphabetPtr alphabet) : Word(std::move(alphabet), LetterString{}) {}

  static Word parse(AlphabetPtr alphabet, std::string_view text) {
    auto letters = alphabet->parse(text);
    return Word(std::move(alphabet), std::move(letters));
  }

  const InvolutionAlphabet& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  const LetterString& letters() const noexcept { return letters_; }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(alphabet_, letters_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len); }

  std::string str() const { return alphabet_->format(letters_); }

  bool same_alphabet(const Word& other) const { return alphabet_->same_as(*other.alphabet_); }

  friend Word operator+(const Word& x, const Word& y) {
    if (!x.same_alphabet(y)) throw error(errc::alphabet_mismatch, "concatenating words over different alphabets");
    return Word(x.alphabet_, x.letters_ + y.letters_);
  }

  friend bool operator==(const Word& x, const Word& y) noexcept { return x.letters_ == y.letters_; }

  friend std::strong_ordering operator<=>(const Word& x, const Word& y) noexcept {
    if (auto c = x.size() <=> y.size(); c != 0) return c;
    return x.letters_.compare(y.letters_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

 private:
  AlphabetPtr alphabet_;
  LetterString letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<LetterString>{}(w.letters()); }
};

inline LetterString complement(const LetterString& w, const InvolutionAlphabet& alphabet) {
  LetterString out(w.rbegin(), w.rend());
  for (auto& a : out) a = alphabet.bar(a);
  return out;
}

/// Reverse, then bar each letter.
inline Word complement(const Word& w) { return Word(w.alphabet_ptr(), complement(w.letters(), w.alphabet())); }

inline bool is_pseudo_palindrome(const Word& w) { return w == complement(w); }

inline Word power(const Word& w, std::size_t exponent) {
  LetterString out;
  out.reserve(w.size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out += w.letters();
  return Word(w.alphabet_ptr(), std::move(out));
}

struct PrimitiveRoot {
  Word root;
  std::size_t exponent;
};

/// The shortest period dividing |w| is the first non-trivial occurrence of w in ww.
inline PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw error(errc::empty_word, "the empty word has no primitive root");
  const LetterString doubled = w.letters() + w.letters();
  const std::size_t period = doubled.find(w.letters(), 1);
  return {w.prefix(period), w.size() / period};
}

inline bool is_primitive(const Word& w) { return !w.empty() && primitive_root(w).exponent == 1; }

inline bool commute(const Word& x, const Word& y) { return x.letters() + y.letters() == y.letters() + x.letters(); }

inline bool is_prefix(const Word& u, const Word& w) {
  return u.size() <= w.size() && w.letters().compare(0, u.size(), u.letters()) == 0;
}

inline bool is_suffix(const Word& v, const Word& w) {
  return v.size() <= w.size() && w.letters().compare(w.size() - v.size(), v.size(), v.letters()) == 0;
}

inline std::vector<std::size_t> find_occurrences(const LetterString& p, const LetterString& w) {
  std::vector<std::size_t> out;
  if (p.size() > w.size()) return out;
  if (p.empty()) {
    for (std::size_t i = 0; i <= w.size(); ++i) out.push_back(i);
    return out;
  }
  for (auto pos = w.find(p); pos != LetterString::npos; pos = w.find(p, pos + 1)) out.push_back(pos);
  return out;
}

/// All start positions, overlapping occurrences included, ascending.
inline std::vector<std::size_t> find_occurrences(const Word& p, const Word& w) {
  return find_occurrences(p.letters(), w.letters());
}

inline bool is_factor(const Word& u, const Word& w) { return w.letters().find(u.letters()) != LetterString::npos; }

/// A nonempty primer word α; its complement ᾱ is cached.
class Primer {
 public:
  explicit Primer(Word alpha) : alpha_(std::move(alpha)), bar_(complement(alpha_)) {
    if (alpha_.empty()) throw error(errc::empty_word, "primer must be nonempty");
  }

  static Primer parse(AlphabetPtr alphabet, std::string_view text) { return Primer(Word::parse(std::move(alphabet), text)); }

  const Word& alpha() const noexcept { return alpha_; }
  const Word& bar() const noexcept { return bar_; }
  std::size_t k() const noexcept { return alpha_.size(); }
  bool pseudo_palindromic() const { return alpha_ == bar_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alpha_.alphabet_ptr(); }

  friend bool operator==(const Primer& a, const Primer& b) { return a.alpha_ == b.alpha_; }

 private:
  Word alpha_;
  Word bar_;
};

inline void require_same_alphabet(const Word& w, const Primer& p) {
  if (!w.same_alphabet(p.alpha())) throw error(errc::alphabet_mismatch, "word and primer use different alphabets");
}

}  // namespace hairpin
