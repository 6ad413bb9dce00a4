#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hairpin/error.hpp"

namespace hairpin {

/// Letters are dense ids in declaration order; the id order is the letter order.
using Letter = char32_t;
using LetterString = std::basic_string<Letter>;

class InvolutionAlphabet;
using AlphabetPtr = std::shared_ptr<const InvolutionAlphabet>;

namespace detail {

inline std::string utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

inline bool has_space(std::string_view s) {
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') return true;
  return false;
}

// Sardinas-Patterson test over byte strings.
inline bool uniquely_decodable(const std::vector<std::string>& code) {
  std::set<std::string> words(code.begin(), code.end());
  auto dangling = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    std::set<std::string> out;
    for (const auto& x : a)
      for (const auto& y : b)
        if (x.size() < y.size() && y.compare(0, x.size(), x) == 0) out.insert(y.substr(x.size()));
    return out;
  };
  std::set<std::string> current;
  for (const auto& x : words)
    for (const auto& y : words)
      if (x != y && x.size() < y.size() && y.compare(0, x.size(), x) == 0) current.insert(y.substr(x.size()));
  std::set<std::set<std::string>> seen;
  while (!current.empty()) {
    for (const auto& s : current)
      if (words.count(s)) return false;
    if (!seen.insert(current).second) return true;
    auto next = dangling(words, current);
    auto more = dangling(current, words);
    next.insert(more.begin(), more.end());
    current = std::move(next);
  }
  return true;
}

}  // namespace detail

/// A finite alphabet together with a letter-to-letter involution.
///
/// Tokens are opaque UTF-8 strings. Each letter has one display token and may
/// have extra parse-only aliases (used by the built-in presets).
class InvolutionAlphabet {
 public:
  class Builder {
   public:
    /// Declares bar(x) = y and bar(y) = x. `x == y` declares a self-complementary letter.
    Builder& pair(const std::string& x, const std::string& y) {
      check_token(x);
      check_token(y);
      for (const auto& t : {x, y}) {
        if (index_.count(t) || aliases_.count(t))
          throw error(errc::alphabet_format, "duplicate or conflicting declaration of letter '" + t + "'");
      }
      Letter a = add(x);
      if (x == y) {
        bar_.push_back(a);
      } else {
        Letter b = add(y);
        bar_.push_back(b);
        bar_.push_back(a);
      }
      return *this;
    }

    Builder& alias(const std::string& alias, const std::string& canonical) {
      check_token(alias);
      auto it = index_.find(canonical);
      if (it == index_.end()) throw error(errc::alphabet_format, "alias target '" + canonical + "' undeclared");
      if (index_.count(alias) || aliases_.count(alias))
        throw error(errc::alphabet_format, "duplicate alias '" + alias + "'");
      aliases_.emplace(alias, it->second);
      return *this;
    }

    AlphabetPtr build() const {
      if (tokens_.empty()) throw error(errc::alphabet_format, "alphabet has no letters");
      return AlphabetPtr(new InvolutionAlphabet(tokens_, bar_, index_, aliases_));
    }

   private:
    static void check_token(const std::string& t) {
      if (t.empty()) throw error(errc::alphabet_format, "empty letter token");
      if (detail::has_space(t)) throw error(errc::alphabet_format, "letter token '" + t + "' contains whitespace");
    }

    Letter add(const std::string& t) {
      Letter id = static_cast<Letter>(tokens_.size());
      tokens_.push_back(t);
      index_.emplace(t, id);
      return id;
    }

    std::vector<std::string> tokens_;
    std::vector<Letter> bar_;
    std::unordered_map<std::string, Letter> index_;
    std::unordered_map<std::string, Letter> aliases_;
  };

  std::size_t size() const noexcept { return tokens_.size(); }
  Letter bar(Letter a) const { return bar_.at(a); }
  const std::string& token(Letter a) const { return tokens_.at(a); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::optional<Letter> find(std::string_view token) const {
    std::string key(token);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (auto it = aliases_.find(key); it != aliases_.end()) return it->second;
    return std::nullopt;
  }

  /// True when concatenated display tokens always split back uniquely.
  bool concatenable() const noexcept { return concatenable_; }

  /// Structural equality: same tokens in the same order with the same involution.
  bool same_as(const InvolutionAlphabet& other) const {
    return this == &other || (tokens_ == other.tokens_ && bar_ == other.bar_);
  }

  /// Splits text into letters. Whitespace-separated tokens are taken as-is;
  /// otherwise the text is decoded over all tokens and aliases and must split
  /// in exactly one way.
  LetterString parse(std::string_view text) const {
    LetterString out;
    if (detail::has_space(text)) {
      std::istringstream in{std::string(text)};
      std::string tok;
      while (in >> tok) {
        auto id = find(tok);
        if (!id) throw error(errc::unknown_letter, "'" + tok + "' is not a letter of the alphabet");
        out.push_back(*id);
      }
      return out;
    }
    // ways[i] = number of parses of text[i..], saturating at 2.
    const std::size_t n = text.size();
    std::vector<int> ways(n + 1, 0);
    std::vector<std::pair<std::size_t, Letter>> choice(n + 1, {0, 0});
    ways[n] = 1;
    for (std::size_t i = n; i-- > 0;) {
      for (const auto& [tok, id] : all_) {
        if (tok.size() <= n - i && text.compare(i, tok.size(), tok) == 0 && ways[i + tok.size()] > 0) {
          ways[i] = std::min(2, ways[i] + ways[i + tok.size()]);
          choice[i] = {tok.size(), id};
        }
      }
    }
    if (ways[0] == 0) throw error(errc::unknown_letter, "'" + std::string(text) + "' does not split into letters");
    if (ways[0] > 1) throw error(errc::ambiguous_word, "'" + std::string(text) + "' splits into letters in more than one way");
    for (std::size_t i = 0; i < n; i += choice[i].first) out.push_back(choice[i].second);
    return out;
  }

  std::string format(const LetterString& letters) const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i > 0 && !concatenable_) out += ' ';
      out += token(letters[i]);
    }
    return out;
  }

  /// Reads the `X<TAB>Y` pair format.
  static AlphabetPtr parse_pairs(std::istream& in) {
    Builder b;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
        throw error(errc::alphabet_format, "line " + std::to_string(lineno) + ": expected 'X<TAB>Y'");
      try {
        b.pair(line.substr(0, tab), line.substr(tab + 1));
      } catch (const error& e) {
        throw error(errc::alphabet_format, "line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    return b.build();
  }

  static AlphabetPtr load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::alphabet_format, "cannot open alphabet file '" + path + "'");
    return parse_pairs(in);
  }

  /// A<->T, C<->G.
  static AlphabetPtr dna() {
    static const AlphabetPtr instance = Builder().pair("A", "T").pair("C", "G").build();
    return instance;
  }

  /// Lowercase a..z paired with barred forms. Display uses the precomposed
  /// macron letter where Unicode has one (ā) and a combining macron otherwise
  /// (b̄); both spellings and the ASCII form `a'` parse.
  static AlphabetPtr latin() {
    static const AlphabetPtr instance = [] {
      const std::unordered_map<char, char32_t> precomposed = {
          {'a', 0x0101}, {'e', 0x0113}, {'g', 0x1E21}, {'i', 0x012B},
          {'o', 0x014D}, {'u', 0x016B}, {'y', 0x0233}};
      const std::string macron = detail::utf8(0x0304);
      Builder b;
      for (char c = 'a'; c <= 'z'; ++c) {
        std::string plain(1, c);
        std::string combining = plain + macron;
        auto it = precomposed.find(c);
        std::string shown = it != precomposed.end() ? detail::utf8(it->second) : combining;
        b.pair(plain, shown);
        if (shown != combining) b.alias(combining, shown);
        b.alias(plain + "'", shown);
      }
      return b.build();
    }();
    return instance;
  }

 private:
  InvolutionAlphabet(std::vector<std::string> tokens, std::vector<Letter> bar,
                     std::unordered_map<std::string, Letter> index,
                     std::unordered_map<std::string, Letter> aliases)
      : tokens_(std::move(tokens)), bar_(std::move(bar)), index_(std::move(index)), aliases_(std::move(aliases)) {
    for (const auto& [t, id] : index_) all_.emplace_back(t, id);
    for (const auto& [t, id] : aliases_) all_.emplace_back(t, id);
    std::vector<std::string> code;
    for (const auto& [t, id] : all_) code.push_back(t);
    concatenable_ = detail::uniquely_decodable(code);
  }

  std::vector<std::string> tokens_;
  std::vector<Letter> bar_;
  std::unordered_map<std::string, Letter> index_;
  std::unordered_map<std::string, Letter> aliases_;
  std::vector<std::pair<std::string, Letter>> all_;
  bool concatenable_ = false;
};

}  // namespace hairpin
