#include <random>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "hairpin/hairpin.hpp"
#include "oracle.hpp"

using namespace hairpin;

namespace {

AlphabetPtr sigma() { return InvolutionAlphabet::latin(); }
Word W(std::string_view s) { return Word::parse(sigma(), s); }
Word D(std::string_view s) { return Word::parse(InvolutionAlphabet::dna(), s); }

}  // namespace

TEST_CASE("alphabet file pairs and involution law") {
  std::istringstream in("# comment\nA\tT\n\nC\tG\nX\tX\n");
  auto a = InvolutionAlphabet::parse_pairs(in);
  REQUIRE(a->size() == 5);
  for (Letter x = 0; x < a->size(); ++x) CHECK(a->bar(a->bar(x)) == x);
  CHECK(a->token(a->bar(*a->find("A"))) == "T");
  CHECK(a->bar(*a->find("X")) == *a->find("X"));
}

TEST_CASE("alphabet file errors") {
  auto load = [](const char* text) {
    std::istringstream in(text);
    return InvolutionAlphabet::parse_pairs(in);
  };
  auto code = [&](const char* text) {
    try {
      load(text);
    } catch (const error& e) {
      return e.code();
    }
    return errc::empty_word;
  };
  CHECK(code("A\tT\nA\tG\n") == errc::alphabet_format);
  CHECK(code("A\tT\nT\tA\n") == errc::alphabet_format);
  CHECK(code("A T\n") == errc::alphabet_format);
}

TEST_CASE("latin preset spellings") {
  // precomposed ā, combining b̄ and ASCII a' all name the same letters
  CHECK(W("abaā") == W("abaa'"));
  CHECK(W("ab̄") == W("ab'"));
  CHECK(W("aā").str() == "aā");
  CHECK(W("b'").str() == "b̄");
  CHECK(W("").empty());
  CHECK_THROWS_AS(W("ab1"), error);
}

TEST_CASE("whitespace-separated words use tokens verbatim") {
  auto a = InvolutionAlphabet::Builder().pair("x1", "y1").pair("x", "y").build();
  CHECK(Word::parse(a, "x1 x y").size() == 3);
  // with tokens ab, a and b the spelling "ab" is ambiguous, so printing keeps the spaces
  auto ambiguous = InvolutionAlphabet::Builder().pair("ab", "c").pair("a", "d").pair("b", "e").build();
  CHECK_FALSE(ambiguous->concatenable());
  Word w = Word::parse(ambiguous, "a b");
  CHECK(Word::parse(ambiguous, w.str()) == w);
  try {
    Word::parse(ambiguous, "ab");
    FAIL("ambiguous spelling accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::ambiguous_word);
  }
}

TEST_CASE("complement examples") {
  CHECK(complement(W("")).empty());
  CHECK(complement(D("ACG")) == D("CGT"));
  CHECK(complement(W("ab")) == W("b̄ā"));
}

TEST_CASE("pseudo-palindromes") {
  CHECK(is_pseudo_palindrome(W("")));
  CHECK(is_pseudo_palindrome(W("aā")));
  CHECK_FALSE(is_pseudo_palindrome(W("ab")));
}

TEST_CASE("primitive roots") {
  auto r = primitive_root(W("abab"));
  CHECK(r.root == W("ab"));
  CHECK(r.exponent == 2);
  CHECK(primitive_root(W("a")).exponent == 1);
  CHECK(primitive_root(W("aab")).root == W("aab"));
  try {
    primitive_root(W(""));
    FAIL("no error for λ");
  } catch (const error& e) {
    CHECK(e.code() == errc::empty_word);
  }
}

TEST_CASE("commutation examples") {
  CHECK(commute(W("ab"), W("abab")));
  CHECK_FALSE(commute(W("ab"), W("ad")));
  CHECK(commute(W(""), W("ab")));
}

TEST_CASE("prefix, suffix and occurrences") {
  CHECK(is_prefix(W("ab"), W("abaā")));
  CHECK(is_suffix(W("aā"), W("abaā")));
  CHECK(find_occurrences(W("a"), W("abaā")) == std::vector<std::size_t>{0, 2});
  CHECK(find_occurrences(W("aa"), W("aaaa")) == std::vector<std::size_t>{0, 1, 2});
  CHECK(is_factor(W("ba"), W("abaā")));
}

TEST_CASE("primer requires a nonempty word") {
  CHECK_THROWS_AS(Primer(W("")), error);
  Primer p(W("ab"));
  CHECK(p.k() == 2);
  CHECK(p.bar() == W("b̄ā"));
  CHECK_FALSE(p.pseudo_palindromic());
  CHECK(Primer(W("aā")).pseudo_palindromic());
}

TEST_CASE("words over different alphabets do not mix") {
  CHECK_THROWS_AS(W("a") + D("A"), error);
}

TEST_CASE("shortlex order") {
  CHECK(W("b") < W("aa"));
  CHECK(W("a") < W("ā"));
  CHECK(W("ab") < W("ba"));
}

TEST_CASE("random words: involution, anti-morphism, roots, commutation") {
  std::mt19937 rng(11);
  auto s = sigma();
  for (int t = 0; t < 500; ++t) {
    const std::size_t letters = t % 2 ? 2 : 4;
    Word x(s, oracle::random_letters(rng, letters, rng() % 9));
    Word y(s, oracle::random_letters(rng, letters, rng() % 9));
    CHECK(complement(complement(x)) == x);
    CHECK(complement(x + y) == complement(y) + complement(x));
    CHECK(complement(x).letters() == oracle::bar(x.letters(), *s));
    if (!x.empty()) {
      auto r = primitive_root(x);
      CHECK(power(r.root, r.exponent) == x);
      CHECK(r.root.letters() == oracle::root(x.letters()));
    }
    const bool expected = x.empty() || y.empty() || oracle::root(x.letters()) == oracle::root(y.letters());
    CHECK(commute(x, y) == expected);
    CHECK(find_occurrences(y, x) == oracle::positions(x.letters(), y.letters()));
  }
  // commuting pairs built on purpose
  for (int t = 0; t < 100; ++t) {
    Word r(s, oracle::random_letters(rng, 4, 1 + rng() % 3));
    CHECK(commute(power(r, 1 + rng() % 3), power(r, 1 + rng() % 3)));
  }
}

TEST_CASE("printed words parse back") {
  std::mt19937 rng(3);
  auto s = sigma();
  for (int t = 0; t < 200; ++t) {
    Word w(s, oracle::random_letters(rng, 52, rng() % 10));
    CHECK(Word::parse(s, w.str()) == w);
  }
  auto d = InvolutionAlphabet::dna();
  Word w(d, oracle::random_letters(rng, 4, 12));
  CHECK(Word::parse(d, w.str()) == w);
}
