#include <random>

#include "catch_amalgamated.hpp"
#include "hairpin/hairpin.hpp"
#include "oracle.hpp"

using namespace hairpin;

namespace {

AlphabetPtr S() { return InvolutionAlphabet::latin(); }
Word W(std::string_view s) { return Word::parse(S(), s); }
Primer P(std::string_view s) { return Primer::parse(S(), s); }

}  // namespace

TEST_CASE("decide the worked examples") {
  auto v = decide(W("abaā"), P("a"));
  CHECK(v.outcome == Outcome::regular);
  CHECK(v.word_class.m == 2);
  CHECK(v.word_class.n == 1);
  REQUIRE(v.verification);
  CHECK(v.verification->equal);

  CHECK(decide(W("abaāc̄ā"), P("a")).justification == "(2,2) construction");
  CHECK(decide(W("abaāb̄ā"), P("a")).justification == "mirror: u_m = v_n");
  CHECK(decide(W("aā"), P("a")).outcome == Outcome::regular);
}

TEST_CASE("decide the (3,2) examples") {
  auto bad = decide(W("abacaād̄ā"), P("a"));
  CHECK(bad.outcome == Outcome::non_regular);
  REQUIRE(bad.conditions);
  CHECK_FALSE(bad.conditions->any());
  REQUIRE(bad.witness);
  CHECK(bad.witness->exact());
  CHECK(bad.witness->family.size() == 1);
  CHECK_FALSE(bad.automaton.has_value());

  auto good = decide(W("abadaād̄ā"), P("a"));
  CHECK(good.outcome == Outcome::regular);
  CHECK(good.justification == "(3,2) condition 3");
}

TEST_CASE("decide reports Unknown outside the decided classes") {
  CHECK(decide(W("aāaā"), P("a")).outcome == Outcome::unknown);
  CHECK(decide(W("baā"), P("a")).outcome == Outcome::unknown);
  CHECK(decide(W("aābaā"), P("aā")).outcome == Outcome::unknown);
  CHECK(decide(W("xaā"), P("aā")).outcome == Outcome::regular);
  // (3,3): u₃ = abac, v₃ = adae
  CHECK(decide(W("abacaāēād̄ā"), P("a")).outcome == Outcome::unknown);
}

TEST_CASE("(2,3) words are decided through the complement") {
  auto bad = decide(complement(W("abacaād̄ā")), P("a"));
  CHECK(bad.mirrored);
  CHECK(bad.outcome == Outcome::non_regular);
  auto good = decide(complement(W("abadaād̄ā")), P("a"));
  CHECK(good.mirrored);
  CHECK(good.outcome == Outcome::regular);
}

TEST_CASE("decide rejects a verification bound below the seed") {
  try {
    decide(W("abaā"), P("a"), 3);
    FAIL("no error");
  } catch (const error& e) {
    CHECK(e.code() == errc::bound_too_small);
  }
}

TEST_CASE("complement symmetry of verdicts") {
  // closure(complement(w)) = complement(closure(w)), so outcomes agree
  std::mt19937 rng(53);
  for (int t = 0; t < 200; ++t) {
    auto s = oracle::random_non_crossing_seed(rng, *S(), 2 + t % 3, 2, 10);
    const Word w(S(), s.word);
    const Primer p{Word(S(), s.alpha)};
    auto v = construct(w, p);
    auto c = construct(complement(w), p);
    CHECK(v.outcome == c.outcome);
    if (v.automaton && c.automaton) {
      const std::size_t bound = w.size() + 10;
      CHECK(complement_all(v.automaton->enumerate(bound)) == c.automaton->enumerate(bound));
    }
  }
}

TEST_CASE("every Regular verdict on random seeds verifies") {
  std::mt19937 rng(59);
  int regular = 0;
  for (int t = 0; t < 300; ++t) {
    auto s = oracle::random_non_crossing_seed(rng, *S(), 2 + t % 3, 3, 12);
    auto v = decide(Word(S(), s.word), Primer(Word(S(), s.alpha)), s.word.size() + 12);
    if (v.outcome == Outcome::regular) {
      ++regular;
      CHECK(v.verification->equal);
    }
  }
  CHECK(regular > 200);
}

TEST_CASE("verdict json") {
  auto j = to_json(decide(W("abacaād̄ā"), P("a")));
  CHECK(j["outcome"] == "NonRegular");
  CHECK(j["class"]["m"] == 3);
  CHECK(j["conditions"]["u3_is_u2v2"] == false);
  CHECK(j["witness"]["exact"] == true);
  CHECK(j["automaton_ref"].is_null());
  auto r = to_json(decide(W("abaā"), P("a")));
  CHECK(r["outcome"] == "Regular");
  CHECK(r["verification"]["equal"] == true);
  CHECK(to_json(analyze(W("abaā"), P("a")))["u"] == nlohmann::json::array({"", "ab"}));
}
