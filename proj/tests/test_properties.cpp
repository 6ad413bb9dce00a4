#include "catch_amalgamated.hpp"
#include "lemmas.hpp"

TEST_CASE("combinatorial facts about α-prefixes and ᾱ-suffixes hold on a random corpus") {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto report = lemmas::run_corpus(150, 12, 3, seed);
    for (const auto& [name, tally] : report) {
      INFO(name << ": " << tally.first_violation);
      CHECK(tally.violations == 0);
      CHECK(tally.checked > 0);
    }
  }
}
