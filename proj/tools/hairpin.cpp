#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hairpin/hairpin.hpp"

using namespace hairpin;

namespace {

struct RunConfig {
  std::string alphabet_file;
  bool dna = false;
  std::string primer;
  std::optional<std::size_t> bound;
  std::string format = "json";
  std::string side = "both";
  std::string word;
  std::string trace_target;
  std::size_t i_max = 3;
};

struct Context {
  AlphabetPtr alphabet;
  Word word;
  Primer primer;
  std::size_t bound;
  Sides sides;
};

Context load(const RunConfig& cfg) {
  AlphabetPtr alphabet = !cfg.alphabet_file.empty() ? InvolutionAlphabet::load(cfg.alphabet_file)
                         : cfg.dna                  ? InvolutionAlphabet::dna()
                                                    : InvolutionAlphabet::latin();
  if (cfg.primer.empty()) throw error(errc::empty_word, "--primer is required");
  Word w = Word::parse(alphabet, cfg.word);
  Primer p = Primer::parse(alphabet, cfg.primer);
  const std::size_t bound = cfg.bound.value_or(default_bound(w, p));
  if (bound < w.size())
    throw error(errc::bound_too_small, "bound " + std::to_string(bound) + " is below the word length " +
                                           std::to_string(w.size()));
  const Sides sides = cfg.side == "left" ? Sides::left : cfg.side == "right" ? Sides::right : Sides::both;
  return {alphabet, w, p, bound, sides};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

void require_not_dot(const RunConfig& cfg, const char* command) {
  if (cfg.format == "dot")
    throw error(errc::precondition_violated, std::string("--format dot only applies to build, not ") + command);
}

int exit_code(Outcome o) { return o == Outcome::regular ? 0 : o == Outcome::non_regular ? 2 : 3; }

int cmd_analyze(const RunConfig& cfg) {
  require_not_dot(cfg, "analyze");
  auto ctx = load(cfg);
  auto a = analyze(ctx.word, ctx.primer);
  auto j = to_json(a);
  if (cfg.format == "json") {
    print(j);
    return 0;
  }
  for (const auto& [key, value] : j.items()) std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  return 0;
}

int cmd_step(const RunConfig& cfg) {
  require_not_dot(cfg, "step");
  auto ctx = load(cfg);
  auto steps = hc_step(ctx.word, ctx.primer, ctx.sides);
  if (cfg.format == "json") {
    json out = json::array();
    for (const auto& s : steps) out.push_back(to_json(s));
    print(out);
    return 0;
  }
  for (const auto& s : steps)
    std::cout << (s.direction == Direction::left ? "left " : "right") << " " << s.anchor << " " << s.appended << " "
              << s.child << "\n";
  return 0;
}

int cmd_closure(const RunConfig& cfg) {
  require_not_dot(cfg, "closure");
  auto ctx = load(cfg);
  auto result = closure(ctx.word, ctx.primer, ctx.bound, ctx.sides);
  std::optional<std::vector<HcStep>> path;
  if (!cfg.trace_target.empty()) path = trace(result, Word::parse(ctx.alphabet, cfg.trace_target));
  if (cfg.format == "json") {
    json j{{"seed", ctx.word.str()},
           {"primer", ctx.primer.alpha().str()},
           {"bound", ctx.bound},
           {"side", cfg.side},
           {"count", result.members.size()},
           {"members", words_json(result.members)}};
    if (path) {
      j["trace"] = json::array();
      for (const auto& s : *path) j["trace"].push_back(to_json(s));
    }
    print(j);
    return 0;
  }
  for (const auto& w : result.members) std::cout << w << "\n";
  if (path)
    for (const auto& s : *path)
      std::cout << "# " << s.parent << " -> " << s.child << " (" << (s.direction == Direction::left ? "left" : "right")
                << ", anchor " << s.anchor << ")\n";
  return 0;
}

/// The automaton for the requested side, or the verdict when none exists.
std::pair<std::optional<Nfa>, Verdict> automaton_for(const Context& ctx) {
  if (ctx.sides != Sides::both) {
    auto a = analyze(ctx.word, ctx.primer);
    Verdict v;
    v.word_class = {a.m(), a.n(), a.non_crossing, a.anchored()};
    v.outcome = Outcome::regular;
    v.justification = "one-sided construction";
    return {build_one_sided(a, ctx.sides == Sides::left ? Direction::left : Direction::right), std::move(v)};
  }
  Verdict v = construct(ctx.word, ctx.primer);
  std::optional<Nfa> automaton = v.automaton;
  return {std::move(automaton), std::move(v)};
}

int cmd_build(const RunConfig& cfg) {
  auto ctx = load(cfg);
  auto [automaton, verdict] = automaton_for(ctx);
  if (!automaton) {
    std::cerr << "no automaton: " << to_string(verdict.outcome) << " (" << verdict.justification << ")\n";
    if (cfg.format == "json") print(to_json(verdict));
    else std::cout << to_string(verdict.outcome) << ": " << verdict.justification << "\n";
    return exit_code(verdict.outcome);
  }
  if (cfg.format == "dot") {
    std::cout << to_dot(*automaton, "hc");
  } else if (cfg.format == "json") {
    print(to_json(*automaton));
  } else {
    std::cout << verdict.justification << ": " << automaton->size() << " states, " << automaton->transition_count()
              << " transitions\n";
  }
  return 0;
}

int cmd_decide(const RunConfig& cfg) {
  require_not_dot(cfg, "decide");
  auto ctx = load(cfg);
  auto v = decide(ctx.word, ctx.primer, ctx.bound);
  if (cfg.format == "json") {
    print(to_json(v));
  } else {
    std::cout << to_string(v.outcome) << ": " << v.justification << "\n";
    if (v.conditions)
      std::cout << "conditions: " << v.conditions->u2_commutes_v2 << " " << v.conditions->u2_commutes_u3 << " "
                << v.conditions->u3_is_u2v2 << "\n";
  }
  return exit_code(v.outcome);
}

int cmd_verify(const RunConfig& cfg) {
  require_not_dot(cfg, "verify");
  auto ctx = load(cfg);
  auto [automaton, verdict] = automaton_for(ctx);
  if (!automaton) {
    std::cerr << "nothing to verify: " << to_string(verdict.outcome) << " (" << verdict.justification << ")\n";
    return 1;
  }
  auto members = closure(ctx.word, ctx.primer, ctx.bound, ctx.sides).members;
  auto eq = equiv_up_to(*automaton, members, ctx.bound);
  if (cfg.format == "json") {
    auto j = to_json(eq, ctx.bound);
    j["construction"] = verdict.justification;
    print(j);
  } else {
    std::cout << (eq.equal ? "equal" : "different") << " up to " << ctx.bound << " (" << eq.member_count
              << " members)\n";
    if (eq.counterexample)
      std::cout << "counterexample: " << *eq.counterexample << (eq.counterexample_accepted ? " (accepted only)" : " (closure only)")
                << "\n";
  }
  return eq.equal ? 0 : 1;
}

int cmd_witness(const RunConfig& cfg) {
  require_not_dot(cfg, "witness");
  auto ctx = load(cfg);
  auto a = analyze(ctx.word, ctx.primer);
  const bool mirrored = a.m() == 2 && a.n() == 3;
  if (mirrored) a = analyze(complement(ctx.word), ctx.primer);
  const std::size_t bound = cfg.bound.value_or(family_word(a, cfg.i_max).size());
  auto report = witness_family(a, cfg.i_max, bound);
  if (cfg.format == "json") {
    auto j = to_json(report);
    j["mirrored"] = mirrored;
    print(j);
  } else {
    for (const auto& f : report.family) std::cout << "i=" << f.i << " " << f.word << "\n";
    for (const auto& w : report.extraneous) std::cout << "extraneous " << w << "\n";
    for (auto i : report.missing) std::cout << "missing i=" << i << "\n";
    std::cout << (report.exact() ? "exact" : "not exact") << "\n";
  }
  return report.exact() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated hairpin completion: analysis, closure, automata and regularity decisions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* alphabet = app.add_option("--alphabet", cfg.alphabet_file, "Alphabet file: one 'X<TAB>Y' complement pair per line")
                       ->check(CLI::ExistingFile);
  app.add_flag("--dna", cfg.dna, "Use the DNA alphabet A/T, C/G")->excludes(alphabet);
  app.add_option("--primer", cfg.primer, "Primer word α");
  app.add_option("--bound", cfg.bound, "Length bound (default |w| + 6k + 16)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--side", cfg.side, "Completion side")->check(CLI::IsMember({"left", "right", "both"}));

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"analyze", "α-prefixes, ᾱ-suffixes, crossing and anchoring of a word", cmd_analyze},
      {"step", "one-step hairpin completions with anchors", cmd_step},
      {"closure", "all words reachable within the bound", cmd_closure},
      {"build", "automaton for the closure (or a notice when none is known)", cmd_build},
      {"decide", "regularity verdict; exit 0 Regular, 2 NonRegular, 3 Unknown", cmd_decide},
      {"verify", "compare the construction with the closure; exit 0 iff equal", cmd_verify},
      {"witness", "non-regularity witness family of a (3,2)-word", cmd_witness},
  };
  int (*selected)(const RunConfig&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("word", cfg.word, "Input word")->required();
    if (std::string(c.name) == "closure") sub->add_option("--trace", cfg.trace_target, "Print a derivation of this member");
    if (std::string(c.name) == "witness")
      sub->add_option("--i-max", cfg.i_max, "Largest family exponent")->check(CLI::Range(2, 64));
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  CLI11_PARSE(app, argc, argv);
  try {
    return selected(cfg);
  } catch (const hairpin::error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
}
