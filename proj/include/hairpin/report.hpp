#pragma once

#include <string>
#include <vector>

#include "hairpin/analysis.hpp"
#include "hairpin/constructions.hpp"
#include "hairpin/decider.hpp"
#include "hairpin/hc.hpp"
#include "hairpin/nfa_io.hpp"
#include "json.hpp"

namespace hairpin {

using nlohmann::json;

inline json words_json(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

inline json words_json(const WordSet& ws) { return words_json(std::vector<Word>(ws.begin(), ws.end())); }

inline json to_json(const PrimerAnalysis& a) {
  return {{"word", a.word.str()},
          {"primer", a.primer.alpha().str()},
          {"k", a.k()},
          {"m", a.m()},
          {"n", a.n()},
          {"u", words_json(a.alpha_prefixes)},
          {"v_bar", words_json(a.cbar_suffixes)},
          {"v", words_json(a.v_words)},
          {"alpha_positions", a.alpha_positions},
          {"cbar_positions", a.cbar_positions},
          {"non_crossing", a.non_crossing},
          {"crossing", !a.non_crossing},
          {"starts_with_alpha", a.starts_with_alpha},
          {"ends_with_cbar_alpha", a.ends_with_cbar_alpha},
          {"anchored", a.anchored()}};
}

inline json to_json(const HcStep& s) {
  return {{"direction", s.direction == Direction::left ? "left" : "right"},
          {"anchor", s.anchor},
          {"appended", s.appended.str()},
          {"parent", s.parent.str()},
          {"child", s.child.str()}};
}

inline json to_json(const Conditions32& c) {
  return {{"u2_commutes_v2", c.u2_commutes_v2}, {"u2_commutes_u3", c.u2_commutes_u3}, {"u3_is_u2v2", c.u3_is_u2v2}};
}

inline json to_json(const WitnessReport& r) {
  json family = json::array();
  for (const auto& f : r.family) family.push_back({{"i", f.i}, {"word", f.word.str()}});
  return {{"instance", r.instance.str()},
          {"conditions", to_json(r.conditions)},
          {"bound", r.bound},
          {"i_max", r.i_max},
          {"family", std::move(family)},
          {"extraneous", words_json(r.extraneous)},
          {"missing", r.missing},
          {"exact", r.exact()}};
}

inline json to_json(const Equivalence& e, std::size_t bound) {
  return {{"bound", bound},
          {"equal", e.equal},
          {"accepted", e.accepted_count},
          {"members", e.member_count},
          {"counterexample", e.counterexample ? json(e.counterexample->str()) : json(nullptr)},
          {"counterexample_accepted", e.counterexample_accepted}};
}

inline json to_json(const Verdict& v) {
  json j;
  j["class"] = {{"m", v.word_class.m},
                {"n", v.word_class.n},
                {"non_crossing", v.word_class.non_crossing},
                {"anchored", v.word_class.anchored}};
  j["outcome"] = to_string(v.outcome);
  j["justification"] = v.justification;
  j["mirrored"] = v.mirrored;
  j["conditions"] = v.conditions ? to_json(*v.conditions) : json(nullptr);
  j["automaton_ref"] =
      v.automaton ? json{{"states", v.automaton->size()}, {"transitions", v.automaton->transition_count()}} : json(nullptr);
  j["verification"] = v.verification ? to_json(*v.verification, v.verify_bound) : json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

}  // namespace hairpin
