#pragma once

#include <sstream>
#include <string>

#include "hairpin/nfa.hpp"
#include "json.hpp"

namespace hairpin {

/// {states, initial, accepting, transitions:[{from,label,to}]}; label is the
/// letter token, or null for ε.
inline nlohmann::json to_json(const Nfa& a) {
  nlohmann::json j;
  j["states"] = a.size();
  j["initial"] = a.initial_states();
  j["accepting"] = a.accepting_states();
  auto& ts = j["transitions"] = nlohmann::json::array();
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) {
      nlohmann::json label = e.label == epsilon ? nlohmann::json(nullptr) : nlohmann::json(a.alphabet().token(e.label));
      ts.push_back({{"from", s}, {"label", std::move(label)}, {"to", e.to}});
    }
  return j;
}

inline Nfa nfa_from_json(const nlohmann::json& j, const AlphabetPtr& alphabet) {
  Nfa a(alphabet);
  const std::size_t n = j.at("states").get<std::size_t>();
  for (std::size_t i = 0; i < n; ++i) a.add_state();
  for (State s : j.at("initial")) a.set_initial(s);
  for (State s : j.at("accepting")) a.set_accepting(s);
  for (const auto& t : j.at("transitions")) {
    Letter label = epsilon;
    if (!t.at("label").is_null()) {
      auto id = alphabet->find(t.at("label").get<std::string>());
      if (!id) throw error(errc::unknown_letter, "transition label '" + t.at("label").get<std::string>() + "'");
      label = *id;
    }
    a.add_transition(t.at("from").get<State>(), label, t.at("to").get<State>());
  }
  return a;
}

inline std::string to_dot(const Nfa& a, const std::string& name = "nfa") {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State s = 0; s < a.size(); ++s) {
    os << "  " << s;
    if (a.is_accepting(s)) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (State s : a.initial_states()) os << "  init" << s << " [shape=point];\n  init" << s << " -> " << s << ";\n";
  for (State s = 0; s < a.size(); ++s)
    for (const auto& e : a.edges(s)) {
      std::string label;
      for (char c : e.label == epsilon ? std::string("ε") : a.alphabet().token(e.label)) {
        if (c == '"' || c == '\\') label += '\\';
        label += c;
      }
      os << "  " << s << " -> " << e.to << " [label=\"" << label << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hairpin
