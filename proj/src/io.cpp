#include "blockset/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "blockset/error.hpp"

namespace blockset {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("field '") + key + "': " + e.what());
  }
}

Json widths_json(const WidthProfile& w) {
  Json out = Json::object();
  out["widths"] = w.top_down();
  out["has_dead"] = w.has_dead;
  return out;
}

std::string trim_line(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return std::string(line.substr(first, last - first + 1));
}

std::string glyph_label(const Alphabet& a, Symbol s) { return a.glyph(s); }

// Transitions grouped per (from, to) so parallel edges share one label.
template <typename Edges>
void emit_edges(std::ostringstream& out, const Alphabet& alphabet, std::size_t states, Edges&& edges) {
  for (StateId q = 0; q < states; ++q) {
    std::vector<std::pair<StateId, std::string>> labels;
    edges(q, [&](Symbol s, StateId to) {
      auto it = std::find_if(labels.begin(), labels.end(), [&](const auto& l) { return l.first == to; });
      if (it == labels.end())
        labels.emplace_back(to, glyph_label(alphabet, s));
      else
        it->second += "," + glyph_label(alphabet, s);
    });
    for (const auto& [to, label] : labels)
      out << "  q" << q << " -> q" << to << " [label=\"" << label << "\"];\n";
  }
}

template <typename Automaton, typename Final, typename Edges>
std::string ranked_dot(const Automaton& a, Final&& is_final, Edges&& edges, bool dead_node) {
  std::ostringstream out;
  out << "digraph A {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n";
  for (std::size_t r = a.ell() + 1; r-- > 0;) {
    out << "  subgraph cluster_rank" << r << " {\n    label=\"rank " << r << "\";\n    style=dotted;\n    rank=same;\n";
    for (StateId q = 0; q < a.state_count(); ++q)
      if (a.rank(q) == r)
        out << "    q" << q << (is_final(q) ? " [shape=doublecircle]" : "") << ";\n";
    out << "  }\n";
  }
  if (dead_node) out << "  qdead [label=\"&Omega;\"];\n";
  out << "  start -> q" << a.initial() << ";\n";
  emit_edges(out, a.alphabet(), a.state_count(), edges);
  out << "}\n";
  return out.str();
}

}  // namespace

Json language_to_json(const BlockLanguage& lang) {
  Json j = Json::object();
  j["k"] = lang.k();
  j["ell"] = lang.ell();
  j["bitmap"] = lang.bits().to_string();
  return j;
}

BlockLanguage language_from_json(const Json& j) {
  const auto k = field<std::uint32_t>(j, "k");
  const auto ell = field<std::size_t>(j, "ell");
  const auto bitmap = field<std::string>(j, "bitmap");
  return BlockLanguage(Alphabet(k), ell, BitSeq::from_string(bitmap));
}

BlockLanguage read_word_list(std::istream& in, std::uint32_t k) {
  const Alphabet alphabet(k);
  std::vector<Word> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim_line(line);
    if (text.empty()) continue;
    Word w = alphabet.parse(text);
    if (!words.empty() && w.size() != words.front().size())
      throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(line_no) + ": word length " +
                                                 std::to_string(w.size()) + " differs from " +
                                                 std::to_string(words.front().size()));
    words.push_back(std::move(w));
  }
  if (words.empty()) throw Error(ErrorKind::Parse, "word list is empty; the word length is unknown");
  return from_words(alphabet, words.front().size(), words);
}

Json automaton_to_json(const RankedDFA& dfa) {
  Json j = Json::object();
  j["k"] = dfa.k();
  j["ell"] = dfa.ell();
  const auto dead = static_cast<StateId>(dfa.state_count());
  Json states = Json::array();
  for (StateId q = 0; q < dfa.state_count(); ++q)
    states.push_back({{"id", q}, {"rank", dfa.rank(q)}, {"final", q == dfa.final_state()}});
  states.push_back({{"id", dead}, {"rank", nullptr}, {"final", false}});
  j["states"] = std::move(states);
  j["initial"] = dfa.initial();
  j["dead"] = dead;
  Json transitions = Json::array();
  for (StateId q = 0; q < dfa.state_count(); ++q)
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(q, s);
      transitions.push_back({q, s, to == kDead ? dead : to});
    }
  for (Symbol s = 0; s < dfa.k(); ++s) transitions.push_back({dead, s, dead});
  j["transitions"] = std::move(transitions);
  return j;
}

Json automaton_to_json(const RankedNFA& nfa) {
  Json j = Json::object();
  j["k"] = nfa.k();
  j["ell"] = nfa.ell();
  Json states = Json::array();
  for (StateId q = 0; q < nfa.state_count(); ++q)
    states.push_back({{"id", q}, {"rank", nfa.rank(q)}, {"final", q == nfa.final_state()}});
  j["states"] = std::move(states);
  j["initial"] = nfa.initial();
  j["dead"] = nullptr;
  Json transitions = Json::array();
  for (StateId q = 0; q < nfa.state_count(); ++q)
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId to : nfa.successors(q, s)) transitions.push_back({q, s, to});
  j["transitions"] = std::move(transitions);
  return j;
}

Json automaton_to_json(const GeneralDFA& dfa) {
  Json j = Json::object();
  j["k"] = dfa.k();
  j["ell"] = nullptr;
  Json states = Json::array();
  for (StateId q = 0; q < dfa.state_count(); ++q)
    states.push_back({{"id", q}, {"rank", nullptr}, {"final", dfa.accepting(q)}});
  j["states"] = std::move(states);
  j["initial"] = dfa.initial();
  j["dead"] = nullptr;
  Json transitions = Json::array();
  for (StateId q = 0; q < dfa.state_count(); ++q)
    for (Symbol s = 0; s < dfa.k(); ++s) transitions.push_back({q, s, dfa.next(q, s)});
  j["transitions"] = std::move(transitions);
  return j;
}

Json automaton_to_json(const GeneralNFA& nfa) {
  Json j = Json::object();
  j["k"] = nfa.k();
  j["ell"] = nullptr;
  Json states = Json::array();
  for (StateId q = 0; q < nfa.state_count(); ++q)
    states.push_back({{"id", q}, {"rank", nullptr}, {"final", nfa.accepting(q)}});
  j["states"] = std::move(states);
  j["initial"] = nfa.initial();
  j["dead"] = nullptr;
  Json transitions = Json::array();
  for (StateId q = 0; q < nfa.state_count(); ++q)
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId to : nfa.successors(q, s)) transitions.push_back({q, s, to});
  j["transitions"] = std::move(transitions);
  return j;
}

RankedDFA ranked_dfa_from_json(const Json& j) {
  const auto k = field<std::uint32_t>(j, "k");
  const auto ell = field<std::size_t>(j, "ell");
  const Json& states = j.at("states");
  const StateId dead = j.contains("dead") && !j.at("dead").is_null() ? j.at("dead").get<StateId>() : kNoState;
  RankedDFA dfa(Alphabet(k), ell);
  std::vector<StateId> id(states.size(), kNoState);
  for (const Json& s : states) {
    const auto q = field<StateId>(s, "id");
    if (q >= states.size()) throw Error(ErrorKind::Parse, "state ids must be 0 .. n-1");
    if (q == dead) continue;
    id[q] = dfa.add_state(field<std::size_t>(s, "rank"));
  }
  for (const Json& s : states)
    if (field<bool>(s, "final")) dfa.add_final(id[field<StateId>(s, "id")]);
  for (const Json& t : j.at("transitions")) {
    const auto from = t.at(0).get<StateId>();
    const auto symbol = t.at(1).get<Symbol>();
    const auto to = t.at(2).get<StateId>();
    if (from >= id.size() || to >= id.size() || symbol >= k) throw Error(ErrorKind::Parse, "transition out of range");
    if (from == dead) continue;
    dfa.set_transition(id[from], symbol, to == dead ? kDead : id[to]);
  }
  dfa.set_initial(id.at(field<StateId>(j, "initial")));
  return dfa;
}

RankedNFA ranked_nfa_from_json(const Json& j) {
  const auto k = field<std::uint32_t>(j, "k");
  const auto ell = field<std::size_t>(j, "ell");
  const Json& states = j.at("states");
  RankedNFA nfa(Alphabet(k), ell);
  std::vector<std::size_t> rank(states.size());
  for (const Json& s : states) {
    const auto q = field<StateId>(s, "id");
    if (q >= states.size()) throw Error(ErrorKind::Parse, "state ids must be 0 .. n-1");
    rank[q] = field<std::size_t>(s, "rank");
  }
  for (const std::size_t r : rank) nfa.add_state(r);
  for (const Json& s : states)
    if (field<bool>(s, "final")) nfa.add_final(field<StateId>(s, "id"));
  for (const Json& t : j.at("transitions")) {
    const auto from = t.at(0).get<StateId>();
    const auto symbol = t.at(1).get<Symbol>();
    const auto to = t.at(2).get<StateId>();
    if (from >= states.size() || to >= states.size() || symbol >= k)
      throw Error(ErrorKind::Parse, "transition out of range");
    nfa.add_transition(from, symbol, to);
  }
  nfa.set_initial(field<StateId>(j, "initial"));
  return nfa;
}

std::string to_dot(const RankedDFA& dfa, bool show_dead) {
  std::string dot = ranked_dot(
      dfa, [&](StateId q) { return q == dfa.final_state(); },
      [&](StateId q, auto&& visit) {
        for (Symbol s = 0; s < dfa.k(); ++s)
          if (const StateId to = dfa.next(q, s); to != kDead) visit(s, to);
      },
      show_dead);
  if (!show_dead) return dot;
  std::ostringstream extra;
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    std::string label;
    for (Symbol s = 0; s < dfa.k(); ++s)
      if (dfa.next(q, s) == kDead) label += (label.empty() ? "" : ",") + dfa.alphabet().glyph(s);
    if (!label.empty()) extra << "  q" << q << " -> qdead [label=\"" << label << "\"];\n";
  }
  dot.insert(dot.size() - 2, extra.str());
  return dot;
}

std::string to_dot(const RankedNFA& nfa) {
  return ranked_dot(
      nfa, [&](StateId q) { return q == nfa.final_state(); },
      [&](StateId q, auto&& visit) {
        for (Symbol s = 0; s < nfa.k(); ++s)
          for (const StateId to : nfa.successors(q, s)) visit(s, to);
      },
      false);
}

std::string to_dot(const GeneralDFA& dfa) {
  std::ostringstream out;
  out << "digraph A {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n";
  for (StateId q = 0; q < dfa.state_count(); ++q)
    if (dfa.accepting(q)) out << "  q" << q << " [shape=doublecircle];\n";
  out << "  start -> q" << dfa.initial() << ";\n";
  emit_edges(out, dfa.alphabet(), dfa.state_count(), [&](StateId q, auto&& visit) {
    for (Symbol s = 0; s < dfa.k(); ++s) visit(s, dfa.next(q, s));
  });
  out << "}\n";
  return out.str();
}

std::string to_dot(const GeneralNFA& nfa) {
  std::ostringstream out;
  out << "digraph A {\n  rankdir=LR;\n  node [shape=circle];\n  start [shape=point];\n";
  for (StateId q = 0; q < nfa.state_count(); ++q)
    if (nfa.accepting(q)) out << "  q" << q << " [shape=doublecircle];\n";
  out << "  start -> q" << nfa.initial() << ";\n";
  emit_edges(out, nfa.alphabet(), nfa.state_count(), [&](StateId q, auto&& visit) {
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId to : nfa.successors(q, s)) visit(s, to);
  });
  out << "}\n";
  return out.str();
}

Json report_to_json(const ComplexityReport& report) {
  Json j = Json::object();
  j["k"] = report.k;
  j["ell"] = report.ell;
  j["words"] = report.words;
  j["empty"] = report.empty;
  j["dsc"] = report.dsc;
  if (report.nsc_measured) {
    j["nsc"] = report.nsc;
    j["nsc_exact"] = report.nsc_exact;
  } else {
    j["nsc"] = nullptr;
  }
  j["dfa_widths"] = widths_json(report.dfa_widths);
  if (report.nsc_measured && !report.nfa_widths.widths.empty()) j["nfa_widths"] = widths_json(report.nfa_widths);
  Json formulas = Json::object();
  for (const auto& [name, value] : report.formula_values) formulas[name] = value;
  j["formula_values"] = std::move(formulas);
  return j;
}

Json outcome_to_json(const OpOutcome& outcome) {
  Json j = Json::object();
  j["op"] = outcome.op;
  Json operands = Json::array();
  for (const auto& r : outcome.operands) operands.push_back(report_to_json(r));
  j["operands"] = std::move(operands);
  j["result"] = report_to_json(outcome.result);
  j["formula"] = outcome.formula ? Json(*outcome.formula) : Json(nullptr);
  j["exact"] = outcome.exact();
  j["relation"] = outcome.relation;
  j["nsc_formula"] = outcome.nsc_formula ? Json(*outcome.nsc_formula) : Json(nullptr);
  j["nsc_relation"] = outcome.nsc_relation;
  j["route_agreement"] = outcome.route_agreement;
  j["dsc_ok"] = outcome.dsc_ok;
  j["nsc_ok"] = outcome.nsc_ok;
  j["notes"] = outcome.notes;
  return j;
}

Json bound_params_to_json(const BoundParams& p) {
  Json j = Json::object();
  j["k"] = p.k;
  j["ell"] = p.ell;
  j["r"] = p.r;
  j["x"] = p.x;
  j["r_kl"] = p.r_kl;
  j["t"] = p.t.str();
  j["max_dsc"] = p.max_dsc.str();
  return j;
}

std::string report_to_markdown(const ComplexityReport& report) {
  auto widths = [](const WidthProfile& w) {
    std::string s;
    for (const std::size_t v : w.top_down()) s += (s.empty() ? "" : ", ") + std::to_string(v);
    return s;
  };
  std::ostringstream out;
  out << "| quantity | value |\n|---|---|\n";
  out << "| k | " << report.k << " |\n| ell | " << report.ell << " |\n| words | " << report.words << " |\n";
  out << "| dsc | " << report.dsc << " |\n";
  if (report.nsc_measured)
    out << "| nsc | " << report.nsc << (report.nsc_exact ? "" : " (upper bound)") << " |\n";
  out << "| DFA widths (rank ell..0) | " << widths(report.dfa_widths) << (report.dfa_widths.has_dead ? " + dead" : "")
      << " |\n";
  if (report.nsc_measured && !report.nfa_widths.widths.empty())
    out << "| NFA widths (rank ell..0) | " << widths(report.nfa_widths) << " |\n";
  for (const auto& [name, value] : report.formula_values) out << "| " << name << " | " << value << " |\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
}

BlockLanguage read_language_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
  return language_from_json(j);
}

}  // namespace blockset
