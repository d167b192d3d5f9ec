#pragma once

// File formats: language JSON, word lists, automaton JSON, DOT, and JSON /
// Markdown renderings of reports.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "blockset/automata.hpp"
#include "blockset/block_language.hpp"
#include "blockset/lang_ops.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"
#include "json.hpp"

namespace blockset {

using Json = nlohmann::ordered_json;

// {"k": int, "ell": int, "bitmap": "0110..."}
Json language_to_json(const BlockLanguage& lang);
BlockLanguage language_from_json(const Json& j);

// One word per line; blank lines ignored; all words must share one length.
BlockLanguage read_word_list(std::istream& in, std::uint32_t k);

// {"k", "ell", "states": [{"id", "rank", "final"}], "initial", "dead",
//  "transitions": [[from, symbol, to], ...]}. A ranked DFA's dead state is
// materialised as the last id with self-loops on every symbol.
Json automaton_to_json(const RankedDFA& dfa);
Json automaton_to_json(const RankedNFA& nfa);
Json automaton_to_json(const GeneralDFA& dfa);
Json automaton_to_json(const GeneralNFA& nfa);
RankedDFA ranked_dfa_from_json(const Json& j);
RankedNFA ranked_nfa_from_json(const Json& j);

// Ranks become same-rank clusters laid out from rank ell down to 0.
std::string to_dot(const RankedDFA& dfa, bool show_dead = false);
std::string to_dot(const RankedNFA& nfa);
std::string to_dot(const GeneralDFA& dfa);
std::string to_dot(const GeneralNFA& nfa);

Json report_to_json(const ComplexityReport& report);
Json outcome_to_json(const OpOutcome& outcome);
Json bound_params_to_json(const BoundParams& params);
std::string report_to_markdown(const ComplexityReport& report);

std::string read_file(const std::filesystem::path& path);
// Throws Error{Parse} when the file cannot be written.
void write_file(const std::filesystem::path& path, std::string_view content);
BlockLanguage read_language_file(const std::filesystem::path& path);

}  // namespace blockset
