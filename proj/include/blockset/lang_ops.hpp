#pragma once

// Language operations on the automaton side, each paired with its bitmap twin
// by run_op, which also instantiates the state-complexity formula for the
// operands and checks the measured result against it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "blockset/automata.hpp"
#include "blockset/block_language.hpp"
#include "blockset/synthesis.hpp"

namespace blockset {

// Rank-synchronised products, trimmed and minimized. Throw
// Error{LengthMismatch} on different k or ell and Error{EmptyLanguage} when
// the result is empty.
RankedDFA intersect_dfa(const RankedDFA& a, const RankedDFA& b);
RankedDFA union_dfa(const RankedDFA& a, const RankedDFA& b);
// Symmetric difference; with a singleton operand this toggles one word.
RankedDFA xor_dfa(const RankedDFA& a, const RankedDFA& b);

// The final state of `a` becomes the initial state of `b`. Minimized.
RankedDFA concat_dfa(const RankedDFA& a, const RankedDFA& b);

// Sigma^ell \ L(a) via per-rank sink states and a swapped final state.
RankedDFA complement_dfa(const RankedDFA& a);

// Reverse the transitions of the minimal DFA, determinize, minimize.
RankedDFA reverse_via_automaton(const BlockLanguage& lang);
// Minimal DFA of Sigma^ell \ L built from the flipped bitmap.
RankedDFA block_complement(const BlockLanguage& lang);

// Star and plus of the language of a minimal ranked DFA (not minimized).
GeneralDFA star_dfa(const RankedDFA& a);
GeneralDFA plus_dfa(const RankedDFA& a);
GeneralNFA star_nfa(const RankedNFA& a);
GeneralNFA plus_nfa(const RankedNFA& a);
GeneralDFA determinize(const GeneralNFA& nfa);

// Minimal DFAs for L* and L+.
GeneralDFA star(const BlockLanguage& lang);
GeneralDFA plus(const BlockLanguage& lang);

struct OpOutcome {
  std::string op;
  std::vector<ComplexityReport> operands;
  ComplexityReport result;

  // Formula instantiated with the operand widths; relation is "=", "<=" or
  // "+-" (two-sided: |result - operand| <= ell - 1, formula holds m + ell - 1).
  std::optional<std::int64_t> formula;
  std::string relation;
  std::optional<std::int64_t> nsc_formula;
  std::string nsc_relation;

  bool route_agreement = false;
  bool dsc_ok = true;
  bool nsc_ok = true;
  std::vector<std::string> notes;

  std::optional<BlockLanguage> language;
  std::optional<RankedDFA> dfa;
  std::optional<RankedNFA> nfa;
  std::optional<GeneralDFA> general_dfa;
  std::optional<GeneralNFA> general_nfa;

  bool exact() const noexcept { return relation == "="; }
  bool ok() const noexcept { return route_agreement && dsc_ok && nsc_ok; }
};

// Throws Error{NoChange} when the word is already present / absent.
OpOutcome add_word(const BlockLanguage& lang, const Word& word, const MeasureOptions& options = {});
OpOutcome remove_word(const BlockLanguage& lang, const Word& word, const MeasureOptions& options = {});

// op is one of union, intersect, concat, reverse, complement, star, plus,
// add-word, remove-word. Throws Error{Parse} for an unknown op or wrong arity.
OpOutcome run_op(std::string_view op, std::span<const BlockLanguage> operands, const std::optional<Word>& word = {},
                 const MeasureOptions& options = {});

}  // namespace blockset
