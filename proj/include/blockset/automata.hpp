#pragma once

// Ranked (leveled) automata for block languages, and the general DFAs that
// star/plus constructions produce.
//
// A ranked automaton for words of length ell places its single initial state
// at rank ell and its single final state at rank 0; every transition goes from
// rank i to rank i-1. Ranked DFAs leave the dead state implicit: a missing
// transition is kDead, and the dead state is counted once in size().

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "blockset/block_language.hpp"

namespace blockset {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr StateId kDead = kNoState - 1;

struct WidthProfile {
  // widths[i] is the number of states of rank i (m_i); index 0 is the final rank.
  std::vector<std::size_t> widths;
  bool has_dead = false;

  std::size_t ell() const noexcept { return widths.empty() ? 0 : widths.size() - 1; }
  std::size_t ranked_states() const noexcept;
  std::size_t total() const noexcept { return ranked_states() + (has_dead ? 1 : 0); }
  std::size_t max_width() const noexcept;
  // m_ell ... m_0, the order used in reports.
  std::vector<std::size_t> top_down() const;

  friend bool operator==(const WidthProfile&, const WidthProfile&) = default;
};

class RankedNFA {
 public:
  RankedNFA(Alphabet alphabet, std::size_t ell) : alphabet_(alphabet), ell_(ell) {}

  StateId add_state(std::size_t rank);
  void add_transition(StateId from, Symbol symbol, StateId to);
  void set_initial(StateId q) noexcept { initial_ = q; }
  void add_final(StateId q) { finals_.push_back(q); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t k() const noexcept { return alphabet_.size(); }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t state_count() const noexcept { return rank_.size(); }
  std::size_t rank(StateId q) const noexcept { return rank_[q]; }
  StateId initial() const noexcept { return initial_; }
  std::span<const StateId> finals() const noexcept { return finals_; }
  StateId final_state() const noexcept { return finals_.size() == 1 ? finals_.front() : kNoState; }
  // Sorted, duplicate-free successor list.
  std::span<const StateId> successors(StateId q, Symbol symbol) const noexcept { return delta_[q * k() + symbol]; }
  std::size_t transition_count() const noexcept;

 private:
  Alphabet alphabet_;
  std::size_t ell_;
  std::vector<std::size_t> rank_;
  StateId initial_ = kNoState;
  std::vector<StateId> finals_;
  std::vector<std::vector<StateId>> delta_;
};

class RankedDFA {
 public:
  RankedDFA(Alphabet alphabet, std::size_t ell) : alphabet_(alphabet), ell_(ell) {}

  StateId add_state(std::size_t rank);
  void set_transition(StateId from, Symbol symbol, StateId to) noexcept { delta_[from * k() + symbol] = to; }
  void set_initial(StateId q) noexcept { initial_ = q; }
  void add_final(StateId q) { finals_.push_back(q); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t k() const noexcept { return alphabet_.size(); }
  std::size_t ell() const noexcept { return ell_; }
  // Ranked states only; the dead state is not included.
  std::size_t state_count() const noexcept { return rank_.size(); }
  // Size of the complete DFA: ranked states plus the dead state.
  std::size_t size() const noexcept { return rank_.size() + 1; }
  std::size_t rank(StateId q) const noexcept { return rank_[q]; }
  StateId initial() const noexcept { return initial_; }
  std::span<const StateId> finals() const noexcept { return finals_; }
  StateId final_state() const noexcept { return finals_.size() == 1 ? finals_.front() : kNoState; }
  StateId next(StateId q, Symbol symbol) const noexcept { return delta_[q * k() + symbol]; }

  friend bool operator==(const RankedDFA&, const RankedDFA&) = default;

 private:
  Alphabet alphabet_;
  std::size_t ell_;
  std::vector<std::size_t> rank_;
  StateId initial_ = kNoState;
  std::vector<StateId> finals_;
  std::vector<StateId> delta_;
};

// Complete DFA without rank labels (star/plus results are cyclic).
class GeneralDFA {
 public:
  explicit GeneralDFA(Alphabet alphabet) : alphabet_(alphabet) {}

  StateId add_state(bool accepting);
  void set_transition(StateId from, Symbol symbol, StateId to) noexcept { delta_[from * k() + symbol] = to; }
  void set_initial(StateId q) noexcept { initial_ = q; }
  void set_accepting(StateId q, bool accepting) { accepting_[q] = accepting; }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t k() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool accepting(StateId q) const noexcept { return accepting_[q] != 0; }
  StateId next(StateId q, Symbol symbol) const noexcept { return delta_[q * k() + symbol]; }
  bool accepts(const Word& word) const;

  friend bool operator==(const GeneralDFA&, const GeneralDFA&) = default;

 private:
  Alphabet alphabet_;
  StateId initial_ = kNoState;
  std::vector<unsigned char> accepting_;
  std::vector<StateId> delta_;
};

// Unranked NFA with a single initial state; used for star/plus NFA constructions.
class GeneralNFA {
 public:
  explicit GeneralNFA(Alphabet alphabet) : alphabet_(alphabet) {}

  StateId add_state(bool accepting);
  void add_transition(StateId from, Symbol symbol, StateId to);
  void set_initial(StateId q) noexcept { initial_ = q; }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t k() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return accepting_.size(); }
  StateId initial() const noexcept { return initial_; }
  bool accepting(StateId q) const noexcept { return accepting_[q] != 0; }
  std::span<const StateId> successors(StateId q, Symbol symbol) const noexcept { return delta_[q * k() + symbol]; }
  bool accepts(const Word& word) const;

 private:
  Alphabet alphabet_;
  StateId initial_ = kNoState;
  std::vector<unsigned char> accepting_;
  std::vector<std::vector<StateId>> delta_;
};

RankedNFA to_nfa(const RankedDFA& dfa);

// Checks rank discipline, a single final state and trimness.
// Throws Error{NotRanked | NotTrim | MultipleFinals}.
WidthProfile validate(const RankedNFA& nfa);
WidthProfile validate(const RankedDFA& dfa);

bool accepts(const RankedNFA& nfa, const Word& word);
bool accepts(const RankedDFA& dfa, const Word& word);

BlockLanguage enumerate_language(const RankedNFA& nfa);
BlockLanguage enumerate_language(const RankedDFA& dfa);

RankedDFA determinize(const RankedNFA& nfa);

// Merges equivalent states rank by rank, starting from rank 0 (Revuz).
RankedDFA minimize_ranked(const RankedDFA& dfa);

// Partition refinement (Hopcroft) on a complete DFA; unreachable states are
// dropped first.
GeneralDFA minimize_general(const GeneralDFA& dfa);

RankedNFA reverse_nfa(const RankedNFA& nfa);
RankedNFA reverse_nfa(const RankedDFA& dfa);

// Renumbers states breadth-first from the initial state, visiting successors
// in symbol order, and drops unreachable states. Isomorphic automata have
// equal canonical forms.
RankedDFA canonical(const RankedDFA& dfa);
GeneralDFA canonical(const GeneralDFA& dfa);

// Throws Error{LengthMismatch} when the alphabets differ. Ranked automata of
// different word lengths are never equivalent (their languages are nonempty).
bool equivalent(const RankedNFA& a, const RankedNFA& b);
bool equivalent(const RankedDFA& a, const RankedDFA& b);
bool equivalent(const GeneralDFA& a, const GeneralDFA& b);

}  // namespace blockset
