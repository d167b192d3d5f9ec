#pragma once

// Minimal automata straight from a bitmap.
//
// The minimal DFA has one state per distinct nonzero factor. The NFA replaces
// each rank's factor set by a minimum cover: a smaller set of bit sequences
// whose ORs rebuild every factor.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "blockset/automata.hpp"
#include "blockset/block_language.hpp"
#include "blockset/error.hpp"

namespace blockset {

inline constexpr std::uint64_t kDefaultCoverBudget = 10'000'000;

struct Cover {
  std::size_t rank = 0;
  // Sorted in canonical bit-sequence order.
  std::vector<BitSeq> members;
  // rho[t] lists indices into members whose OR equals targets[t].
  std::vector<std::vector<std::size_t>> rho;
  // False when the search ran out of budget and this is the greedy cover.
  bool optimal = true;
};

class CoverBudgetExceeded : public Error {
 public:
  CoverBudgetExceeded(Cover fallback, std::uint64_t nodes);

  const Cover& fallback() const noexcept { return fallback_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Cover fallback_;
  std::uint64_t nodes_;
};

// Minimum-size cover of `targets` (factors of length k^rank) by sequences whose
// k blocks each lie in `parts` or are zero. Among minimum covers the one with
// the lexicographically least sorted member list is returned.
Cover minimal_cover(std::size_t rank, std::span<const BitSeq> targets, std::span<const BitSeq> parts,
                    std::uint32_t k, std::uint64_t budget = kDefaultCoverBudget);

// Throws Error{EmptyLanguage} for the all-zero bitmap.
RankedDFA min_dfa_from_bitmap(const BlockLanguage& lang);

struct NfaSynthesis {
  RankedNFA nfa;
  // covers[i] is the cover used at rank i.
  std::vector<Cover> covers;
  bool exact = true;
};

// With allow_fallback, ranks whose search exceeds the budget use the greedy
// cover and `exact` is cleared; otherwise CoverBudgetExceeded propagates.
NfaSynthesis synthesize_nfa(const BlockLanguage& lang, std::uint64_t budget = kDefaultCoverBudget,
                            bool allow_fallback = true);
RankedNFA min_nfa_from_bitmap(const BlockLanguage& lang, std::uint64_t budget = kDefaultCoverBudget);

struct MeasureOptions {
  bool nsc = true;
  std::uint64_t cover_budget = kDefaultCoverBudget;
};

struct ComplexityReport {
  std::uint32_t k = 0;
  std::size_t ell = 0;
  std::size_t words = 0;
  std::size_t dsc = 0;
  std::size_t nsc = 0;
  bool nsc_measured = false;
  // False when some rank fell back to a greedy cover: nsc is then an upper bound.
  bool nsc_exact = true;
  bool empty = false;
  WidthProfile dfa_widths;
  WidthProfile nfa_widths;
  std::map<std::string, std::int64_t> formula_values;
};

// dsc counts the dead state. Throws Error{EmptyLanguage} for the empty bitmap.
ComplexityReport measure(const BlockLanguage& lang, const MeasureOptions& options = {});
// Report for the empty language: the dead state alone, dsc = 1, nsc = 0.
ComplexityReport empty_report(std::uint32_t k, std::size_t ell);

}  // namespace blockset
