#include "blockset/synthesis.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "blockset/witnesses.hpp"

namespace blockset {
namespace {

struct OutOfBudget {};

// Exact set cover over "elements" = (target, set bit) pairs. A candidate covers
// the bits it shares with every target it is a subset of.
class CoverSearch {
 public:
  CoverSearch(std::size_t rank, std::span<const BitSeq> targets, std::span<const BitSeq> parts, std::uint32_t k,
              std::uint64_t budget)
      : rank_(rank), targets_(targets), parts_(parts), k_(k), budget_(budget) {}

  Cover run() {
    try {
      build_candidates();
      build_coverage();
      greedy_ = greedy();
      const std::size_t size = minimum_size();
      return finish(lex_least(size), true);
    } catch (const OutOfBudget&) {
      Cover fallback = greedy_.empty() ? trivial() : finish(greedy_, false);
      fallback.optimal = false;
      throw CoverBudgetExceeded(std::move(fallback), used_);
    }
  }

 private:
  void spend(std::uint64_t n) {
    used_ += n;
    if (used_ > budget_) throw OutOfBudget{};
  }

  void build_candidates() {
    const std::size_t length = targets_.front().size();
    const std::size_t block = length / k_;
    std::unordered_set<BitSeq, BitHash, BitEqual> seen;
    std::vector<std::vector<const BitSeq*>> options(k_);
    std::vector<std::size_t> pick(k_);
    for (const BitSeq& s : targets_) {
      std::uint64_t product = 1;
      for (std::uint32_t j = 0; j < k_; ++j) {
        const BitView piece = s.slice(j * block, block);
        options[j].assign(1, nullptr);
        if (!piece.none())
          for (const BitSeq& p : parts_)
            if (p.view().is_subset_of(piece)) options[j].push_back(&p);
        product = product > budget_ ? product : product * options[j].size();
      }
      spend(parts_.size() * k_ + product);
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        BitSeq c;
        for (std::uint32_t j = 0; j < k_; ++j) {
          if (const BitSeq* p = options[j][pick[j]])
            c.append(*p);
          else
            c.append_zeros(block);
        }
        if (!c.none() && seen.find(c.view()) == seen.end()) {
          seen.insert(c);
          candidates_.push_back(std::move(c));
        }
        std::uint32_t j = k_;
        while (j-- > 0) {
          if (++pick[j] < options[j].size()) break;
          pick[j] = 0;
        }
        if (j == std::numeric_limits<std::uint32_t>::max()) break;
      }
    }
    std::sort(candidates_.begin(), candidates_.end());
  }

  void build_coverage() {
    const std::size_t length = targets_.front().size();
    std::vector<std::vector<std::uint32_t>> element_of(targets_.size());
    elements_ = 0;
    for (std::size_t t = 0; t < targets_.size(); ++t) {
      element_of[t].assign(length, 0);
      for (std::size_t p = 0; p < length; ++p)
        if (targets_[t].test(p)) element_of[t][p] = static_cast<std::uint32_t>(elements_++);
    }
    words_ = (elements_ + kWordBits - 1) / kWordBits;
    spend(static_cast<std::uint64_t>(candidates_.size()) * targets_.size());
    coverage_.assign(candidates_.size() * words_, 0);
    covering_.assign(elements_, {});
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      word_t* cov = coverage_.data() + c * words_;
      for (std::size_t t = 0; t < targets_.size(); ++t) {
        if (!candidates_[c].view().is_subset_of(targets_[t])) continue;
        for (std::size_t p = 0; p < length; ++p)
          if (candidates_[c].test(p)) {
            const std::uint32_t e = element_of[t][p];
            cov[e / kWordBits] |= word_t{1} << (e % kWordBits);
            covering_[e].push_back(static_cast<std::uint32_t>(c));
          }
      }
    }
    banned_.assign(candidates_.size(), 0);
  }

  const word_t* cov(std::size_t c) const noexcept { return coverage_.data() + c * words_; }

  std::vector<word_t> universe() const {
    std::vector<word_t> u(words_, ~word_t{0});
    if (elements_ % kWordBits != 0) u.back() = (word_t{1} << (elements_ % kWordBits)) - 1;
    return u;
  }

  std::size_t gain(const std::vector<word_t>& uncovered, std::size_t c) const noexcept {
    std::size_t g = 0;
    const word_t* v = cov(c);
    for (std::size_t w = 0; w < words_; ++w) g += static_cast<std::size_t>(std::popcount(uncovered[w] & v[w]));
    return g;
  }

  static std::size_t weight(const std::vector<word_t>& bits) noexcept {
    std::size_t n = 0;
    for (const word_t w : bits) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  void remove(std::vector<word_t>& uncovered, std::size_t c) const noexcept {
    const word_t* v = cov(c);
    for (std::size_t w = 0; w < words_; ++w) uncovered[w] &= ~v[w];
  }

  std::vector<std::size_t> greedy() {
    std::vector<word_t> uncovered = universe();
    std::vector<std::size_t> chosen;
    while (weight(uncovered) != 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t c = 0; c < candidates_.size(); ++c)
        if (const std::size_t g = gain(uncovered, c); g > best_gain) {
          best = c;
          best_gain = g;
        }
      chosen.push_back(best);
      remove(uncovered, best);
    }
    for (std::size_t i = chosen.size(); i-- > 0;) {
      std::vector<word_t> rest = universe();
      for (std::size_t j = 0; j < chosen.size(); ++j)
        if (j != i) remove(rest, chosen[j]);
      if (weight(rest) == 0) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  bool allowed(std::size_t c) const noexcept { return c >= start_ && !banned_[c]; }

  // Is there a set of at most `depth` allowed candidates covering `uncovered`?
  bool feasible(const std::vector<word_t>& uncovered, std::size_t depth) {
    const std::size_t remaining = weight(uncovered);
    if (remaining == 0) return true;
    if (depth == 0) return false;
    spend(1);

    std::size_t pivot = 0, fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t w = 0; w < words_; ++w)
      for (word_t rest = uncovered[w]; rest != 0; rest &= rest - 1) {
        const std::size_t e = w * kWordBits + static_cast<std::size_t>(std::countr_zero(rest));
        std::size_t n = 0;
        for (const std::uint32_t c : covering_[e]) n += allowed(c) ? 1 : 0;
        if (n == 0) return false;
        if (n < fewest) {
          fewest = n;
          pivot = e;
        }
      }

    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < candidates_.size(); ++c)
      if (allowed(c)) best_gain = std::max(best_gain, gain(uncovered, c));
    if (best_gain * depth < remaining) return false;

    std::vector<std::pair<std::size_t, std::uint32_t>> branch;
    for (const std::uint32_t c : covering_[pivot])
      if (allowed(c)) branch.emplace_back(gain(uncovered, c), c);
    std::stable_sort(branch.begin(), branch.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<std::uint32_t> excluded;
    bool found = false;
    for (const auto& [g, c] : branch) {
      std::vector<word_t> next = uncovered;
      remove(next, c);
      if (feasible(next, depth - 1)) {
        found = true;
        break;
      }
      // c is exhausted for the remaining siblings
      banned_[c] = 1;
      excluded.push_back(c);
    }
    for (const std::uint32_t c : excluded) banned_[c] = 0;
    return found;
  }

  std::size_t minimum_size() {
    start_ = 0;
    for (std::size_t d = 1; d < greedy_.size(); ++d)
      if (feasible(universe(), d)) return d;
    return greedy_.size();
  }

  std::vector<std::size_t> lex_least(std::size_t size) {
    std::vector<std::size_t> chosen;
    std::vector<word_t> uncovered = universe();
    std::size_t start = 0;
    for (std::size_t step = 0; step < size; ++step) {
      bool placed = false;
      for (std::size_t c = start; c < candidates_.size() && !placed; ++c) {
        if (gain(uncovered, c) == 0) continue;
        std::vector<word_t> next = uncovered;
        remove(next, c);
        start_ = c + 1;
        if (feasible(next, size - step - 1)) {
          chosen.push_back(c);
          uncovered = std::move(next);
          start = c + 1;
          placed = true;
        }
      }
      if (!placed) throw std::logic_error("cover search lost a feasible completion");
    }
    start_ = 0;
    return chosen;
  }

  Cover finish(const std::vector<std::size_t>& chosen, bool optimal) const {
    std::vector<BitSeq> members;
    members.reserve(chosen.size());
    for (const std::size_t c : chosen) members.push_back(candidates_[c]);
    return assemble(rank_, targets_, std::move(members), optimal);
  }

  Cover trivial() const {
    std::vector<BitSeq> members(targets_.begin(), targets_.end());
    std::sort(members.begin(), members.end());
    return assemble(rank_, targets_, std::move(members), false);
  }

 public:
  static Cover assemble(std::size_t rank, std::span<const BitSeq> targets, std::vector<BitSeq> members,
                        bool optimal) {
    Cover cover;
    cover.rank = rank;
    cover.optimal = optimal;
    cover.members = std::move(members);
    for (const BitSeq& s : targets) {
      std::vector<std::size_t> below;
      for (std::size_t m = 0; m < cover.members.size(); ++m)
        if (cover.members[m].view().is_subset_of(s)) below.push_back(m);
      for (std::size_t i = 0; i < below.size();) {
        BitSeq acc(s.size());
        for (std::size_t j = 0; j < below.size(); ++j)
          if (j != i) acc |= cover.members[below[j]];
        if (acc == s)
          below.erase(below.begin() + static_cast<std::ptrdiff_t>(i));
        else
          ++i;
      }
      BitSeq acc(s.size());
      for (const std::size_t m : below) acc |= cover.members[m];
      if (acc != s) throw std::logic_error("cover does not rebuild target " + s.to_string());
      cover.rho.push_back(std::move(below));
    }
    return cover;
  }

 private:
  std::size_t rank_;
  std::span<const BitSeq> targets_;
  std::span<const BitSeq> parts_;
  std::uint32_t k_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;

  std::vector<BitSeq> candidates_;
  std::size_t elements_ = 0;
  std::size_t words_ = 0;
  std::vector<word_t> coverage_;
  std::vector<std::vector<std::uint32_t>> covering_;
  std::vector<unsigned char> banned_;
  std::size_t start_ = 0;
  std::vector<std::size_t> greedy_;
};

std::uint64_t power(std::uint64_t k, std::size_t e) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

RankedNFA trim_bfs(const RankedNFA& nfa) {
  std::vector<StateId> renumber(nfa.state_count(), kNoState);
  std::vector<StateId> order{nfa.initial()};
  renumber[nfa.initial()] = 0;
  for (std::size_t at = 0; at < order.size(); ++at)
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId p : nfa.successors(order[at], s))
        if (renumber[p] == kNoState) {
          renumber[p] = static_cast<StateId>(order.size());
          order.push_back(p);
        }
  RankedNFA out(nfa.alphabet(), nfa.ell());
  for (const StateId q : order) out.add_state(nfa.rank(q));
  for (StateId id = 0; id < order.size(); ++id)
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId p : nfa.successors(order[id], s)) out.add_transition(id, s, renumber[p]);
  out.set_initial(0);
  out.add_final(renumber[nfa.final_state()]);
  return out;
}

}  // namespace

CoverBudgetExceeded::CoverBudgetExceeded(Cover fallback, std::uint64_t nodes)
    : Error(ErrorKind::CoverBudgetExceeded, "cover search at rank " + std::to_string(fallback.rank) +
                                                " exceeded its budget after " + std::to_string(nodes) + " nodes"),
      fallback_(std::move(fallback)),
      nodes_(nodes) {}

Cover minimal_cover(std::size_t rank, std::span<const BitSeq> targets, std::span<const BitSeq> parts,
                    std::uint32_t k, std::uint64_t budget) {
  if (targets.empty()) throw Error(ErrorKind::EmptyLanguage, "cover of an empty target set");
  if (rank == 0) {
    std::vector<BitSeq> members(targets.begin(), targets.end());
    std::sort(members.begin(), members.end());
    return CoverSearch::assemble(0, targets, std::move(members), true);
  }
  return CoverSearch(rank, targets, parts, k, budget).run();
}

RankedDFA min_dfa_from_bitmap(const BlockLanguage& lang) {
  if (lang.is_empty()) throw Error(ErrorKind::EmptyLanguage, "no automaton for the empty language");
  const FactorSets sets = factor_sets(lang);
  RankedDFA dfa(lang.alphabet(), lang.ell());
  std::vector<std::vector<StateId>> ids(lang.ell() + 1);
  for (std::size_t rank = 0; rank <= lang.ell(); ++rank)
    for (std::size_t m = 0; m < sets.width(rank); ++m) ids[rank].push_back(dfa.add_state(rank));
  for (std::size_t rank = 1; rank <= lang.ell(); ++rank) {
    const std::uint64_t block = power(lang.k(), rank - 1);
    const auto members = sets.members(rank);
    for (std::size_t m = 0; m < members.size(); ++m)
      for (Symbol s = 0; s < lang.k(); ++s) {
        const BitView piece = members[m].slice(s * block, block);
        if (piece.none()) continue;
        dfa.set_transition(ids[rank][m], s, ids[rank - 1][*sets.find(rank - 1, piece)]);
      }
  }
  dfa.set_initial(ids[lang.ell()].front());
  dfa.add_final(ids[0].front());
  return canonical(dfa);
}

NfaSynthesis synthesize_nfa(const BlockLanguage& lang, std::uint64_t budget, bool allow_fallback) {
  if (lang.is_empty()) throw Error(ErrorKind::EmptyLanguage, "no automaton for the empty language");
  const FactorSets sets = factor_sets(lang);
  std::vector<Cover> covers(lang.ell() + 1);
  bool exact = true;
  for (std::size_t rank = 0; rank <= lang.ell(); ++rank) {
    const auto parts = rank == 0 ? std::span<const BitSeq>{} : sets.members(rank - 1);
    try {
      covers[rank] = minimal_cover(rank, sets.members(rank), parts, lang.k(), budget);
    } catch (const CoverBudgetExceeded& e) {
      if (!allow_fallback) throw;
      covers[rank] = e.fallback();
      exact = false;
    }
  }

  RankedNFA nfa(lang.alphabet(), lang.ell());
  std::vector<std::vector<StateId>> ids(lang.ell() + 1);
  for (std::size_t rank = 0; rank <= lang.ell(); ++rank)
    for (std::size_t m = 0; m < covers[rank].members.size(); ++m) ids[rank].push_back(nfa.add_state(rank));
  for (std::size_t rank = 1; rank <= lang.ell(); ++rank) {
    const std::uint64_t block = power(lang.k(), rank - 1);
    const auto& members = covers[rank].members;
    for (std::size_t m = 0; m < members.size(); ++m)
      for (Symbol s = 0; s < lang.k(); ++s) {
        const BitView piece = members[m].slice(s * block, block);
        if (piece.none()) continue;
        const auto target = sets.find(rank - 1, piece);
        if (!target) throw std::logic_error("cover member block outside the factor set");
        for (const std::size_t to : covers[rank - 1].rho[*target]) nfa.add_transition(ids[rank][m], s, ids[rank - 1][to]);
      }
  }
  nfa.set_initial(ids[lang.ell()].front());
  nfa.add_final(ids[0].front());
  return NfaSynthesis{trim_bfs(nfa), std::move(covers), exact};
}

RankedNFA min_nfa_from_bitmap(const BlockLanguage& lang, std::uint64_t budget) {
  return synthesize_nfa(lang, budget, false).nfa;
}

ComplexityReport measure(const BlockLanguage& lang, const MeasureOptions& options) {
  if (lang.is_empty()) throw Error(ErrorKind::EmptyLanguage, "complexity of the empty language");
  ComplexityReport report;
  report.k = lang.k();
  report.ell = lang.ell();
  report.words = lang.word_count();
  report.dfa_widths = validate(min_dfa_from_bitmap(lang));
  report.dsc = report.dfa_widths.total();
  if (options.nsc) {
    const NfaSynthesis syn = synthesize_nfa(lang, options.cover_budget, true);
    report.nfa_widths = validate(syn.nfa);
    report.nsc = syn.nfa.state_count();
    report.nsc_exact = syn.exact;
    report.nsc_measured = true;
    if (report.nsc > report.dsc) throw std::logic_error("nsc exceeds dsc");
  }
  if (lang.k() >= 2) {
    try {
      const BoundParams p = bound_params(lang.k(), lang.ell());
      if (p.max_dsc <= std::numeric_limits<std::int64_t>::max())
        report.formula_values["max_dsc"] = static_cast<std::int64_t>(p.max_dsc);
      if (p.t <= std::numeric_limits<std::int64_t>::max())
        report.formula_values["max_width"] = static_cast<std::int64_t>(p.t);
      report.formula_values["r"] = static_cast<std::int64_t>(p.r);
      report.formula_values["r_kl"] = static_cast<std::int64_t>(p.r_kl);
    } catch (const Error&) {
    }
  }
  return report;
}

ComplexityReport empty_report(std::uint32_t k, std::size_t ell) {
  ComplexityReport report;
  report.k = k;
  report.ell = ell;
  report.dsc = 1;
  report.nsc = 0;
  report.empty = true;
  report.nsc_measured = true;
  report.dfa_widths.widths.assign(ell + 1, 0);
  report.dfa_widths.has_dead = true;
  report.nfa_widths.widths.assign(ell + 1, 0);
  return report;
}

}  // namespace blockset
