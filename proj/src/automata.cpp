#include "blockset/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "blockset/error.hpp"

namespace blockset {
namespace {

std::vector<StateId> states_by_rank(std::span<const std::size_t> ranks) {
  std::vector<StateId> order(ranks.size());
  std::iota(order.begin(), order.end(), StateId{0});
  std::stable_sort(order.begin(), order.end(), [&](StateId a, StateId b) { return ranks[a] < ranks[b]; });
  return order;
}

// Shared checks for both ranked flavours. `edges(q, visit)` calls visit(symbol,
// target) for every non-dead transition of q.
template <typename Edges>
WidthProfile check_ranked(std::size_t ell, std::size_t n, StateId initial, std::span<const StateId> finals,
                          const std::vector<std::size_t>& rank, Edges&& edges) {
  if (initial == kNoState || initial >= n) throw Error(ErrorKind::NotTrim, "automaton has no initial state");
  std::vector<StateId> distinct_finals(finals.begin(), finals.end());
  std::sort(distinct_finals.begin(), distinct_finals.end());
  distinct_finals.erase(std::unique(distinct_finals.begin(), distinct_finals.end()), distinct_finals.end());
  if (distinct_finals.empty()) throw Error(ErrorKind::NotTrim, "automaton has no final state");
  if (distinct_finals.size() > 1)
    throw Error(ErrorKind::MultipleFinals, std::to_string(distinct_finals.size()) + " final states");
  const StateId final_state = distinct_finals.front();
  if (final_state >= n) throw Error(ErrorKind::NotTrim, "final state id out of range");

  if (rank[initial] != ell) throw Error(ErrorKind::NotRanked, "initial state is not at rank ell");
  if (rank[final_state] != 0) throw Error(ErrorKind::NotRanked, "final state is not at rank 0");

  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q) {
    if (rank[q] > ell) throw Error(ErrorKind::NotRanked, "state " + std::to_string(q) + " has rank above ell");
    edges(q, [&](Symbol, StateId to) {
      if (to >= n) throw Error(ErrorKind::NotRanked, "transition to unknown state");
      if (rank[q] == 0 || rank[to] + 1 != rank[q])
        throw Error(ErrorKind::NotRanked, "transition " + std::to_string(q) + " -> " + std::to_string(to) +
                                              " does not descend exactly one rank");
      preds[to].push_back(q);
    });
  }

  std::vector<unsigned char> seen(n, 0);
  std::vector<StateId> stack{initial};
  seen[initial] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    edges(q, [&](Symbol, StateId to) {
      if (!seen[to]) {
        seen[to] = 1;
        stack.push_back(to);
      }
    });
  }
  std::vector<unsigned char> useful(n, 0);
  stack.push_back(final_state);
  useful[final_state] = 1;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (const StateId p : preds[q])
      if (!useful[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
  }
  WidthProfile profile;
  profile.widths.assign(ell + 1, 0);
  for (StateId q = 0; q < n; ++q) {
    if (!seen[q]) throw Error(ErrorKind::NotTrim, "state " + std::to_string(q) + " is unreachable");
    if (!useful[q]) throw Error(ErrorKind::NotTrim, "state " + std::to_string(q) + " cannot reach the final state");
    ++profile.widths[rank[q]];
  }
  return profile;
}

}  // namespace

std::size_t WidthProfile::ranked_states() const noexcept {
  return std::accumulate(widths.begin(), widths.end(), std::size_t{0});
}

std::size_t WidthProfile::max_width() const noexcept {
  return widths.empty() ? 0 : *std::max_element(widths.begin(), widths.end());
}

std::vector<std::size_t> WidthProfile::top_down() const { return {widths.rbegin(), widths.rend()}; }

StateId RankedNFA::add_state(std::size_t rank) {
  rank_.push_back(rank);
  delta_.resize(delta_.size() + k());
  return static_cast<StateId>(rank_.size() - 1);
}

void RankedNFA::add_transition(StateId from, Symbol symbol, StateId to) {
  auto& targets = delta_[from * k() + symbol];
  const auto at = std::lower_bound(targets.begin(), targets.end(), to);
  if (at == targets.end() || *at != to) targets.insert(at, to);
}

std::size_t RankedNFA::transition_count() const noexcept {
  std::size_t total = 0;
  for (const auto& targets : delta_) total += targets.size();
  return total;
}

StateId RankedDFA::add_state(std::size_t rank) {
  rank_.push_back(rank);
  delta_.resize(delta_.size() + k(), kDead);
  return static_cast<StateId>(rank_.size() - 1);
}

StateId GeneralDFA::add_state(bool accepting) {
  accepting_.push_back(accepting ? 1 : 0);
  delta_.resize(delta_.size() + k(), kNoState);
  return static_cast<StateId>(accepting_.size() - 1);
}

bool GeneralDFA::accepts(const Word& word) const {
  StateId q = initial_;
  for (const Symbol s : word) q = next(q, s);
  return accepting(q);
}

StateId GeneralNFA::add_state(bool accepting) {
  accepting_.push_back(accepting ? 1 : 0);
  delta_.resize(delta_.size() + k());
  return static_cast<StateId>(accepting_.size() - 1);
}

void GeneralNFA::add_transition(StateId from, Symbol symbol, StateId to) {
  auto& targets = delta_[from * k() + symbol];
  const auto at = std::lower_bound(targets.begin(), targets.end(), to);
  if (at == targets.end() || *at != to) targets.insert(at, to);
}

bool GeneralNFA::accepts(const Word& word) const {
  std::vector<unsigned char> current(state_count(), 0);
  current[initial_] = 1;
  for (const Symbol s : word) {
    std::vector<unsigned char> next(state_count(), 0);
    for (StateId q = 0; q < state_count(); ++q)
      if (current[q])
        for (const StateId p : successors(q, s)) next[p] = 1;
    current = std::move(next);
  }
  for (StateId q = 0; q < state_count(); ++q)
    if (current[q] && accepting(q)) return true;
  return false;
}

RankedNFA to_nfa(const RankedDFA& dfa) {
  RankedNFA nfa(dfa.alphabet(), dfa.ell());
  for (StateId q = 0; q < dfa.state_count(); ++q) nfa.add_state(dfa.rank(q));
  for (StateId q = 0; q < dfa.state_count(); ++q)
    for (Symbol s = 0; s < dfa.k(); ++s)
      if (const StateId to = dfa.next(q, s); to != kDead) nfa.add_transition(q, s, to);
  nfa.set_initial(dfa.initial());
  for (const StateId f : dfa.finals()) nfa.add_final(f);
  return nfa;
}

WidthProfile validate(const RankedNFA& nfa) {
  std::vector<std::size_t> ranks(nfa.state_count());
  for (StateId q = 0; q < nfa.state_count(); ++q) ranks[q] = nfa.rank(q);
  auto profile = check_ranked(nfa.ell(), nfa.state_count(), nfa.initial(), nfa.finals(), ranks,
                              [&](StateId q, auto&& visit) {
                                for (Symbol s = 0; s < nfa.k(); ++s)
                                  for (const StateId to : nfa.successors(q, s)) visit(s, to);
                              });
  profile.has_dead = false;
  return profile;
}

WidthProfile validate(const RankedDFA& dfa) {
  std::vector<std::size_t> ranks(dfa.state_count());
  bool dead_used = false;
  for (StateId q = 0; q < dfa.state_count(); ++q) {
    ranks[q] = dfa.rank(q);
    for (Symbol s = 0; s < dfa.k(); ++s) dead_used = dead_used || dfa.next(q, s) == kDead;
  }
  auto profile = check_ranked(dfa.ell(), dfa.state_count(), dfa.initial(), dfa.finals(), ranks,
                              [&](StateId q, auto&& visit) {
                                for (Symbol s = 0; s < dfa.k(); ++s)
                                  if (const StateId to = dfa.next(q, s); to != kDead) visit(s, to);
                              });
  profile.has_dead = dead_used;
  return profile;
}

bool accepts(const RankedNFA& nfa, const Word& word) {
  if (word.size() != nfa.ell()) return false;
  std::vector<StateId> current{nfa.initial()};
  for (const Symbol s : word) {
    if (s >= nfa.k()) return false;
    std::vector<StateId> next;
    for (const StateId q : current)
      for (const StateId p : nfa.successors(q, s)) next.push_back(p);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
  }
  return std::find(current.begin(), current.end(), nfa.final_state()) != current.end();
}

bool accepts(const RankedDFA& dfa, const Word& word) {
  if (word.size() != dfa.ell()) return false;
  StateId q = dfa.initial();
  for (const Symbol s : word) {
    if (s >= dfa.k()) return false;
    q = dfa.next(q, s);
    if (q == kDead) return false;
  }
  return q == dfa.final_state();
}

BlockLanguage enumerate_language(const RankedNFA& nfa) {
  validate(nfa);
  block_size(nfa.k(), nfa.ell());
  std::vector<std::size_t> ranks(nfa.state_count());
  for (StateId q = 0; q < nfa.state_count(); ++q) ranks[q] = nfa.rank(q);
  std::vector<BitSeq> right(nfa.state_count());
  for (const StateId q : states_by_rank(ranks)) {
    if (ranks[q] == 0) {
      right[q] = BitSeq(1, q == nfa.final_state());
      continue;
    }
    std::size_t block = 1;
    for (std::size_t i = 1; i < ranks[q]; ++i) block *= nfa.k();
    BitSeq out;
    for (Symbol s = 0; s < nfa.k(); ++s) {
      BitSeq acc(block);
      for (const StateId p : nfa.successors(q, s)) acc |= right[p];
      out.append(acc);
    }
    right[q] = std::move(out);
  }
  return BlockLanguage(nfa.alphabet(), nfa.ell(), std::move(right[nfa.initial()]));
}

BlockLanguage enumerate_language(const RankedDFA& dfa) { return enumerate_language(to_nfa(dfa)); }

RankedDFA determinize(const RankedNFA& nfa) {
  validate(nfa);
  RankedDFA out(nfa.alphabet(), nfa.ell());
  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] = index.try_emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) {
      out.add_state(nfa.rank(subset.front()));
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  out.set_initial(intern({nfa.initial()}));
  for (StateId id = 0; id < subsets.size(); ++id) {
    for (Symbol s = 0; s < nfa.k(); ++s) {
      std::vector<StateId> target;
      for (const StateId q : subsets[id])
        for (const StateId p : nfa.successors(q, s)) target.push_back(p);
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      const StateId to = intern(std::move(target));
      out.set_transition(id, s, to);
    }
    if (subsets[id].size() == 1 && subsets[id].front() == nfa.final_state()) out.add_final(id);
  }
  return canonical(out);
}

RankedDFA minimize_ranked(const RankedDFA& dfa) {
  validate(dfa);
  std::vector<std::size_t> ranks(dfa.state_count());
  for (StateId q = 0; q < dfa.state_count(); ++q) ranks[q] = dfa.rank(q);

  std::vector<StateId> cls(dfa.state_count(), kNoState);
  std::vector<StateId> representative;
  std::vector<std::size_t> class_rank;
  std::map<std::pair<std::size_t, std::vector<StateId>>, StateId> signatures;
  for (const StateId q : states_by_rank(ranks)) {
    std::vector<StateId> sig(dfa.k());
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(q, s);
      sig[s] = to == kDead ? kDead : cls[to];
    }
    auto [it, inserted] = signatures.try_emplace({ranks[q], std::move(sig)}, static_cast<StateId>(representative.size()));
    if (inserted) {
      representative.push_back(q);
      class_rank.push_back(ranks[q]);
    }
    cls[q] = it->second;
  }

  RankedDFA out(dfa.alphabet(), dfa.ell());
  for (const std::size_t r : class_rank) out.add_state(r);
  for (StateId c = 0; c < representative.size(); ++c)
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(representative[c], s);
      out.set_transition(c, s, to == kDead ? kDead : cls[to]);
    }
  out.set_initial(cls[dfa.initial()]);
  out.add_final(cls[dfa.final_state()]);
  return canonical(out);
}

GeneralDFA minimize_general(const GeneralDFA& dfa) {
  const GeneralDFA reach = canonical(dfa);
  const std::size_t n = reach.state_count();
  const std::uint32_t k = reach.k();

  // Inverse transitions in CSR form: preds of q on symbol s.
  std::vector<std::size_t> start((n * k) + 1, 0);
  for (StateId q = 0; q < n; ++q)
    for (Symbol s = 0; s < k; ++s) ++start[reach.next(q, s) * k + s + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<StateId> preds(n * k);
  {
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (StateId q = 0; q < n; ++q)
      for (Symbol s = 0; s < k; ++s) preds[fill[reach.next(q, s) * k + s]++] = q;
  }

  std::vector<std::vector<StateId>> blocks;
  std::vector<std::size_t> block_of(n);
  {
    std::vector<StateId> acc, rej;
    for (StateId q = 0; q < n; ++q) (reach.accepting(q) ? acc : rej).push_back(q);
    for (auto* part : {&acc, &rej})
      if (!part->empty()) {
        for (const StateId q : *part) block_of[q] = blocks.size();
        blocks.push_back(std::move(*part));
      }
  }

  std::deque<std::pair<std::size_t, Symbol>> work;
  std::vector<unsigned char> queued;
  auto enqueue = [&](std::size_t b, Symbol s) {
    if (queued.size() < (b + 1) * k) queued.resize((b + 1) * k, 0);
    if (!queued[b * k + s]) {
      queued[b * k + s] = 1;
      work.emplace_back(b, s);
    }
  };
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (Symbol s = 0; s < k; ++s) enqueue(smaller, s);
  }

  std::vector<std::vector<StateId>> touched;
  std::vector<std::size_t> touched_blocks;
  while (!work.empty()) {
    const auto [splitter, symbol] = work.front();
    work.pop_front();
    queued[splitter * k + symbol] = 0;

    touched.resize(blocks.size());
    touched_blocks.clear();
    for (const StateId target : blocks[splitter])
      for (std::size_t i = start[target * k + symbol]; i < start[target * k + symbol + 1]; ++i) {
        const StateId q = preds[i];
        const std::size_t b = block_of[q];
        if (touched[b].empty()) touched_blocks.push_back(b);
        touched[b].push_back(q);
      }

    for (const std::size_t b : touched_blocks) {
      std::vector<StateId> inside = std::move(touched[b]);
      touched[b].clear();
      if (inside.size() == blocks[b].size()) continue;
      std::sort(inside.begin(), inside.end());
      std::vector<StateId> outside;
      std::set_difference(blocks[b].begin(), blocks[b].end(), inside.begin(), inside.end(),
                          std::back_inserter(outside));
      const std::size_t fresh = blocks.size();
      blocks[b] = std::move(outside);
      for (const StateId q : inside) block_of[q] = fresh;
      blocks.push_back(std::move(inside));
      touched.resize(blocks.size());
      for (Symbol s = 0; s < k; ++s) {
        const bool pending = queued.size() > b * k + s && queued[b * k + s];
        if (pending)
          enqueue(fresh, s);
        else
          enqueue(blocks[b].size() <= blocks[fresh].size() ? b : fresh, s);
      }
    }
  }

  GeneralDFA out(reach.alphabet());
  for (const auto& block : blocks) out.add_state(reach.accepting(block.front()));
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Symbol s = 0; s < k; ++s)
      out.set_transition(static_cast<StateId>(b), s, static_cast<StateId>(block_of[reach.next(blocks[b].front(), s)]));
  out.set_initial(static_cast<StateId>(block_of[reach.initial()]));
  return canonical(out);
}

RankedNFA reverse_nfa(const RankedNFA& nfa) {
  validate(nfa);
  RankedNFA out(nfa.alphabet(), nfa.ell());
  for (StateId q = 0; q < nfa.state_count(); ++q) out.add_state(nfa.ell() - nfa.rank(q));
  for (StateId q = 0; q < nfa.state_count(); ++q)
    for (Symbol s = 0; s < nfa.k(); ++s)
      for (const StateId p : nfa.successors(q, s)) out.add_transition(p, s, q);
  out.set_initial(nfa.final_state());
  out.add_final(nfa.initial());
  return out;
}

RankedNFA reverse_nfa(const RankedDFA& dfa) { return reverse_nfa(to_nfa(dfa)); }

RankedDFA canonical(const RankedDFA& dfa) {
  std::vector<StateId> renumber(dfa.state_count(), kNoState);
  std::vector<StateId> order{dfa.initial()};
  renumber[dfa.initial()] = 0;
  for (std::size_t at = 0; at < order.size(); ++at)
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(order[at], s);
      if (to != kDead && renumber[to] == kNoState) {
        renumber[to] = static_cast<StateId>(order.size());
        order.push_back(to);
      }
    }
  RankedDFA out(dfa.alphabet(), dfa.ell());
  for (const StateId q : order) out.add_state(dfa.rank(q));
  for (StateId id = 0; id < order.size(); ++id)
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(order[id], s);
      out.set_transition(id, s, to == kDead ? kDead : renumber[to]);
    }
  out.set_initial(0);
  for (const StateId f : dfa.finals())
    if (renumber[f] != kNoState) out.add_final(renumber[f]);
  return out;
}

GeneralDFA canonical(const GeneralDFA& dfa) {
  std::vector<StateId> renumber(dfa.state_count(), kNoState);
  std::vector<StateId> order{dfa.initial()};
  renumber[dfa.initial()] = 0;
  for (std::size_t at = 0; at < order.size(); ++at)
    for (Symbol s = 0; s < dfa.k(); ++s) {
      const StateId to = dfa.next(order[at], s);
      if (renumber[to] == kNoState) {
        renumber[to] = static_cast<StateId>(order.size());
        order.push_back(to);
      }
    }
  GeneralDFA out(dfa.alphabet());
  for (const StateId q : order) out.add_state(dfa.accepting(q));
  for (StateId id = 0; id < order.size(); ++id)
    for (Symbol s = 0; s < dfa.k(); ++s) out.set_transition(id, s, renumber[dfa.next(order[id], s)]);
  out.set_initial(0);
  return out;
}

bool equivalent(const RankedNFA& a, const RankedNFA& b) {
  if (a.k() != b.k()) throw Error(ErrorKind::LengthMismatch, "automata over different alphabets");
  if (a.ell() != b.ell()) return false;
  return enumerate_language(a) == enumerate_language(b);
}

bool equivalent(const RankedDFA& a, const RankedDFA& b) { return equivalent(to_nfa(a), to_nfa(b)); }

bool equivalent(const GeneralDFA& a, const GeneralDFA& b) {
  if (a.k() != b.k()) throw Error(ErrorKind::LengthMismatch, "automata over different alphabets");
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::vector<std::pair<StateId, StateId>> stack{{a.initial(), b.initial()}};
  seen[stack.front()] = true;
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    if (a.accepting(p) != b.accepting(q)) return false;
    for (Symbol s = 0; s < a.k(); ++s) {
      const std::pair<StateId, StateId> next{a.next(p, s), b.next(q, s)};
      if (seen.emplace(next, true).second) stack.push_back(next);
    }
  }
  return true;
}

}  // namespace blockset
