#include "blockset/lang_ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "blockset/error.hpp"
#include "blockset/witnesses.hpp"

namespace blockset {
namespace {

enum class Mode { And, Or, Xor };

void require_same_shape(const RankedDFA& a, const RankedDFA& b) {
  if (a.k() != b.k() || a.ell() != b.ell())
    throw Error(ErrorKind::LengthMismatch, "operands need equal alphabet and word length");
}

// Drops states that cannot reach the final state, then renumbers.
RankedDFA trim(const RankedDFA& dfa) {
  const std::size_t n = dfa.state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q)
    for (Symbol s = 0; s < dfa.k(); ++s)
      if (const StateId to = dfa.next(q, s); to != kDead) preds[to].push_back(q);
  std::vector<unsigned char> useful(n, 0);
  std::vector<StateId> stack;
  for (const StateId f : dfa.finals()) {
    useful[f] = 1;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (const StateId p : preds[q])
      if (!useful[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
  }
  if (dfa.initial() == kNoState || !useful[dfa.initial()])
    throw Error(ErrorKind::EmptyLanguage, "operation result is the empty language");
  RankedDFA out = dfa;
  for (StateId q = 0; q < n; ++q)
    for (Symbol s = 0; s < dfa.k(); ++s)
      if (const StateId to = dfa.next(q, s); to != kDead && !useful[to]) out.set_transition(q, s, kDead);
  return canonical(out);
}

RankedDFA product(const RankedDFA& a, const RankedDFA& b, Mode mode) {
  require_same_shape(a, b);
  validate(a);
  validate(b);
  RankedDFA out(a.alphabet(), a.ell());
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  StateId final_state = kNoState;

  auto rank_of = [&](const std::pair<StateId, StateId>& pq) {
    return pq.first != kDead ? a.rank(pq.first) : b.rank(pq.second);
  };
  auto accepts = [&](StateId p, StateId q) {
    const bool x = p == a.final_state();
    const bool y = q == b.final_state();
    switch (mode) {
      case Mode::And: return x && y;
      case Mode::Or: return x || y;
      case Mode::Xor: return x != y;
    }
    return false;
  };
  auto target = [&](StateId p, StateId q) -> StateId {
    if (p == kDead && q == kDead) return kDead;
    if (mode == Mode::And && (p == kDead || q == kDead)) return kDead;
    if (rank_of({p, q}) == 0) {
      if (!accepts(p, q)) return kDead;
      if (final_state == kNoState) {
        final_state = out.add_state(0);
        pairs.emplace_back(kDead, kDead);
      }
      return final_state;
    }
    auto [it, inserted] = ids.try_emplace({p, q}, static_cast<StateId>(pairs.size()));
    if (inserted) {
      out.add_state(rank_of({p, q}));
      pairs.emplace_back(p, q);
    }
    return it->second;
  };

  out.set_initial(target(a.initial(), b.initial()));
  for (StateId id = 0; id < pairs.size(); ++id) {
    const auto [p, q] = pairs[id];
    if (id == final_state) continue;
    for (Symbol s = 0; s < a.k(); ++s) {
      const StateId np = p == kDead ? kDead : a.next(p, s);
      const StateId nq = q == kDead ? kDead : b.next(q, s);
      out.set_transition(id, s, target(np, nq));
    }
  }
  if (final_state == kNoState) throw Error(ErrorKind::EmptyLanguage, "operation result is the empty language");
  out.add_final(final_state);
  return minimize_ranked(trim(out));
}

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

bool is_full(const BlockLanguage& lang) { return lang.is_full(); }

struct Check {
  std::optional<std::int64_t> formula;
  std::string relation;
};

bool holds(const Check& check, std::int64_t measured, std::int64_t operand, std::size_t ell) {
  if (!check.formula) return true;
  if (check.relation == "=") return measured == *check.formula;
  if (check.relation == "<=") return measured <= *check.formula;
  return std::llabs(measured - operand) <= static_cast<std::int64_t>(ell) - 1;
}

std::vector<ComplexityReport> measure_all(std::span<const BlockLanguage> langs, const MeasureOptions& options) {
  std::vector<ComplexityReport> out;
  for (const BlockLanguage& l : langs) out.push_back(measure(l, options));
  return out;
}

void finish_checks(OpOutcome& o, const Check& dsc, const Check& nsc, std::int64_t dsc_operand,
                   std::int64_t nsc_operand, std::size_t ell, bool nsc_reliable) {
  o.formula = dsc.formula;
  o.relation = dsc.relation;
  o.nsc_formula = nsc.formula;
  o.nsc_relation = nsc.relation;
  o.dsc_ok = holds(dsc, to_i64(o.result.dsc), dsc_operand, ell);
  if (!nsc.formula || !o.result.nsc_measured) return;
  if (!nsc_reliable) {
    o.notes.emplace_back("nsc check skipped: a cover search hit its budget, nsc is an upper bound");
    return;
  }
  o.nsc_ok = holds(nsc, to_i64(o.result.nsc), nsc_operand, ell);
}

bool reports_exact(const OpOutcome& o) {
  bool exact = o.result.nsc_exact;
  for (const auto& r : o.operands) exact = exact && r.nsc_exact;
  return exact;
}

OpOutcome boolean_op(std::string_view name, const BlockLanguage& a, const BlockLanguage& b,
                     const MeasureOptions& options) {
  OpOutcome o;
  o.op = std::string(name);
  const bool is_union = name == "union";
  const BlockLanguage bits = is_union ? bit_or(a, b) : bit_and(a, b);
  if (bits.is_empty()) throw Error(ErrorKind::EmptyLanguage, "intersection is empty");
  const RankedDFA via_bitmap = min_dfa_from_bitmap(bits);
  const RankedDFA da = min_dfa_from_bitmap(a);
  const RankedDFA db = min_dfa_from_bitmap(b);
  const RankedDFA via_automaton = is_union ? union_dfa(da, db) : intersect_dfa(da, db);
  o.route_agreement = via_bitmap == via_automaton;
  const BlockLanguage pair[] = {a, b};
  o.operands = measure_all(pair, options);
  o.result = measure(bits, options);

  const auto& m = o.operands[0].dfa_widths.widths;
  const auto& n = o.operands[1].dfa_widths.widths;
  std::int64_t dsc_bound = 0;
  if (is_union) {
    for (std::size_t i = 1; i < a.ell(); ++i)
      dsc_bound += to_i64(m[i] * n[i] + m[i] + n[i]);
    dsc_bound += 3;
  } else {
    for (std::size_t i = 0; i <= a.ell(); ++i) dsc_bound += to_i64(m[i] * n[i]);
    dsc_bound += 1;
  }
  Check nsc;
  if (options.nsc) {
    nsc.relation = "<=";
    if (is_union) {
      nsc.formula = to_i64(o.operands[0].nsc + o.operands[1].nsc) - 2;
    } else {
      const auto& mn = o.operands[0].nfa_widths.widths;
      const auto& nn = o.operands[1].nfa_widths.widths;
      std::int64_t total = 0;
      for (std::size_t i = 0; i <= a.ell(); ++i) total += to_i64(mn[i] * nn[i]);
      nsc.formula = total;
    }
  }
  finish_checks(o, Check{dsc_bound, "<="}, nsc, 0, 0, a.ell(), reports_exact(o));
  if (is_union && a.k() == 2) o.notes.emplace_back("union over k=2: bound shown sufficient only");
  o.language = bits;
  o.dfa = via_bitmap;
  return o;
}

OpOutcome toggle_op(std::string_view name, const BlockLanguage& lang, const Word& word, const MeasureOptions& options) {
  const bool adding = name == "add-word";
  const bool present = lang.contains(word);
  if (adding && present)
    throw Error(ErrorKind::NoChange, "word " + lang.alphabet().render(word) + " is already in the language");
  if (!adding && !present)
    throw Error(ErrorKind::NoChange, "word " + lang.alphabet().render(word) + " is not in the language");
  OpOutcome o;
  o.op = std::string(name);
  const BlockLanguage bits = toggle_word(lang, word);
  if (bits.is_empty()) throw Error(ErrorKind::EmptyLanguage, "removing the only word leaves the empty language");
  const RankedDFA via_bitmap = min_dfa_from_bitmap(bits);
  const RankedDFA via_automaton =
      xor_dfa(min_dfa_from_bitmap(lang), min_dfa_from_bitmap(singleton(lang.k(), lang.ell(), word)));
  o.route_agreement = via_bitmap == via_automaton;
  o.operands.push_back(measure(lang, options));
  o.result = measure(bits, options);
  const auto& in = o.operands[0];
  const std::int64_t spread = to_i64(lang.ell()) - 1;
  Check nsc;
  if (options.nsc) nsc = Check{to_i64(in.nsc) + spread, "+-"};
  finish_checks(o, Check{to_i64(in.dsc) + spread, "+-"}, nsc, to_i64(in.dsc), to_i64(in.nsc), lang.ell(),
                reports_exact(o));
  o.language = bits;
  o.dfa = via_bitmap;
  return o;
}

ComplexityReport general_report(const BlockLanguage& lang, std::size_t dsc, std::size_t nsc) {
  ComplexityReport r;
  r.k = lang.k();
  r.ell = lang.ell();
  r.dsc = dsc;
  r.nsc = nsc;
  r.nsc_measured = true;
  // the construction size, not a proven minimum
  r.nsc_exact = false;
  return r;
}

OpOutcome star_plus_op(std::string_view name, const BlockLanguage& lang, const MeasureOptions& options) {
  const bool is_star = name == "star";
  OpOutcome o;
  o.op = std::string(name);
  o.operands.push_back(measure(lang, options));
  const ComplexityReport& in = o.operands[0];
  const RankedDFA dfa = min_dfa_from_bitmap(lang);
  const GeneralDFA via_dfa = minimize_general(is_star ? star_dfa(dfa) : plus_dfa(dfa));
  const NfaSynthesis syn = synthesize_nfa(lang, options.cover_budget, true);
  const GeneralNFA nfa = is_star ? star_nfa(syn.nfa) : plus_nfa(syn.nfa);
  const GeneralDFA via_nfa = minimize_general(determinize(nfa));
  o.route_agreement = via_dfa == via_nfa;
  o.result = general_report(lang, via_dfa.state_count(), nfa.state_count());

  const std::int64_t m = to_i64(in.dsc) - (is_star ? 1 : 0);
  o.formula = m;
  o.relation = "=";
  o.dsc_ok = to_i64(o.result.dsc) == m;
  if (!o.dsc_ok && is_full(lang) && to_i64(o.result.dsc) == m - 1) {
    o.dsc_ok = true;
    o.notes.emplace_back("dead state unreachable for the full block: measured formula - 1");
  }
  if (options.nsc) {
    o.nsc_formula = to_i64(in.nsc) - (is_star ? 1 : 0);
    o.nsc_relation = "=";
    o.nsc_ok = to_i64(o.result.nsc) == *o.nsc_formula;
  }
  o.notes.emplace_back("nsc is the size of the construction applied to the minimal NFA");
  o.general_dfa = via_dfa;
  o.general_nfa = nfa;
  return o;
}

}  // namespace

RankedDFA intersect_dfa(const RankedDFA& a, const RankedDFA& b) { return product(a, b, Mode::And); }
RankedDFA union_dfa(const RankedDFA& a, const RankedDFA& b) { return product(a, b, Mode::Or); }
RankedDFA xor_dfa(const RankedDFA& a, const RankedDFA& b) { return product(a, b, Mode::Xor); }

RankedDFA concat_dfa(const RankedDFA& a, const RankedDFA& b) {
  if (a.k() != b.k()) throw Error(ErrorKind::LengthMismatch, "concatenation needs a common alphabet");
  validate(a);
  validate(b);
  const std::size_t ell2 = b.ell();
  RankedDFA out(a.alphabet(), a.ell() + ell2);
  std::vector<StateId> ida(a.state_count(), kNoState), idb(b.state_count());
  for (StateId q = 0; q < a.state_count(); ++q)
    if (q != a.final_state()) ida[q] = out.add_state(a.rank(q) + ell2);
  for (StateId p = 0; p < b.state_count(); ++p) idb[p] = out.add_state(b.rank(p));
  ida[a.final_state()] = idb[b.initial()];
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (q == a.final_state()) continue;
    for (Symbol s = 0; s < a.k(); ++s)
      if (const StateId to = a.next(q, s); to != kDead) out.set_transition(ida[q], s, ida[to]);
  }
  for (StateId p = 0; p < b.state_count(); ++p)
    for (Symbol s = 0; s < b.k(); ++s)
      if (const StateId to = b.next(p, s); to != kDead) out.set_transition(idb[p], s, idb[to]);
  out.set_initial(ida[a.initial()]);
  out.add_final(idb[b.final_state()]);
  return minimize_ranked(out);
}

RankedDFA complement_dfa(const RankedDFA& a) {
  validate(a);
  RankedDFA out(a.alphabet(), a.ell());
  for (StateId q = 0; q < a.state_count(); ++q) out.add_state(a.rank(q));
  std::vector<StateId> sink(a.ell());
  for (std::size_t i = 0; i < a.ell(); ++i) sink[i] = out.add_state(i);
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (a.rank(q) == 0) continue;
    for (Symbol s = 0; s < a.k(); ++s) {
      const StateId to = a.next(q, s);
      out.set_transition(q, s, to == kDead ? sink[a.rank(q) - 1] : to);
    }
  }
  for (std::size_t i = 1; i < a.ell(); ++i)
    for (Symbol s = 0; s < a.k(); ++s) out.set_transition(sink[i], s, sink[i - 1]);
  out.set_initial(a.initial());
  out.add_final(sink[0]);
  return minimize_ranked(trim(out));
}

RankedDFA reverse_via_automaton(const BlockLanguage& lang) {
  return minimize_ranked(determinize(reverse_nfa(min_dfa_from_bitmap(lang))));
}

RankedDFA block_complement(const BlockLanguage& lang) {
  const BlockLanguage flipped = bit_not_block(lang);
  if (flipped.is_empty()) throw Error(ErrorKind::EmptyLanguage, "block complement of the full block is empty");
  return min_dfa_from_bitmap(flipped);
}

GeneralDFA star_dfa(const RankedDFA& a) {
  validate(a);
  GeneralDFA g(a.alphabet());
  std::vector<StateId> id(a.state_count(), kNoState);
  for (StateId q = 0; q < a.state_count(); ++q)
    if (q != a.final_state()) id[q] = g.add_state(q == a.initial());
  const StateId omega = g.add_state(false);
  id[a.final_state()] = id[a.initial()];
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (q == a.final_state()) continue;
    for (Symbol s = 0; s < a.k(); ++s) {
      const StateId to = a.next(q, s);
      g.set_transition(id[q], s, to == kDead ? omega : id[to]);
    }
  }
  for (Symbol s = 0; s < a.k(); ++s) g.set_transition(omega, s, omega);
  g.set_initial(id[a.initial()]);
  return g;
}

GeneralDFA plus_dfa(const RankedDFA& a) {
  validate(a);
  GeneralDFA g(a.alphabet());
  for (StateId q = 0; q < a.state_count(); ++q) g.add_state(q == a.final_state());
  const StateId omega = g.add_state(false);
  for (StateId q = 0; q < a.state_count(); ++q) {
    const StateId from = q == a.final_state() ? a.initial() : q;
    for (Symbol s = 0; s < a.k(); ++s) {
      const StateId to = a.next(from, s);
      g.set_transition(q, s, to == kDead ? omega : to);
    }
  }
  for (Symbol s = 0; s < a.k(); ++s) g.set_transition(omega, s, omega);
  g.set_initial(a.initial());
  return g;
}

GeneralNFA star_nfa(const RankedNFA& a) {
  validate(a);
  GeneralNFA g(a.alphabet());
  std::vector<StateId> id(a.state_count(), kNoState);
  for (StateId q = 0; q < a.state_count(); ++q)
    if (q != a.final_state()) id[q] = g.add_state(q == a.initial());
  id[a.final_state()] = id[a.initial()];
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (q == a.final_state()) continue;
    for (Symbol s = 0; s < a.k(); ++s)
      for (const StateId p : a.successors(q, s)) g.add_transition(id[q], s, id[p]);
  }
  g.set_initial(id[a.initial()]);
  return g;
}

GeneralNFA plus_nfa(const RankedNFA& a) {
  validate(a);
  GeneralNFA g(a.alphabet());
  for (StateId q = 0; q < a.state_count(); ++q) g.add_state(q == a.final_state());
  for (StateId q = 0; q < a.state_count(); ++q)
    for (Symbol s = 0; s < a.k(); ++s)
      for (const StateId p : a.successors(q, s)) g.add_transition(q, s, p);
  for (Symbol s = 0; s < a.k(); ++s)
    for (const StateId p : a.successors(a.initial(), s)) g.add_transition(a.final_state(), s, p);
  g.set_initial(a.initial());
  return g;
}

GeneralDFA determinize(const GeneralNFA& nfa) {
  GeneralDFA out(nfa.alphabet());
  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] = index.try_emplace(subset, static_cast<StateId>(subsets.size()));
    if (inserted) {
      const bool accepting =
          std::any_of(subset.begin(), subset.end(), [&](StateId q) { return nfa.accepting(q); });
      out.add_state(accepting);
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  out.set_initial(intern({nfa.initial()}));
  for (StateId id = 0; id < subsets.size(); ++id)
    for (Symbol s = 0; s < nfa.k(); ++s) {
      std::vector<StateId> target;
      for (const StateId q : subsets[id])
        for (const StateId p : nfa.successors(q, s)) target.push_back(p);
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      const StateId to = intern(std::move(target));
      out.set_transition(id, s, to);
    }
  return out;
}

GeneralDFA star(const BlockLanguage& lang) { return minimize_general(star_dfa(min_dfa_from_bitmap(lang))); }
GeneralDFA plus(const BlockLanguage& lang) { return minimize_general(plus_dfa(min_dfa_from_bitmap(lang))); }

OpOutcome add_word(const BlockLanguage& lang, const Word& word, const MeasureOptions& options) {
  return toggle_op("add-word", lang, word, options);
}

OpOutcome remove_word(const BlockLanguage& lang, const Word& word, const MeasureOptions& options) {
  return toggle_op("remove-word", lang, word, options);
}

OpOutcome run_op(std::string_view op, std::span<const BlockLanguage> operands, const std::optional<Word>& word,
                 const MeasureOptions& options) {
  auto arity = [&](std::size_t n) {
    if (operands.size() != n)
      throw Error(ErrorKind::Parse, std::string(op) + " takes " + std::to_string(n) + " operand(s), got " +
                                        std::to_string(operands.size()));
  };
  if (op == "union" || op == "intersect") {
    arity(2);
    return boolean_op(op, operands[0], operands[1], options);
  }
  if (op == "add-word" || op == "remove-word") {
    arity(1);
    if (!word) throw Error(ErrorKind::Parse, std::string(op) + " needs a word");
    return toggle_op(op, operands[0], *word, options);
  }
  if (op == "star" || op == "plus") {
    arity(1);
    return star_plus_op(op, operands[0], options);
  }

  OpOutcome o;
  o.op = std::string(op);
  if (op == "concat") {
    arity(2);
    const BlockLanguage bits = concat_bitmap(operands[0], operands[1]);
    const RankedDFA via_bitmap = min_dfa_from_bitmap(bits);
    const RankedDFA via_automaton =
        concat_dfa(min_dfa_from_bitmap(operands[0]), min_dfa_from_bitmap(operands[1]));
    o.route_agreement = via_bitmap == via_automaton;
    o.operands = measure_all(operands, options);
    o.result = measure(bits, options);
    Check nsc;
    if (options.nsc) nsc = Check{to_i64(o.operands[0].nsc + o.operands[1].nsc) - 1, "="};
    finish_checks(o, Check{to_i64(o.operands[0].dsc + o.operands[1].dsc) - 2, "="}, nsc, 0, 0, bits.ell(),
                  reports_exact(o));
    o.language = bits;
    o.dfa = via_bitmap;
    return o;
  }
  if (op == "reverse") {
    arity(1);
    const BlockLanguage bits = reversal_bitmap(operands[0]);
    const RankedDFA via_bitmap = min_dfa_from_bitmap(bits);
    o.route_agreement = via_bitmap == reverse_via_automaton(operands[0]);
    o.operands = measure_all(operands, options);
    o.result = measure(bits, options);
    Check nsc;
    if (options.nsc) nsc = Check{to_i64(o.operands[0].nsc), "="};
    finish_checks(o, Check{}, nsc, 0, 0, bits.ell(), reports_exact(o));
    o.notes.emplace_back("dsc bound is asymptotic (2^Theta(sqrt m)); no finite formula checked");
    o.language = bits;
    o.dfa = via_bitmap;
    return o;
  }
  if (op == "complement") {
    arity(1);
    const RankedDFA via_bitmap = block_complement(operands[0]);
    o.route_agreement = via_bitmap == complement_dfa(min_dfa_from_bitmap(operands[0]));
    const BlockLanguage bits = bit_not_block(operands[0]);
    o.operands = measure_all(operands, options);
    o.result = measure(bits, options);
    const std::int64_t m = to_i64(o.operands[0].dsc);
    finish_checks(o, Check{m + to_i64(bits.ell()) - 1, "+-"}, Check{}, m, 0, bits.ell(), true);
    o.notes.emplace_back("dsc without the dead state: " + std::to_string(o.result.dsc - 1));
    o.notes.emplace_back("nsc bound is asymptotic (O(2^sqrt m)); no finite formula checked");
    o.language = bits;
    o.dfa = via_bitmap;
    return o;
  }
  throw Error(ErrorKind::Parse, "unknown operation '" + std::string(op) + "'");
}

}  // namespace blockset
