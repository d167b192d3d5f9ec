#include <random>
#include <vector>

#include "blockset/automata.hpp"
#include "blockset/error.hpp"
#include "blockset/lang_ops.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

BlockLanguage random_lang(std::mt19937_64& rng, std::uint32_t k, std::size_t ell) {
  for (;;) {
    BitSeq bits(block_size(k, ell));
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng() & 1U);
    if (!bits.none()) return BlockLanguage(Alphabet(k), ell, std::move(bits));
  }
}

// w in L* iff w splits into blocks of length ell that all lie in L.
bool in_star(const BlockLanguage& lang, const Word& w, bool plus) {
  const std::size_t ell = lang.ell();
  if (w.empty()) return !plus;
  if (w.size() % ell != 0) return false;
  for (std::size_t p = 0; p < w.size(); p += ell)
    if (!lang.contains(Word(w.begin() + static_cast<std::ptrdiff_t>(p),
                            w.begin() + static_cast<std::ptrdiff_t>(p + ell))))
      return false;
  return true;
}

void for_each_word_upto(std::uint32_t k, std::size_t len, auto&& visit) {
  Word w;
  auto rec = [&](auto&& self) -> void {
    visit(w);
    if (w.size() == len) return;
    for (Symbol s = 0; s < k; ++s) {
      w.push_back(s);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("products agree with bitwise operations") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 80; ++round) {
    const std::uint32_t k = 1 + rng() % 3;
    const std::size_t ell = 1 + rng() % (k == 3 ? 3 : 4);
    const BlockLanguage a = random_lang(rng, k, ell);
    const BlockLanguage b = random_lang(rng, k, ell);
    const RankedDFA da = min_dfa_from_bitmap(a);
    const RankedDFA db = min_dfa_from_bitmap(b);
    CHECK(union_dfa(da, db) == min_dfa_from_bitmap(bit_or(a, b)));
    const BlockLanguage both = bit_and(a, b);
    if (both.is_empty())
      CHECK(kind_of([&] { intersect_dfa(da, db); }) == ErrorKind::EmptyLanguage);
    else
      CHECK(intersect_dfa(da, db) == min_dfa_from_bitmap(both));
    BitSeq diff = a.bits() ^ b.bits();
    if (!diff.none()) CHECK(xor_dfa(da, db) == min_dfa_from_bitmap(BlockLanguage(a.alphabet(), ell, diff)));
    const BlockLanguage co = bit_not_block(a);
    if (!co.is_empty()) CHECK(complement_dfa(da) == min_dfa_from_bitmap(co));
    CHECK(reverse_via_automaton(a) == min_dfa_from_bitmap(reversal_bitmap(a)));
  }
  CHECK(kind_of([] {
          intersect_dfa(min_dfa_from_bitmap(full_language(2, 2)), min_dfa_from_bitmap(full_language(2, 3)));
        }) == ErrorKind::LengthMismatch);
}

TEST_CASE("concatenation meets m + n - 2 and m + n - 1") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 60; ++round) {
    const BlockLanguage a = random_lang(rng, 2, 1 + rng() % 4);
    const BlockLanguage b = random_lang(rng, 2, 1 + rng() % 4);
    const BlockLanguage ops[] = {a, b};
    const OpOutcome o = run_op("concat", ops);
    CHECK(o.route_agreement);
    CHECK(o.result.dsc == o.operands[0].dsc + o.operands[1].dsc - 2);
    CHECK(o.result.nsc == o.operands[0].nsc + o.operands[1].nsc - 1);
    CHECK(o.ok());
    CHECK(concat_dfa(min_dfa_from_bitmap(a), min_dfa_from_bitmap(b)) == min_dfa_from_bitmap(concat_bitmap(a, b)));
  }
  for (std::size_t l1 = 1; l1 <= 4; ++l1)
    for (std::size_t l2 = 1; l2 <= 4; ++l2) {
      const BlockLanguage ops[] = {full_language(1, l1), full_language(1, l2)};
      const OpOutcome o = run_op("concat", ops);
      CHECK(o.result.dsc == l1 + l2 + 2);
      CHECK(o.result.nsc == l1 + l2 + 1);
    }
}

TEST_CASE("star and plus against a membership oracle") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::uint32_t k = 1 + rng() % 2;
    const std::size_t ell = 1 + rng() % 3;
    const BlockLanguage lang = random_lang(rng, k, ell);
    const GeneralDFA s = star(lang);
    const GeneralDFA p = plus(lang);
    const RankedNFA nfa = min_nfa_from_bitmap(lang);
    const GeneralNFA sn = star_nfa(nfa);
    const GeneralNFA pn = plus_nfa(nfa);
    CHECK(sn.state_count() + 1 == nfa.state_count());
    CHECK(pn.state_count() == nfa.state_count());
    const std::size_t horizon = std::min<std::size_t>(3 * ell, k == 1 ? 12 : 9);
    for_each_word_upto(k, horizon, [&](const Word& w) {
      REQUIRE(s.accepts(w) == in_star(lang, w, false));
      REQUIRE(p.accepts(w) == in_star(lang, w, true));
      REQUIRE(sn.accepts(w) == in_star(lang, w, false));
      REQUIRE(pn.accepts(w) == in_star(lang, w, true));
    });
    CHECK(equivalent(minimize_general(determinize(sn)), s));
    CHECK(equivalent(minimize_general(determinize(pn)), p));
  }
}

TEST_CASE("star and plus of a single word") {
  for (std::size_t ell = 2; ell <= 6; ++ell) {
    const BlockLanguage ops[] = {singleton(2, ell, Word(ell, 0))};
    const OpOutcome s = run_op("star", ops);
    const OpOutcome p = run_op("plus", ops);
    CHECK(s.result.dsc == s.operands[0].dsc - 1);
    CHECK(p.result.dsc == p.operands[0].dsc);
    CHECK(s.result.nsc == s.operands[0].nsc - 1);
    CHECK(p.result.nsc == p.operands[0].nsc);
    CHECK(s.general_dfa->accepts(Word{}));
    CHECK_FALSE(p.general_dfa->accepts(Word{}));
    CHECK(s.ok());
    CHECK(p.ok());
  }
  // Unary: the dead state is unreachable, so one state fewer than the formula.
  const BlockLanguage unary[] = {full_language(1, 4)};
  const OpOutcome s = run_op("star", unary);
  CHECK(s.result.dsc + 1 == static_cast<std::size_t>(*s.formula));
  CHECK(s.ok());
  CHECK_FALSE(s.notes.empty());
}

TEST_CASE("intersection of the parity witnesses") {
  for (std::size_t d = 2; d <= 3; ++d) {
    const BlockLanguage ops[] = {witness_parity(2, d, 0), witness_parity(2, d, 1)};
    const OpOutcome o = run_op("intersect", ops);
    REQUIRE(o.formula);
    CHECK(o.result.dsc == static_cast<std::size_t>(*o.formula));
    REQUIRE(o.nsc_formula);
    CHECK(o.result.nsc == static_cast<std::size_t>(*o.nsc_formula));
    CHECK(o.ok());
  }
  const BlockLanguage ops[] = {witness_parity(2, 2, 0), witness_parity(2, 2, 1)};
  CHECK(run_op("intersect", ops).result.dsc == 11);
}

TEST_CASE("union witnesses") {
  for (std::size_t ell = 3; ell <= 6; ++ell) {
    const Symbol ac[] = {0, 2};
    const Symbol bc[] = {1, 2};
    const BlockLanguage wide[] = {subalphabet(3, ell, ac), subalphabet(3, ell, bc)};
    const OpOutcome o = run_op("union", wide, {}, {false});
    CHECK(o.result.dsc == 3 * ell);
    CHECK(*o.formula == static_cast<std::int64_t>(3 * ell));
    const BlockLanguage words[] = {singleton(2, ell, Word(ell, 0)), singleton(2, ell, Word(ell, 1))};
    const OpOutcome n = run_op("union", words);
    CHECK(n.result.nsc == 2 * ell);
    CHECK(n.ok());
  }
}

TEST_CASE("word operations") {
  for (std::size_t ell = 3; ell <= 8; ++ell) {
    const BlockLanguage full = full_language(2, ell);
    CHECK(measure(full, {false}).dsc == ell + 2);
    const OpOutcome o = remove_word(full, Word(ell, 0), {false});
    CHECK(o.result.dsc == 2 * ell + 1);
    CHECK(o.ok());
    CHECK(kind_of([&] { add_word(full, Word(ell, 0)); }) == ErrorKind::NoChange);
  }
  std::mt19937_64 rng(4);
  for (int round = 0; round < 100; ++round) {
    const BlockLanguage lang = random_lang(rng, 2, 5);
    const Word w = index_to_word(lang.alphabet(), 5, rng() % 32);
    if (lang.contains(w) && lang.word_count() == 1) continue;
    const OpOutcome o = lang.contains(w) ? remove_word(lang, w) : add_word(lang, w);
    CHECK(o.ok());
    CHECK(std::llabs(static_cast<long long>(o.result.dsc) - static_cast<long long>(o.operands[0].dsc)) <= 4);
  }
  const BlockLanguage one = singleton(2, 3, Word(3, 1));
  CHECK(kind_of([&] { remove_word(one, Word(3, 1)); }) == ErrorKind::EmptyLanguage);
}

TEST_CASE("block complement of the ko family") {
  for (std::size_t d = 2; d <= 3; ++d) {
    const BlockLanguage ops[] = {witness_ko(2, d)};
    const OpOutcome o = run_op("complement", ops, {}, {false});
    CHECK(o.route_agreement);
    CHECK(o.result.dfa_widths.widths[d] == (std::size_t{1} << d));
  }
  const BlockLanguage single[] = {singleton(2, 4, Word(4, 0))};
  const OpOutcome o = run_op("complement", single);
  CHECK(o.result.dsc == 9);
  CHECK(o.ok());
}

TEST_CASE("run_op rejects bad requests") {
  const BlockLanguage two[] = {full_language(2, 2), full_language(2, 2)};
  const BlockLanguage one[] = {full_language(2, 2)};
  CHECK(kind_of([&] { run_op("union", one); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { run_op("shuffle", two); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { run_op("add-word", one); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { run_op("complement", one); }) == ErrorKind::EmptyLanguage);
  const BlockLanguage mixed[] = {full_language(2, 2), full_language(2, 3)};
  CHECK(kind_of([&] { run_op("union", mixed); }) == ErrorKind::LengthMismatch);
  const BlockLanguage disjoint[] = {singleton(2, 2, Word{0, 0}), singleton(2, 2, Word{1, 1})};
  CHECK(kind_of([&] { run_op("intersect", disjoint); }) == ErrorKind::EmptyLanguage);
}

TEST_CASE("every operation agrees across routes on random operands") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const BlockLanguage a = random_lang(rng, 2, 3);
    const BlockLanguage b = random_lang(rng, 2, 3);
    const BlockLanguage pair[] = {a, b};
    const BlockLanguage single[] = {a};
    CHECK(run_op("union", pair).ok());
    if (!bit_and(a, b).is_empty()) CHECK(run_op("intersect", pair).ok());
    CHECK(run_op("concat", pair).ok());
    CHECK(run_op("reverse", single).ok());
    if (!a.is_full()) CHECK(run_op("complement", single).ok());
    CHECK(run_op("star", single).ok());
    CHECK(run_op("plus", single).ok());
  }
}
