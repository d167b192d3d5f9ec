#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "blockset/automata.hpp"
#include "blockset/error.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

using Bits = std::string;

bool below(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == '1' && b[i] == '0') return false;
  return true;
}

Bits bit_or(const Bits& a, const Bits& b) {
  Bits out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] == '1') out[i] = '1';
  return out;
}

// Every nonzero k-block composition over parts and the zero block that lies
// below at least one target.
std::vector<Bits> candidates(const std::vector<Bits>& targets, const std::vector<Bits>& parts, std::uint32_t k) {
  std::vector<Bits> blocks = parts;
  blocks.push_back(Bits(parts.front().size(), '0'));
  std::vector<Bits> out;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    Bits c;
    for (const std::size_t p : pick) c += blocks[p];
    const bool zero = c.find('1') == Bits::npos;
    if (!zero && std::any_of(targets.begin(), targets.end(), [&](const Bits& t) { return below(c, t); }))
      out.push_back(c);
    std::size_t i = 0;
    while (i < k && ++pick[i] == blocks.size()) pick[i++] = 0;
    if (i == k) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool covers(const std::vector<Bits>& chosen, const std::vector<Bits>& targets) {
  for (const Bits& t : targets) {
    Bits acc(t.size(), '0');
    for (const Bits& c : chosen)
      if (below(c, t)) acc = bit_or(acc, c);
    if (acc != t) return false;
  }
  return true;
}

// Smallest cover, lexicographically least member list among the smallest.
std::vector<Bits> brute_force(const std::vector<Bits>& targets, const std::vector<Bits>& parts, std::uint32_t k) {
  const std::vector<Bits> cand = candidates(targets, parts, k);
  REQUIRE(cand.size() <= 20);
  std::vector<Bits> best;
  std::size_t best_size = targets.size() + 1;
  for (std::uint32_t mask = 1; mask < (1U << cand.size()); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size > best_size) continue;
    std::vector<Bits> chosen;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1U) chosen.push_back(cand[i]);
    if (!covers(chosen, targets)) continue;
    if (size < best_size || chosen < best) {
      best_size = size;
      best = chosen;
    }
  }
  return best;
}

std::vector<BitSeq> to_seqs(const std::vector<Bits>& v) {
  std::vector<BitSeq> out;
  for (const auto& s : v) out.push_back(BitSeq::from_string(s));
  return out;
}

std::vector<Bits> to_strings(std::span<const BitSeq> v) {
  std::vector<Bits> out;
  for (const auto& b : v) out.push_back(b.to_string());
  return out;
}

BlockLanguage random_lang(std::mt19937_64& rng, std::uint32_t k, std::size_t ell) {
  for (;;) {
    BitSeq bits(block_size(k, ell));
    for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng() & 1U);
    if (!bits.none()) return BlockLanguage(Alphabet(k), ell, std::move(bits));
  }
}

void check_cover(const Cover& c, const std::vector<BitSeq>& targets) {
  REQUIRE(c.rho.size() == targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    BitSeq acc(targets[t].size());
    for (const std::size_t m : c.rho[t]) {
      CHECK(c.members[m].view().is_subset_of(targets[t]));
      acc |= c.members[m];
    }
    CHECK(acc == targets[t]);
  }
  CHECK(std::is_sorted(c.members.begin(), c.members.end(),
                       [](const BitSeq& a, const BitSeq& b) { return a.view() < b.view(); }));
}

}  // namespace

TEST_CASE("the three rank-1 factors need only two members") {
  const auto targets = to_seqs({"01", "10", "11"});
  const auto parts = to_seqs({"1"});
  const Cover c = minimal_cover(1, targets, parts, 2);
  CHECK(to_strings(c.members) == std::vector<Bits>{"01", "10"});
  CHECK(c.rho[2] == std::vector<std::size_t>{0, 1});
  CHECK(c.optimal);
  check_cover(c, targets);
}

TEST_CASE("minimal covers match exhaustive search") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int round = 0; round < 400 && checked < 150; ++round) {
    const std::uint32_t k = 2 + rng() % 2;
    const std::size_t ell = k == 2 ? 2 + rng() % 3 : 2;
    const BlockLanguage lang = random_lang(rng, k, ell);
    const FactorSets sets = factor_sets(lang);
    for (std::size_t i = 1; i <= ell; ++i) {
      const std::vector<Bits> targets = to_strings(sets.members(i));
      const std::vector<Bits> parts = to_strings(sets.members(i - 1));
      if (candidates(targets, parts, k).size() > 20) continue;
      const std::vector<BitSeq> t = to_seqs(targets);
      const std::vector<BitSeq> p = to_seqs(parts);
      const Cover c = minimal_cover(i, t, p, k);
      CAPTURE(lang.bits().to_string());
      CAPTURE(i);
      CHECK(to_strings(c.members) == brute_force(targets, parts, k));
      check_cover(c, t);
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("budget exhaustion hands back a valid cover") {
  const BlockLanguage e = witness_E(6);
  const FactorSets sets = factor_sets(e);
  const std::vector<BitSeq> targets(sets.members(4).begin(), sets.members(4).end());
  const std::vector<BitSeq> parts(sets.members(3).begin(), sets.members(3).end());
  try {
    minimal_cover(4, targets, parts, 2, 3);
    FAIL("expected the budget to run out");
  } catch (const CoverBudgetExceeded& ex) {
    CHECK(ex.kind() == ErrorKind::CoverBudgetExceeded);
    CHECK_FALSE(ex.fallback().optimal);
    check_cover(ex.fallback(), targets);
  }
  const NfaSynthesis loose = synthesize_nfa(e, 3, true);
  CHECK_FALSE(loose.exact);
  CHECK(enumerate_language(loose.nfa) == e);
  CHECK_THROWS_AS(synthesize_nfa(e, 3, false), CoverBudgetExceeded);
}

TEST_CASE("known state complexities") {
  const BlockLanguage ex(Alphabet(2), 4, BitSeq::from_string("1011011100011110"));
  const ComplexityReport r = measure(ex);
  CHECK(r.dsc == 12);
  CHECK(r.nsc == 9);
  CHECK(r.words == 10);

  const ComplexityReport e5 = measure(witness_E(5));
  CHECK(e5.dsc == 20);
  CHECK(e5.nsc == 14);
  CHECK(e5.dfa_widths.top_down() == std::vector<std::size_t>{1, 2, 4, 8, 3, 1});

  const ComplexityReport full = measure(full_language(2, 4));
  CHECK(full.dsc == 6);
  CHECK(full.nsc == 5);

  CHECK_THROWS_AS(measure(BlockLanguage::empty(Alphabet(2), 3)), Error);
  const ComplexityReport none = empty_report(2, 3);
  CHECK(none.dsc == 1);
  CHECK(none.nsc == 0);
  CHECK(none.empty);
}

TEST_CASE("synthesized automata accept the source language") {
  std::mt19937_64 rng(88);
  for (int round = 0; round < 60; ++round) {
    const std::uint32_t k = 1 + rng() % 3;
    const BlockLanguage lang = random_lang(rng, k, 1 + rng() % (k == 3 ? 3 : 5));
    const RankedDFA dfa = min_dfa_from_bitmap(lang);
    validate(dfa);
    CHECK(enumerate_language(dfa) == lang);
    const NfaSynthesis syn = synthesize_nfa(lang);
    const WidthProfile w = validate(syn.nfa);
    CHECK(enumerate_language(syn.nfa) == lang);
    CHECK(syn.exact);
    for (std::size_t i = 0; i <= lang.ell(); ++i) CHECK(w.widths[i] <= syn.covers[i].members.size());
    const ComplexityReport r = measure(lang);
    CHECK(r.nsc == syn.nfa.state_count());
    CHECK(r.nsc < r.dsc);
    CHECK(r.dsc == dfa.size());
  }
}

TEST_CASE("nsc is invariant under reversal") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 60; ++round) {
    const BlockLanguage lang = random_lang(rng, 2, 2 + rng() % 4);
    CAPTURE(lang.bits().to_string());
    CHECK(measure(lang).nsc == measure(reversal_bitmap(lang)).nsc);
  }
}
