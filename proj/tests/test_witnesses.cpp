#include <algorithm>
#include <string>
#include <vector>

#include "blockset/automata.hpp"
#include "blockset/error.hpp"
#include "blockset/synthesis.hpp"
#include "blockset/witnesses.hpp"
#include "doctest.h"

using namespace blockset;

namespace {

BigInt width_cap_sum(std::uint32_t k, std::size_t ell) {
  BigInt total = 1;
  for (std::size_t i = 0; i <= ell; ++i) {
    const BigInt below = BigInt(1) << static_cast<unsigned>(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(i)));
    const BigInt above = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(ell - i));
    total += std::min<BigInt>(below - 1, above);
  }
  return total;
}

BlockLanguage by_predicate(std::uint32_t k, std::size_t ell, auto&& member) {
  const Alphabet a(k);
  BitSeq bits(block_size(k, ell));
  for (std::uint64_t i = 0; i < bits.size(); ++i) bits.set(i, member(index_to_word(a, ell, i)));
  return BlockLanguage(a, ell, std::move(bits));
}

}  // namespace

TEST_CASE("bound parameters") {
  const BoundParams p = bound_params(2, 5);
  CHECK(p.r == 2);
  CHECK(p.max_dsc == 20);
  CHECK(p.t == 8);
  CHECK(p.r_kl == 2);
  const BoundParams one = bound_params(2, 1);
  CHECK(one.r == 1);
  CHECK(one.max_dsc == 3);
  CHECK_THROWS_AS(bound_params(1, 4), Error);
  CHECK_THROWS_AS(bound_params(2, 0), Error);
  CHECK_THROWS_AS(bound_params(2, 70000), Error);
}

TEST_CASE("max_dsc equals the sum of per-rank width caps") {
  for (std::uint32_t k = 2; k <= 4; ++k)
    for (std::size_t ell = 1; ell <= 14; ++ell) {
      CAPTURE(k);
      CAPTURE(ell);
      const BoundParams p = bound_params(k, ell);
      CHECK(p.max_dsc == width_cap_sum(k, ell));
      const BigInt kr = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(ell - p.r));
      CHECK(kr <= (BigInt(1) << static_cast<unsigned>(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(p.r)))) - 1);
      std::size_t log = 0;
      for (std::size_t v = ell; v >= k; v /= k) ++log;
      CHECK(static_cast<long>(p.r) - static_cast<long>(log + 1) == p.x);
      CHECK(p.x >= -1);
      CHECK(p.x <= 1);
      CHECK((p.r_kl == p.r || p.r_kl + 1 == p.r));
    }
}

TEST_CASE("max_dsc is the largest dsc over every binary language of length up to 4") {
  for (std::size_t ell = 1; ell <= 4; ++ell) {
    const std::uint64_t n = std::uint64_t{1} << ell;
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      BitSeq bits(n);
      for (std::uint64_t i = 0; i < n; ++i) bits.set(i, mask >> i & 1U);
      best = std::max(best, factor_sets(BlockLanguage(Alphabet(2), ell, std::move(bits))).total() + 1);
    }
    CHECK(BigInt(best) == bound_params(2, ell).max_dsc);
  }
}

TEST_CASE("E family") {
  CHECK(witness_E(5).bits().to_string() == "10000100110000101010011011100001");
  const std::vector<std::string> listed = {"aaaaa", "aabab", "abaaa", "abaab", "abbba", "baaaa", "baaba",
                                           "babab", "babba", "bbaaa", "bbaab", "bbaba", "bbbbb"};
  std::vector<Word> words;
  const Alphabet a(2);
  for (const auto& w : listed) words.push_back(a.parse(w));
  CHECK(from_words(a, 5, words) == witness_E(5));
  for (std::size_t ell = 2; ell <= 12; ++ell) {
    CAPTURE(ell);
    const BlockLanguage e = witness_E(ell);
    CHECK(e == witness_E_closed_form(ell));
    const BoundParams p = bound_params(2, ell);
    const ComplexityReport r = measure(e, {false});
    CHECK(BigInt(r.dsc) == p.max_dsc);
    CHECK(BigInt(r.dfa_widths.widths[p.r_kl]) == p.t);
  }
  CHECK_THROWS_AS(witness_E(1), Error);
}

TEST_CASE("parity family mirrors positions of one parity") {
  for (std::uint32_t k = 2; k <= 3; ++k)
    for (std::size_t d = 1; d <= (k == 2 ? 4 : 2); ++d)
      for (int x = 0; x <= 1; ++x) {
        const BlockLanguage want = by_predicate(k, 2 * d, [&](const Word& w) {
          for (std::size_t i = static_cast<std::size_t>(x); i < d; i += 2)
            if (w[i] != w[2 * d - 1 - i]) return false;
          return true;
        });
        CHECK(witness_parity(k, d, x) == want);
        for (const Word& w : to_words(want)) CHECK(parity_member(w, d, x));
      }
  const BlockLanguage both = bit_and(witness_parity(2, 3, 0), witness_parity(2, 3, 1));
  const BlockLanguage pal = by_predicate(2, 6, [](const Word& w) { return std::equal(w.begin(), w.end(), w.rbegin()); });
  CHECK(both == pal);
  CHECK_THROWS_AS(witness_parity(2, 2, 2), Error);
}

TEST_CASE("ko family and its guessing NFA") {
  for (const auto& [k, d] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    CAPTURE(k);
    CAPTURE(d);
    const BlockLanguage want = by_predicate(k, 2 * d, [&](const Word& w) {
      for (std::size_t i = 0; i < d; ++i)
        if (w[i] == w[i + d] && w[i] != k - 1) return true;
      return false;
    });
    CHECK(witness_ko(k, d) == want);
    for (const Word& w : to_words(want)) CHECK(ko_member(w, k, d));
    const RankedNFA nfa = witness_ko_nfa(k, d);
    validate(nfa);
    CHECK(nfa.state_count() == (k - 1) * d * d + 2 * d);
    CHECK(enumerate_language(nfa) == want);
  }
  CHECK_THROWS_AS(witness_ko(2, 1), Error);
}

TEST_CASE("small families") {
  const Alphabet a(2);
  CHECK(singleton(2, 3, a.parse("aaa")).bits().to_string() == "10000000");
  CHECK(full_language(3, 2).is_full());
  const Symbol ac[] = {0, 2};
  const BlockLanguage sub = subalphabet(3, 2, ac);
  CHECK(sub.word_count() == 4);
  CHECK(sub.contains(Alphabet(3).parse("ca")));
  CHECK_FALSE(sub.contains(Alphabet(3).parse("cb")));
  const Symbol bad[] = {5};
  CHECK_THROWS_AS(subalphabet(3, 2, bad), Error);
  CHECK_THROWS_AS(singleton(2, 3, a.parse("aa")), Error);
}
