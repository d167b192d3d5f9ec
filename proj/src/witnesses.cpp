#include "blockset/witnesses.hpp"

#include <algorithm>
#include <string>

#include "blockset/error.hpp"

namespace blockset {
namespace {

BigInt big_pow(std::uint32_t k, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

// 2^(k^n) - 1 compared against `lhs` without building towers that cannot matter.
bool tower_at_least(const BigInt& lhs, std::uint32_t k, std::size_t n) {
  const BigInt exponent = big_pow(k, n);
  const std::size_t bits = lhs == 0 ? 0 : boost::multiprecision::msb(lhs) + 1;
  if (exponent > bits) return true;
  const BigInt tower = (BigInt(1) << static_cast<unsigned>(exponent)) - 1;
  return lhs <= tower;
}

BigInt tower(std::uint32_t k, std::size_t n) {
  return (BigInt(1) << static_cast<unsigned>(big_pow(k, n))) - 1;
}

std::uint64_t pow_u64(std::uint64_t k, std::size_t e) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::IndexOutOfRange, what);
}

template <typename Pred>
BlockLanguage from_predicate(std::uint32_t k, std::size_t ell, Pred&& member) {
  const Alphabet alphabet(k);
  BitSeq bits(block_size(k, ell));
  for (std::uint64_t i = 0; i < bits.size(); ++i)
    if (member(index_to_word(alphabet, ell, i))) bits.set(i);
  return BlockLanguage(alphabet, ell, std::move(bits));
}

}  // namespace

BoundParams bound_params(std::uint32_t k, std::size_t ell) {
  require(k >= 2, "bound formulas need k >= 2");
  require(ell >= 1, "bound formulas need ell >= 1");
  std::size_t log2k = 0;
  while ((std::uint64_t{1} << (log2k + 1)) <= k) ++log2k;
  if (ell * (log2k + 1) > 65536) throw Error(ErrorKind::Overflow, "k^ell too large for the bound formulas");

  BoundParams p;
  p.k = k;
  p.ell = ell;
  std::size_t r = 0;
  while (!tower_at_least(big_pow(k, ell - r), k, r)) ++r;
  p.r = r;

  std::size_t log_k_ell = 0;
  for (std::uint64_t v = k; v <= ell; v *= k) ++log_k_ell;
  p.x = static_cast<int>(r) - static_cast<int>(log_k_ell + 1);

  const BigInt upper = big_pow(k, ell - r);
  const BigInt lower = tower(k, r - 1);
  p.t = std::max(upper, lower);
  p.r_kl = upper > lower ? r : r - 1;

  p.max_dsc = (big_pow(k, ell - r + 1) - 1) / (k - 1) + 1;
  for (std::size_t i = 0; i < r; ++i) p.max_dsc += tower(k, i);
  return p;
}

BlockLanguage witness_E(std::size_t ell) {
  require(ell >= 2, "E_ell needs ell >= 2");
  const std::size_t tail = bound_params(2, ell).r_kl;
  return from_predicate(2, ell, [&](const Word& w) {
    std::uint64_t i = 0, j = 0;
    for (std::size_t p = 0; p < ell - tail; ++p) i = 2 * i + w[p];
    for (std::size_t p = ell - tail; p < ell; ++p) j = 2 * j + w[p];
    return j < 64 && (((i + 1) >> j) & 1U) != 0;
  });
}

BlockLanguage witness_E_closed_form(std::size_t ell) {
  require(ell >= 2, "E_ell needs ell >= 2");
  const BoundParams p = bound_params(2, ell);
  block_size(2, ell);
  const std::size_t width = std::size_t{1} << p.r_kl;
  const auto t = static_cast<std::uint64_t>(p.t);
  BitSeq bits;
  for (std::uint64_t i = 1; i <= t; ++i) {
    BitSeq piece(width);
    // pad(bin(i)) read backwards puts the least significant digit first
    for (std::size_t b = 0; b < width && b < 64; ++b)
      if ((i >> b) & 1U) piece.set(b);
    bits.append(piece);
  }
  if (t != pow_u64(2, ell - p.r)) bits.append_zeros(width);
  return BlockLanguage(Alphabet(2), ell, std::move(bits));
}

bool parity_member(const Word& word, std::size_t d, int x) {
  for (std::size_t i = static_cast<std::size_t>(x); i < d; i += 2)
    if (word[i] != word[2 * d - 1 - i]) return false;
  return true;
}

BlockLanguage witness_parity(std::uint32_t k, std::size_t d, int x) {
  require(k >= 2 && d >= 1 && (x == 0 || x == 1), "parity witness needs k >= 2, d >= 1, x in {0, 1}");
  return from_predicate(k, 2 * d, [&](const Word& w) { return parity_member(w, d, x); });
}

bool ko_member(const Word& word, std::uint32_t k, std::size_t d) {
  for (std::size_t i = 0; i < d; ++i)
    if (word[i] == word[i + d] && word[i] != k - 1) return true;
  return false;
}

BlockLanguage witness_ko(std::uint32_t k, std::size_t d) {
  require(k >= 2 && d >= 2, "complement witness needs k >= 2, d >= 2");
  return from_predicate(k, 2 * d, [&](const Word& w) { return ko_member(w, k, d); });
}

RankedNFA witness_ko_nfa(std::uint32_t k, std::size_t d) {
  require(k >= 2 && d >= 2, "complement witness needs k >= 2, d >= 2");
  RankedNFA nfa(Alphabet(k), 2 * d);
  std::vector<StateId> prefix(d), suffix(d);
  for (std::size_t j = 0; j < d; ++j) prefix[j] = nfa.add_state(2 * d - j);
  // guess[(s * d + u) * d + a]: symbol s seen, u symbols still to skip, a left after the match
  std::vector<StateId> guess((k - 1) * d * d);
  for (Symbol s = 0; s + 1 < k; ++s)
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t a = 0; a < d; ++a) guess[(s * d + u) * d + a] = nfa.add_state(u + 1 + a);
  for (std::size_t a = 0; a < d; ++a) suffix[a] = nfa.add_state(a);

  for (std::size_t j = 0; j < d; ++j) {
    for (Symbol s = 0; s < k; ++s) {
      if (j + 1 < d) nfa.add_transition(prefix[j], s, prefix[j + 1]);
      if (s + 1 < k) nfa.add_transition(prefix[j], s, guess[(s * d + (d - 1)) * d + (d - 1 - j)]);
    }
  }
  for (Symbol s = 0; s + 1 < k; ++s)
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t u = 1; u < d; ++u)
        for (Symbol c = 0; c < k; ++c)
          nfa.add_transition(guess[(s * d + u) * d + a], c, guess[(s * d + u - 1) * d + a]);
      nfa.add_transition(guess[(s * d) * d + a], s, suffix[a]);
    }
  for (std::size_t a = 1; a < d; ++a)
    for (Symbol c = 0; c < k; ++c) nfa.add_transition(suffix[a], c, suffix[a - 1]);
  nfa.set_initial(prefix[0]);
  nfa.add_final(suffix[0]);
  return nfa;
}

BlockLanguage full_language(std::uint32_t k, std::size_t ell) { return BlockLanguage::full(Alphabet(k), ell); }

BlockLanguage singleton(std::uint32_t k, std::size_t ell, const Word& word) {
  const Alphabet alphabet(k);
  BitSeq bits(block_size(k, ell));
  bits.set(word_to_index(alphabet, ell, word));
  return BlockLanguage(alphabet, ell, std::move(bits));
}

BlockLanguage subalphabet(std::uint32_t k, std::size_t ell, std::span<const Symbol> symbols) {
  std::vector<unsigned char> keep(k, 0);
  for (const Symbol s : symbols) {
    if (s >= k) throw Error(ErrorKind::InvalidWord, "symbol " + std::to_string(s) + " outside alphabet");
    keep[s] = 1;
  }
  return from_predicate(k, ell, [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](Symbol s) { return keep[s] != 0; });
  });
}

}  // namespace blockset
