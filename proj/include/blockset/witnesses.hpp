#pragma once

// Bound formulas for the largest minimal DFA of a block language, and the
// language families that meet the operational bounds.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>

#include "blockset/automata.hpp"
#include "blockset/block_language.hpp"

namespace blockset {

using BigInt = boost::multiprecision::cpp_int;

struct BoundParams {
  std::uint32_t k = 0;
  std::size_t ell = 0;
  // Least n with k^(ell-n) <= 2^(k^n) - 1.
  std::size_t r = 0;
  // r - (floor(log_k ell) + 1); always in {-1, 0, 1}.
  int x = 0;
  // Rank holding the widest level: r or r - 1.
  std::size_t r_kl = 0;
  // max(k^(ell-r), 2^(k^(r-1)) - 1).
  BigInt t;
  BigInt max_dsc;
};

// Requires k >= 2 and ell >= 1. Throws Error{Overflow} when ell * log2(k)
// exceeds 65536 bits.
BoundParams bound_params(std::uint32_t k, std::size_t ell);

// E_ell over {a, b}: w1 w2 with |w2| = r_ell is accepted iff bit ind(w2) of
// ind(w1) + 1 is set. Requires ell >= 2.
BlockLanguage witness_E(std::size_t ell);
// The same bitmap assembled from reversed, zero-padded binary numerals.
BlockLanguage witness_E_closed_form(std::size_t ell);

// L_{k,d,x}: words a_0 ... a_{2d-1} with a_i = a_{2d-1-i} for every i < d of
// parity x.
BlockLanguage witness_parity(std::uint32_t k, std::size_t d, int x);
bool parity_member(const Word& word, std::size_t d, int x);

// L_{k,d}: words of length 2d with some i < d where w_i = w_{i+d} differs from
// the last symbol of the alphabet.
BlockLanguage witness_ko(std::uint32_t k, std::size_t d);
bool ko_member(const Word& word, std::uint32_t k, std::size_t d);
// Guessing NFA with (k-1) d^2 + 2d states.
RankedNFA witness_ko_nfa(std::uint32_t k, std::size_t d);

BlockLanguage full_language(std::uint32_t k, std::size_t ell);
BlockLanguage singleton(std::uint32_t k, std::size_t ell, const Word& word);
// Every word of length ell over the given symbols.
BlockLanguage subalphabet(std::uint32_t k, std::size_t ell, std::span<const Symbol> symbols);

}  // namespace blockset
