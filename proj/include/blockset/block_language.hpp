#pragma once

// Block languages (every word has the same length ell) stored as bitmaps.
//
// Bit i of the bitmap is 1 iff the i-th word of Sigma^ell in lexicographic
// order belongs to the language, so the index of a word is its value in base
// k with sigma_0 = 0 as the most significant digit first.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "blockset/bitseq.hpp"

namespace blockset {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

class Alphabet {
 public:
  explicit Alphabet(std::uint32_t k);

  std::uint32_t size() const noexcept { return k_; }
  bool letters() const noexcept { return k_ <= 26; }

  // "a", "b", ... for k <= 26; "s0", "s1", ... beyond.
  std::string glyph(Symbol s) const;
  // Letters are concatenated; numeric glyphs are joined with ','.
  std::string render(const Word& word) const;
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t k_;
};

// k^ell, rejecting ell == 0 and anything above bitmap_cap().
std::uint64_t block_size(std::uint32_t k, std::size_t ell);

class BlockLanguage {
 public:
  BlockLanguage(Alphabet alphabet, std::size_t ell, BitSeq bits);

  static BlockLanguage empty(Alphabet alphabet, std::size_t ell);
  static BlockLanguage full(Alphabet alphabet, std::size_t ell);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::uint32_t k() const noexcept { return alphabet_.size(); }
  std::size_t ell() const noexcept { return ell_; }
  const BitSeq& bits() const noexcept { return bits_; }
  std::uint64_t block_size() const noexcept { return bits_.size(); }

  std::size_t word_count() const noexcept { return bits_.count(); }
  bool is_empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }
  bool contains(const Word& word) const;

  friend bool operator==(const BlockLanguage&, const BlockLanguage&) = default;

 private:
  Alphabet alphabet_;
  std::size_t ell_;
  BitSeq bits_;
};

std::uint64_t word_to_index(const Alphabet& alphabet, std::size_t ell, const Word& word);
Word index_to_word(const Alphabet& alphabet, std::size_t ell, std::uint64_t index);

BlockLanguage from_words(const Alphabet& alphabet, std::size_t ell, std::span<const Word> words);
// Words in lexicographic (index) order.
std::vector<Word> to_words(const BlockLanguage& lang);

// s^i_j: the j-th slice of length k^i. The content views the language's own
// storage; the Factor must not outlive the BlockLanguage it came from.
struct Factor {
  std::size_t rank;
  std::uint64_t index;
  BitView content;
};

Factor factor(const BlockLanguage& lang, std::size_t rank, std::uint64_t index);

// Distinct nonzero factors per rank, in order of first occurrence.
class FactorSets {
 public:
  std::size_t ell() const noexcept { return ranks_.size() - 1; }
  std::size_t width(std::size_t rank) const noexcept { return ranks_[rank].members.size(); }
  std::span<const BitSeq> members(std::size_t rank) const noexcept { return ranks_[rank].members; }
  std::uint64_t first_index(std::size_t rank, std::size_t id) const noexcept { return ranks_[rank].first_index[id]; }
  std::optional<std::size_t> find(std::size_t rank, BitView content) const;
  std::size_t total() const noexcept;

 private:
  friend FactorSets factor_sets(const BlockLanguage& lang);

  struct Rank {
    std::vector<BitSeq> members;
    std::vector<std::uint64_t> first_index;
    std::unordered_map<BitSeq, std::size_t, BitHash, BitEqual> lookup;
  };
  std::vector<Rank> ranks_;
};

FactorSets factor_sets(const BlockLanguage& lang);

BlockLanguage bit_and(const BlockLanguage& lhs, const BlockLanguage& rhs);
BlockLanguage bit_or(const BlockLanguage& lhs, const BlockLanguage& rhs);
BlockLanguage bit_not_block(const BlockLanguage& lang);
BlockLanguage toggle_word(const BlockLanguage& lang, const Word& word);

// Round-robin interleaving of length-`block` pieces taken from each part.
BitSeq perfect_shuffle(std::span<const BitSeq> parts, std::size_t block);
// Same, with `whole` split into `arity` equal consecutive parts.
BitSeq perfect_shuffle(BitView whole, std::size_t arity, std::size_t block);

BlockLanguage reversal_bitmap(const BlockLanguage& lang);
BlockLanguage concat_bitmap(const BlockLanguage& lhs, const BlockLanguage& rhs);

}  // namespace blockset
