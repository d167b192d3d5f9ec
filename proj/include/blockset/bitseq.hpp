#pragma once

// Packed bit sequences.
//
// Position 0 is the leftmost bit of the textual form. Storage is LSB-first
// inside each 64-bit word: bit p lives in word p / 64 at bit p % 64. Bits past
// size() in the last word are always zero for an owning BitSeq, so whole-word
// kernels can run over the storage without masking.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace blockset {

using word_t = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

class BitSeq;

// Non-owning window [offset, offset + size) into packed storage. Views of a
// word-aligned offset are handed straight to the SIMD kernels; unaligned views
// are read through word_at(), which stitches two storage words together.
class BitView {
 public:
  BitView() = default;
  BitView(const word_t* base, std::size_t offset, std::size_t length) noexcept
      : base_(base), offset_(offset), length_(length) {}

  std::size_t size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  std::size_t word_count() const noexcept { return (length_ + kWordBits - 1) / kWordBits; }
  bool aligned() const noexcept { return offset_ % kWordBits == 0; }

  bool test(std::size_t pos) const noexcept {
    const std::size_t p = offset_ + pos;
    return (base_[p / kWordBits] >> (p % kWordBits)) & 1U;
  }

  // Logical word i of the view (bits 64i .. 64i+63), zero-padded past size().
  word_t word_at(std::size_t i) const noexcept;

  BitView slice(std::size_t pos, std::size_t length) const noexcept {
    return BitView(base_, offset_ + pos, length);
  }

  bool none() const noexcept;
  std::size_t count() const noexcept;
  // Bitwise this <= other. Sizes must match.
  bool is_subset_of(BitView other) const noexcept;
  std::size_t hash() const noexcept;
  BitSeq to_seq() const;
  std::string to_string() const;

  friend bool operator==(BitView a, BitView b) noexcept;
  // Canonical order: lexicographic on the textual form ('0' < '1'), shorter
  // sequences first when one is a prefix of the other.
  friend std::strong_ordering operator<=>(BitView a, BitView b) noexcept;

 private:
  const word_t* base_ = nullptr;
  std::size_t offset_ = 0;
  std::size_t length_ = 0;
};

class BitSeq {
 public:
  BitSeq() = default;
  explicit BitSeq(std::size_t length, bool value = false);

  // Parses a string of '0'/'1'. Throws Error{Parse} on other characters.
  static BitSeq from_string(std::string_view text);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::span<const word_t> words() const noexcept { return words_; }

  bool test(std::size_t pos) const noexcept { return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1U; }
  void set(std::size_t pos, bool value = true) noexcept {
    const word_t mask = word_t{1} << (pos % kWordBits);
    if (value)
      words_[pos / kWordBits] |= mask;
    else
      words_[pos / kWordBits] &= ~mask;
  }
  void flip(std::size_t pos) noexcept { words_[pos / kWordBits] ^= word_t{1} << (pos % kWordBits); }

  BitView view() const noexcept { return BitView(words_.data(), 0, size_); }
  BitView slice(std::size_t pos, std::size_t length) const noexcept { return BitView(words_.data(), pos, length); }
  operator BitView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  void append(BitView bits);
  void append_zeros(std::size_t n);

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept;
  std::string to_string() const { return view().to_string(); }

  BitSeq& operator&=(const BitSeq& rhs);
  BitSeq& operator|=(const BitSeq& rhs);
  BitSeq& operator^=(const BitSeq& rhs);
  BitSeq operator~() const;
  friend BitSeq operator&(BitSeq lhs, const BitSeq& rhs) { return lhs &= rhs; }
  friend BitSeq operator|(BitSeq lhs, const BitSeq& rhs) { return lhs |= rhs; }
  friend BitSeq operator^(BitSeq lhs, const BitSeq& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitSeq& a, const BitSeq& b) noexcept { return a.view() == b.view(); }
  friend std::strong_ordering operator<=>(const BitSeq& a, const BitSeq& b) noexcept {
    return a.view() <=> b.view();
  }

 private:
  void clear_tail() noexcept;

  std::vector<word_t> words_;
  std::size_t size_ = 0;
};

// Transparent hash/equality so BitView can probe containers keyed by BitSeq
// without materialising a copy.
struct BitHash {
  using is_transparent = void;
  std::size_t operator()(BitView v) const noexcept { return v.hash(); }
  std::size_t operator()(const BitSeq& s) const noexcept { return s.view().hash(); }
};

struct BitEqual {
  using is_transparent = void;
  bool operator()(BitView a, BitView b) const noexcept { return a == b; }
};

}  // namespace blockset
