#include "blockset/bitseq.hpp"

#include <algorithm>
#include <bit>

#include "blockset/error.hpp"
#include "blockset/simd/kernels.hpp"

namespace blockset {
namespace {

constexpr word_t low_mask(std::size_t bits) noexcept {
  return bits >= kWordBits ? ~word_t{0} : (word_t{1} << bits) - 1;
}

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + kWordBits - 1) / kWordBits; }

std::size_t mix(std::size_t h, word_t w) noexcept {
  w += 0x9e3779b97f4a7c15ULL;
  w = (w ^ (w >> 30)) * 0xbf58476d1ce4e5b9ULL;
  w = (w ^ (w >> 27)) * 0x94d049bb133111ebULL;
  w ^= w >> 31;
  return (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL;
}

}  // namespace

word_t BitView::word_at(std::size_t i) const noexcept {
  const std::size_t first = i * kWordBits;
  if (first >= length_) return 0;
  const std::size_t bits = std::min(kWordBits, length_ - first);
  const std::size_t start = offset_ + first;
  const std::size_t w = start / kWordBits;
  const std::size_t shift = start % kWordBits;
  word_t value = base_[w] >> shift;
  if (shift != 0 && shift + bits > kWordBits) value |= base_[w + 1] << (kWordBits - shift);
  return value & low_mask(bits);
}

bool BitView::none() const noexcept {
  const std::size_t full = length_ / kWordBits;
  if (aligned() && full > 0) {
    if (!simd::active().is_zero(base_ + offset_ / kWordBits, full)) return false;
    return length_ % kWordBits == 0 || word_at(full) == 0;
  }
  for (std::size_t i = 0, n = word_count(); i < n; ++i)
    if (word_at(i) != 0) return false;
  return true;
}

std::size_t BitView::count() const noexcept {
  const std::size_t full = length_ / kWordBits;
  std::size_t total = 0;
  std::size_t i = 0;
  if (aligned() && full > 0) {
    total = simd::active().popcount(base_ + offset_ / kWordBits, full);
    i = full;
  }
  for (std::size_t n = word_count(); i < n; ++i) total += static_cast<std::size_t>(std::popcount(word_at(i)));
  return total;
}

bool BitView::is_subset_of(BitView other) const noexcept {
  const std::size_t full = length_ / kWordBits;
  std::size_t i = 0;
  if (aligned() && other.aligned() && full > 0) {
    if (!simd::active().is_subset(base_ + offset_ / kWordBits, other.base_ + other.offset_ / kWordBits, full))
      return false;
    i = full;
  }
  for (std::size_t n = word_count(); i < n; ++i)
    if ((word_at(i) & ~other.word_at(i)) != 0) return false;
  return true;
}

std::size_t BitView::hash() const noexcept {
  std::size_t h = mix(0xcbf29ce484222325ULL, length_);
  for (std::size_t i = 0, n = word_count(); i < n; ++i) h = mix(h, word_at(i));
  return h;
}

BitSeq BitView::to_seq() const {
  BitSeq out;
  out.append(*this);
  return out;
}

std::string BitView::to_string() const {
  std::string text(length_, '0');
  for (std::size_t p = 0; p < length_; ++p)
    if (test(p)) text[p] = '1';
  return text;
}

bool operator==(BitView a, BitView b) noexcept {
  if (a.length_ != b.length_) return false;
  const std::size_t full = a.length_ / kWordBits;
  std::size_t i = 0;
  if (a.aligned() && b.aligned() && full > 0) {
    if (!simd::active().equal(a.base_ + a.offset_ / kWordBits, b.base_ + b.offset_ / kWordBits, full)) return false;
    i = full;
  }
  for (std::size_t n = a.word_count(); i < n; ++i)
    if (a.word_at(i) != b.word_at(i)) return false;
  return true;
}

std::strong_ordering operator<=>(BitView a, BitView b) noexcept {
  const std::size_t common = std::min(a.length_, b.length_);
  const BitView ap = a.slice(0, common);
  const BitView bp = b.slice(0, common);
  for (std::size_t i = 0, n = ap.word_count(); i < n; ++i) {
    const word_t x = ap.word_at(i);
    const word_t y = bp.word_at(i);
    if (x != y) {
      // lowest differing bit is the leftmost differing position
      const word_t first = (x ^ y) & (~(x ^ y) + 1);
      return (x & first) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return a.length_ <=> b.length_;
}

BitSeq::BitSeq(std::size_t length, bool value) : words_(words_for(length), value ? ~word_t{0} : 0), size_(length) {
  clear_tail();
}

BitSeq BitSeq::from_string(std::string_view text) {
  BitSeq out(text.size());
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] == '1')
      out.set(p);
    else if (text[p] != '0')
      throw Error(ErrorKind::Parse, "bit string may only contain '0' and '1'");
  }
  return out;
}

void BitSeq::append(BitView bits) {
  const std::size_t old = size_;
  size_ += bits.size();
  words_.resize(words_for(size_), 0);
  const std::size_t shift = old % kWordBits;
  const std::size_t base = old / kWordBits;
  for (std::size_t i = 0, n = bits.word_count(); i < n; ++i) {
    const word_t w = bits.word_at(i);
    words_[base + i] |= w << shift;
    if (shift != 0 && base + i + 1 < words_.size()) words_[base + i + 1] |= w >> (kWordBits - shift);
  }
}

void BitSeq::append_zeros(std::size_t n) {
  size_ += n;
  words_.resize(words_for(size_), 0);
}

std::size_t BitSeq::count() const noexcept { return simd::active().popcount(words_.data(), words_.size()); }

bool BitSeq::none() const noexcept { return simd::active().is_zero(words_.data(), words_.size()); }

bool BitSeq::all() const noexcept { return count() == size_; }

BitSeq& BitSeq::operator&=(const BitSeq& rhs) {
  if (rhs.size_ != size_) throw Error(ErrorKind::LengthMismatch, "bitwise AND of sequences of different length");
  simd::active().bit_and(words_.data(), words_.data(), rhs.words_.data(), words_.size());
  return *this;
}

BitSeq& BitSeq::operator|=(const BitSeq& rhs) {
  if (rhs.size_ != size_) throw Error(ErrorKind::LengthMismatch, "bitwise OR of sequences of different length");
  simd::active().or_into(words_.data(), rhs.words_.data(), words_.size());
  return *this;
}

BitSeq& BitSeq::operator^=(const BitSeq& rhs) {
  if (rhs.size_ != size_) throw Error(ErrorKind::LengthMismatch, "bitwise XOR of sequences of different length");
  simd::active().bit_xor(words_.data(), words_.data(), rhs.words_.data(), words_.size());
  return *this;
}

BitSeq BitSeq::operator~() const {
  BitSeq out(*this);
  simd::active().bit_not(out.words_.data(), words_.data(), words_.size());
  out.clear_tail();
  return out;
}

void BitSeq::clear_tail() noexcept {
  if (size_ % kWordBits != 0) words_.back() &= low_mask(size_ % kWordBits);
}

}  // namespace blockset
