#include "blockset/block_language.hpp"

#include <algorithm>
#include <limits>

#include "blockset/config.hpp"
#include "blockset/error.hpp"

namespace blockset {
namespace {

// k^e without the cap check; callers have already bounded k^ell.
std::uint64_t ipow(std::uint64_t k, std::size_t e) noexcept {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= k;
  return r;
}

void require_same_block(const BlockLanguage& lhs, const BlockLanguage& rhs, const char* op) {
  if (lhs.k() != rhs.k() || lhs.ell() != rhs.ell())
    throw Error(ErrorKind::LengthMismatch, std::string(op) + " needs operands with equal alphabet and word length");
}

}  // namespace

Alphabet::Alphabet(std::uint32_t k) : k_(k) {
  if (k == 0) throw Error(ErrorKind::InvalidWord, "alphabet must have at least one symbol");
}

std::string Alphabet::glyph(Symbol s) const {
  if (s >= k_) throw Error(ErrorKind::InvalidWord, "symbol " + std::to_string(s) + " outside alphabet");
  if (letters()) return std::string(1, static_cast<char>('a' + s));
  return "s" + std::to_string(s);
}

std::string Alphabet::render(const Word& word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!letters() && i > 0) out += ',';
    out += glyph(word[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word word;
  if (letters()) {
    word.reserve(text.size());
    for (const char c : text) {
      if (c < 'a' || c >= static_cast<char>('a' + k_))
        throw Error(ErrorKind::InvalidWord, "glyph '" + std::string(1, c) + "' not in alphabet of size " +
                                                std::to_string(k_));
      word.push_back(static_cast<Symbol>(c - 'a'));
    }
    return word;
  }
  if (text.empty()) return word;
  for (std::size_t pos = 0;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (token.size() < 2 || token[0] != 's')
      throw Error(ErrorKind::InvalidWord, "expected numeric glyph sN, got '" + std::string(token) + "'");
    std::uint64_t value = 0;
    for (const char c : token.substr(1)) {
      if (c < '0' || c > '9') throw Error(ErrorKind::InvalidWord, "bad numeric glyph '" + std::string(token) + "'");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
      if (value >= k_) throw Error(ErrorKind::InvalidWord, "glyph '" + std::string(token) + "' not in alphabet");
    }
    word.push_back(static_cast<Symbol>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return word;
}

std::uint64_t block_size(std::uint32_t k, std::size_t ell) {
  if (ell == 0) throw Error(ErrorKind::Overflow, "word length must be positive");
  const std::uint64_t cap = bitmap_cap();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < ell; ++i) {
    if (size > cap / k)
      throw Error(ErrorKind::Overflow, "k^ell = " + std::to_string(k) + "^" + std::to_string(ell) +
                                           " exceeds the bitmap cap of " + std::to_string(cap));
    size *= k;
  }
  return size;
}

BlockLanguage::BlockLanguage(Alphabet alphabet, std::size_t ell, BitSeq bits)
    : alphabet_(alphabet), ell_(ell), bits_(std::move(bits)) {
  const std::uint64_t expected = blockset::block_size(alphabet_.size(), ell_);
  if (bits_.size() != expected)
    throw Error(ErrorKind::LengthMismatch, "bitmap has " + std::to_string(bits_.size()) + " bits, expected k^ell = " +
                                               std::to_string(expected));
}

BlockLanguage BlockLanguage::empty(Alphabet alphabet, std::size_t ell) {
  return BlockLanguage(alphabet, ell, BitSeq(blockset::block_size(alphabet.size(), ell)));
}

BlockLanguage BlockLanguage::full(Alphabet alphabet, std::size_t ell) {
  return BlockLanguage(alphabet, ell, BitSeq(blockset::block_size(alphabet.size(), ell), true));
}

bool BlockLanguage::contains(const Word& word) const { return bits_.test(word_to_index(alphabet_, ell_, word)); }

std::uint64_t word_to_index(const Alphabet& alphabet, std::size_t ell, const Word& word) {
  if (word.size() != ell)
    throw Error(ErrorKind::InvalidWord, "word has length " + std::to_string(word.size()) + ", expected " +
                                            std::to_string(ell));
  std::uint64_t index = 0;
  for (const Symbol s : word) {
    if (s >= alphabet.size()) throw Error(ErrorKind::InvalidWord, "symbol outside alphabet");
    if (index > (std::numeric_limits<std::uint64_t>::max() - s) / alphabet.size())
      throw Error(ErrorKind::Overflow, "word index does not fit in 64 bits");
    index = index * alphabet.size() + s;
  }
  return index;
}

Word index_to_word(const Alphabet& alphabet, std::size_t ell, std::uint64_t index) {
  const std::uint64_t k = alphabet.size();
  Word word(ell, 0);
  std::uint64_t rest = index;
  for (std::size_t p = ell; p-- > 0;) {
    word[p] = static_cast<Symbol>(rest % k);
    rest /= k;
  }
  if (rest != 0) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(index) + " >= k^ell");
  return word;
}

BlockLanguage from_words(const Alphabet& alphabet, std::size_t ell, std::span<const Word> words) {
  BitSeq bits(block_size(alphabet.size(), ell));
  for (const Word& w : words) bits.set(word_to_index(alphabet, ell, w));
  return BlockLanguage(alphabet, ell, std::move(bits));
}

std::vector<Word> to_words(const BlockLanguage& lang) {
  std::vector<Word> words;
  words.reserve(lang.word_count());
  const BitSeq& bits = lang.bits();
  for (std::size_t w = 0; w < bits.words().size(); ++w) {
    for (word_t rest = bits.words()[w]; rest != 0; rest &= rest - 1) {
      const auto bit = static_cast<std::size_t>(__builtin_ctzll(rest));
      words.push_back(index_to_word(lang.alphabet(), lang.ell(), w * kWordBits + bit));
    }
  }
  return words;
}

Factor factor(const BlockLanguage& lang, std::size_t rank, std::uint64_t index) {
  if (rank > lang.ell()) throw Error(ErrorKind::IndexOutOfRange, "rank exceeds word length");
  const std::uint64_t length = ipow(lang.k(), rank);
  const std::uint64_t count = lang.block_size() / length;
  if (index >= count)
    throw Error(ErrorKind::IndexOutOfRange, "factor index " + std::to_string(index) + " >= k^(ell-i) = " +
                                                std::to_string(count));
  return Factor{rank, index, lang.bits().slice(index * length, length)};
}

std::optional<std::size_t> FactorSets::find(std::size_t rank, BitView content) const {
  const auto& lookup = ranks_[rank].lookup;
  if (auto it = lookup.find(content); it != lookup.end()) return it->second;
  return std::nullopt;
}

std::size_t FactorSets::total() const noexcept {
  std::size_t sum = 0;
  for (const Rank& r : ranks_) sum += r.members.size();
  return sum;
}

FactorSets factor_sets(const BlockLanguage& lang) {
  FactorSets sets;
  sets.ranks_.resize(lang.ell() + 1);
  std::uint64_t length = 1;
  for (std::size_t rank = 0; rank <= lang.ell(); ++rank, length *= lang.k()) {
    auto& out = sets.ranks_[rank];
    const std::uint64_t count = lang.block_size() / length;
    for (std::uint64_t j = 0; j < count; ++j) {
      const BitView piece = lang.bits().slice(j * length, length);
      if (piece.none()) continue;
      if (out.lookup.find(piece) != out.lookup.end()) continue;
      out.members.push_back(piece.to_seq());
      out.first_index.push_back(j);
      out.lookup.emplace(out.members.back(), out.members.size() - 1);
    }
  }
  return sets;
}

BlockLanguage bit_and(const BlockLanguage& lhs, const BlockLanguage& rhs) {
  require_same_block(lhs, rhs, "intersection");
  return BlockLanguage(lhs.alphabet(), lhs.ell(), lhs.bits() & rhs.bits());
}

BlockLanguage bit_or(const BlockLanguage& lhs, const BlockLanguage& rhs) {
  require_same_block(lhs, rhs, "union");
  return BlockLanguage(lhs.alphabet(), lhs.ell(), lhs.bits() | rhs.bits());
}

BlockLanguage bit_not_block(const BlockLanguage& lang) { return BlockLanguage(lang.alphabet(), lang.ell(), ~lang.bits()); }

BlockLanguage toggle_word(const BlockLanguage& lang, const Word& word) {
  BitSeq bits = lang.bits();
  bits.flip(word_to_index(lang.alphabet(), lang.ell(), word));
  return BlockLanguage(lang.alphabet(), lang.ell(), std::move(bits));
}

BitSeq perfect_shuffle(std::span<const BitSeq> parts, std::size_t block) {
  if (parts.empty()) throw Error(ErrorKind::ShuffleArityMismatch, "shuffle needs at least one part");
  const std::size_t n = parts.front().size();
  for (const BitSeq& p : parts)
    if (p.size() != n) throw Error(ErrorKind::ShuffleArityMismatch, "shuffle parts differ in length");
  if (block == 0 || n % block != 0)
    throw Error(ErrorKind::ShuffleArityMismatch, "block length must divide the part length");
  BitSeq out;
  for (std::size_t at = 0; at < n; at += block)
    for (const BitSeq& p : parts) out.append(p.slice(at, block));
  return out;
}

BitSeq perfect_shuffle(BitView whole, std::size_t arity, std::size_t block) {
  if (arity == 0 || whole.size() % arity != 0)
    throw Error(ErrorKind::ShuffleArityMismatch, "sequence does not split into equal parts");
  const std::size_t n = whole.size() / arity;
  if (block == 0 || n % block != 0)
    throw Error(ErrorKind::ShuffleArityMismatch, "block length must divide the part length");
  if (block == 1) {
    BitSeq out(whole.size());
    for (std::size_t at = 0, pos = 0; at < n; ++at)
      for (std::size_t p = 0; p < arity; ++p, ++pos)
        if (whole.test(p * n + at)) out.set(pos);
    return out;
  }
  BitSeq out;
  for (std::size_t at = 0; at < n; at += block)
    for (std::size_t p = 0; p < arity; ++p) out.append(whole.slice(p * n + at, block));
  return out;
}

BlockLanguage reversal_bitmap(const BlockLanguage& lang) {
  BitSeq current = lang.bits();
  std::size_t block = 1;
  for (std::size_t i = 1; i < lang.ell(); ++i, block *= lang.k()) current = perfect_shuffle(current.view(), lang.k(), block);
  return BlockLanguage(lang.alphabet(), lang.ell(), std::move(current));
}

BlockLanguage concat_bitmap(const BlockLanguage& lhs, const BlockLanguage& rhs) {
  if (lhs.k() != rhs.k()) throw Error(ErrorKind::LengthMismatch, "concatenation needs a common alphabet");
  const std::size_t ell = lhs.ell() + rhs.ell();
  block_size(lhs.k(), ell);
  BitSeq out;
  const std::size_t piece = rhs.block_size();
  for (std::size_t i = 0; i < lhs.block_size(); ++i) {
    if (lhs.bits().test(i))
      out.append(rhs.bits());
    else
      out.append_zeros(piece);
  }
  return BlockLanguage(lhs.alphabet(), ell, std::move(out));
}

}  // namespace blockset
