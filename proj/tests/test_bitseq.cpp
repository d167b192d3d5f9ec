#include <random>
#include <string>

#include "blockset/bitseq.hpp"
#include "blockset/error.hpp"
#include "doctest.h"

using blockset::BitSeq;
using blockset::BitView;

namespace {

std::string random_bits(std::mt19937_64& rng, std::size_t n) {
  std::string s(n, '0');
  for (auto& c : s)
    if (rng() & 1U) c = '1';
  return s;
}

}  // namespace

TEST_CASE("text round trip and bit positions") {
  const BitSeq b = BitSeq::from_string("1011011100011110");
  CHECK(b.size() == 16);
  CHECK(b.to_string() == "1011011100011110");
  CHECK(b.test(0));
  CHECK_FALSE(b.test(1));
  CHECK(b.test(5));
  CHECK(b.count() == 10);
  CHECK_THROWS_AS(BitSeq::from_string("10x1"), blockset::Error);
}

TEST_CASE("all, none and the zero-tail invariant") {
  for (const std::size_t n : {1, 63, 64, 65, 130}) {
    CAPTURE(n);
    BitSeq ones(n, true);
    CHECK(ones.all());
    CHECK(ones.count() == n);
    BitSeq zero = ~ones;
    CHECK(zero.none());
    CHECK(zero.count() == 0);
    CHECK(zero == BitSeq(n));
  }
}

TEST_CASE("unaligned slices read the right bits") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const std::string text = random_bits(rng, 1 + rng() % 400);
    const BitSeq b = BitSeq::from_string(text);
    const std::size_t pos = rng() % text.size();
    const std::size_t len = rng() % (text.size() - pos + 1);
    const BitView v = b.slice(pos, len);
    CHECK(v.to_string() == text.substr(pos, len));
    CHECK(v.to_seq().to_string() == text.substr(pos, len));
    CHECK(v.count() == static_cast<std::size_t>(std::count(text.begin() + pos, text.begin() + pos + len, '1')));
    CHECK(v.none() == (text.substr(pos, len).find('1') == std::string::npos));
  }
}

TEST_CASE("bitwise operators agree with character arithmetic") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + rng() % 300;
    const std::string x = random_bits(rng, n);
    const std::string y = random_bits(rng, n);
    const BitSeq a = BitSeq::from_string(x);
    const BitSeq b = BitSeq::from_string(y);
    std::string want_and, want_or, want_xor, want_not;
    for (std::size_t i = 0; i < n; ++i) {
      const bool p = x[i] == '1';
      const bool q = y[i] == '1';
      want_and += (p && q) ? '1' : '0';
      want_or += (p || q) ? '1' : '0';
      want_xor += (p != q) ? '1' : '0';
      want_not += p ? '0' : '1';
    }
    CHECK((a & b).to_string() == want_and);
    CHECK((a | b).to_string() == want_or);
    CHECK((a ^ b).to_string() == want_xor);
    CHECK((~a).to_string() == want_not);
    CHECK((a & b).view().is_subset_of(a));
    CHECK(a.view().is_subset_of(a | b));
  }
}

TEST_CASE("canonical order is lexicographic on the text") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng() % 130;
    const std::string x = random_bits(rng, n);
    const std::string y = rng() % 4 == 0 ? x : random_bits(rng, n);
    const auto got = BitSeq::from_string(x).view() <=> BitSeq::from_string(y).view();
    CHECK((got < 0) == (x < y));
    CHECK((got == 0) == (x == y));
  }
  CHECK((BitSeq::from_string("01").view() <=> BitSeq::from_string("010").view()) < 0);
}

TEST_CASE("append keeps bits in order") {
  std::mt19937_64 rng(9);
  BitSeq acc;
  std::string text;
  for (int round = 0; round < 30; ++round) {
    const std::string part = random_bits(rng, rng() % 90);
    const BitSeq p = BitSeq::from_string(part);
    acc.append(p.slice(0, p.size()));
    text += part;
    const std::size_t zeros = rng() % 70;
    acc.append_zeros(zeros);
    text += std::string(zeros, '0');
  }
  CHECK(acc.to_string() == text);
  BitSeq copy = acc;
  if (!text.empty()) {
    copy.flip(0);
    CHECK(copy.test(0) != acc.test(0));
    copy.set(0, acc.test(0));
    CHECK(copy == acc);
  }
}

TEST_CASE("equal slices hash alike") {
  const BitSeq a = BitSeq::from_string("0110100110010110");
  const BitSeq b = BitSeq::from_string("1001011001101001");
  CHECK(a.slice(4, 4) == b.slice(0, 4));
  CHECK(a.slice(4, 4).hash() == b.slice(0, 4).hash());
  CHECK(a.slice(4, 4) != a.slice(0, 4));
}
