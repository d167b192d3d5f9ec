#include <random>
#include <vector>

#include "blockset/simd/kernels.hpp"
#include "doctest.h"

using blockset::simd::KernelTable;
using blockset::simd::word_t;

namespace {

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out;
  if (const auto* t = blockset::simd::avx2_kernels()) out.push_back(t);
  if (const auto* t = blockset::simd::neon_kernels()) out.push_back(t);
  return out;
}

std::vector<word_t> random_words(std::mt19937_64& rng, std::size_t n, int sparsity) {
  std::vector<word_t> v(n);
  for (auto& w : v) {
    w = rng();
    for (int i = 0; i < sparsity; ++i) w &= rng();
  }
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match plain loops") {
  const KernelTable& s = blockset::simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 40; ++n) {
    const auto a = random_words(rng, n, 0);
    const auto b = random_words(rng, n, 1);
    std::vector<word_t> out(n);
    s.bit_and(out.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == (a[i] & b[i]));
    s.bit_xor(out.data(), a.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(out[i] == (a[i] ^ b[i]));
    std::size_t pop = 0;
    for (const word_t w : a) pop += static_cast<std::size_t>(__builtin_popcountll(w));
    CHECK(s.popcount(a.data(), n) == pop);
    bool subset = true;
    for (std::size_t i = 0; i < n; ++i) subset = subset && (b[i] & ~a[i]) == 0;
    CHECK(s.is_subset(b.data(), a.data(), n) == subset);
  }
}

TEST_CASE("every compiled variant agrees with the scalar reference") {
  const KernelTable& ref = blockset::simd::scalar_kernels();
  std::mt19937_64 rng(2024);
  for (const KernelTable* v : variants()) {
    CAPTURE(v->name);
    for (std::size_t n = 0; n <= 300; ++n) {
      for (int sparsity = 0; sparsity < 3; ++sparsity) {
        const auto a = random_words(rng, n, sparsity);
        auto b = random_words(rng, n, sparsity);
        std::vector<word_t> want(n), got(n);

        ref.bit_and(want.data(), a.data(), b.data(), n);
        v->bit_and(got.data(), a.data(), b.data(), n);
        REQUIRE(got == want);
        ref.bit_or(want.data(), a.data(), b.data(), n);
        v->bit_or(got.data(), a.data(), b.data(), n);
        REQUIRE(got == want);
        ref.bit_xor(want.data(), a.data(), b.data(), n);
        v->bit_xor(got.data(), a.data(), b.data(), n);
        REQUIRE(got == want);
        ref.bit_not(want.data(), a.data(), n);
        v->bit_not(got.data(), a.data(), n);
        REQUIRE(got == want);

        want = b;
        got = b;
        ref.or_into(want.data(), a.data(), n);
        v->or_into(got.data(), a.data(), n);
        REQUIRE(got == want);

        REQUIRE(v->popcount(a.data(), n) == ref.popcount(a.data(), n));
        REQUIRE(v->is_zero(a.data(), n) == ref.is_zero(a.data(), n));
        const std::vector<word_t> zeros(n, 0);
        REQUIRE(v->is_zero(zeros.data(), n));
        REQUIRE(v->equal(a.data(), b.data(), n) == ref.equal(a.data(), b.data(), n));
        REQUIRE(v->equal(a.data(), a.data(), n));
        if (n > 0) {
          auto c = a;
          c[rng() % n] ^= word_t{1} << (rng() % 64);
          REQUIRE_FALSE(v->equal(a.data(), c.data(), n));
        }
        std::vector<word_t> sub(n);
        ref.bit_and(sub.data(), a.data(), b.data(), n);
        REQUIRE(v->is_subset(sub.data(), a.data(), n));
        REQUIRE(v->is_subset(a.data(), b.data(), n) == ref.is_subset(a.data(), b.data(), n));
      }
    }
  }
}

TEST_CASE("the active table is one of the compiled tables") {
  const KernelTable& active = blockset::simd::active();
  bool known = &active == &blockset::simd::scalar_kernels();
  for (const KernelTable* v : variants()) known = known || &active == v;
  CHECK(known);
}
