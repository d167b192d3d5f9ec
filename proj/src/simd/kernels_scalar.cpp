#include <bit>

#include "blockset/simd/kernels.hpp"

namespace blockset::simd {
namespace {

void and_scalar(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_scalar(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_scalar(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void not_scalar(word_t* dst, const word_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

void or_into_scalar(word_t* dst, const word_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= a[i];
}

std::size_t popcount_scalar(const word_t* a, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool is_zero_scalar(const word_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0) return false;
  return true;
}

bool equal_scalar(const word_t* a, const word_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_subset_scalar(const word_t* a, const word_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

constexpr KernelTable kScalar{
    "scalar",       and_scalar,      or_scalar,      xor_scalar,        not_scalar,
    or_into_scalar, popcount_scalar, is_zero_scalar, equal_scalar, is_subset_scalar,
};

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalar; }

}  // namespace blockset::simd
