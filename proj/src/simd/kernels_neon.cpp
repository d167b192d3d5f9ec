#include "blockset/simd/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>

namespace blockset::simd {
namespace {

constexpr std::size_t kLanes = 2;

void and_neon(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_neon(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void xor_neon(word_t* dst, const word_t* a, const word_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void not_neon(word_t* dst, const word_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    vst1q_u64(dst + i, vreinterpretq_u64_u8(vmvnq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)))));
  for (; i < n; ++i) dst[i] = ~a[i];
}

void or_into_neon(word_t* dst, const word_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(a + i)));
  for (; i < n; ++i) dst[i] |= a[i];
}

std::size_t popcount_neon(const word_t* a, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i))));
  for (; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

bool is_zero_neon(const word_t* a, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes)
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i))) != 0) return false;
  for (; i < n; ++i)
    if (a[i] != 0) return false;
  return true;
}

bool equal_neon(const word_t* a, const word_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const uint64x2_t diff = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(diff)) != 0) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_subset_neon(const word_t* a, const word_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const uint64x2_t extra = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if (vmaxvq_u32(vreinterpretq_u32_u64(extra)) != 0) return false;
  }
  for (; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

constexpr KernelTable kNeon{
    "neon",       and_neon,      or_neon,      xor_neon,   not_neon,
    or_into_neon, popcount_neon, is_zero_neon, equal_neon, is_subset_neon,
};

}  // namespace

const KernelTable* neon_kernels() noexcept { return &kNeon; }

}  // namespace blockset::simd

#else

namespace blockset::simd {
const KernelTable* neon_kernels() noexcept { return nullptr; }
}  // namespace blockset::simd

#endif
