#pragma once

// Word-parallel kernels over packed 64-bit bit storage.
//
// Every kernel has a scalar reference implementation; AVX2 (x86-64) and NEON
// (aarch64) variants are compiled alongside it and one table is selected at
// runtime. All variants must agree bit-for-bit with the scalar table.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace blockset::simd {

using word_t = std::uint64_t;

struct KernelTable {
  std::string_view name;
  void (*bit_and)(word_t* dst, const word_t* a, const word_t* b, std::size_t n);
  void (*bit_or)(word_t* dst, const word_t* a, const word_t* b, std::size_t n);
  void (*bit_xor)(word_t* dst, const word_t* a, const word_t* b, std::size_t n);
  void (*bit_not)(word_t* dst, const word_t* a, std::size_t n);
  // dst |= a
  void (*or_into)(word_t* dst, const word_t* a, std::size_t n);
  std::size_t (*popcount)(const word_t* a, std::size_t n);
  bool (*is_zero)(const word_t* a, std::size_t n);
  bool (*equal)(const word_t* a, const word_t* b, std::size_t n);
  // (a & ~b) == 0, i.e. a <= b bitwise
  bool (*is_subset)(const word_t* a, const word_t* b, std::size_t n);
};

const KernelTable& scalar_kernels() noexcept;
// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels() noexcept;
const KernelTable* neon_kernels() noexcept;

// Best table for this CPU. BLOCKSET_SIMD=scalar forces the reference path.
const KernelTable& active() noexcept;

}  // namespace blockset::simd
